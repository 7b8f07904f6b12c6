#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "lamina/error.hpp"
#include "lamina/vistree.hpp"

using namespace lamina;

namespace {

Angle ang(long num, long den) { return Angle(Int(num), Int(den)); }

Chord chord(long an, long ad, long bn, long bd) { return Chord(ang(an, ad), ang(bn, bd)); }

const LaminationStore& store6() {
  static LaminationStore store = LaminationStore::enumerate(6);
  return store;
}

SublimbDesc sublimb(long an, long ad, long bn, long bd, long p, long q) {
  return make_sublimb(store6(), make_leaf(chord(an, ad, bn, bd)), p, q);
}

void collect_periods(const VisTree::Node& node, std::multiset<long>& out) {
  out.insert(node.leaf.period);
  for (const VisTree::Node& child : node.children) collect_periods(child, out);
}

std::multiset<long> periods_of(const VisTree& t) {
  std::multiset<long> out;
  collect_periods(t.root, out);
  return out;
}

}  // namespace

TEST_CASE("visible leaves behind the basilica sublimbs") {
  SublimbDesc d12 = sublimb(1, 3, 2, 3, 1, 2);
  std::vector<Leaf> vis = visible_leaves_behind(store6(), d12);
  REQUIRE(vis.size() == 1);
  CHECK(vis[0].chord == chord(3, 7, 4, 7));
  CHECK(vis[0].period == 3);

  SublimbDesc d13 = sublimb(1, 3, 2, 3, 1, 3);
  vis = visible_leaves_behind(store6(), d13);
  REQUIRE(vis.size() == 1);
  CHECK(vis[0].chord == chord(11, 31, 12, 31));
  CHECK(vis[0].period == 5);

  SublimbDesc d23 = sublimb(1, 3, 2, 3, 2, 3);
  CHECK(d23.B.chord == chord(38, 63, 41, 63));
  vis = visible_leaves_behind(store6(), d23);
  REQUIRE(vis.size() == 1);
  CHECK(vis[0].chord == chord(19, 31, 20, 31));
}

TEST_CASE("visibility trees and serialization") {
  VisTree t12 = visibility_tree(store6(), sublimb(1, 3, 2, 3, 1, 2));
  CHECK(tree_serialize(t12) == "(4(3))");

  VisTree t13 = visibility_tree(store6(), sublimb(1, 3, 2, 3, 1, 3));
  CHECK(tree_serialize(t13) == "(6(5))");
  CHECK(tree_serialize(t13, 2) == "(8(7))");

  VisTree t23 = visibility_tree(store6(), sublimb(1, 3, 2, 3, 2, 3));
  CHECK(tree_serialize(t23) == "(6(5))");

  CHECK(trees_equivalent(t13, t23, 0));
  CHECK(trees_equivalent(t12, t13, 2));
  CHECK(!trees_equivalent(t12, t13, 0));

  VisTree again = visibility_tree(store6(), make_leaf(chord(1, 3, 2, 3)), 1, 2);
  CHECK(trees_equivalent(again, t12, 0));
}

TEST_CASE("tree json") {
  VisTree t12 = visibility_tree(store6(), sublimb(1, 3, 2, 3, 1, 2));
  nlohmann::json j = tree_to_json(t12);
  CHECK(j["schema"] == "lamina/1");
  CHECK(j["root"]["period"] == 4);
  CHECK(j["root"]["leaf"][0] == "2/5");
  CHECK(j["root"]["leaf"][1] == "3/5");
  REQUIRE(j["root"]["children"].size() == 1);
  CHECK(j["root"]["children"][0]["period"] == 3);
  CHECK(j["root"]["children"][0]["leaf"][0] == "3/7");
  CHECK(j["root"]["children"][0]["children"].empty());
}

TEST_CASE("semi-visible pairs and gap leaves") {
  SublimbDesc d12 = sublimb(1, 3, 2, 3, 1, 2);
  std::vector<DynamicPair> semi = enumerate_semi_visible(store6(), d12);
  REQUIRE(semi.size() == 1);
  CHECK(semi[0].word == "01");
  CHECK(semi[0].step == 3);
  CHECK(pair_semi_visible(d12, semi[0]));
  Leaf g = q_map(d12, semi[0]);
  CHECK(g.chord == chord(3, 7, 4, 7));
  CHECK(g.period == 3);

  DynamicPair outside = dynamic_pair(d12.ctx, "11");
  CHECK(!pair_semi_visible(d12, outside));
  CHECK_THROWS_AS(q_map(d12, outside), Error);

  SublimbDesc d13 = sublimb(1, 3, 2, 3, 1, 3);
  semi = enumerate_semi_visible(store6(), d13);
  REQUIRE(semi.size() == 1);
  CHECK(semi[0].step == 5);
  Leaf g5 = q_map(d13, semi[0]);
  CHECK(g5.chord == chord(11, 31, 12, 31));
  CHECK(g5.period == 5);
}

TEST_CASE("missing node in the half sublimb of the period-five leaf") {
  SublimbDesc d = sublimb(13, 31, 18, 31, 1, 2);
  VisTree t = visibility_tree(store6(), d);
  CHECK(t.root.leaf.period == 10);
  CHECK(!t.root.children.empty());
  std::multiset<long> periods = periods_of(t);
  CHECK(periods.count(6) == 0);

  std::vector<DynamicPair> semi = enumerate_semi_visible(store6(), d);
  const DynamicPair* step6 = nullptr;
  for (const DynamicPair& p : semi) {
    if (p.step == 6) step6 = &p;
  }
  REQUIRE(step6 != nullptr);
  CHECK(step6->word == "01001");
  CHECK_THROWS_AS(q_map(d, *step6), InternalError);

  // the deeper sublimb does carry the node the shallow one is missing
  VisTree t3 = visibility_tree(store6(), sublimb(13, 31, 18, 31, 1, 3));
  std::multiset<long> periods3 = periods_of(t3);
  CHECK(periods3.count(11) == 1);
  CHECK(!trees_equivalent(t, t3, 5));
}
