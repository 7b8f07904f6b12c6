#include "lamina/vistree.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "lamina/error.hpp"
#include "lamina/kneading.hpp"
#include "lamina/membership.hpp"

namespace lamina {

namespace {

// t lies in the closed region cut off by c: behind it or equal to it.
bool behind_or_equal(const Chord& t, const Chord& c) { return t == c || is_behind(t, c); }

// Numerators a with lo < a/den < hi (0 < a < den); hi may exceed 1 to describe
// an arc wrapping through 0, in which case a is reduced modulo den.
std::vector<Int> numerators_in_open_arc(const Int& den, const Rat& lo, const Rat& hi) {
  Int first = lo.numerator() * den / lo.denominator() + 1;
  Int hi_num = hi.numerator() * den;
  Int last = hi_num / hi.denominator();
  if (last * hi.denominator() == hi_num) last -= 1;
  std::vector<Int> out;
  for (Int a = first; a <= last; ++a) {
    Int r = a % den;
    if (r > 0) out.push_back(r);
  }
  return out;
}

KneadingSequence base_block_sequence(const LeafContext& ctx) {
  return KneadingSequence("", ctx.v + static_cast<char>('0' + ctx.e));
}

void serialize_node(const VisTree::Node& node, long shift, std::string& out) {
  out += '(';
  out += std::to_string(node.leaf.period + shift);
  for (const VisTree::Node& child : node.children) serialize_node(child, shift, out);
  out += ')';
}

nlohmann::json node_to_json(const VisTree::Node& node) {
  nlohmann::json j;
  j["period"] = node.leaf.period;
  j["leaf"] = {node.leaf.chord.a().str(), node.leaf.chord.b().str()};
  j["children"] = nlohmann::json::array();
  for (const VisTree::Node& child : node.children) j["children"].push_back(node_to_json(child));
  return j;
}

}  // namespace

std::vector<Leaf> visible_leaves_behind(const LaminationStore& store, const SublimbDesc& desc) {
  const LeafContext& ctx = desc.ctx;
  ensure(rat_le(desc.B.chord.span(), Rat(1, 2)), "sublimb leaf spans more than a half circle");
  Rat lo = desc.B.chord.a().value();
  Rat hi = desc.B.chord.b().value();
  KneadingSequence block = base_block_sequence(ctx);
  std::vector<Leaf> out;
  for (long n = (desc.q - 2) * ctx.m + 1; n < desc.q * ctx.m; ++n) {
    Int den = pow2(n) - 1;
    std::vector<Angle> hits;
    for (const Int& a : numerators_in_open_arc(den, lo, hi)) {
      Angle x(a, den);
      if (x.period() != n) continue;
      if (kneading_prefix(x, n - 1) != block.first(n - 1)) continue;
      hits.push_back(x);
    }
    ensure(hits.size() % 2 == 0, "matched periodic points do not pair up behind the sublimb");
    for (size_t k = 0; k + 1 < hits.size(); k += 2) {
      Leaf leaf = make_leaf(Chord(hits[k], hits[k + 1]));
      ensure(leaf.period == n, "matched leaf has unexpected period");
      ensure(is_behind(leaf.chord, desc.R_B), "matched leaf is not behind the gateway leaf");
      if (n <= store.max_period()) {
        ensure(store.partner(hits[k]) == hits[k + 1],
               "matched pairing disagrees with the stored lamination");
      }
      out.push_back(leaf);
    }
  }
  return out;
}

VisTree visibility_tree(const LaminationStore& store, const Leaf& S, long p, long q) {
  return visibility_tree(store, make_sublimb(store, S, p, q));
}

VisTree visibility_tree(const LaminationStore& store, const SublimbDesc& desc) {
  std::vector<Leaf> vis = visible_leaves_behind(store, desc);
  size_t n = vis.size();
  std::vector<long> parent(n, -1);
  for (size_t i = 0; i < n; ++i) {
    ensure(is_behind(vis[i].chord, desc.B.chord), "visible leaf is not behind the sublimb leaf");
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !is_behind(vis[i].chord, vis[j].chord)) continue;
      if (parent[i] < 0 || is_behind(vis[j].chord, vis[static_cast<size_t>(parent[i])].chord)) {
        parent[i] = static_cast<long>(j);
      }
    }
  }
  std::vector<std::vector<size_t>> kids(n + 1);
  for (size_t i = 0; i < n; ++i) {
    size_t slot = parent[i] < 0 ? n : static_cast<size_t>(parent[i]);
    kids[slot].push_back(i);
  }
  // Children in circular order of their smaller endpoints, measured from the
  // parent's smaller endpoint.
  for (size_t slot = 0; slot < kids.size(); ++slot) {
    const Chord& pc = slot == n ? desc.B.chord : vis[slot].chord;
    Rat start = pc.a().value();
    auto key = [&start](const Rat& x) {
      Rat d = x - start;
      return d < Rat(0) ? d + Rat(1) : d;
    };
    std::sort(kids[slot].begin(), kids[slot].end(), [&](size_t x, size_t y) {
      return rat_lt(key(vis[x].chord.a().value()), key(vis[y].chord.a().value()));
    });
  }
  std::function<VisTree::Node(size_t)> build = [&](size_t idx) {
    VisTree::Node node{vis[idx], {}};
    for (size_t k : kids[idx]) node.children.push_back(build(k));
    return node;
  };
  VisTree tree{VisTree::Node{desc.B, {}}};
  for (size_t k : kids[n]) tree.root.children.push_back(build(k));
  return tree;
}

std::string tree_serialize(const VisTree& t, long shift) {
  std::string out;
  serialize_node(t.root, shift, out);
  return out;
}

bool trees_equivalent(const VisTree& t1, const VisTree& t2, long shift) {
  return tree_serialize(t1, shift) == tree_serialize(t2, 0);
}

nlohmann::json tree_to_json(const VisTree& t) {
  nlohmann::json j;
  j["schema"] = "lamina/1";
  j["root"] = node_to_json(t.root);
  return j;
}

bool pair_semi_visible(const SublimbDesc& desc, const DynamicPair& p) {
  if (!behind_or_equal(p.s1, desc.R_B) || !behind_or_equal(p.s2, desc.R_B)) return false;
  // Membership must run before the kneading comparison: chords outside the
  // lamination can carry ends with different kneading sequences.
  if (!in_entire_lamination(p.s1) || !in_entire_lamination(p.s2)) return false;
  return leaf_kneading(p.s1).agrees_to(base_block_sequence(desc.ctx), p.step);
}

std::vector<DynamicPair> enumerate_semi_visible(const LaminationStore&, const SublimbDesc& desc) {
  const LeafContext& ctx = desc.ctx;
  // Both members of a pair behind the gateway leaf carry the gateway's word as
  // an itinerary prefix, so only words extending it can qualify. The prefix
  // does not guarantee membership behind the gateway, which stays with the
  // semi-visibility filter below. Words of up to qm-2 symbols leave at most
  // m-2 free symbols after the prefix.
  std::string prefix = desc.lift + ctx.v;
  prefix.push_back(static_cast<char>('0' + ctx.e));
  std::vector<DynamicPair> out;
  for (long len = 0; len <= ctx.m - 2; ++len) {
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
      std::string w = prefix;
      for (long i = len - 1; i >= 0; --i)
        w.push_back(static_cast<char>('0' + ((bits >> i) & 1UL)));
      if (!is_pair_word(ctx, w)) continue;
      DynamicPair p = dynamic_pair(ctx, w);
      if (pair_semi_visible(desc, p)) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const DynamicPair& x, const DynamicPair& y) {
    if (x.step != y.step) return x.step < y.step;
    return x.word < y.word;
  });
  return out;
}

Leaf q_map(const SublimbDesc& desc, const DynamicPair& p) {
  require(pair_semi_visible(desc, p), "gap leaf is defined for semi-visible pairs only");
  const LeafContext& ctx = desc.ctx;
  long n = p.step;
  struct Arc {
    Rat lo;
    Rat hi;  // may exceed 1 when the arc wraps through 0
  };
  struct Point {
    Rat at;
    int owner;
  };
  std::vector<Point> pts = {{p.s1.a().value(), 1},
                            {p.s1.b().value(), 1},
                            {p.s2.a().value(), 2},
                            {p.s2.b().value(), 2}};
  std::sort(pts.begin(), pts.end(),
            [](const Point& x, const Point& y) { return rat_lt(x.at, y.at); });
  std::vector<Arc> cross;
  for (int i = 0; i < 4; ++i) {
    const Point& cur = pts[static_cast<size_t>(i)];
    const Point& nxt = pts[static_cast<size_t>((i + 1) % 4)];
    if (cur.owner == nxt.owner) continue;
    Rat hi = i == 3 ? nxt.at + Rat(1) : nxt.at;
    cross.push_back({cur.at, hi});
  }
  ensure(cross.size() == 2, "pair members do not bound exactly two crossing arcs");
  Rat expected = ctx.d / Rat(pow2(n), 1);
  std::vector<Angle> picked;
  for (const Arc& arc : cross) {
    ensure(arc.hi - arc.lo == expected, "crossing arc has unexpected width");
    for (long t = 1; t < n; ++t) {
      ensure(numerators_in_open_arc(pow2(t) - 1, arc.lo, arc.hi).empty(),
             "crossing arc holds a periodic point of lower period");
    }
    std::vector<Angle> found;
    for (const Int& a : numerators_in_open_arc(pow2(n) - 1, arc.lo, arc.hi)) {
      Angle x(a, pow2(n) - 1);
      if (x.period() == n) found.push_back(x);
    }
    ensure(found.size() == 1, "crossing arc does not hold exactly one point of the step period");
    picked.push_back(found.front());
  }
  Leaf leaf = make_leaf(Chord(picked[0], picked[1]));
  ensure(leaf.period == n, "gap leaf has unexpected period");
  KneadingSequence expected_kneading("", base_block_sequence(ctx).first(n - 1) + "*");
  ensure(leaf_kneading(leaf.chord) == expected_kneading, "gap leaf has unexpected kneading");
  ensure(just_behind(desc.S.chord).agrees_to(just_before(leaf.chord), n - 1),
         "gap leaf fails the symbolic visibility criterion");
  ensure(separates(leaf.chord, p.s1, p.s2), "gap leaf does not separate the pair members");
  return leaf;
}

}  // namespace lamina
