#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lamina/error.hpp"
#include "lamina/lamination.hpp"
#include "oracles.hpp"

using namespace lamina;

namespace {

Angle ang(long num, long den) { return Angle(Int(num), Int(den)); }

Chord chord(long an, long ad, long bn, long bd) { return Chord(ang(an, ad), ang(bn, bd)); }

Leaf leaf(long an, long ad, long bn, long bd) { return make_leaf(chord(an, ad, bn, bd)); }

// Numerator pairs of one period layer over the denominator 2^n - 1.
std::vector<std::pair<long, long>> layer_pairs(const LaminationStore& store, int n) {
  Int dn = pow2(n) - 1;
  std::vector<std::pair<long, long>> out;
  for (const Leaf& lf : store.leaves(n)) {
    Int a = lf.chord.a().num() * (dn / lf.chord.a().den());
    Int b = lf.chord.b().num() * (dn / lf.chord.b().den());
    out.emplace_back(a.convert_to<long>(), b.convert_to<long>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("make_leaf validates membership") {
  CHECK(leaf(13, 31, 18, 31).period == 5);
  CHECK(leaf(1, 3, 2, 3).period == 2);
  CHECK_THROWS_AS(make_leaf(chord(13, 31, 17, 31)), Error);
  CHECK_THROWS_AS(make_leaf(chord(1, 3, 1, 7)), Error);
  CHECK_THROWS_AS(make_leaf(chord(1, 2, 1, 4)), Error);
}

TEST_CASE("enumeration counts per period") {
  LaminationStore store = LaminationStore::enumerate(9);
  std::vector<long> expected{1, 3, 6, 15, 27, 63, 120, 252};
  for (int n = 2; n <= 9; ++n)
    CHECK(static_cast<long>(store.leaves(n).size()) == expected[static_cast<size_t>(n - 2)]);
  CHECK(store.leaf_count() == 487);
  CHECK(store.max_period() == 9);

  CHECK_THROWS_AS(LaminationStore::enumerate(1), Error);
  CHECK_THROWS_AS(LaminationStore::enumerate(17), Error);
  CHECK_THROWS_AS(store.leaves(1), Error);
  CHECK_THROWS_AS(store.leaves(10), Error);
}

TEST_CASE("enumeration matches the independent membership filter") {
  LaminationStore store = LaminationStore::enumerate(8);
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(layer_pairs(store, n) == oracle::bstar_layer(n));
  }
}

TEST_CASE("known period-5 pairing") {
  LaminationStore store = LaminationStore::enumerate(5);
  CHECK(store.partner(ang(13, 31)) == ang(18, 31));
  CHECK(store.partner(ang(14, 31)) == ang(17, 31));
  CHECK(store.partner(ang(15, 31)) == ang(16, 31));
  CHECK(store.partner(ang(1, 7)) == ang(2, 7));
  CHECK(store.partner(ang(3, 7)) == ang(4, 7));
  CHECK(store.partner(ang(5, 7)) == ang(6, 7));
  CHECK(store.partner(ang(1, 3)) == ang(2, 3));

  CHECK(store.leaf_with_end(ang(13, 31)).has_value());
  CHECK(!store.leaf_with_end(ang(1, 2)).has_value());
  CHECK_THROWS_AS(store.partner(Angle::parse("1/2")), Error);
  CHECK_THROWS_AS(store.partner(ang(1, 63)), Error);  // deeper than the store
  CHECK_THROWS_AS(store.partner(Angle()), Error);     // fixed point has no leaf
}

TEST_CASE("save and load round trip") {
  LaminationStore store = LaminationStore::enumerate(6);
  std::ostringstream out;
  store.save(out);
  std::string text = out.str();
  CHECK(text.rfind("LAMINA v1 max_period=6\n", 0) == 0);

  std::istringstream in(text);
  LaminationStore loaded = LaminationStore::load(in);
  CHECK(loaded.max_period() == 6);
  CHECK(loaded.leaf_count() == store.leaf_count());
  for (int n = 2; n <= 6; ++n) CHECK(layer_pairs(loaded, n) == layer_pairs(store, n));
}

TEST_CASE("load rejects malformed stores") {
  LaminationStore store = LaminationStore::enumerate(4);
  std::ostringstream out;
  store.save(out);
  std::string good = out.str();

  auto load_text = [](const std::string& text) {
    std::istringstream in(text);
    return LaminationStore::load(in);
  };

  CHECK_THROWS_AS(load_text(""), Error);
  CHECK_THROWS_AS(load_text("BOGUS\n"), Error);
  CHECK_THROWS_AS(load_text("LAMINA v1 max_period=99\n"), Error);
  // drop the final leaf line
  CHECK_THROWS_AS(load_text(good.substr(0, good.rfind('\n', good.size() - 2) + 1)), Error);
  // truncated to the header only
  CHECK_THROWS_AS(load_text("LAMINA v1 max_period=4\n"), Error);
  // swap the order of two lines
  {
    std::string swapped = good;
    size_t p1 = swapped.find("\n3 ");
    size_t p2 = swapped.find('\n', p1 + 1);
    size_t p3 = swapped.find('\n', p2 + 1);
    std::string l1 = swapped.substr(p1 + 1, p2 - p1 - 1);
    std::string l2 = swapped.substr(p2 + 1, p3 - p2 - 1);
    swapped = swapped.substr(0, p1 + 1) + l2 + "\n" + l1 + swapped.substr(p3);
    CHECK_THROWS_AS(load_text(swapped), Error);
  }
  // ends out of order within one line
  CHECK_THROWS_AS(load_text("LAMINA v1 max_period=2\n2 2/3 1/3\n"), Error);
  // stated period does not match the angles
  CHECK_THROWS_AS(load_text("LAMINA v1 max_period=2\n2 1/7 2/7\n"), Error);
  // wrong pairing that still uses each point once
  CHECK_THROWS_AS(
      load_text("LAMINA v1 max_period=3\n2 1/3 2/3\n3 1/7 3/7\n3 2/7 4/7\n3 5/7 6/7\n"),
      Error);
}

TEST_CASE("visibility") {
  LaminationStore store = LaminationStore::enumerate(6);
  Leaf bas = leaf(1, 3, 2, 3);
  Leaf b45 = leaf(2, 5, 3, 5);
  Leaf w = leaf(13, 31, 18, 31);
  Leaf v5 = leaf(11, 31, 12, 31);

  CHECK(is_visible(store, bas, b45));
  CHECK(is_visible(store, bas, v5));
  CHECK(!is_visible(store, bas, w));  // separated by the period-4 leaf
  CHECK(is_visible(store, b45, w));
  CHECK_THROWS_AS(is_visible(store, bas, leaf(1, 7, 2, 7)), Error);  // not behind

  CHECK(is_immediately_visible(store, bas, b45));
  CHECK(!is_immediately_visible(store, bas, v5));  // period 5 not a multiple of 2
  CHECK(!is_immediately_visible(store, bas, w));
  CHECK(is_immediately_visible(store, w, leaf(14, 33, 19, 33)));
}

TEST_CASE("lowest separating leaf") {
  LaminationStore store = LaminationStore::enumerate(5);
  Leaf sep = lavaurs_separator(store, leaf(13, 31, 18, 31), leaf(14, 31, 17, 31));
  CHECK(sep.chord == chord(3, 7, 4, 7));
  CHECK(sep.period == 3);

  CHECK_THROWS_AS(lavaurs_separator(store, leaf(13, 31, 18, 31), leaf(13, 31, 18, 31)), Error);
  CHECK_THROWS_AS(lavaurs_separator(store, leaf(13, 31, 18, 31), leaf(1, 3, 2, 3)), Error);
}

TEST_CASE("narrow leaves") {
  CHECK(is_narrow(leaf(15, 31, 16, 31)));
  CHECK(is_narrow(leaf(1, 3, 2, 3)));
  CHECK(is_narrow(leaf(1, 7, 2, 7)));
  CHECK(is_narrow(leaf(3, 7, 4, 7)));
  CHECK(!is_narrow(leaf(13, 31, 18, 31)));
  CHECK(!is_narrow(leaf(14, 31, 17, 31)));
}
