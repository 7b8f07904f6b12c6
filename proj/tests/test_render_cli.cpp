#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "lamina/error.hpp"
#include "lamina/render.hpp"

using namespace lamina;

namespace {

Angle ang(long num, long den) { return Angle(Int(num), Int(den)); }

Chord chord(long an, long ad, long bn, long bd) { return Chord(ang(an, ad), ang(bn, bd)); }

const LaminationStore& store6() {
  static LaminationStore store = LaminationStore::enumerate(6);
  return store;
}

long count_of(const std::string& text, const std::string& needle) {
  long n = 0;
  for (size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("svg structure and determinism") {
  std::string svg = render_parameter_lamination(store6(), 4, 640);
  CHECK(svg.rfind("<svg xmlns=", 0) == 0);
  CHECK(svg.find("width=\"640\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 640 640\"") != std::string::npos);
  CHECK(count_of(svg, "class=\"boundary\"") == 1);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  CHECK(svg.find("nan") == std::string::npos);

  CHECK(render_parameter_lamination(store6(), 4, 640) == svg);
}

TEST_CASE("diameters are straight lines with fixed decimals") {
  std::string svg = render_svg({{chord(1, 4, 3, 4), "base"}}, 100);
  CHECK(svg.find("d=\"M 50.000000000 3.000000000 L 50.000000000 97.000000000\"") !=
        std::string::npos);
  CHECK(count_of(svg, " A ") == 0);
}

TEST_CASE("non-diameters are circular arcs") {
  std::string svg = render_svg({{chord(1, 7, 2, 7), "leaf"}}, 100);
  CHECK(count_of(svg, " A ") == 1);
  CHECK(count_of(svg, " L ") == 0);
}

TEST_CASE("parameter lamination chord counts") {
  std::string svg = render_parameter_lamination(store6(), 4, 640);
  CHECK(count_of(svg, "class=\"leaf\"") == 10);
  CHECK(count_of(svg, "class=\"marked\"") == 0);

  std::string with = render_parameter_lamination(store6(), 4, 640, {chord(13, 31, 18, 31)});
  CHECK(count_of(with, "class=\"leaf\"") == 10);
  CHECK(count_of(with, "class=\"marked\"") == 1);
}

TEST_CASE("leaf lamination render") {
  LeafContext bas = context_of(make_leaf(chord(1, 3, 2, 3)));
  std::string svg = render_leaf_lamination(bas, 3, 400);
  CHECK(count_of(svg, "class=\"base\"") == 1);
  CHECK(count_of(svg, "class=\"generated\"") == 16);
}

TEST_CASE("visibility tree render") {
  SublimbDesc desc = make_sublimb(store6(), make_leaf(chord(1, 3, 2, 3)), 1, 2);
  std::string svg = render_visibility_tree(store6(), desc, 500);
  CHECK(count_of(svg, "class=\"base\"") == 1);
  CHECK(count_of(svg, "class=\"root\"") == 1);
  CHECK(count_of(svg, "class=\"gateway\"") == 1);
  CHECK(count_of(svg, "class=\"visible\"") == 1);
}

TEST_CASE("render input validation") {
  CHECK_THROWS_AS(render_svg({}, 0), Error);
  CHECK_THROWS_AS(render_parameter_lamination(store6(), 1, 100), Error);
  CHECK_THROWS_AS(render_parameter_lamination(store6(), 7, 100), Error);
  LeafContext bas = context_of(make_leaf(chord(1, 3, 2, 3)));
  CHECK_THROWS_AS(render_leaf_lamination(bas, -1, 100), Error);
}
