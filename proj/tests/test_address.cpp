#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "lamina/address_tools.hpp"
#include "lamina/error.hpp"

using namespace lamina;

namespace {

Angle ang(long num, long den) { return Angle(Int(num), Int(den)); }

InternalAddress addr(const std::string& text) { return InternalAddress::parse(text); }

}  // namespace

TEST_CASE("admissibility witnesses") {
  CHECK(admissibility_witness(addr("1")).value() == ang(0, 1));
  CHECK(admissibility_witness(addr("1-2")).value() == ang(1, 3));
  CHECK(admissibility_witness(addr("1-3")).value() == ang(1, 7));
  CHECK(admissibility_witness(addr("1-2-3")).value() == ang(3, 7));
  CHECK(admissibility_witness(addr("1-2-4")).value() == ang(2, 5));
  CHECK(admissibility_witness(addr("1-2-4-5")).value() == ang(13, 31));
  CHECK(admissibility_witness(addr("1-2-4-5-11")).has_value());
  CHECK(!admissibility_witness(addr("1-2-4-5-6")).has_value());
}

TEST_CASE("witness minimality") {
  std::string want = kneading_from_address(addr("1-2-4-5")).first(5);
  CHECK(want == "0100*");
  for (long a = 0; a < 13; ++a) {
    CHECK(kneading_prefix(ang(a, 31), 5) != want);
  }
}

TEST_CASE("admissibility predicate") {
  CHECK(is_admissible(addr("1")));
  CHECK(is_admissible(addr("1-2")));
  CHECK(is_admissible(addr("1-2-3")));
  CHECK(is_admissible(addr("1-2-3-4-5")));
  CHECK(is_admissible(addr("1-2-4-5")));
  CHECK(is_admissible(addr("1-2-4-5-11")));
  CHECK(!is_admissible(addr("1-2-4-5-6")));
}

TEST_CASE("search ceiling and input validation") {
  CHECK_THROWS_AS(admissibility_witness(addr("1-25")), Error);
  CHECK_THROWS_AS(addr(""), Error);
  CHECK_THROWS_AS(addr("2-3"), Error);
  CHECK_THROWS_AS(addr("1-2-2"), Error);
}
