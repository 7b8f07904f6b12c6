#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace lamina {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

Int pow2(long k);

// Three-way comparison by cross multiplication. boost::rational's operator< runs a
// continued-fraction loop that is overflow-safe for fixed-width integers; with cpp_int
// cross multiplication cannot overflow and is considerably cheaper on hot paths.
inline int rat_cmp(const Rat& x, const Rat& y) {
  Int lhs = x.numerator() * y.denominator();
  Int rhs = y.numerator() * x.denominator();
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

inline bool rat_lt(const Rat& x, const Rat& y) { return rat_cmp(x, y) < 0; }
inline bool rat_le(const Rat& x, const Rat& y) { return rat_cmp(x, y) <= 0; }

std::string rat_str(const Rat& r);

}  // namespace lamina
