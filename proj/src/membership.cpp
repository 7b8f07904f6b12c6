#include "lamina/membership.hpp"

#include <set>
#include <utility>

#include "lamina/error.hpp"

namespace lamina {

std::vector<Chord> orbit_chords(const Chord& c, long cap) {
  std::vector<Chord> out;
  std::set<std::pair<Rat, Rat>> seen;
  Angle x = c.a(), y = c.b();
  for (long i = 0; i < cap; ++i) {
    if (x == y) return out;  // collapsed to a point; nothing further crosses
    Angle lo = x < y ? x : y, hi = x < y ? y : x;
    if (!seen.insert({lo.value(), hi.value()}).second) return out;
    out.emplace_back(lo, hi);
    x = x.doubled();
    y = y.doubled();
  }
  fail("orbit of " + c.str() + " exceeded " + std::to_string(cap) + " chords");
}

bool in_entire_lamination(const Chord& c) {
  auto [a_lo, a_hi] = c.a().halves();
  auto [b_lo, b_hi] = c.b().halves();
  Chord diam_a(a_lo, a_hi), diam_b(b_lo, b_hi);
  std::vector<Chord> orbit = orbit_chords(c);
  for (size_t i = 0; i < orbit.size(); ++i) {
    if (crosses(orbit[i], diam_a) || crosses(orbit[i], diam_b)) return false;
    for (size_t j = i + 1; j < orbit.size(); ++j)
      if (crosses(orbit[i], orbit[j])) return false;
  }
  return true;
}

bool is_bstar_chord(const Chord& c) {
  if (!c.a().is_periodic() || !c.b().is_periodic()) return false;
  if (c.a().period() != c.b().period()) return false;
  return in_entire_lamination(c);
}

}  // namespace lamina
