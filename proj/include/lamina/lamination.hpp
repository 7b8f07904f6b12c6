#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "lamina/kneading.hpp"
#include "lamina/membership.hpp"

namespace lamina {

// Configured ceiling for full enumeration depth (leaf counts grow like 2^n).
inline constexpr int kMaxEnumerationPeriod = 16;

struct Leaf {
  Chord chord;
  long period;

  bool operator==(const Leaf& o) const { return chord == o.chord; }
  bool operator<(const Leaf& o) const {
    if (period != o.period) return period < o.period;
    return chord < o.chord;
  }
};

// Validates that c has periodic ends of one common period and satisfies the
// entire-lamination membership test.
Leaf make_leaf(const Chord& c);

// All leaves with periodic ends up to a period bound, built by Lavaurs' algorithm:
// periods ascending; within one period each unpaired angle, taken in increasing
// order, is joined to the smallest unpaired angle above it whose chord crosses
// nothing placed so far.
class LaminationStore {
 public:
  static LaminationStore enumerate(int max_period);

  int max_period() const { return max_period_; }
  const std::vector<Leaf>& leaves(long period) const;
  std::vector<Leaf> all_leaves() const;
  long leaf_count() const;

  std::optional<Leaf> leaf_with_end(const Angle& x) const;
  // Partner end of a periodic angle. Errors if x is not periodic, exceeds the
  // store depth, or (impossible for a correct store) has no leaf.
  Angle partner(const Angle& x) const;

  void save(std::ostream& out) const;
  static LaminationStore load(std::istream& in);

 private:
  int max_period_ = 0;
  std::vector<std::vector<Leaf>> by_period_;  // index = period
};

// Visibility of leaf q from leaf s (q behind s required): no leaf of period less
// than period(q) separates them. The geometric scan over the store and the
// symbolic prefix criterion are both evaluated and must agree; the "less or
// equal" scan variant is also asserted equal. Requires store depth >= period(q).
bool is_visible(const LaminationStore& store, const Leaf& s, const Leaf& q);

// Immediate visibility: no leaf at all separates s and b. Decided symbolically
// (just_behind(s) == just_before(b) as canonical sequences, which forces
// period(s) | period(b)); the geometric scan cross-checks up to the store depth.
bool is_immediately_visible(const LaminationStore& store, const Leaf& s, const Leaf& b);

// The unique separating leaf of least period between two distinct non-crossing
// leaves of equal period. Errors if none exists within periods < period(q1).
Leaf lavaurs_separator(const LaminationStore& store, const Leaf& q1, const Leaf& q2);

// Leaf length equals 1/(2^m - 1).
bool is_narrow(const Leaf& s);

}  // namespace lamina
