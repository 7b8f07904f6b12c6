#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lamina/chord.hpp"

namespace lamina {

// Eventually periodic symbol sequence over {0, 1, *}, kept in canonical form:
// the block is primitive and the preperiodic prefix is as short as possible.
class KneadingSequence {
 public:
  KneadingSequence(std::string prefix, std::string block);

  static KneadingSequence parse(std::string_view text);

  const std::string& prefix() const { return prefix_; }
  const std::string& block() const { return block_; }

  char symbol_at(long i) const;  // 1-indexed
  std::string first(long n) const;
  bool agrees_to(const KneadingSequence& other, long n) const;

  std::string str() const;  // e.g. "(0100*)^inf" or "01(10)^inf"

  bool operator==(const KneadingSequence& o) const = default;

 private:
  std::string prefix_;
  std::string block_;
};

// Integer fast path producing kneading symbols of p/q one at a time. Works for
// unreduced fractions; only +, comparison and one subtraction per symbol.
class SymbolStream {
 public:
  SymbolStream(Int p, Int q);
  char next();

 private:
  Int p_, q_, cur_;
};

// Kneading sequence of an angle; kneading(0) is the degenerate all-* sequence.
KneadingSequence kneading_of_angle(const Angle& x);

// First n symbols of the kneading sequence of x, via the integer fast path.
std::string kneading_prefix(const Angle& x, long n);

// Characteristic data of a lamination leaf with periodic ends of period m:
// v = first m-1 kneading symbols of either end, e the symbol with ddotS = L_e(S).
struct VE {
  std::string v;
  int e;
};

// Requires both ends periodic of equal period m >= 2 and membership in the
// entire lamination.
VE v_e_of(const Chord& s);

// The three kneading views of a lamination member: its own sequence and the
// sequences carried by angles approaching it from either side.
KneadingSequence leaf_kneading(const Chord& s);
KneadingSequence just_before(const Chord& s);
KneadingSequence just_behind(const Chord& s);

// Number of points a/(2^n - 1), 1 <= a <= 2^n - 2, strictly between lo and hi.
Int count_period_points(long n, const Rat& lo, const Rat& hi);

// Internal address: strictly increasing entries starting at 1, "1-2-4-5" form.
struct InternalAddress {
  std::vector<long> entries;

  static InternalAddress parse(std::string_view text);
  std::string str() const;
  bool operator==(const InternalAddress& o) const = default;
};

// Largest number of address entries derived before concluding the address is infinite.
inline constexpr long kMaxAddressEntries = 64;

InternalAddress address_from_kneading(const KneadingSequence& k);
KneadingSequence kneading_from_address(const InternalAddress& addr);

}  // namespace lamina
