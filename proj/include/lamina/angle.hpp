#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "lamina/rat.hpp"

namespace lamina {

// Largest multiplicative-order search attempted before giving up on a denominator.
inline constexpr long kMaxOrderSearch = 4096;

// A point of the circle R/Z, stored as a reduced rational in [0, 1).
class Angle {
 public:
  Angle() : v_(0) {}
  explicit Angle(Rat v);
  Angle(const Int& num, const Int& den);

  static Angle parse(std::string_view text);

  const Rat& value() const { return v_; }
  Int num() const { return v_.numerator(); }
  Int den() const { return v_.denominator(); }

  // Periodic under doubling exactly when the reduced denominator is odd.
  bool is_periodic() const;
  // Least n with den | 2^n - 1. Requires a periodic angle.
  long period() const;
  // (preperiod, period) of the forward orbit under doubling.
  std::pair<long, long> orbit_type() const;

  Angle doubled() const;
  Angle iterate(long n) const;
  std::pair<Angle, Angle> halves() const;

  std::string str() const;

  bool operator==(const Angle& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Angle& o) const {
    int c = rat_cmp(v_, o.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rat v_;
};

// Multiplicative order of 2 modulo odd n >= 1 (ord_1(2) = 1 by convention).
long order_of_two(const Int& n);

}  // namespace lamina
