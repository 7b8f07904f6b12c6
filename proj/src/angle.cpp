#include "lamina/angle.hpp"

#include <charconv>

#include "lamina/error.hpp"

namespace lamina {

Int pow2(long k) {
  ensure(k >= 0, "pow2: negative exponent");
  return Int(1) << static_cast<unsigned>(k);
}

std::string rat_str(const Rat& r) {
  return r.numerator().str() + "/" + r.denominator().str();
}

namespace {

Rat mod_one(const Rat& v) {
  Int n = v.numerator(), d = v.denominator();
  Int q = n / d;
  Int rem = n - q * d;
  if (rem < 0) rem += d;
  return Rat(rem, d);
}

}  // namespace

Angle::Angle(Rat v) : v_(mod_one(v)) {}

Angle::Angle(const Int& num, const Int& den) {
  require(den != 0, "angle with zero denominator");
  v_ = mod_one(Rat(num, den));
}

Angle Angle::parse(std::string_view text) {
  if (text == "0") return Angle();
  auto slash = text.find('/');
  require(slash != std::string_view::npos && slash > 0 && slash + 1 < text.size(),
          "malformed fraction: '" + std::string(text) + "'");
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view ns = text.substr(0, slash), ds = text.substr(slash + 1);
  require(digits(ns) && digits(ds), "malformed fraction: '" + std::string(text) + "'");
  Int n{std::string(ns)};
  Int d{std::string(ds)};
  require(d != 0, "malformed fraction: zero denominator");
  require(n < d, "angle must lie in [0, 1): '" + std::string(text) + "'");
  return Angle(n, d);
}

bool Angle::is_periodic() const { return v_.denominator() % 2 != 0; }

long order_of_two(const Int& n) {
  ensure(n >= 1 && n % 2 != 0, "order_of_two: argument must be odd and positive");
  if (n == 1) return 1;
  Int cur = 2 % n;
  long k = 1;
  while (cur != 1) {
    cur = (cur * 2) % n;
    ++k;
    if (k > kMaxOrderSearch)
      fail("period search exceeded the bound " + std::to_string(kMaxOrderSearch));
  }
  return k;
}

long Angle::period() const {
  require(is_periodic(), "angle " + str() + " is not periodic under doubling");
  return order_of_two(v_.denominator());
}

std::pair<long, long> Angle::orbit_type() const {
  Int d = v_.denominator();
  long pre = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++pre;
  }
  return {pre, order_of_two(d)};
}

Angle Angle::doubled() const { return Angle(v_ * 2); }

Angle Angle::iterate(long n) const {
  ensure(n >= 0, "iterate: negative count");
  Int d = v_.denominator();
  Int factor = 1;
  Int two = 2 % d == 0 ? Int(0) : Int(2);
  // modular exponentiation of the numerator by 2^n
  Int base = two, e = n, acc = 1 % d;
  while (e > 0) {
    if (e % 2 == 1) acc = acc * base % d;
    base = base * base % d;
    e /= 2;
  }
  factor = acc;
  return Angle(v_.numerator() * factor, d);
}

std::pair<Angle, Angle> Angle::halves() const {
  return {Angle(v_ / 2), Angle(v_ / 2 + Rat(1, 2))};
}

std::string Angle::str() const { return rat_str(v_); }

}  // namespace lamina
