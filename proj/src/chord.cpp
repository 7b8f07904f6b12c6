#include "lamina/chord.hpp"

#include "lamina/error.hpp"

namespace lamina {

Chord::Chord(const Angle& x, const Angle& y) : a_(x), b_(y) {
  require(!(x == y), "degenerate chord at " + x.str());
  if (b_ < a_) std::swap(a_, b_);
}

Rat Chord::span() const { return b_.value() - a_.value(); }

Rat Chord::length() const {
  Rat s = span();
  Rat t = Rat(1) - s;
  return rat_lt(s, t) ? s : t;
}

bool Chord::is_diameter() const { return span() == Rat(1, 2); }

bool Chord::image_degenerate() const { return span() == Rat(1, 2); }

Chord Chord::mapped() const {
  require(!image_degenerate(), "image of " + str() + " degenerates to a point");
  return Chord(a_.doubled(), b_.doubled());
}

Chord Chord::iterate(long n) const {
  Chord cur = *this;
  for (long i = 0; i < n; ++i) cur = cur.mapped();
  return cur;
}

std::string Chord::str() const { return "{" + a_.str() + ", " + b_.str() + "}"; }

namespace {

// 0: x is an endpoint of c; 1: strictly inside the numeric interval (a, b);
// 2: strictly outside it. The interleaving test only needs these three classes.
int position(const Angle& x, const Chord& c) {
  if (x == c.a() || x == c.b()) return 0;
  return (c.a() < x && x < c.b()) ? 1 : 2;
}

// x inside the open minor arc of a non-diameter chord.
bool in_open_minor(const Angle& x, const Chord& c) {
  bool inside_numeric = c.a() < x && x < c.b();
  if (rat_lt(c.span(), Rat(1, 2))) return inside_numeric;
  return !inside_numeric && x != c.a() && x != c.b();
}

// x inside the closed minor arc of a non-diameter chord.
bool in_closed_minor(const Angle& x, const Chord& c) {
  return in_open_minor(x, c) || x == c.a() || x == c.b();
}

void reject_diameter(const Chord& c, const char* who) {
  require(!c.is_diameter(), std::string(who) + ": diameter " + c.str() + " rejected");
}

}  // namespace

bool is_between(const Angle& x, const Chord& c) {
  reject_diameter(c, "is_between");
  return in_open_minor(x, c);
}

bool crosses(const Chord& c1, const Chord& c2) {
  int pa = position(c2.a(), c1);
  int pb = position(c2.b(), c1);
  return (pa == 1 && pb == 2) || (pa == 2 && pb == 1);
}

bool is_behind(const Chord& t, const Chord& c) {
  reject_diameter(c, "is_behind");
  if (t == c) return false;
  return in_closed_minor(t.a(), c) && in_closed_minor(t.b(), c);
}

bool is_behind(const Angle& x, const Chord& c) {
  reject_diameter(c, "is_behind");
  return in_open_minor(x, c);
}

namespace {

// Weak side classification of c relative to s: true result means every end of c
// lies in the given closed arc of s.
bool weakly_minor(const Chord& c, const Chord& s) {
  return in_closed_minor(c.a(), s) && in_closed_minor(c.b(), s);
}

bool weakly_major(const Chord& c, const Chord& s) {
  auto outside = [&](const Angle& x) { return !in_open_minor(x, s); };
  return outside(c.a()) && outside(c.b());
}

}  // namespace

bool separates(const Chord& s, const Chord& c1, const Chord& c2) {
  reject_diameter(s, "separates");
  require(!crosses(s, c1) && !crosses(s, c2) && !crosses(c1, c2),
          "separates: chords must be pairwise non-crossing");
  if (s == c1 || s == c2) return false;
  bool m1 = weakly_minor(c1, s), M1 = weakly_major(c1, s);
  bool m2 = weakly_minor(c2, s), M2 = weakly_major(c2, s);
  return (m1 && M2) || (M1 && m2);
}

bool between_chords(const Chord& t, const Chord& c1, const Chord& c2) {
  require(!(c1 == c2), "between_chords: bounding chords coincide");
  reject_diameter(c1, "between_chords");
  reject_diameter(c2, "between_chords");
  require(!crosses(c1, c2) && !crosses(t, c1) && !crosses(t, c2),
          "between_chords: chords must be pairwise non-crossing");
  if (t == c1 || t == c2) return false;
  // side of c1 facing c2, and vice versa
  bool c2_minor = weakly_minor(c2, c1);
  bool c1_minor = weakly_minor(c1, c2);
  bool t_on_c1_side = c2_minor ? weakly_minor(t, c1) : weakly_major(t, c1);
  bool t_on_c2_side = c1_minor ? weakly_minor(t, c2) : weakly_major(t, c2);
  return t_on_c1_side && t_on_c2_side;
}

}  // namespace lamina
