#pragma once

#include <string>

#include "lamina/angle.hpp"

namespace lamina {

// An unordered pair of distinct circle points, stored with a() < b().
class Chord {
 public:
  Chord(const Angle& x, const Angle& y);

  const Angle& a() const { return a_; }
  const Angle& b() const { return b_; }

  Rat span() const;    // b - a, in (0, 1)
  Rat length() const;  // min(span, 1 - span), in (0, 1/2]
  bool is_diameter() const;
  bool has_end(const Angle& x) const { return x == a_ || x == b_; }

  bool image_degenerate() const;
  Chord mapped() const;          // image under doubling; error if degenerate
  Chord iterate(long n) const;   // error if any step degenerates

  std::string str() const;

  bool operator==(const Chord& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator<(const Chord& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    return b_ < o.b_;
  }

 private:
  Angle a_, b_;
};

// x lies strictly inside the open minor arc of c. Error on diameters.
bool is_between(const Angle& x, const Chord& c);

// Strict interleaving of endpoints; chords sharing an endpoint never cross.
bool crosses(const Chord& c1, const Chord& c2);

// Both ends of t lie in the closed minor arc of c and t != c. Error if c is a diameter.
bool is_behind(const Chord& t, const Chord& c);
// x lies in the open minor arc of c.
bool is_behind(const Angle& x, const Chord& c);

// c1 and c2 lie weakly on opposite closed sides of s, and s is neither of them.
// Errors: s a diameter, or any two of the three chords crossing.
bool separates(const Chord& s, const Chord& c1, const Chord& c2);

// t lies in the closed band bounded by non-crossing c1, c2 and differs from both.
// Errors: c1 == c2, crossing inputs, diameters.
bool between_chords(const Chord& t, const Chord& c1, const Chord& c2);

}  // namespace lamina
