#pragma once

#include <vector>

#include "lamina/chord.hpp"

namespace lamina {

// Distinct chords of the forward orbit of c under doubling, in first-visit order.
// Iteration stops on a repeat or when an image degenerates to a point.
std::vector<Chord> orbit_chords(const Chord& c, long cap = 100000);

// Membership test for the entire (parameter) lamination: no two orbit chords cross,
// and none crosses either diameter {a/2, (a+1)/2}, {b/2, (b+1)/2} spanned by the
// halved endpoints of c.
bool in_entire_lamination(const Chord& c);

// Member of the entire lamination with both ends periodic of equal period.
bool is_bstar_chord(const Chord& c);

}  // namespace lamina
