#pragma once

#include <utility>
#include <vector>

#include "lamina/dynamic.hpp"
#include "lamina/tuning.hpp"

namespace lamina::oracle {

// Independent membership test for the chord {a/(2^n-1), b/(2^n-1)} in the
// entire lamination, written against plain machine integers: every chord of
// the forward orbit is checked pairwise for crossings and against the two
// diameters spanned by the halved ends. Requires n <= 20 and 0 < a, b < 2^n-1.
bool eq1_chord(long a, long b, int n);

// Exact period of a/(2^n-1) under doubling: the cycle length of a modulo 2^n-1.
long exact_period(long a, int n);

// All leaves with both ends of exact period n, found by filtering every
// candidate numerator pair through eq1_chord. Throws if the result fails to be
// a perfect matching on the period-n numerators. Pairs are (smaller, larger),
// sorted.
std::vector<std::pair<long, long>> bstar_layer(int n);

// Tuning computed by block substitution on binary digits: each digit of beta
// is replaced by the m-digit block of the corresponding end of the base leaf.
Angle tune_by_substitution(const LeafContext& ctx, const Angle& beta);

}  // namespace lamina::oracle
