#pragma once

#include <utility>

#include "lamina/dynamic.hpp"

namespace lamina {

// Eventually periodic binary expansion 0.prefix(repeat)^inf.
struct BinaryExpansion {
  std::string prefix;
  std::string repeat;  // non-empty
};

// Standard expansion (dyadics get the form ending in repeated 0s).
BinaryExpansion binary_of(const Angle& x);
// Both expansions of a dyadic; for non-dyadics both slots hold the unique one.
std::pair<BinaryExpansion, BinaryExpansion> binary_of_both(const Angle& x);
Angle angle_from_binary(const BinaryExpansion& e);

// Tuning weight: alpha + (2^m - 1) * d * sum b_i 2^{-im}.
Angle tune_from_expansion(const LeafContext& ctx, const BinaryExpansion& e);

// Tuning of a non-dyadic angle (dyadics are rejected; use tune_point_both).
Angle tune(const LeafContext& ctx, const Angle& beta);

// Chord spanned by the tunings of both expansions of a dyadic (S itself for 0).
Chord tune_point_both(const LeafContext& ctx, const Angle& beta);

// Memberwise tuning of a chord with non-dyadic ends.
Chord tune_chord(const LeafContext& ctx, const Chord& c);

// Inverse of tune on its image; errors when x is not in the tuned Cantor set.
Angle untune(const LeafContext& ctx, const Angle& x);

// Combinatorial rotation number of the orbit of a periodic angle: the sorted
// orbit must shift by a constant amount under doubling, else an error.
std::pair<long, long> rotation_number(const Angle& x);

// The unique period-q leaf with ends on the rotation-p/q orbit, immediately
// visible from the main component. Requires store depth >= q.
Leaf limb_leaf(const LaminationStore& store, long p, long q);

// Tuned image of limb_leaf(p, q): the period-qm bifurcation leaf B_{p/q}.
Leaf bifurcation_leaf(const LaminationStore& store, const LeafContext& ctx, long p, long q);

// Gateway R_B: the boundary leaf of the critical value gap with B and every
// leaf visible behind B lying behind it.
Chord gateway(const LeafContext& ctx, const Leaf& B);

// Everything the visibility-tree machinery needs about one sublimb.
struct SublimbDesc {
  Leaf S;
  LeafContext ctx;
  long p = 0, q = 0;
  Leaf B;
  Chord R_B;
  std::string rb_word;  // word of R_B, length (q-1)m, equals v s_1 v ... v s_{q-2} v e
  std::string lift;     // rb_word minus its last m symbols, length (q-2)m

  SublimbDesc()
      : S{Chord(Angle(Rat(1, 3)), Angle(Rat(2, 3))), 2},
        B{S},
        R_B(Angle(Rat(1, 3)), Angle(Rat(2, 3))) {}
};

SublimbDesc make_sublimb(const LaminationStore& store, const Leaf& S, long p, long q);

}  // namespace lamina
