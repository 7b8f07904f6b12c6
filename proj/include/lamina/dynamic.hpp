#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lamina/lamination.hpp"

namespace lamina {

// Data attached to a periodic leaf S of period m that drives the pullback maps:
// dotS = h^{m-1}(S) (periodic preimage pair), ddotS the preperiodic preimage pair,
// e the symbol with ddotS = L_e(S), v the first m-1 kneading symbols of S's ends.
struct LeafContext {
  Leaf S;
  long m = 0;
  Chord dotS;
  Chord ddotS;
  std::string v;
  int e = 0;
  Rat d;        // length of S
  Angle alpha;  // smaller end of S
  Angle gamma;  // larger end of S

  LeafContext()
      : S{Chord(Angle(Rat(1, 3)), Angle(Rat(2, 3))), 2},
        dotS(Angle(Rat(1, 3)), Angle(Rat(2, 3))),
        ddotS(dotS) {}
};

LeafContext context_of(const Leaf& S);

// Membership in the lamination generated by S: some iterate equals S, no iterate
// is longer than dotS, crosses dotS or ddotS, or lies between them while sharing
// an endpoint with either.
bool in_generating_lamination(const LeafContext& ctx, const Chord& r);

// One pullback step L_bit without validating r's membership first.
Chord pullback_unchecked(const LeafContext& ctx, const Chord& r, int bit);

// L_bit with a full membership check on r.
Chord pullback(const LeafContext& ctx, const Chord& r, int bit);

// L_w applied right to left: L_{uw}(r) = L_u(L_w(r)). Validates r once.
Chord pullback_word(const LeafContext& ctx, const Chord& r, std::string_view w);
Chord pullback_word_unchecked(const LeafContext& ctx, Chord r, std::string_view w);

// The 0-1 word u with r = L_u(S) and |u| = first return time of r to S.
std::string word_of(const LeafContext& ctx, const Chord& r);

// Boundary leaf L_{v s_1 v s_2 ... v s_l v e}(S) of the critical value gap; sbits
// supplies s_1..s_l. Asserts the closed-form length (2^m - 2) / 2^{(l+1)m} * d.
Chord gap_boundary_leaf(const LeafContext& ctx, std::string_view sbits);

// Pair {L_{w0}(S), L_{w1}(S)} for a word w not ending with v. s1 is the longer
// member (ties broken toward the smaller minimum endpoint and recorded).
struct DynamicPair {
  Chord s1, s2;
  std::string word;
  long step = 0;
  bool length_tie = false;

  DynamicPair() : s1(Angle(Rat(1, 3)), Angle(Rat(2, 3))), s2(s1) {}
  bool operator==(const DynamicPair& o) const { return word == o.word; }
};

// A 0-1 word not ending with v names a pair; words ending with v collapse onto
// shorter ones and are rejected by dynamic_pair.
bool is_pair_word(const LeafContext& ctx, std::string_view w);

DynamicPair dynamic_pair(const LeafContext& ctx, std::string_view w);

// All pairs with step <= max_step, i.e. words of length <= max_step - 1, in
// ascending (length, lexicographic) order.
std::vector<DynamicPair> enumerate_pairs(const LeafContext& ctx, long max_step);

// Visits every word of length <= max_len carrying (L_{w0}(S), L_{w1}(S)), computed
// incrementally by extending words on the left (one pullback per member per node).
// Words ending with v are skipped by the callback driver.
void visit_pairs(const LeafContext& ctx, long max_len,
                 const std::function<void(const std::string& w, const Chord& c0,
                                          const Chord& c1)>& fn);

// Pair visibility from a leaf r of the generated lamination: p.s2 lies behind r,
// and no pair of smaller step has its longer member equal to r or separating r
// and p.s1. `smaller` must contain every pair of step < p.step (e.g. from
// enumerate_pairs).
bool pair_visible(const LeafContext& ctx, const Chord& r, const DynamicPair& p,
                  const std::vector<DynamicPair>& smaller);

// Word translation: strips l*m symbols off the word, i.e. applies h^{lm} to both
// members. Requires the pair to lie (both members) behind the depth-l gap
// boundary leaf determined by its own word prefix.
DynamicPair translate_pair(const LeafContext& ctx, long l, const DynamicPair& p);

}  // namespace lamina
