#pragma once

#include <nlohmann/json.hpp>

#include "lamina/tuning.hpp"

namespace lamina {

// Leaves visible from S lying strictly behind B, found by scanning periodic
// points in the arc of B whose kneading prefix matches just_behind(S).
std::vector<Leaf> visible_leaves_behind(const LaminationStore& store, const SublimbDesc& desc);

// Plane tree of B and the leaves visible behind it; children ordered by the
// smaller endpoint, which fixes the embedding.
struct VisTree {
  struct Node {
    Leaf leaf;
    std::vector<Node> children;
  };
  Node root;
};

VisTree visibility_tree(const LaminationStore& store, const Leaf& S, long p, long q);
VisTree visibility_tree(const LaminationStore& store, const SublimbDesc& desc);

// Canonical serialization of the shape + (shifted) period labels.
std::string tree_serialize(const VisTree& t, long shift = 0);

// Equal trees after adding `shift` to every period label of t1.
bool trees_equivalent(const VisTree& t1, const VisTree& t2, long shift);

nlohmann::json tree_to_json(const VisTree& t);

// Semi-visible dynamic pairs behind R_B: whole pair behind R_B, both members in
// the entire lamination, and kneading(s1) agreeing with just_behind(S) to the
// step. Enumerated behind L_{ve}(S) and lifted along desc.lift.
std::vector<DynamicPair> enumerate_semi_visible(const LaminationStore& store,
                                                const SublimbDesc& desc);

// Whether one pair is semi-visible behind R_B (same geometry pre-checks).
bool pair_semi_visible(const SublimbDesc& desc, const DynamicPair& p);

// Visible leaf spanned by a semi-visible pair: the unique periodic point in
// each of its two short gap arcs, as a leaf of period = step.
Leaf q_map(const SublimbDesc& desc, const DynamicPair& p);

}  // namespace lamina
