#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "lamina/vistree.hpp"

namespace lamina {

struct CheckReport {
  std::string name;
  bool passed = false;
  nlohmann::json details;

  nlohmann::json to_json() const;
};

// Partial translation check: every sublimb tree Vis_{p/q}, q >= 3, matches
// Vis_{1/3} or Vis_{2/3} with periods shifted by (q-3)m. Records which
// alternative held for each p/q.
CheckReport check_theorem_I(const LaminationStore& store, const Leaf& S, long q_max);

// Conditional translation check: equal h^{(q-3)m} iterates of the entry leaves
// force equivalent trees with shift (q2-q1)m.
CheckReport check_theorem_II(const LaminationStore& store, const Leaf& S, long q_max);

// Entry-leaf kneading check: the entry leaf of the p/q sublimb carries
// (ve)^{q-1} followed by v(1-e) repeated; points behind it start with (ve)^{q-2};
// its ((q-2)m-1)-th iterate is L_{eve}(S) or L_{(1-e)ve}(S) for q >= 3.
CheckReport check_lemma_I(const LaminationStore& store, const Leaf& S, long q_max);

// Semi-visible pair kneading check: every enumerated semi-visible pair has
// step < qm and the short member's kneading flips exactly the step-th symbol.
CheckReport check_lemma_II(const LaminationStore& store, const Leaf& S, long q_max);

// Lifted pair check: pairs behind two entry leaves with equal h^{(q-3)m}
// anchors and matched iterates differ in step by (q2-q1)m and share
// semi-visibility.
CheckReport check_lemma_III(const LaminationStore& store, const Leaf& S, long q_max);

// Original Translation Principle sweep: compares all sublimb trees of S with the
// predicted shifts and lists failures (expected at the known counterexample).
CheckReport scan_translation(const LaminationStore& store, int max_period, long q_max);

// Correspondence checks for one sublimb: (a) the visible-pair map is injective,
// embedding- and step-preserving; (b) surjectivity onto the non-root tree
// nodes, reported rather than asserted; (c) the semi-visible bijection plus its
// iterate conditions for q >= 3.
CheckReport check_correspondence(const LaminationStore& store, const SublimbDesc& desc);

}  // namespace lamina
