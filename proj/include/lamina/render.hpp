#pragma once

#include <string>
#include <vector>

#include "lamina/vistree.hpp"

namespace lamina {

// One chord to draw: geodesic arc orthogonal to the unit circle (straight line
// for diameters), with a CSS class choosing the stroke.
struct RenderChord {
  Chord chord;
  std::string css_class;
};

// Deterministic standalone SVG: unit circle plus the given chords, y axis up,
// all coordinates printed with 9 fixed decimals.
std::string render_svg(const std::vector<RenderChord>& chords, int size_px);

// The optional highlights are drawn last with the "marked" class.
std::string render_parameter_lamination(const LaminationStore& store, int max_period,
                                        int size_px, const std::vector<Chord>& highlights = {});
std::string render_leaf_lamination(const LeafContext& ctx, int depth, int size_px,
                                   const std::vector<Chord>& highlights = {});
std::string render_visibility_tree(const LaminationStore& store, const SublimbDesc& desc,
                                   int size_px, const std::vector<Chord>& highlights = {});

}  // namespace lamina
