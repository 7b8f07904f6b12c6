#include "lamina/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lamina/error.hpp"

namespace lamina {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fixed9(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9f", x);
  return buf;
}

double to_double(const Rat& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

struct Vec {
  double x, y;
};

// Position of an angle on the unit circle, mathematical orientation.
Vec on_circle(const Angle& a) {
  double t = 2.0 * kPi * to_double(a.value());
  return {std::cos(t), std::sin(t)};
}

// Mathematical coordinates to pixels, y axis up.
Vec to_px(const Vec& v, double center, double radius) {
  return {center + radius * v.x, center - radius * v.y};
}

void append_chord_path(std::string& out, const RenderChord& rc, double center, double radius) {
  Vec p = on_circle(rc.chord.a());
  Vec q = on_circle(rc.chord.b());
  Vec p1 = to_px(p, center, radius);
  Vec p2 = to_px(q, center, radius);
  out += "<path class=\"" + rc.css_class + "\" d=\"M " + fixed9(p1.x) + " " + fixed9(p1.y);
  if (rc.chord.is_diameter()) {
    out += " L " + fixed9(p2.x) + " " + fixed9(p2.y) + "\"/>\n";
    return;
  }
  // Arc of the circle orthogonal to the unit circle through both endpoints:
  // center (p+q)/(1+<p,q>), squared radius (1-<p,q>)/(1+<p,q>).
  double dot = p.x * q.x + p.y * q.y;
  Vec m{(p.x + q.x) / (1.0 + dot), (p.y + q.y) / (1.0 + dot)};
  double rho = radius * std::sqrt((1.0 - dot) / (1.0 + dot));
  double cross = (p.x - m.x) * (q.y - m.y) - (p.y - m.y) * (q.x - m.x);
  int sweep = cross < 0.0 ? 1 : 0;
  out += " A " + fixed9(rho) + " " + fixed9(rho) + " 0 0 " + std::to_string(sweep) + " " +
         fixed9(p2.x) + " " + fixed9(p2.y) + "\"/>\n";
}

}  // namespace

std::string render_svg(const std::vector<RenderChord>& chords, int size_px) {
  require(size_px > 0, "image size must be positive");
  double center = size_px / 2.0;
  double radius = center * 0.94;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size_px) +
         "\" height=\"" + std::to_string(size_px) + "\" viewBox=\"0 0 " +
         std::to_string(size_px) + " " + std::to_string(size_px) + "\">\n";
  out +=
      "<style>\n"
      "path { fill: none; stroke: #555555; stroke-width: 1; }\n"
      ".boundary { fill: none; stroke: #888888; stroke-width: 1; }\n"
      ".base { stroke: #000000; stroke-width: 1.5; }\n"
      ".marked { stroke: #d62728; }\n"
      ".generated { stroke: #1f77b4; stroke-width: 0.6; }\n"
      ".leaf { stroke: #1f77b4; stroke-width: 0.8; }\n"
      ".root { stroke: #2ca02c; stroke-width: 1.5; }\n"
      ".gateway { stroke: #d62728; stroke-width: 1.2; }\n"
      ".visible { stroke: #9467bd; }\n"
      "</style>\n";
  out += "<circle class=\"boundary\" cx=\"" + fixed9(center) + "\" cy=\"" + fixed9(center) +
         "\" r=\"" + fixed9(radius) + "\"/>\n";
  for (const RenderChord& rc : chords) append_chord_path(out, rc, center, radius);
  out += "</svg>\n";
  return out;
}

namespace {

void append_marked(std::vector<RenderChord>& chords, const std::vector<Chord>& highlights) {
  for (const Chord& c : highlights) chords.push_back({c, "marked"});
}

}  // namespace

std::string render_parameter_lamination(const LaminationStore& store, int max_period,
                                        int size_px, const std::vector<Chord>& highlights) {
  require(max_period >= 2 && max_period <= store.max_period(),
          "render depth outside the stored range");
  std::vector<RenderChord> chords;
  for (long n = 2; n <= max_period; ++n) {
    for (const Leaf& leaf : store.leaves(n)) chords.push_back({leaf.chord, "leaf"});
  }
  append_marked(chords, highlights);
  return render_svg(chords, size_px);
}

std::string render_leaf_lamination(const LeafContext& ctx, int depth, int size_px,
                                   const std::vector<Chord>& highlights) {
  require(depth >= 0, "render depth must be nonnegative");
  std::vector<RenderChord> chords;
  chords.push_back({ctx.S.chord, "base"});
  visit_pairs(ctx, depth, [&chords](const std::string&, const Chord& c0, const Chord& c1) {
    chords.push_back({c0, "generated"});
    chords.push_back({c1, "generated"});
  });
  append_marked(chords, highlights);
  return render_svg(chords, size_px);
}

std::string render_visibility_tree(const LaminationStore& store, const SublimbDesc& desc,
                                   int size_px, const std::vector<Chord>& highlights) {
  std::vector<RenderChord> chords;
  chords.push_back({desc.S.chord, "base"});
  chords.push_back({desc.B.chord, "root"});
  chords.push_back({desc.R_B, "gateway"});
  for (const Leaf& leaf : visible_leaves_behind(store, desc)) {
    chords.push_back({leaf.chord, "visible"});
  }
  append_marked(chords, highlights);
  return render_svg(chords, size_px);
}

}  // namespace lamina
