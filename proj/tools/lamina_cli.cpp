#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "lamina/address_tools.hpp"
#include "lamina/error.hpp"
#include "lamina/render.hpp"

namespace fs = std::filesystem;

namespace {

using namespace lamina;

fs::path default_cache_dir() {
  if (const char* env = std::getenv("LAMINA_CACHE_DIR"); env != nullptr && *env != '\0')
    return fs::path(env);
  return fs::path(".lamina-cache");
}

// Loads the store for `depth` from the cache when the cached depth matches
// exactly; otherwise enumerates from scratch and rewrites the cache file, so a
// given depth always yields the same store no matter what was cached before.
LaminationStore obtain_store(int depth, const std::string& cache_override) {
  fs::path path = cache_override.empty()
                      ? default_cache_dir() / ("bstar-" + std::to_string(depth) + ".txt")
                      : fs::path(cache_override);
  if (fs::exists(path)) {
    std::ifstream in(path);
    try {
      LaminationStore store = LaminationStore::load(in);
      if (store.max_period() == depth) return store;
    } catch (const Error&) {
      // stale or foreign file: fall through and regenerate
    }
  }
  LaminationStore store = LaminationStore::enumerate(depth);
  if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  require(out.good(), "cannot write cache file " + path.string());
  store.save(out);
  return store;
}

Leaf leaf_of(const LaminationStore& store, const Angle& x) {
  auto leaf = store.leaf_with_end(x);
  require(leaf.has_value(), "no stored leaf has the end " + x.str());
  return *leaf;
}

long periodic_period(const Angle& x) {
  require(x.is_periodic(), x.str() + " is not periodic under doubling");
  return x.period();
}

std::pair<long, long> parse_fraction(const std::string& text) {
  Angle a = Angle::parse(text);
  require(a.value().numerator() > 0, "fraction must lie strictly between 0 and 1");
  return {a.num().convert_to<long>(), a.den().convert_to<long>()};
}

Chord parse_chord_arg(const std::string& text) {
  auto comma = text.find(',');
  require(comma != std::string::npos, "chord must look like A/B,C/D");
  return Chord(Angle::parse(text.substr(0, comma)), Angle::parse(text.substr(comma + 1)));
}

std::vector<Chord> parse_highlights(const std::vector<std::string>& texts) {
  std::vector<Chord> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_chord_arg(t));
  return out;
}

KneadingSequence parse_kneading_arg(const std::string& text) {
  if (text.find('(') != std::string::npos) return KneadingSequence::parse(text);
  return KneadingSequence("", text);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write " + path);
  out << content;
  require(out.good(), "failed writing " + path);
}

void print_tree_text(const VisTree::Node& node, int depth) {
  std::cout << std::string(static_cast<size_t>(2 * depth), ' ') << "period " << node.leaf.period
            << "  {" << node.leaf.chord.a().str() << ", " << node.leaf.chord.b().str() << "}\n";
  for (const VisTree::Node& child : node.children) print_tree_text(child, depth + 1);
}

int run_bstar(int max_period, const std::string& cache) {
  LaminationStore store = obtain_store(max_period, cache);
  long total = 0;
  for (long n = 2; n <= max_period; ++n) {
    long count = static_cast<long>(store.leaves(n).size());
    std::cout << "period " << n << ": " << count << "\n";
    total += count;
  }
  std::cout << "total = " << total << "\n";
  return 0;
}

int run_knead(const std::string& angle_text) {
  std::cout << kneading_of_angle(Angle::parse(angle_text)).str() << "\n";
  return 0;
}

int run_address(const std::string& angle_text, const std::string& kneading_text) {
  require(angle_text.empty() != kneading_text.empty(),
          "give either an angle or --kneading, not both");
  KneadingSequence k = angle_text.empty() ? parse_kneading_arg(kneading_text)
                                          : kneading_of_angle(Angle::parse(angle_text));
  std::cout << address_from_kneading(k).str() << "\n";
  return 0;
}

int run_admissible(const std::string& address_text) {
  InternalAddress addr = InternalAddress::parse(address_text);
  if (auto witness = admissibility_witness(addr)) {
    std::cout << "ADMISSIBLE " << witness->str() << "\n";
    return 0;
  }
  std::cout << "INADMISSIBLE\n";
  return 1;
}

int run_vistree(const std::string& angle_text, const std::string& sublimb_text, bool as_json,
                const std::string& cache) {
  Angle x = Angle::parse(angle_text);
  long m = periodic_period(x);
  auto [p, q] = parse_fraction(sublimb_text);
  LaminationStore store = obtain_store(static_cast<int>(std::max(m, q)), cache);
  SublimbDesc desc = make_sublimb(store, leaf_of(store, x), p, q);
  VisTree tree = visibility_tree(store, desc);
  if (as_json) {
    nlohmann::json j = tree_to_json(tree);
    j["leaf"] = {desc.S.chord.a().str(), desc.S.chord.b().str()};
    j["sublimb"] = std::to_string(p) + "/" + std::to_string(q);
    std::cout << j.dump(2) << "\n";
  } else {
    print_tree_text(tree.root, 0);
  }
  return 0;
}

int run_check_translation(int max_period, long q_max, const std::string& cache) {
  int depth = std::max(max_period, static_cast<int>(q_max));
  LaminationStore store = obtain_store(depth, cache);
  CheckReport report = scan_translation(store, max_period, q_max);
  std::cout << report.to_json().dump(2) << "\n";
  bool holds = report.passed && report.details["counterexamples"].empty();
  return holds ? 0 : 1;
}

int run_check_correspondence(const std::string& angle_text, const std::string& sublimb_text,
                             const std::string& cache) {
  Angle x = Angle::parse(angle_text);
  long m = periodic_period(x);
  auto [p, q] = parse_fraction(sublimb_text);
  LaminationStore store = obtain_store(static_cast<int>(std::max(m, q)), cache);
  SublimbDesc desc = make_sublimb(store, leaf_of(store, x), p, q);
  CheckReport report = check_correspondence(store, desc);
  std::cout << report.to_json().dump(2) << "\n";
  bool holds = report.passed && report.details["surjective_onto_tree"].get<bool>() &&
               report.details["visible_pairs_without_node"].empty() &&
               report.details["semi_visible_pairs_without_node"].empty();
  return holds ? 0 : 1;
}

int run_check_theorem_I(const std::string& angle_text, long q_max, const std::string& cache) {
  Angle x = Angle::parse(angle_text);
  long m = periodic_period(x);
  LaminationStore store = obtain_store(static_cast<int>(std::max(m, q_max)), cache);
  CheckReport report = check_theorem_I(store, leaf_of(store, x), q_max);
  std::cout << report.to_json().dump(2) << "\n";
  return report.passed ? 0 : 1;
}

int run_render_parameter(int max_period, int size_px, const std::string& out_path,
                         const std::vector<std::string>& highlights, const std::string& cache) {
  LaminationStore store = obtain_store(max_period, cache);
  write_file(out_path,
             render_parameter_lamination(store, max_period, size_px, parse_highlights(highlights)));
  return 0;
}

int run_render_leaf(const std::string& angle_text, int depth, int size_px,
                    const std::string& out_path, const std::vector<std::string>& highlights,
                    const std::string& cache) {
  Angle x = Angle::parse(angle_text);
  long m = periodic_period(x);
  LaminationStore store = obtain_store(static_cast<int>(m), cache);
  LeafContext ctx = context_of(leaf_of(store, x));
  write_file(out_path, render_leaf_lamination(ctx, depth, size_px, parse_highlights(highlights)));
  return 0;
}

int run_render_vistree(const std::string& angle_text, const std::string& sublimb_text,
                       int size_px, const std::string& out_path,
                       const std::vector<std::string>& highlights, const std::string& cache) {
  Angle x = Angle::parse(angle_text);
  long m = periodic_period(x);
  auto [p, q] = parse_fraction(sublimb_text);
  LaminationStore store = obtain_store(static_cast<int>(std::max(m, q)), cache);
  SublimbDesc desc = make_sublimb(store, leaf_of(store, x), p, q);
  write_file(out_path,
             render_visibility_tree(store, desc, size_px, parse_highlights(highlights)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of laminations under angle doubling"};
  app.require_subcommand(1);
  int exit_code = 0;

  // bstar
  int bstar_depth = 0;
  std::string bstar_cache;
  CLI::App* bstar = app.add_subcommand("bstar", "enumerate leaves with periodic ends by period");
  bstar->add_option("--max-period", bstar_depth, "largest period to enumerate")->required();
  bstar->add_option("--cache", bstar_cache, "cache file (default: per-depth file in cache dir)");
  bstar->callback([&] { exit_code = run_bstar(bstar_depth, bstar_cache); });

  // knead
  std::string knead_angle;
  CLI::App* knead = app.add_subcommand("knead", "kneading sequence of an angle");
  knead->add_option("angle", knead_angle, "angle as a fraction A/B")->required();
  knead->callback([&] { exit_code = run_knead(knead_angle); });

  // address
  std::string address_angle, address_kneading;
  CLI::App* address = app.add_subcommand("address", "internal address of an angle or sequence");
  address->add_option("angle", address_angle, "angle as a fraction A/B");
  address->add_option("--kneading", address_kneading,
                      "kneading sequence, e.g. \"(0100*)^inf\" or the bare block \"0100*\"");
  address->callback([&] { exit_code = run_address(address_angle, address_kneading); });

  // admissible
  std::string admissible_address;
  CLI::App* admissible =
      app.add_subcommand("admissible", "decide whether an internal address is realized");
  admissible->add_option("address", admissible_address, "internal address, e.g. 1-2-4-5")
      ->required();
  admissible->callback([&] { exit_code = run_admissible(admissible_address); });

  // vistree
  std::string vistree_angle, vistree_sublimb, vistree_cache;
  bool vistree_json = false;
  CLI::App* vistree = app.add_subcommand("vistree", "visibility tree of a sublimb");
  vistree->add_option("angle", vistree_angle, "periodic angle naming the base leaf")->required();
  vistree->add_option("--sublimb", vistree_sublimb, "rotation number p/q")->required();
  vistree->add_flag("--json", vistree_json, "emit JSON instead of text");
  vistree->add_option("--cache", vistree_cache, "cache file override");
  vistree->callback(
      [&] { exit_code = run_vistree(vistree_angle, vistree_sublimb, vistree_json, vistree_cache); });

  // check
  CLI::App* check = app.add_subcommand("check", "run a principle checker");
  check->require_subcommand(1);

  int tr_max_period = 0;
  long tr_q_max = 0;
  std::string tr_cache;
  CLI::App* translation =
      check->add_subcommand("translation", "compare all sublimb trees with predicted shifts");
  translation->add_option("--max-period", tr_max_period, "largest base leaf period")->required();
  translation->add_option("--max-q", tr_q_max, "largest sublimb denominator")->required();
  translation->add_option("--cache", tr_cache, "cache file override");
  translation->callback(
      [&] { exit_code = run_check_translation(tr_max_period, tr_q_max, tr_cache); });

  std::string co_angle, co_sublimb, co_cache;
  CLI::App* correspondence =
      check->add_subcommand("correspondence", "pairs behind the gateway against visible leaves");
  correspondence->add_option("angle", co_angle, "periodic angle naming the base leaf")->required();
  correspondence->add_option("--sublimb", co_sublimb, "rotation number p/q")->required();
  correspondence->add_option("--cache", co_cache, "cache file override");
  correspondence->callback(
      [&] { exit_code = run_check_correspondence(co_angle, co_sublimb, co_cache); });

  std::string t1_angle, t1_cache;
  long t1_q_max = 0;
  CLI::App* theorem_I =
      check->add_subcommand("theorem-I", "match every sublimb tree against the q=3 trees");
  theorem_I->add_option("angle", t1_angle, "periodic angle naming the base leaf")->required();
  theorem_I->add_option("--max-q", t1_q_max, "largest sublimb denominator")->required();
  theorem_I->add_option("--cache", t1_cache, "cache file override");
  theorem_I->callback([&] { exit_code = run_check_theorem_I(t1_angle, t1_q_max, t1_cache); });

  // render
  CLI::App* render = app.add_subcommand("render", "draw laminations as SVG");
  render->require_subcommand(1);

  int rp_max_period = 0, rp_size = 800;
  std::string rp_out, rp_cache;
  std::vector<std::string> rp_highlights;
  CLI::App* render_param =
      render->add_subcommand("parameter-lamination", "all stored leaves up to a period");
  render_param->add_option("--max-period", rp_max_period, "largest period to draw")->required();
  render_param->add_option("--out", rp_out, "output SVG path")->required();
  render_param->add_option("--size-px", rp_size, "image size in pixels");
  render_param->add_option("--highlight", rp_highlights, "chord A/B,C/D drawn marked");
  render_param->add_option("--cache", rp_cache, "cache file override");
  render_param->callback([&] {
    exit_code = run_render_parameter(rp_max_period, rp_size, rp_out, rp_highlights, rp_cache);
  });

  std::string rl_angle, rl_out, rl_cache;
  int rl_depth = 0, rl_size = 800;
  std::vector<std::string> rl_highlights;
  CLI::App* render_leaf =
      render->add_subcommand("lamination-of-leaf", "pairs generated behind one leaf");
  render_leaf->add_option("angle", rl_angle, "periodic angle naming the base leaf")->required();
  render_leaf->add_option("--depth", rl_depth, "length of generating words to draw")->required();
  render_leaf->add_option("--out", rl_out, "output SVG path")->required();
  render_leaf->add_option("--size-px", rl_size, "image size in pixels");
  render_leaf->add_option("--highlight", rl_highlights, "chord A/B,C/D drawn marked");
  render_leaf->add_option("--cache", rl_cache, "cache file override");
  render_leaf->callback([&] {
    exit_code =
        run_render_leaf(rl_angle, rl_depth, rl_size, rl_out, rl_highlights, rl_cache);
  });

  std::string rv_angle, rv_sublimb, rv_out, rv_cache;
  int rv_size = 800;
  std::vector<std::string> rv_highlights;
  CLI::App* render_vis =
      render->add_subcommand("visibility-tree", "base leaf, gateway and visible leaves");
  render_vis->add_option("angle", rv_angle, "periodic angle naming the base leaf")->required();
  render_vis->add_option("--sublimb", rv_sublimb, "rotation number p/q")->required();
  render_vis->add_option("--out", rv_out, "output SVG path")->required();
  render_vis->add_option("--size-px", rv_size, "image size in pixels");
  render_vis->add_option("--highlight", rv_highlights, "chord A/B,C/D drawn marked");
  render_vis->add_option("--cache", rv_cache, "cache file override");
  render_vis->callback([&] {
    exit_code =
        run_render_vistree(rv_angle, rv_sublimb, rv_size, rv_out, rv_highlights, rv_cache);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
