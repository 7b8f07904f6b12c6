#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamina/address_tools.hpp"
#include "lamina/error.hpp"
#include "lamina/vistree.hpp"

namespace py = pybind11;

namespace {

using namespace lamina;

Angle angle_of(const std::string& text) { return Angle::parse(text); }

std::pair<long, long> fraction_of(const std::string& text) {
  Angle a = Angle::parse(text);
  require(a.value().numerator() > 0, "fraction must lie strictly between 0 and 1");
  return {a.num().convert_to<long>(), a.den().convert_to<long>()};
}

LaminationStore store_for(long depth) {
  return LaminationStore::enumerate(static_cast<int>(std::max<long>(2, depth)));
}

Leaf leaf_of(const LaminationStore& store, const Angle& x) {
  auto leaf = store.leaf_with_end(x);
  require(leaf.has_value(), "no stored leaf has the end " + x.str());
  return *leaf;
}

LeafContext context_for(const std::string& base) {
  Angle x = angle_of(base);
  require(x.is_periodic(), base + " is not periodic under doubling");
  LaminationStore store = store_for(x.period());
  return context_of(leaf_of(store, x));
}

}  // namespace

PYBIND11_MODULE(_lamina, m) {
  m.doc() = "exact combinatorics of laminations under angle doubling";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "double_angle", [](const std::string& s) { return angle_of(s).doubled().str(); },
      py::arg("angle"), "Image of an angle under doubling, as a fraction string.");

  m.def(
      "orbit_type",
      [](const std::string& s) {
        auto [preperiod, period] = angle_of(s).orbit_type();
        return std::make_pair(preperiod, period);
      },
      py::arg("angle"), "Pair (preperiod, eventual period) of an angle under doubling.");

  m.def(
      "chord_length",
      [](const std::string& a, const std::string& b) {
        return rat_str(Chord(angle_of(a), angle_of(b)).length());
      },
      py::arg("a"), py::arg("b"), "Shorter arc distance between two angles, as a fraction.");

  m.def(
      "kneading", [](const std::string& s) { return kneading_of_angle(angle_of(s)).str(); },
      py::arg("angle"), "Kneading sequence of an angle, e.g. \"(0100*)^inf\".");

  m.def(
      "address",
      [](const std::string& s) { return address_from_kneading(kneading_of_angle(angle_of(s))).str(); },
      py::arg("angle"), "Internal address of an angle, e.g. \"1-2-4-5\".");

  m.def(
      "address_of_kneading",
      [](const std::string& word) {
        KneadingSequence k = word.find('(') != std::string::npos ? KneadingSequence::parse(word)
                                                                 : KneadingSequence("", word);
        return address_from_kneading(k).str();
      },
      py::arg("kneading"), "Internal address of a kneading sequence or bare repeated block.");

  m.def(
      "kneading_of_address",
      [](const std::string& addr) {
        return kneading_from_address(InternalAddress::parse(addr)).str();
      },
      py::arg("address"), "Kneading sequence determined by an internal address.");

  m.def(
      "admissible",
      [](const std::string& addr) -> std::optional<std::string> {
        auto witness = admissibility_witness(InternalAddress::parse(addr));
        if (!witness) return std::nullopt;
        return witness->str();
      },
      py::arg("address"),
      "Smallest periodic angle realizing an internal address, or None if there is none.");

  m.def(
      "partner",
      [](const std::string& s) {
        Angle x = angle_of(s);
        require(x.is_periodic(), s + " is not periodic under doubling");
        return store_for(x.period()).partner(x).str();
      },
      py::arg("angle"), "Other end of the stored leaf through a periodic angle.");

  m.def(
      "bstar_counts",
      [](long max_period) {
        LaminationStore store = store_for(max_period);
        std::vector<long> counts;
        for (long n = 2; n <= store.max_period(); ++n)
          counts.push_back(static_cast<long>(store.leaves(n).size()));
        return counts;
      },
      py::arg("max_period"), "Leaf counts for periods 2..max_period.");

  m.def(
      "tune",
      [](const std::string& base, const std::string& beta) {
        return tune(context_for(base), angle_of(beta)).str();
      },
      py::arg("base"), py::arg("beta"), "Tuning of beta along the leaf through the base angle.");

  m.def(
      "untune",
      [](const std::string& base, const std::string& x) {
        return untune(context_for(base), angle_of(x)).str();
      },
      py::arg("base"), py::arg("x"), "Inverse of tune on its image.");

  m.def(
      "bifurcation",
      [](const std::string& base, long p, long q) {
        Angle x = angle_of(base);
        require(x.is_periodic(), base + " is not periodic under doubling");
        LaminationStore store = store_for(std::max(x.period(), q));
        LeafContext ctx = context_of(leaf_of(store, x));
        Leaf b = bifurcation_leaf(store, ctx, p, q);
        return std::make_pair(b.chord.a().str(), b.chord.b().str());
      },
      py::arg("base"), py::arg("p"), py::arg("q"),
      "Ends of the p/q bifurcation leaf behind the leaf through the base angle.");

  m.def(
      "vistree_json",
      [](const std::string& base, const std::string& sublimb) {
        Angle x = angle_of(base);
        require(x.is_periodic(), base + " is not periodic under doubling");
        auto [p, q] = fraction_of(sublimb);
        LaminationStore store = store_for(std::max(x.period(), q));
        SublimbDesc desc = make_sublimb(store, leaf_of(store, x), p, q);
        return tree_to_json(visibility_tree(store, desc)).dump();
      },
      py::arg("base"), py::arg("sublimb"), "Visibility tree of one sublimb as a JSON string.");

  m.def(
      "is_narrow",
      [](const std::string& s) {
        Angle x = angle_of(s);
        require(x.is_periodic(), s + " is not periodic under doubling");
        return is_narrow(leaf_of(store_for(x.period()), x));
      },
      py::arg("angle"), "Whether the leaf through a periodic angle has length 1/(2^m - 1).");
}
