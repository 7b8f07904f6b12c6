#include "lamina/address_tools.hpp"

#include <string>
#include <vector>

#include "lamina/error.hpp"

namespace lamina {

std::optional<Angle> admissibility_witness(const InternalAddress& addr) {
  require(!addr.entries.empty(), "internal address is empty");
  long n = addr.entries.back();
  require(n <= kMaxAdmissiblePeriod, "final address entry beyond the search ceiling");
  std::string want = kneading_from_address(addr).first(n);
  Int den = pow2(n) - 1;
  for (Int a = 0; a < den; ++a) {
    SymbolStream stream(a, den);
    bool hit = true;
    for (long i = 0; i < n && hit; ++i) hit = stream.next() == want[static_cast<size_t>(i)];
    if (hit) return Angle(a, den);
  }
  return std::nullopt;
}

bool is_admissible(const InternalAddress& addr) { return admissibility_witness(addr).has_value(); }

CheckReport check_corollary_I(const InternalAddress& prefix, long j_max) {
  require(j_max >= 2, "extension check needs j_max >= 2");
  require(is_admissible(prefix), "extension check needs an admissible base address");
  long m = prefix.entries.back();
  require(j_max * m + m - 1 <= kMaxAdmissiblePeriod,
          "j_max pushes the witness search beyond the ceiling");
  CheckReport report;
  report.name = "corollary-I";
  report.passed = true;
  report.details["failures"] = nlohmann::json::array();
  auto fail = [&report](const std::string& what) {
    report.passed = false;
    report.details["failures"].push_back(what);
  };
  for (long j = 2; j <= j_max; ++j) {
    InternalAddress ext = prefix;
    ext.entries.push_back(j * m);
    if (!is_admissible(ext)) {
      fail("extension by " + std::to_string(j * m) + " is inadmissible");
    }
  }
  nlohmann::json rows = nlohmann::json::array();
  for (long r = 1; r < m; ++r) {
    std::vector<bool> by_j;
    for (long j = 1; j <= j_max; ++j) {
      InternalAddress ext = prefix;
      ext.entries.push_back(j * m + r);
      by_j.push_back(is_admissible(ext));
    }
    bool constant = true;
    for (size_t i = 2; i < by_j.size(); ++i) constant = constant && by_j[i] == by_j[1];
    if (!constant) {
      fail("admissibility varies across j >= 2 at remainder " + std::to_string(r));
    }
    nlohmann::json vals = nlohmann::json::array();
    for (bool b : by_j) vals.push_back(b);
    rows.push_back({{"r", r},
                    {"by_j_from_1", vals},
                    {"holds_at_j_1", by_j.size() >= 2 && by_j[0] == by_j[1]}});
  }
  report.details["remainders"] = rows;
  report.details["j_max"] = j_max;
  return report;
}

}  // namespace lamina
