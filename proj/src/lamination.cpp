#include "lamina/lamination.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "lamina/error.hpp"

namespace lamina {

namespace {

constexpr const char* kCacheHeader = "LAMINA v1 max_period=";

std::vector<Int> exact_period_numerators(int n) {
  Int dn = pow2(n) - 1;
  std::vector<Int> nums;
  for (Int a = 1; a < dn; ++a) {
    bool exact = true;
    for (int t = 2; t * 2 <= n && exact; ++t)
      if (n % t == 0) exact = (a * (pow2(t) - 1)) % dn != 0;
    if (exact) nums.push_back(a);
  }
  return nums;
}

}  // namespace

Leaf make_leaf(const Chord& c) {
  require(is_bstar_chord(c),
          "chord is not a leaf with periodic ends of one period: " + c.str());
  return Leaf{c, c.a().period()};
}

LaminationStore LaminationStore::enumerate(int max_period) {
  require(max_period >= 2 && max_period <= kMaxEnumerationPeriod,
          "enumeration depth must lie in [2, " +
              std::to_string(kMaxEnumerationPeriod) + "]");
  LaminationStore store;
  store.max_period_ = max_period;
  store.by_period_.assign(static_cast<size_t>(max_period) + 1, {});

  Int common = 1;
  for (int r = 2; r <= max_period; ++r) common = lcm(common, pow2(r) - 1);

  // Endpoints of every placed chord, scaled to the common denominator so the
  // crossing test is pure integer comparison.
  std::vector<std::array<Int, 2>> placed;

  for (int n = 2; n <= max_period; ++n) {
    Int dn = pow2(n) - 1;
    Int scale = common / dn;
    std::vector<Int> nums = exact_period_numerators(n);
    std::vector<bool> done(nums.size(), false);
    for (size_t i = 0; i < nums.size(); ++i) {
      if (done[i]) continue;
      bool matched = false;
      for (size_t j = i + 1; j < nums.size() && !matched; ++j) {
        if (done[j]) continue;
        Int lo = nums[i] * scale, hi = nums[j] * scale;
        bool ok = true;
        for (const auto& c : placed) {
          bool in0 = c[0] > lo && c[0] < hi;
          bool in1 = c[1] > lo && c[1] < hi;
          if (in0 != in1) {
            ok = false;
            break;
          }
        }
        if (ok) {
          done[i] = done[j] = true;
          placed.push_back({lo, hi});
          store.by_period_[static_cast<size_t>(n)].push_back(
              Leaf{Chord(Angle(nums[i], dn), Angle(nums[j], dn)), n});
          matched = true;
        }
      }
      if (!matched)
        internal_error("periodic point left unpaired during enumeration at period " +
                       std::to_string(n));
    }
  }
  return store;
}

const std::vector<Leaf>& LaminationStore::leaves(long period) const {
  require(period >= 2 && period <= max_period_,
          "period " + std::to_string(period) + " outside store range [2, " +
              std::to_string(max_period_) + "]");
  return by_period_[static_cast<size_t>(period)];
}

std::vector<Leaf> LaminationStore::all_leaves() const {
  std::vector<Leaf> out;
  for (int n = 2; n <= max_period_; ++n)
    out.insert(out.end(), by_period_[static_cast<size_t>(n)].begin(),
               by_period_[static_cast<size_t>(n)].end());
  return out;
}

long LaminationStore::leaf_count() const {
  long total = 0;
  for (int n = 2; n <= max_period_; ++n)
    total += static_cast<long>(by_period_[static_cast<size_t>(n)].size());
  return total;
}

std::optional<Leaf> LaminationStore::leaf_with_end(const Angle& x) const {
  for (int n = 2; n <= max_period_; ++n)
    for (const Leaf& leaf : by_period_[static_cast<size_t>(n)])
      if (leaf.chord.has_end(x)) return leaf;
  return std::nullopt;
}

Angle LaminationStore::partner(const Angle& x) const {
  require(x.is_periodic(), "angle " + x.str() + " is not periodic");
  long p = x.period();
  require(p >= 2, "angle " + x.str() + " has no partner");
  require(p <= max_period_,
          "period of " + x.str() + " exceeds the store depth " +
              std::to_string(max_period_));
  for (const Leaf& leaf : by_period_[static_cast<size_t>(p)]) {
    if (leaf.chord.a() == x) return leaf.chord.b();
    if (leaf.chord.b() == x) return leaf.chord.a();
  }
  internal_error("no leaf carries the periodic angle " + x.str());
}

void LaminationStore::save(std::ostream& out) const {
  out << kCacheHeader << max_period_ << '\n';
  for (int n = 2; n <= max_period_; ++n)
    for (const Leaf& leaf : by_period_[static_cast<size_t>(n)])
      out << n << ' ' << leaf.chord.a().str() << ' ' << leaf.chord.b().str() << '\n';
}

LaminationStore LaminationStore::load(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "empty lamination file");
  const std::string header = kCacheHeader;
  require(line.rfind(header, 0) == 0, "bad lamination file header: " + line);
  std::string depth_text = line.substr(header.size());
  require(!depth_text.empty() && depth_text.size() <= 2 &&
              depth_text.find_first_not_of("0123456789") == std::string::npos,
          "bad depth in lamination file header: " + line);
  int max_period = std::stoi(depth_text);
  require(max_period >= 2 && max_period <= kMaxEnumerationPeriod,
          "lamination file depth outside [2, " +
              std::to_string(kMaxEnumerationPeriod) + "]");

  LaminationStore store;
  store.max_period_ = max_period;
  store.by_period_.assign(static_cast<size_t>(max_period) + 1, {});
  long prev_period = 0;
  Rat prev_a(0);
  while (std::getline(in, line)) {
    require(!line.empty(), "blank line in lamination file");
    std::istringstream fields(line);
    long period = 0;
    std::string first, second;
    require(static_cast<bool>(fields >> period >> first >> second),
            "bad lamination file line: " + line);
    std::string rest;
    require(!(fields >> rest), "trailing data in lamination file line: " + line);
    Angle a = Angle::parse(first), b = Angle::parse(second);
    require(a < b, "lamination file line out of order: " + line);
    require(period >= 2 && period <= max_period,
            "period outside file depth: " + line);
    require(a.is_periodic() && a.period() == period && b.is_periodic() &&
                b.period() == period,
            "stated period does not match the angles: " + line);
    require(in_entire_lamination(Chord(a, b)),
            "lamination file line is not a leaf: " + line);
    require(period > prev_period ||
                (period == prev_period && rat_lt(prev_a, a.value())),
            "lamination file lines are not sorted: " + line);
    prev_period = period;
    prev_a = a.value();
    store.by_period_[static_cast<size_t>(period)].push_back(
        Leaf{Chord(a, b), period});
  }
  // Every periodic point of each period must appear on exactly one line, so a
  // truncated or hand-edited file cannot masquerade as a complete store.
  for (int n = 2; n <= max_period; ++n) {
    const auto& layer = store.by_period_[static_cast<size_t>(n)];
    std::set<Rat> ends;
    for (const Leaf& leaf : layer) {
      ends.insert(leaf.chord.a().value());
      ends.insert(leaf.chord.b().value());
    }
    require(ends.size() == 2 * layer.size(),
            "duplicate endpoint among period-" + std::to_string(n) + " leaves");
    require(2 * layer.size() == exact_period_numerators(n).size(),
            "wrong number of period-" + std::to_string(n) + " leaves");
  }
  return store;
}

bool is_visible(const LaminationStore& store, const Leaf& s, const Leaf& q) {
  require(is_behind(q.chord, s.chord),
          "visibility asks for " + q.chord.str() + " behind " + s.chord.str());
  require(store.max_period() >= q.period,
          "store depth " + std::to_string(store.max_period()) +
              " cannot decide visibility at period " + std::to_string(q.period));

  bool separated_below = false;
  for (long p = 2; p < q.period && !separated_below; ++p)
    for (const Leaf& leaf : store.leaves(p))
      if (separates(leaf.chord, s.chord, q.chord)) {
        separated_below = true;
        break;
      }

  bool separated_at_or_below = separated_below;
  if (!separated_at_or_below)
    for (const Leaf& leaf : store.leaves(q.period))
      if (separates(leaf.chord, s.chord, q.chord)) {
        separated_at_or_below = true;
        break;
      }
  if (separated_below != separated_at_or_below)
    internal_error("a leaf of the same period separates " + q.chord.str() +
                   " from " + s.chord.str() + " but none of smaller period does");

  bool symbolic =
      just_behind(s.chord).agrees_to(just_before(q.chord), q.period - 1);
  if (symbolic == separated_below)
    internal_error("symbolic and geometric visibility disagree for " +
                   q.chord.str() + " behind " + s.chord.str());
  return symbolic;
}

bool is_immediately_visible(const LaminationStore& store, const Leaf& s,
                            const Leaf& b) {
  bool symbolic = false;
  if (b.period % s.period == 0) symbolic = just_behind(s.chord) == just_before(b.chord);
  if (symbolic && !is_behind(b.chord, s.chord))
    internal_error("immediately visible leaf " + b.chord.str() +
                   " is not behind " + s.chord.str());
  for (int p = 2; p <= store.max_period(); ++p)
    for (const Leaf& leaf : store.leaves(p))
      if (separates(leaf.chord, s.chord, b.chord)) {
        if (symbolic)
          internal_error("separating leaf " + leaf.chord.str() +
                         " contradicts immediate visibility of " + b.chord.str());
        return symbolic;
      }
  return symbolic;
}

Leaf lavaurs_separator(const LaminationStore& store, const Leaf& q1,
                       const Leaf& q2) {
  require(q1.period == q2.period, "leaves must have one period");
  require(!(q1 == q2), "leaves must be distinct");
  require(!crosses(q1.chord, q2.chord), "leaves must not cross");
  require(store.max_period() >= q1.period - 1,
          "store depth cannot cover periods below " + std::to_string(q1.period));
  for (long p = 2; p < q1.period; ++p) {
    const Leaf* hit = nullptr;
    for (const Leaf& leaf : store.leaves(p)) {
      if (separates(leaf.chord, q1.chord, q2.chord)) {
        if (hit)
          internal_error("two period-" + std::to_string(p) +
                         " leaves separate " + q1.chord.str() + " and " +
                         q2.chord.str());
        hit = &leaf;
      }
    }
    if (hit) return *hit;
  }
  fail("no leaf of smaller period separates " + q1.chord.str() + " and " +
       q2.chord.str());
}

bool is_narrow(const Leaf& s) {
  return s.chord.length() == Rat(Int(1), pow2(s.period) - 1);
}

}  // namespace lamina
