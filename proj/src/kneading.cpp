#include "lamina/kneading.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lamina/error.hpp"

namespace lamina {

namespace {

bool valid_symbol(char c) { return c == '0' || c == '1' || c == '*'; }

void validate_symbols(const std::string& s) {
  for (char c : s)
    require(valid_symbol(c), std::string("invalid kneading symbol '") + c + "'");
}

char flipped(char c) {
  if (c == '0') return '1';
  if (c == '1') return '0';
  internal_error("cannot flip symbol '*'");
}

// Largest integer not exceeding a non-negative rational.
Int floor_nonneg(const Rat& r) {
  if (r.numerator() < 0) internal_error("floor_nonneg on negative value");
  return r.numerator() / r.denominator();
}

void validate_address(const InternalAddress& a) {
  require(!a.entries.empty(), "internal address must have at least one entry");
  require(a.entries.front() == 1, "internal address must start with 1");
  for (size_t i = 1; i < a.entries.size(); ++i)
    require(a.entries[i] > a.entries[i - 1],
            "internal address entries must be strictly increasing");
}

}  // namespace

SymbolStream::SymbolStream(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  require(q_ >= 1 && p_ >= 0 && p_ < q_, "symbol stream needs 0 <= p < q");
  cur_ = p_;
}

char SymbolStream::next() {
  Int t = cur_ * 2;
  char sym;
  if (t == p_ || t == p_ + q_)
    sym = '*';
  else if (p_ < t && t < p_ + q_)
    sym = '0';
  else
    sym = '1';
  cur_ = t >= q_ ? t - q_ : t;
  return sym;
}

KneadingSequence::KneadingSequence(std::string prefix, std::string block)
    : prefix_(std::move(prefix)), block_(std::move(block)) {
  require(!block_.empty(), "kneading sequence needs a non-empty repeating block");
  validate_symbols(prefix_);
  validate_symbols(block_);
  // Reduce the block to its primitive core.
  size_t n = block_.size();
  for (size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (size_t i = d; i < n && repeats; ++i) repeats = block_[i] == block_[i - d];
    if (repeats) {
      block_.resize(d);
      break;
    }
  }
  // Absorb a prefix tail that only restates the tail of the block.
  while (!prefix_.empty() && prefix_.back() == block_.back()) {
    prefix_.pop_back();
    std::rotate(block_.rbegin(), block_.rbegin() + 1, block_.rend());
  }
}

KneadingSequence KneadingSequence::parse(std::string_view text) {
  std::string s(text);
  auto open = s.find('(');
  require(open != std::string::npos,
          "kneading sequence must contain a \"(block)^inf\" part: " + s);
  auto close = s.find(')', open);
  require(close != std::string::npos, "unbalanced '(' in kneading sequence: " + s);
  std::string tail = s.substr(close + 1);
  require(tail.empty() || tail == "^inf",
          "kneading sequence must end with \")^inf\": " + s);
  return KneadingSequence(s.substr(0, open), s.substr(open + 1, close - open - 1));
}

char KneadingSequence::symbol_at(long n) const {
  require(n >= 1, "kneading symbols are indexed from 1");
  size_t idx = static_cast<size_t>(n - 1);
  if (idx < prefix_.size()) return prefix_[idx];
  return block_[(idx - prefix_.size()) % block_.size()];
}

std::string KneadingSequence::first(long n) const {
  std::string out;
  out.reserve(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) out.push_back(symbol_at(i));
  return out;
}

bool KneadingSequence::agrees_to(const KneadingSequence& other, long n) const {
  for (long i = 1; i <= n; ++i)
    if (symbol_at(i) != other.symbol_at(i)) return false;
  return true;
}

std::string KneadingSequence::str() const {
  return prefix_ + "(" + block_ + ")^inf";
}

KneadingSequence kneading_of_angle(const Angle& x) {
  auto [preperiod, eventual] = x.orbit_type();
  SymbolStream stream(x.num(), x.den());
  std::string prefix, block;
  for (long i = 0; i < preperiod; ++i) prefix.push_back(stream.next());
  for (long i = 0; i < eventual; ++i) block.push_back(stream.next());
  return KneadingSequence(std::move(prefix), std::move(block));
}

std::string kneading_prefix(const Angle& x, long n) {
  SymbolStream stream(x.num(), x.den());
  std::string out;
  out.reserve(static_cast<size_t>(n > 0 ? n : 0));
  for (long i = 0; i < n; ++i) out.push_back(stream.next());
  return out;
}

VE v_e_of(const Chord& s) {
  require(s.a().is_periodic() && s.b().is_periodic(),
          "leaf ends must be periodic: " + s.str());
  long m = s.a().period();
  require(s.b().period() == m, "leaf ends must share one period: " + s.str());
  auto [a_lo, a_hi] = s.a().halves();
  auto [g_lo, g_hi] = s.b().halves();
  Chord p1(a_lo, g_hi), p2(a_hi, g_lo);
  bool p1_periodic = p1.a().is_periodic() && p1.b().is_periodic();
  bool p2_periodic = p2.a().is_periodic() && p2.b().is_periodic();
  require(p1_periodic != p2_periodic,
          "no periodic preimage pairing, chord is not a lamination leaf: " + s.str());
  VE out;
  out.e = p1_periodic ? 0 : 1;
  out.v = kneading_prefix(s.a(), m - 1);
  require(out.v == kneading_prefix(s.b(), m - 1),
          "leaf ends disagree before their period, chord is not a lamination leaf: " +
              s.str());
  return out;
}

namespace {

// Shared shape check for the three kneading views of a leaf.  Periodic leaves
// get a block built from (v, e); other leaves must carry one sequence on both
// ends, which all three views share.
KneadingSequence leaf_sequence(const Chord& c, char periodic_last) {
  VE ve = v_e_of(c);
  std::string block = ve.v;
  if (periodic_last == '*')
    block.push_back('*');
  else if (periodic_last == 'e')
    block.push_back(static_cast<char>('0' + ve.e));
  else
    block.push_back(static_cast<char>('0' + (1 - ve.e)));
  return KneadingSequence("", std::move(block));
}

KneadingSequence nonperiodic_leaf_sequence(const Chord& c) {
  KneadingSequence ka = kneading_of_angle(c.a());
  KneadingSequence kb = kneading_of_angle(c.b());
  require(ka == kb, "leaf ends carry different kneading sequences: " + c.str());
  return ka;
}

bool has_periodic_ends(const Chord& c) {
  bool pa = c.a().is_periodic(), pb = c.b().is_periodic();
  require(pa == pb, "leaf ends must be both periodic or both non-periodic: " + c.str());
  return pa;
}

}  // namespace

KneadingSequence leaf_kneading(const Chord& c) {
  return has_periodic_ends(c) ? leaf_sequence(c, '*') : nonperiodic_leaf_sequence(c);
}

KneadingSequence just_before(const Chord& c) {
  return has_periodic_ends(c) ? leaf_sequence(c, 'f') : nonperiodic_leaf_sequence(c);
}

KneadingSequence just_behind(const Chord& c) {
  return has_periodic_ends(c) ? leaf_sequence(c, 'e') : nonperiodic_leaf_sequence(c);
}

Int count_period_points(long n, const Rat& lo, const Rat& hi) {
  require(n >= 1, "period must be positive");
  if (!rat_lt(lo, hi)) return Int(0);
  Int d = pow2(n) - 1;
  Rat scaled_lo = lo * Rat(d), scaled_hi = hi * Rat(d);
  Int a_min = floor_nonneg(scaled_lo) + 1;
  Int a_max = scaled_hi.denominator() == 1 ? scaled_hi.numerator() - 1
                                           : floor_nonneg(scaled_hi);
  if (a_min < 1) a_min = 1;
  if (a_max > d - 1) a_max = d - 1;
  return a_max >= a_min ? a_max - a_min + 1 : Int(0);
}

InternalAddress InternalAddress::parse(std::string_view text) {
  InternalAddress out;
  require(!text.empty(), "empty internal address");
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t dash = text.find('-', pos);
    std::string token(text.substr(pos, dash == std::string_view::npos
                                           ? std::string_view::npos
                                           : dash - pos));
    require(!token.empty() && token.size() <= 9 &&
                token.find_first_not_of("0123456789") == std::string::npos,
            "bad internal address entry: '" + token + "'");
    out.entries.push_back(std::stol(token));
    if (dash == std::string_view::npos) break;
    pos = dash + 1;
  }
  validate_address(out);
  return out;
}

std::string InternalAddress::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << '-';
    os << entries[i];
  }
  return os.str();
}

InternalAddress address_from_kneading(const KneadingSequence& k) {
  InternalAddress addr;
  KneadingSequence approx("", "1");
  for (long step = 0; step < kMaxAddressEntries; ++step) {
    if (k == approx) return addr;
    long bound = static_cast<long>(k.prefix().size() + approx.prefix().size() +
                                   std::lcm(k.block().size(), approx.block().size()));
    long n = 0;
    for (long i = 1; i <= bound; ++i) {
      if (k.symbol_at(i) != approx.symbol_at(i)) {
        n = i;
        break;
      }
    }
    if (n == 0) internal_error("equal sequences compared as different: " + k.str());
    addr.entries.push_back(n);
    if (k.symbol_at(n) == '*') {
      validate_address(addr);
      return addr;
    }
    approx = KneadingSequence("", k.first(n));
  }
  fail("internal address of " + k.str() + " exceeds " +
       std::to_string(kMaxAddressEntries) + " entries");
}

KneadingSequence kneading_from_address(const InternalAddress& addr) {
  validate_address(addr);
  KneadingSequence approx("", "1");
  for (size_t i = 0; i < addr.entries.size(); ++i) {
    long n = addr.entries[i];
    std::string block = approx.first(n);
    bool last = i + 1 == addr.entries.size();
    block[static_cast<size_t>(n - 1)] =
        last ? '*' : flipped(block[static_cast<size_t>(n - 1)]);
    approx = KneadingSequence("", std::move(block));
  }
  return approx;
}

}  // namespace lamina
