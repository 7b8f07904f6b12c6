#include "lamina/tuning.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamina/error.hpp"
#include "lamina/kneading.hpp"

namespace lamina {

namespace {

constexpr long kExpansionCap = 100000;

bool is_dyadic(const Angle& x) {
  Int den = x.den();
  return (den & (den - 1)) == 0;
}

void validate_bits(const BinaryExpansion& e) {
  require(!e.repeat.empty(), "binary expansion needs a non-empty repeating block");
  for (char c : e.prefix) require(c == '0' || c == '1', "binary expansion digits must be 0 or 1");
  for (char c : e.repeat) require(c == '0' || c == '1', "binary expansion digits must be 0 or 1");
}

// Value of 0.prefix(repeat)^inf read with digits in the given base.
Rat digits_value(std::string_view prefix, std::string_view repeat, const Int& base) {
  Int pnum = 0;
  Int pden = 1;
  for (char c : prefix) {
    pnum = pnum * base + (c - '0');
    pden *= base;
  }
  Int rnum = 0;
  Int rden = 1;
  for (char c : repeat) {
    rnum = rnum * base + (c - '0');
    rden *= base;
  }
  return Rat(pnum, pden) + Rat(rnum, rden - 1) / Rat(pden, 1);
}

Rat rat_abs(const Rat& x) { return x.numerator() < 0 ? -x : x; }

std::optional<std::pair<long, long>> try_rotation(const Angle& x) {
  long n = x.period();
  std::vector<Rat> orbit;
  orbit.reserve(static_cast<size_t>(n));
  Angle cur = x;
  for (long i = 0; i < n; ++i) {
    orbit.push_back(cur.value());
    cur = cur.doubled();
  }
  std::sort(orbit.begin(), orbit.end(), [](const Rat& u, const Rat& v) { return rat_lt(u, v); });
  auto index_of = [&](const Rat& v) -> long {
    for (long i = 0; i < n; ++i) {
      if (orbit[static_cast<size_t>(i)] == v) return i;
    }
    internal_error("doubled orbit point escaped its own orbit");
  };
  long shift = 0;
  for (long i = 0; i < n; ++i) {
    Rat dbl = orbit[static_cast<size_t>(i)] * 2;
    if (!rat_lt(dbl, Rat(1))) dbl -= Rat(1);
    long s = (index_of(dbl) - i + n) % n;
    if (i == 0) {
      shift = s;
    } else if (s != shift) {
      return std::nullopt;
    }
  }
  return std::make_pair(shift, n);
}

// True when b lies on the doubling orbit of a (a periodic of period n).
bool on_same_orbit(const Angle& a, const Angle& b, long n) {
  Angle cur = a;
  for (long i = 0; i < n; ++i) {
    if (cur == b) return true;
    cur = cur.doubled();
  }
  return false;
}

}  // namespace

BinaryExpansion binary_of(const Angle& x) {
  std::map<Rat, size_t> seen;
  std::string bits;
  Rat y = x.value();
  for (long guard = 0; guard < kExpansionCap; ++guard) {
    auto [it, fresh] = seen.emplace(y, bits.size());
    if (!fresh) {
      return {bits.substr(0, it->second), bits.substr(it->second)};
    }
    y *= 2;
    int bit = rat_lt(y, Rat(1)) ? 0 : 1;
    if (bit == 1) y -= Rat(1);
    bits.push_back(static_cast<char>('0' + bit));
  }
  fail("binary expansion of " + x.str() + " did not close within the iteration cap");
}

std::pair<BinaryExpansion, BinaryExpansion> binary_of_both(const Angle& x) {
  BinaryExpansion standard = binary_of(x);
  if (!is_dyadic(x)) return {standard, standard};
  if (x.num() == 0) return {standard, BinaryExpansion{"", "1"}};
  ensure(standard.repeat == "0" && !standard.prefix.empty() && standard.prefix.back() == '1',
         "dyadic standard expansion has unexpected shape");
  BinaryExpansion alt{standard.prefix, "1"};
  alt.prefix.back() = '0';
  return {standard, alt};
}

Angle angle_from_binary(const BinaryExpansion& e) {
  validate_bits(e);
  return Angle(digits_value(e.prefix, e.repeat, Int(2)));
}

Angle tune_from_expansion(const LeafContext& ctx, const BinaryExpansion& e) {
  validate_bits(e);
  Rat sum = digits_value(e.prefix, e.repeat, pow2(ctx.m));
  return Angle(ctx.alpha.value() + Rat(pow2(ctx.m) - 1, 1) * ctx.d * sum);
}

Angle tune(const LeafContext& ctx, const Angle& beta) {
  require(!is_dyadic(beta), "tuning a dyadic angle is two-valued, use tune_point_both");
  return tune_from_expansion(ctx, binary_of(beta));
}

Chord tune_point_both(const LeafContext& ctx, const Angle& beta) {
  require(is_dyadic(beta), "two-valued tuning applies to dyadic angles only");
  auto [first, second] = binary_of_both(beta);
  return Chord(tune_from_expansion(ctx, first), tune_from_expansion(ctx, second));
}

Chord tune_chord(const LeafContext& ctx, const Chord& c) {
  return Chord(tune(ctx, c.a()), tune(ctx, c.b()));
}

Angle untune(const LeafContext& ctx, const Angle& x) {
  Int base = pow2(ctx.m);
  Rat scale = Rat(base - 1, 1) * ctx.d;
  Rat y = (x.value() - ctx.alpha.value()) / scale;
  require(!rat_lt(y, Rat(0)) && rat_le(y, Rat(1, base - 1)),
          x.str() + " is not in the tuned image of the base leaf");
  std::map<Rat, size_t> seen;
  std::string bits;
  for (long guard = 0; guard < kExpansionCap; ++guard) {
    auto [it, fresh] = seen.emplace(y, bits.size());
    if (!fresh) {
      BinaryExpansion e{bits.substr(0, it->second), bits.substr(it->second)};
      Angle beta = angle_from_binary(e);
      ensure(tune_from_expansion(ctx, e) == x, "untuned digits do not tune back to the input");
      return beta;
    }
    y *= Rat(base, 1);
    require(rat_lt(y, Rat(2)), x.str() + " is not in the tuned image of the base leaf");
    int digit = rat_lt(y, Rat(1)) ? 0 : 1;
    if (digit == 1) y -= Rat(1);
    bits.push_back(static_cast<char>('0' + digit));
  }
  fail("base digit extraction for " + x.str() + " did not close within the iteration cap");
}

std::pair<long, long> rotation_number(const Angle& x) {
  require(x.is_periodic(), "rotation number is defined for periodic angles only");
  auto rot = try_rotation(x);
  require(rot.has_value(), "orbit of " + x.str() + " is not rotational");
  return *rot;
}

Leaf limb_leaf(const LaminationStore& store, long p, long q) {
  require(q >= 2 && p >= 1 && p < q, "rotation number must satisfy 1 <= p < q, q >= 2");
  require(store.max_period() >= q,
          "store depth " + std::to_string(store.max_period()) + " cannot hold period " +
              std::to_string(q));
  std::optional<Leaf> found;
  for (const Leaf& lf : store.leaves(q)) {
    if (!on_same_orbit(lf.chord.a(), lf.chord.b(), q)) continue;
    auto rot = try_rotation(lf.chord.a());
    if (!rot || rot->first != p || rot->second != q) continue;
    ensure(!found.has_value(), "several limb leaves share one rotation number");
    found = lf;
  }
  require(found.has_value(), "no limb leaf with rotation number " + std::to_string(p) + "/" +
                                 std::to_string(q));
  return *found;
}

Leaf bifurcation_leaf(const LaminationStore& store, const LeafContext& ctx, long p, long q) {
  Leaf limb = limb_leaf(store, p, q);
  Leaf out = make_leaf(tune_chord(ctx, limb.chord));
  ensure(out.period == q * ctx.m, "bifurcation leaf has unexpected period");
  return out;
}

Chord gateway(const LeafContext& ctx, const Leaf& B) {
  Angle ua = untune(ctx, B.chord.a());
  Angle ub = untune(ctx, B.chord.b());
  require(ua.is_periodic() && ub.is_periodic(),
          "sublimb ends do not untune to periodic angles");
  long q = ua.period();
  require(q >= 2, "sublimb untunes to the fixed angle, expected period at least 2");
  require(ub.period() == q && on_same_orbit(ua, ub, q),
          "sublimb ends do not untune into one periodic orbit");
  require(B.period == q * ctx.m, "sublimb period does not match its untuned orbit");
  Chord limb(ua, ub);
  Int den = pow2(q - 1);
  std::optional<Angle> beta;
  for (Int j = 1; j < den; j += 2) {
    Angle cand(j, den);
    if (is_between(cand, limb)) {
      ensure(!beta.has_value(), "gateway dyadic is not unique");
      beta = cand;
    }
  }
  ensure(beta.has_value(), "no gateway dyadic of the expected depth");
  Chord rb = tune_point_both(ctx, *beta);
  ensure(is_behind(rb, B.chord), "gateway leaf is not behind its sublimb leaf");
  std::string w = word_of(ctx, rb);
  ensure(static_cast<long>(w.size()) == (q - 1) * ctx.m, "gateway word has unexpected length");
  ensure(rb.length() == Rat(pow2(ctx.m) - 2, pow2((q - 1) * ctx.m)) * ctx.d,
         "gateway leaf has unexpected length");
  ensure(B.chord.length() ==
             Rat((pow2(ctx.m) - 1) * (pow2(ctx.m) - 1), pow2(q * ctx.m) - 1) * ctx.d,
         "sublimb leaf has unexpected length");
  Rat bound = Rat(1, pow2(q * ctx.m) - 1);
  ensure(rat_lt(rat_abs(rb.a().value() - B.chord.a().value()), bound) &&
             rat_lt(rat_abs(rb.b().value() - B.chord.b().value()), bound),
         "gateway leaf strays from its sublimb leaf");
  if (q == 2) {
    ensure(rb == gap_boundary_leaf(ctx, ""),
           "depth-two gateway differs from the base gap boundary leaf");
  }
  return rb;
}

SublimbDesc make_sublimb(const LaminationStore& store, const Leaf& S, long p, long q) {
  SublimbDesc desc;
  desc.S = S;
  desc.ctx = context_of(S);
  desc.p = p;
  desc.q = q;
  desc.B = bifurcation_leaf(store, desc.ctx, p, q);
  desc.R_B = gateway(desc.ctx, desc.B);
  desc.rb_word = word_of(desc.ctx, desc.R_B);
  long m = desc.ctx.m;
  ensure(static_cast<long>(desc.rb_word.size()) == (q - 1) * m,
         "sublimb word has unexpected length");
  for (long j = 0; j + 1 <= q - 1; ++j) {
    ensure(desc.rb_word.compare(j * m, m - 1, desc.ctx.v) == 0,
           "sublimb word lacks the expected marker blocks");
  }
  ensure(desc.rb_word.back() == static_cast<char>('0' + desc.ctx.e),
         "sublimb word does not close with the expected symbol");
  desc.lift = desc.rb_word.substr(0, (q - 2) * m);
  KneadingSequence expected("", desc.ctx.v + static_cast<char>('0' + desc.ctx.e));
  ensure(just_behind(desc.B.chord).agrees_to(expected, q * m - 1),
         "sublimb kneading does not follow the base block");
  return desc;
}

}  // namespace lamina
