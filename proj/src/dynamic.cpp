#include "lamina/dynamic.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "lamina/error.hpp"
#include "lamina/kneading.hpp"

namespace lamina {

namespace {

constexpr long kOrbitCap = 100000;

// Strict membership of x in one of the two open half circles cut out by the
// diameter through alpha/2: side 0 runs counter-clockwise from alpha/2 to
// alpha/2 + 1/2, side 1 is the complementary open arc.
bool on_side(const LeafContext& ctx, const Angle& x, int bit) {
  Rat lo = ctx.alpha.value() / 2;
  Rat hi = lo + Rat(1, 2);
  if (x.value() == lo || x.value() == hi) return false;
  bool inside0 = rat_lt(lo, x.value()) && rat_lt(x.value(), hi);
  return (bit == 0) == inside0;
}

// Pullback label of a chord: the side holding at least one strict end, or -1
// when both ends sit on the dividing diameter.
int side_label(const LeafContext& ctx, const Chord& c) {
  bool s0 = on_side(ctx, c.a(), 0) || on_side(ctx, c.b(), 0);
  bool s1 = on_side(ctx, c.a(), 1) || on_side(ctx, c.b(), 1);
  if (s0 && s1) internal_error("pullback label of " + c.str() + " is ambiguous");
  if (s0) return 0;
  if (s1) return 1;
  return -1;
}

bool share_end(const Chord& c, const Chord& o) {
  return c.has_end(o.a()) || c.has_end(o.b());
}

// Admissibility of a single chord relative to the spanning pair: not longer
// than either spanning chord, crossing neither, and not wedged between them
// while touching one of them.
bool step_admissible(const LeafContext& ctx, const Chord& c) {
  if (!rat_le(c.length(), ctx.dotS.length())) return false;
  if (crosses(c, ctx.dotS) || crosses(c, ctx.ddotS)) return false;
  if (between_chords(c, ctx.dotS, ctx.ddotS) &&
      (share_end(c, ctx.dotS) || share_end(c, ctx.ddotS))) {
    return false;
  }
  return true;
}

bool ends_with(std::string_view text, std::string_view tail) {
  return text.size() >= tail.size() && text.substr(text.size() - tail.size()) == tail;
}

DynamicPair pair_from_members(std::string_view w, const Chord& c0, const Chord& c1) {
  ensure(!(c0 == c1), "dynamic pair members coincide for word '" + std::string(w) + "'");
  DynamicPair p;
  p.word = std::string(w);
  p.step = static_cast<long>(w.size()) + 1;
  int cmp = rat_cmp(c0.length(), c1.length());
  p.length_tie = cmp == 0;
  bool c0_first = cmp > 0 || (cmp == 0 && c0.a() < c1.a());
  p.s1 = c0_first ? c0 : c1;
  p.s2 = c0_first ? c1 : c0;
  return p;
}

}  // namespace

LeafContext context_of(const Leaf& S) {
  LeafContext ctx;
  ctx.S = S;
  ctx.m = S.period;
  ctx.alpha = S.chord.a();
  ctx.gamma = S.chord.b();
  ctx.d = S.chord.length();
  VE ve = v_e_of(S.chord);
  ctx.v = ve.v;
  ctx.e = ve.e;
  auto [a_low, a_high] = ctx.alpha.halves();
  auto [g_low, g_high] = ctx.gamma.halves();
  Chord p1(a_low, g_high);
  Chord p2(a_high, g_low);
  bool p1_periodic = p1.a().is_periodic() && p1.b().is_periodic();
  bool p2_periodic = p2.a().is_periodic() && p2.b().is_periodic();
  ensure(p1_periodic != p2_periodic,
         "preimage pairings of " + S.chord.str() + " do not split by periodicity");
  ctx.dotS = p1_periodic ? p1 : p2;
  ctx.ddotS = p1_periodic ? p2 : p1;
  ensure(ctx.dotS == S.chord.iterate(ctx.m - 1),
         "periodic preimage pairing of " + S.chord.str() + " is not the last orbit chord");
  ensure(ctx.e == (ctx.ddotS == p1 ? 1 : 0),
         "spanning pair of " + S.chord.str() + " disagrees with the kneading split");
  ensure(ctx.dotS.length() == ctx.ddotS.length(),
         "spanning chords of " + S.chord.str() + " have unequal lengths");
  return ctx;
}

bool in_generating_lamination(const LeafContext& ctx, const Chord& r) {
  std::set<std::pair<Rat, Rat>> seen;
  Chord cur = r;
  for (long i = 0; i < kOrbitCap; ++i) {
    if (cur == ctx.S.chord) return true;
    if (!step_admissible(ctx, cur)) return false;
    if (!seen.insert({cur.a().value(), cur.b().value()}).second) return false;
    if (cur.image_degenerate()) return false;
    cur = cur.mapped();
  }
  fail("orbit of " + r.str() + " did not resolve membership within the iteration cap");
}

Chord pullback_unchecked(const LeafContext& ctx, const Chord& r, int bit) {
  require(bit == 0 || bit == 1, "pullback label must be 0 or 1");
  auto [xa, xb] = r.a().halves();
  auto [ya, yb] = r.b().halves();
  const Chord candidates[4] = {Chord(xa, ya), Chord(xa, yb), Chord(xb, ya), Chord(xb, yb)};
  const Chord* admitted[4] = {nullptr, nullptr, nullptr, nullptr};
  int count = 0;
  for (const Chord& c : candidates) {
    if (step_admissible(ctx, c)) admitted[count++] = &c;
  }
  if (count != 2) {
    internal_error("expected exactly two admissible preimages of " + r.str() + ", found " +
                   std::to_string(count));
  }
  if (share_end(*admitted[0], *admitted[1])) {
    internal_error("admissible preimages of " + r.str() + " share an endpoint");
  }
  const Chord* chosen = nullptr;
  for (int i = 0; i < 2; ++i) {
    if (side_label(ctx, *admitted[i]) == bit) {
      if (chosen != nullptr) {
        internal_error("pullback label " + std::to_string(bit) + " of " + r.str() +
                       " is not unique");
      }
      chosen = admitted[i];
    }
  }
  if (chosen == nullptr) {
    internal_error("no preimage of " + r.str() + " carries pullback label " +
                   std::to_string(bit));
  }
  return *chosen;
}

Chord pullback(const LeafContext& ctx, const Chord& r, int bit) {
  require(in_generating_lamination(ctx, r),
          "pullback target " + r.str() + " is not in the generating lamination");
  return pullback_unchecked(ctx, r, bit);
}

Chord pullback_word_unchecked(const LeafContext& ctx, Chord r, std::string_view w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    require(*it == '0' || *it == '1', "pullback word must be a 0-1-word");
    r = pullback_unchecked(ctx, r, *it - '0');
  }
  return r;
}

Chord pullback_word(const LeafContext& ctx, const Chord& r, std::string_view w) {
  require(in_generating_lamination(ctx, r),
          "pullback target " + r.str() + " is not in the generating lamination");
  return pullback_word_unchecked(ctx, r, w);
}

std::string word_of(const LeafContext& ctx, const Chord& r) {
  require(in_generating_lamination(ctx, r),
          "word is defined only for members of the generating lamination, got " + r.str());
  std::string word;
  Chord cur = r;
  for (long i = 0; i < kOrbitCap && !(cur == ctx.S.chord); ++i) {
    int label = side_label(ctx, cur);
    ensure(label >= 0, "orbit chord " + cur.str() + " carries no pullback label");
    word.push_back(static_cast<char>('0' + label));
    cur = cur.mapped();
  }
  ensure(cur == ctx.S.chord, "orbit of " + r.str() + " did not return to the base leaf");
  ensure(pullback_word_unchecked(ctx, ctx.S.chord, word) == r,
         "pullback along the itinerary of " + r.str() + " does not reproduce it");
  return word;
}

Chord gap_boundary_leaf(const LeafContext& ctx, std::string_view sbits) {
  std::string word;
  for (char s : sbits) {
    require(s == '0' || s == '1', "gap boundary bits must be 0 or 1");
    word += ctx.v;
    word.push_back(s);
  }
  word += ctx.v;
  word.push_back(static_cast<char>('0' + ctx.e));
  Chord leaf = pullback_word_unchecked(ctx, ctx.S.chord, word);
  long l = static_cast<long>(sbits.size());
  Rat expected = Rat(pow2(ctx.m) - 2, pow2((l + 1) * ctx.m)) * ctx.d;
  ensure(leaf.length() == expected,
         "gap boundary leaf at depth " + std::to_string(l) + " has unexpected length");
  return leaf;
}

bool is_pair_word(const LeafContext& ctx, std::string_view w) {
  for (char c : w) {
    if (c != '0' && c != '1') return false;
  }
  return !ends_with(w, ctx.v);
}

DynamicPair dynamic_pair(const LeafContext& ctx, std::string_view w) {
  for (char c : w) require(c == '0' || c == '1', "pair word must be a 0-1-word");
  require(!ends_with(w, ctx.v), "pair word must not end with " + ctx.v);
  Chord c0 = pullback_word_unchecked(ctx, ctx.S.chord, std::string(w) + '0');
  Chord c1 = pullback_word_unchecked(ctx, ctx.S.chord, std::string(w) + '1');
  DynamicPair p = pair_from_members(w, c0, c1);
  Chord t1 = p.s1;
  Chord t2 = p.s2;
  for (long j = 1; j <= p.step; ++j) {
    t1 = t1.mapped();
    t2 = t2.mapped();
    bool both_back = t1 == ctx.S.chord && t2 == ctx.S.chord;
    if (j < p.step) {
      ensure(!both_back, "pair for word '" + p.word + "' returns before its step");
    } else {
      ensure(both_back, "pair for word '" + p.word + "' misses its return step");
    }
  }
  return p;
}

std::vector<DynamicPair> enumerate_pairs(const LeafContext& ctx, long max_step) {
  require(max_step >= 1, "pair enumeration needs max_step >= 1");
  std::vector<DynamicPair> out;
  visit_pairs(ctx, max_step - 1,
              [&out](const std::string& w, const Chord& c0, const Chord& c1) {
                out.push_back(pair_from_members(w, c0, c1));
              });
  std::sort(out.begin(), out.end(), [](const DynamicPair& x, const DynamicPair& y) {
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    return x.word < y.word;
  });
  return out;
}

void visit_pairs(const LeafContext& ctx, long max_len,
                 const std::function<void(const std::string& w, const Chord& c0,
                                          const Chord& c1)>& fn) {
  require(max_len >= 0, "word length bound must be nonnegative");
  struct Driver {
    const LeafContext& ctx;
    long max_len;
    const std::function<void(const std::string&, const Chord&, const Chord&)>& fn;

    void walk(const std::string& w, const Chord& c0, const Chord& c1) const {
      fn(w, c0, c1);
      if (static_cast<long>(w.size()) >= max_len) return;
      for (int bit = 0; bit < 2; ++bit) {
        std::string child = static_cast<char>('0' + bit) + w;
        if (ends_with(child, ctx.v)) continue;
        walk(child, pullback_unchecked(ctx, c0, bit), pullback_unchecked(ctx, c1, bit));
      }
    }
  };
  Chord c0 = pullback_unchecked(ctx, ctx.S.chord, 0);
  Chord c1 = pullback_unchecked(ctx, ctx.S.chord, 1);
  Driver{ctx, max_len, fn}.walk("", c0, c1);
}

bool pair_visible(const LeafContext&, const Chord& r, const DynamicPair& p,
                  const std::vector<DynamicPair>& smaller) {
  if (!is_behind(p.s2, r)) return false;
  for (const DynamicPair& q : smaller) {
    if (q.step >= p.step) continue;
    if (q.s1 == r) return false;
    if (separates(q.s1, r, p.s1)) return false;
  }
  return true;
}

DynamicPair translate_pair(const LeafContext& ctx, long l, const DynamicPair& p) {
  require(l >= 0, "translation depth must be nonnegative");
  require(static_cast<long>(p.word.size()) >= l * ctx.m,
          "pair word is too short for translation depth " + std::to_string(l));
  std::string sbits;
  for (long j = 0; j < l; ++j) {
    require(p.word.compare(j * ctx.m, ctx.m - 1, ctx.v) == 0,
            "pair word lacks the marker block structure needed for translation");
    sbits.push_back(p.word[j * ctx.m + ctx.m - 1]);
  }
  Chord gate = gap_boundary_leaf(ctx, sbits);
  require(is_behind(p.s1, gate) && is_behind(p.s2, gate),
          "pair does not lie behind the depth-" + std::to_string(l) + " gap boundary leaf");
  DynamicPair result = dynamic_pair(ctx, p.word.substr(l * ctx.m));
  Chord i1 = p.s1.iterate(l * ctx.m);
  Chord i2 = p.s2.iterate(l * ctx.m);
  ensure((result.s1 == i1 && result.s2 == i2) || (result.s1 == i2 && result.s2 == i1),
         "translated pair does not match the iterated members");
  Chord base_gate = gap_boundary_leaf(ctx, "");
  ensure(is_behind(result.s1, base_gate) && is_behind(result.s2, base_gate),
         "translated pair is not behind the critical value gap boundary");
  return result;
}

}  // namespace lamina
