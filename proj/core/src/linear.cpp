#include "wordeq/linear.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace wordeq {

namespace {

struct SymVecHash {
  size_t operator()(const std::vector<Sym>& v) const {
    size_t h = 1469598103934665603ull;
    for (Sym s : v) {
      h ^= static_cast<size_t>(static_cast<uint32_t>(s));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

BuildSuccinctResult build_succinct(EqSystem& sys, int n_short) {
  BuildSuccinctResult out;
  SuccinctRep& rep = out.rep;
  std::unordered_map<std::vector<Sym>, int, SymVecHash> ids;
  for (uint32_t e = 0; e < sys.eqs.size(); ++e) {
    for (uint8_t sd = 0; sd < 2; ++sd) {
      Side& side = sd ? sys.eqs[e].rhs : sys.eqs[e].lhs;
      for (uint32_t wi = 0; wi < side.words.size(); ++wi) {
        ExplicitWord& w = side.words[wi];
        if (!w.is_short(n_short)) {
          w.short_id = -1;
          (sd ? rep.long_rhs : rep.long_lhs).push_back({e, sd, wi});
          rep.succinct_size += w.size();
          continue;
        }
        auto [it, fresh] = ids.emplace(w.syms, static_cast<int>(rep.shorts.size()));
        if (fresh) {
          rep.shorts.push_back({w.syms, {}, {}, w.overdue_since >= 0});
          rep.succinct_size += w.size();
        }
        w.short_id = it->second;
        auto& info = rep.shorts[static_cast<size_t>(it->second)];
        (sd ? info.rhs_occs : info.lhs_occs).push_back({e, sd, wi});
        if (w.overdue_since >= 0) info.overdue = true;
      }
    }
  }
  for (const auto& eq : sys.eqs) {
    const ExplicitWord& fw = eq.first_word();
    const ExplicitWord* lw = eq.last_word();
    if (fw.is_short(n_short) || (lw && lw->is_short(n_short)))
      out.short_first_or_last = true;
  }
  return out;
}

std::vector<size_t> detect_overdue(SuccinctRep& rep, EqSystem& sys, int phase) {
  std::vector<size_t> fresh;
  if (sys.eqs.empty()) return fresh;

  std::vector<int32_t> text;
  std::vector<char> long_pos;
  int32_t next_sep = -1;
  auto push_sep = [&]() {
    text.push_back(next_sep--);
    long_pos.push_back(0);
  };
  auto push_word = [&](const std::vector<Sym>& w, bool is_long) {
    for (Sym s : w) {
      text.push_back(s);
      long_pos.push_back(is_long ? 1 : 0);
    }
  };

  const auto& a0 = sys.eqs.front().first_word().syms;
  push_word(a0, true);
  push_word(a0, true);
  push_sep();
  for (const auto* list : {&rep.long_lhs, &rep.long_rhs})
    for (const WordRef& r : *list) {
      const Side& side = r.side ? sys.eqs[r.eq].rhs : sys.eqs[r.eq].lhs;
      push_word(side.words[r.word].syms, true);
      push_sep();
    }

  std::vector<std::pair<size_t, size_t>> short_starts;  // (short index, text pos)
  for (size_t si = 0; si < rep.shorts.size(); ++si) {
    if (rep.shorts[si].overdue || rep.shorts[si].content.empty()) continue;
    short_starts.emplace_back(si, text.size());
    push_word(rep.shorts[si].content, false);
    push_sep();
  }
  if (short_starts.empty()) return fresh;

  StringIndex idx = build_index(text);
  const size_t n = text.size();
  std::vector<int64_t> best(rep.shorts.size(), -1);
  std::vector<int64_t> short_at(n, -1);
  for (auto [si, pos] : short_starts) short_at[pos] = static_cast<int64_t>(si);

  auto sweep = [&](bool down) {
    bool seen_long = false;
    int64_t run_min = 0;
    for (size_t t = 0; t < n; ++t) {
      size_t r = down ? t : n - 1 - t;
      if (t > 0) {
        size_t lcp_i = down ? r - 1 : r;
        run_min = std::min<int64_t>(run_min, idx.lcp[lcp_i]);
      }
      size_t pos = static_cast<size_t>(idx.sa[r]);
      if (long_pos[pos]) {
        seen_long = true;
        run_min = static_cast<int64_t>(n);
      } else if (short_at[pos] >= 0 && seen_long) {
        best[static_cast<size_t>(short_at[pos])] =
            std::max(best[static_cast<size_t>(short_at[pos])], run_min);
      }
    }
  };
  sweep(true);
  sweep(false);

  for (auto [si, pos] : short_starts) {
    if (best[si] >= static_cast<int64_t>(rep.shorts[si].content.size())) continue;
    rep.shorts[si].overdue = true;
    fresh.push_back(si);
    for (const auto* occs : {&rep.shorts[si].lhs_occs, &rep.shorts[si].rhs_occs})
      for (const WordRef& r : *occs) {
        Side& side = r.side ? sys.eqs[r.eq].rhs : sys.eqs[r.eq].lhs;
        side.words[r.word].overdue_since = phase;
      }
  }
  return fresh;
}

SysState remove_overdue(EqSystem& sys, int phase, int overdue_delay) {
  if (overdue_delay < 0) return SysState::ok();
  std::vector<std::vector<Sym>> due;
  for (const auto& eq : sys.eqs)
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (const auto& w : side->words)
        if (w.overdue_since >= 0 && phase - w.overdue_since >= overdue_delay &&
            std::find(due.begin(), due.end(), w.syms) == due.end())
          due.push_back(w.syms);

  for (const auto& content : due) {
    for (;;) {
      // first occurrence on each hand, in equation order, X-flanked slots only
      int64_t le = -1, li = -1, re = -1, ri = -1;
      for (size_t e = 0; e < sys.eqs.size() && (le < 0 || re < 0); ++e) {
        const Equation& eq = sys.eqs[e];
        if (le < 0)
          for (size_t wi = 1; wi + 1 < eq.lhs.words.size(); ++wi)
            if (eq.lhs.words[wi].syms == content) {
              le = static_cast<int64_t>(e);
              li = static_cast<int64_t>(wi);
              break;
            }
        if (re < 0)
          for (size_t wi = 1; wi + 1 < eq.rhs.words.size(); ++wi)
            if (eq.rhs.words[wi].syms == content) {
              re = static_cast<int64_t>(e);
              ri = static_cast<int64_t>(wi);
              break;
            }
      }
      if (le < 0 && re < 0) break;
      if (le < 0 || re < 0 || le != re)
        return {SysState::Kind::NoSolution, {}};
      SysState st = split_equation(sys, static_cast<size_t>(le), static_cast<size_t>(li),
                                   static_cast<size_t>(ri));
      if (!st.is_ok()) return st;
      if (sys.eqs.empty()) return {SysState::Kind::AllTrivial, {}};
    }
  }
  return SysState::ok();
}

JumpIndex build_jump_index(const ParsedEquation& input) {
  JumpIndex jump;
  jump.word_pos.resize(2);
  std::vector<int32_t> text;
  constexpr int32_t kXMark = -1000000;
  constexpr int32_t kSideSep = -1000001;
  auto add_side = [&](const std::vector<int32_t>& tokens, size_t side) {
    jump.word_pos[side].push_back(static_cast<int64_t>(text.size()));
    for (int32_t t : tokens) {
      if (t == kVar) {
        text.push_back(kXMark);
        jump.word_pos[side].push_back(static_cast<int64_t>(text.size()));
      } else {
        text.push_back(t);
      }
    }
  };
  add_side(input.lhs, 0);
  text.push_back(kSideSep);
  add_side(input.rhs, 1);
  text.push_back(kSideSep - 1);

  jump.pref_x.assign(text.size() + 1, 0);
  for (size_t i = 0; i < text.size(); ++i)
    jump.pref_x[i + 1] = jump.pref_x[i] + (text[i] == kXMark ? 1 : 0);
  jump.index = build_index(text);
  return jump;
}

namespace {

int64_t word_cap(const Side& side) {
  // index of the last word, or of the word w with wX ending the side
  return static_cast<int64_t>(side.words.size()) - (side.ends_with_x() ? 2 : 1);
}

}  // namespace

int64_t aligned_jump(const JumpIndex& jump, const EqSystem& sys, uint32_t eq,
                     uint8_t side_i, uint32_t i, uint8_t side_j, uint32_t j) {
  const Side& P = side_i ? sys.eqs[eq].rhs : sys.eqs[eq].lhs;
  const Side& Q = side_j ? sys.eqs[eq].rhs : sys.eqs[eq].lhs;
  int64_t cap = std::min(word_cap(P) - i, word_cap(Q) - j);
  int op = P.words[i].orig_index;
  int oq = Q.words[j].orig_index;
  assert(op >= 0 && oq >= 0);
  auto pos_p = jump.word_pos[side_i][static_cast<size_t>(op)];
  auto pos_q = jump.word_pos[side_j][static_cast<size_t>(oq)];
  int32_t l = jump.index.lcp_query(static_cast<int32_t>(pos_p), static_cast<int32_t>(pos_q));
  int64_t k_lcp = jump.pref_x[static_cast<size_t>(pos_p + l)] -
                  jump.pref_x[static_cast<size_t>(pos_p)];
  int64_t k = std::min(k_lcp, cap);
  return std::max<int64_t>(k, 1);
}

TestType classify_test(const ClassifyContext& c) {
  auto protected_word = [&](const ExplicitWord* w, bool last_flag) {
    return !w || w->empty() || last_flag || !w->is_short(c.n_short);
  };
  if (protected_word(c.A_i, false) || protected_word(c.A_next, c.a_next_is_last) ||
      protected_word(c.B_j, false) || protected_word(c.B_next, c.b_next_is_last))
    return TestType::Protected;
  if (c.mismatch_in_lookahead) return TestType::Failed;
  if (c.first_letters_facing && c.A_i->syms == c.B_j->syms && c.A_next->syms == c.B_next->syms)
    return TestType::Aligned;
  if (c.A_next->syms != c.A_i->syms || c.B_next->syms != c.B_j->syms)
    return TestType::Misaligned;
  return TestType::Periodical;
}

void refresh_linear_caches(LinearState& lin, EqSystem& sys) {
  build_succinct(sys, lin.n_short);  // refreshes short ids
  lin.run_len.assign(sys.eqs.size(), {});
  for (size_t e = 0; e < sys.eqs.size(); ++e) {
    for (size_t sd = 0; sd < 2; ++sd) {
      const Side& side = sd ? sys.eqs[e].rhs : sys.eqs[e].lhs;
      auto& runs = lin.run_len[e][sd];
      runs.assign(side.words.size(), 1);
      for (size_t wi = side.words.size() - 1; wi-- > 0;) {
        const auto& w = side.words[wi];
        const auto& nx = side.words[wi + 1];
        if (w.short_id >= 0 && w.short_id == nx.short_id)
          runs[wi] = runs[wi + 1] + 1;
      }
    }
  }
}

namespace {

// Closed-form letter stream over (word . a^x)^k or (a^x . word)^k.
struct UnitStream {
  std::span<const Sym> word;
  Sym a;
  uint64_t x;
  bool word_first;

  uint64_t unit() const { return word.size() + x; }

  Sym at(uint64_t pos) const {
    uint64_t q = pos % unit();
    if (word_first) return q < word.size() ? word[static_cast<size_t>(q)] : a;
    return q < x ? a : word[static_cast<size_t>(q - x)];
  }

  // letters from pos to the next content boundary
  uint64_t stride(uint64_t pos) const {
    uint64_t q = pos % unit();
    if (word_first) return q < word.size() ? 1 : unit() - q;
    return q < x ? x - q : 1;
  }
};

bool unit_has_period(std::span<const Sym> word, Sym a, uint64_t x, uint64_t p,
                     Counters* cnt) {
  // positions beyond the word are all `a` on both sides of the shift
  uint64_t upto = std::min<uint64_t>(word.size(), word.size() + x - p);
  for (uint64_t t = 0; t < upto; ++t) {
    Sym left = word[static_cast<size_t>(t)];
    Sym right = t + p < word.size() ? word[static_cast<size_t>(t + p)] : a;
    if (cnt) ++cnt->comparisons;
    if (left != right) return false;
  }
  return true;
}

}  // namespace

PeriodicOutcome periodic_skip(std::span<const Sym> a_word, std::span<const Sym> b_word,
                              Sym a, uint64_t x, uint64_t off_p, uint64_t off_q,
                              uint64_t k_a, uint64_t k_b, Counters* cnt) {
  UnitStream P{a_word, a, x, true};
  UnitStream Q{b_word, a, x, false};
  uint64_t extent_p = k_a * P.unit() - off_p;
  uint64_t extent_q = k_b * Q.unit() - off_q;
  uint64_t common = std::min(extent_p, extent_q);

  auto compare_range = [&](uint64_t upto) -> std::optional<uint64_t> {
    for (uint64_t t = 0; t < upto;) {
      if (cnt) ++cnt->comparisons;
      if (P.at(off_p + t) != Q.at(off_q + t)) return t;
      uint64_t step = std::min(P.stride(off_p + t), Q.stride(off_q + t));
      t += std::min(step, upto - t);
    }
    return std::nullopt;
  };

  if (a_word.size() == b_word.size()) {
    uint64_t probe = std::min<uint64_t>(P.unit(), common);
    if (auto m = compare_range(probe)) return {true, *m};
    return {false, common};
  }
  if (common <= 3 * std::max(P.unit(), Q.unit())) {
    if (auto m = compare_range(common)) return {true, *m};
    return {false, common};
  }
  uint64_t p = std::gcd(P.unit(), Q.unit());
  if (!unit_has_period(a_word, a, x, p, cnt) || !unit_has_period(b_word, a, x, p, cnt))
    return {true, common};  // a mismatch exists somewhere in the common part
  if (auto m = compare_range(p)) return {true, *m};
  return {false, common};
}

namespace {

// cursor over w0 X w1 X ... under X := a^ell
struct Cursor {
  const Side* side = nullptr;
  uint64_t ell = 0;
  uint32_t wi = 0;
  uint64_t off = 0;
  bool in_x = false;
  bool done = false;

  void normalize() {
    for (;;) {
      if (in_x) {
        if (off < ell) return;
        in_x = false;
        off -= ell;
        ++wi;
        continue;
      }
      if (off < side->words[wi].syms.size()) return;
      if (wi + 1 < side->words.size()) {
        in_x = true;
        off -= side->words[wi].syms.size();
        continue;
      }
      done = true;
      return;
    }
  }

  void start(const Side& s, uint64_t e) {
    side = &s;
    ell = e;
    wi = 0;
    off = 0;
    in_x = false;
    done = false;
    normalize();
  }

  Sym letter(Sym a) const { return in_x ? a : side->words[wi].syms[static_cast<size_t>(off)]; }

  // maximal equal-letter run from the current position
  uint64_t run(Sym a) const {
    if (in_x) return ell - off;
    const auto& w = side->words[wi].syms;
    Sym s = w[static_cast<size_t>(off)];
    uint64_t j = off;
    while (j < w.size() && w[static_cast<size_t>(j)] == s) ++j;
    (void)a;
    return j - off;
  }

  void advance(uint64_t n) {
    off += n;
    normalize();
  }

  // jump k (word + X) units forward from a word start
  void jump_units(uint32_t k) {
    wi += k;
    off = 0;
    in_x = false;
    normalize();
  }

  // advance d letters across a run of equal (word, X) units of length `unit`,
  // where the word part has length wlen
  void advance_in_units(uint64_t d, uint64_t unit, uint64_t wlen) {
    uint64_t pos = (in_x ? wlen + off : off) + d;
    wi += static_cast<uint32_t>(pos / unit);
    uint64_t q = pos % unit;
    if (q < wlen) {
      in_x = false;
      off = q;
    } else {
      in_x = true;
      off = q - wlen;
    }
    normalize();
  }

  // same, for units shaped (X, word)
  void advance_in_units_xfirst(uint64_t d, uint64_t unit, uint64_t wlen) {
    uint64_t pos = (in_x ? off : ell + off) + d;
    uint64_t units = pos / unit;
    uint64_t q = pos % unit;
    if (q < ell) {
      wi += static_cast<uint32_t>(units);
      in_x = true;
      off = q;
    } else {
      wi += static_cast<uint32_t>(units) + 1;
      in_x = false;
      off = q - ell;
    }
    normalize();
  }
};

struct EqTester {
  const EqSystem& sys;
  const LinearState& lin;
  Sym a;
  uint64_t ell;
  int phase;
  Counters* cnt;
  uint32_t eq;

  int64_t stamp(const ExplicitWord& w) const {
    return w.became_short_phase >= 0 ? w.became_short_phase : phase;
  }

  bool interior(const Side& side, uint32_t wi) const {
    return wi >= 1 && wi + 1 < side.words.size();
  }

  bool run() {
    const Equation& e = sys.eqs[eq];
    uint64_t len_l = e.lhs.letter_count() + static_cast<uint64_t>(e.lhs.x_count()) * ell;
    uint64_t len_r = e.rhs.letter_count() + static_cast<uint64_t>(e.rhs.x_count()) * ell;
    if (cnt) ++cnt->comparisons;
    if (len_l != len_r) return false;

    Cursor L, R;
    L.start(e.lhs, ell);
    R.start(e.rhs, ell);
    for (;;) {
      if (L.done && R.done) return true;
      if (L.done || R.done) return false;
      if (L.in_x && R.in_x) {
        if (cnt) ++cnt->comparisons;
        uint64_t take = std::min(ell - L.off, ell - R.off);
        L.advance(take);
        R.advance(take);
        continue;
      }
      if (!L.in_x && !R.in_x) {
        if (L.off == 0 && R.off == 0 && try_aligned(L, R, 0, 1)) continue;
        if (cnt) ++cnt->comparisons;
        const auto& wl = L.side->words[L.wi].syms;
        const auto& wr = R.side->words[R.wi].syms;
        if (wl[static_cast<size_t>(L.off)] != wr[static_cast<size_t>(R.off)]) {
          if (cnt) ++cnt->failed_tests;
          return false;
        }
        uint64_t take = 1;
        L.advance(take);
        R.advance(take);
        continue;
      }
      // one cursor in an explicit word, the other inside X
      Cursor& W = L.in_x ? R : L;
      Cursor& X = L.in_x ? L : R;
      if (!word_vs_x(W, X)) return false;
    }
  }

  bool try_aligned(Cursor& L, Cursor& R, uint8_t side_l, uint8_t side_r) {
    const ExplicitWord& wl = L.side->words[L.wi];
    const ExplicitWord& wr = R.side->words[R.wi];
    if (wl.short_id < 0 || wl.short_id != wr.short_id) return false;
    if (!interior(*L.side, L.wi) || !interior(*R.side, R.wi)) return false;
    int64_t k = aligned_jump(lin.jump, sys, eq, side_l, L.wi, side_r, R.wi);
    if (cnt) {
      ++cnt->comparisons;
      ++cnt->aligned_tests;
    }
    L.jump_units(static_cast<uint32_t>(k));
    R.jump_units(static_cast<uint32_t>(k));
    return true;
  }

  // the engaged X always precedes a structurally present word
  bool word_vs_x(Cursor& W, Cursor& X) {
    const Side& ws = *W.side;
    const Side& xs = *X.side;
    const ExplicitWord& a_i = ws.words[W.wi];
    const ExplicitWord* a_next = W.wi + 1 < ws.words.size() ? &ws.words[W.wi + 1] : nullptr;
    const ExplicitWord& b_j = xs.words[X.wi + 1];
    const ExplicitWord* b_next = X.wi + 2 < xs.words.size() ? &xs.words[X.wi + 2] : nullptr;

    bool four_short = interior(ws, W.wi) && a_i.is_short(lin.n_short) && a_next &&
                      !a_next->empty() && a_next->is_short(lin.n_short) &&
                      interior(xs, X.wi + 1) && !b_j.empty() && b_j.is_short(lin.n_short) &&
                      b_next && !b_next->empty() && b_next->is_short(lin.n_short);
    if (!four_short) {
      if (cnt) {
        ++cnt->comparisons;
        ++cnt->protected_tests;
      }
      return engage_one(W, X);
    }

    bool misaligned = a_next->short_id != a_i.short_id || b_next->short_id != b_j.short_id;
    if (misaligned) {
      if (lin.overdue_delay >= 0) {
        int64_t freshest =
            std::max({stamp(a_i), stamp(*a_next), stamp(b_j), stamp(*b_next)});
        if (phase - freshest > lin.overdue_delay) {
          // a solution still alive here would have been small and reported long ago
          if (cnt) {
            ++cnt->comparisons;
            ++cnt->misaligned_aborts;
          }
          return false;
        }
      }
      if (cnt) {
        ++cnt->comparisons;
        ++cnt->misaligned_tests;
      }
      return engage_one(W, X);
    }

    // periodical: equal word runs on both sides
    uint64_t cap_w = static_cast<uint64_t>(word_cap(ws)) - W.wi;
    uint64_t cap_x = static_cast<uint64_t>(word_cap(xs)) - (X.wi + 1);
    const auto& runs_w = lin.run_len[eq][W.side == &sys.eqs[eq].rhs ? 1 : 0];
    const auto& runs_x = lin.run_len[eq][X.side == &sys.eqs[eq].rhs ? 1 : 0];
    uint64_t k_a = std::min<uint64_t>(runs_w[W.wi], cap_w);
    uint64_t k_b = std::min<uint64_t>(runs_x[X.wi + 1], cap_x);
    if (cnt) ++cnt->periodical_tests;
    PeriodicOutcome out = periodic_skip(a_i.syms, b_j.syms, a, ell, W.off, X.off, k_a, k_b, cnt);
    if (out.mismatch) {
      if (cnt) ++cnt->failed_tests;
      return false;
    }
    W.advance_in_units(out.advanced, a_i.syms.size() + ell, a_i.syms.size());
    X.advance_in_units_xfirst(out.advanced, b_j.syms.size() + ell, b_j.syms.size());
    return true;
  }

  bool engage_one(Cursor& W, Cursor& X) {
    Sym sw = W.letter(a);
    if (sw != a) {
      if (cnt) ++cnt->failed_tests;
      return false;
    }
    uint64_t take = std::min(W.run(a), ell - X.off);
    W.advance(take);
    X.advance(take);
    return true;
  }
};

}  // namespace

bool fast_test_substitution(Sym a, uint64_t ell, const EqSystem& sys,
                            const LinearState& lin, int phase, Counters* cnt) {
  if (cnt) ++cnt->substitution_tests;
  for (uint32_t e = 0; e < sys.eqs.size(); ++e) {
    EqTester t{sys, lin, a, ell, phase, cnt, e};
    if (!t.run()) return false;
  }
  return true;
}

}  // namespace wordeq
