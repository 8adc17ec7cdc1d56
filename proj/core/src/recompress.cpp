#include "wordeq/recompress.hpp"

#include <algorithm>

namespace wordeq {

namespace {

bool single_letter_block(const ExplicitWord& w) {
  if (w.empty()) return false;
  return std::all_of(w.syms.begin(), w.syms.end(), [&](Sym s) { return s == w.syms.front(); });
}

template <typename Fn>
void for_each_word(EqSystem& sys, Fn&& fn) {
  for (uint32_t e = 0; e < sys.eqs.size(); ++e) {
    for (uint8_t sd = 0; sd < 2; ++sd) {
      Side& side = sd ? sys.eqs[e].rhs : sys.eqs[e].lhs;
      for (uint32_t wi = 0; wi < side.words.size(); ++wi) fn(e, sd, wi, side.words[wi]);
    }
  }
}

void left_pop_letter(EqSystem& sys, Sym b) {
  for (auto& eq : sys.eqs)
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (size_t wi = 0; wi + 1 < side->words.size(); ++wi)
        side->words[wi].syms.push_back(b);
}

void right_pop_letter(EqSystem& sys, Sym a) {
  for (auto& eq : sys.eqs)
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (size_t wi = 1; wi < side->words.size(); ++wi)
        side->words[wi].syms.insert(side->words[wi].syms.begin(), a);
}

// counting sort of pair occurrences by b then a; ids are dense
void radix_sort_pairs(std::vector<PairOcc>& v, size_t sym_count) {
  auto pass = [&](auto key) {
    std::vector<uint32_t> cnt(sym_count + 1, 0);
    for (const auto& p : v) ++cnt[static_cast<size_t>(key(p)) + 1];
    for (size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    std::vector<PairOcc> out(v.size());
    for (const auto& p : v) out[cnt[static_cast<size_t>(key(p))]++] = p;
    v = std::move(out);
  };
  pass([](const PairOcc& p) { return p.b; });
  pass([](const PairOcc& p) { return p.a; });
}

void radix_sort_blocks(std::vector<BlockOcc>& v, size_t sym_count, uint64_t max_len) {
  {
    std::vector<uint32_t> cnt(static_cast<size_t>(max_len) + 2, 0);
    for (const auto& p : v) ++cnt[static_cast<size_t>(p.len) + 1];
    for (size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    std::vector<BlockOcc> out(v.size());
    for (const auto& p : v) out[cnt[static_cast<size_t>(p.len)]++] = p;
    v = std::move(out);
  }
  {
    std::vector<uint32_t> cnt(sym_count + 1, 0);
    for (const auto& p : v) ++cnt[static_cast<size_t>(p.a) + 1];
    for (size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    std::vector<BlockOcc> out(v.size());
    for (const auto& p : v) out[cnt[static_cast<size_t>(p.a)]++] = p;
    v = std::move(out);
  }
}

}  // namespace

std::vector<std::pair<Sym, Sym>> list_pairs(const EqSystem& sys) {
  std::vector<std::pair<Sym, Sym>> out;
  if (sys.eqs.empty()) return out;
  for (const auto& eq : sys.eqs)
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (const auto& w : side->words)
        for (size_t j = 0; j + 1 < w.syms.size(); ++j)
          if (w.syms[j] != w.syms[j + 1]) out.emplace_back(w.syms[j], w.syms[j + 1]);
  auto crossing = crossing_pairs(sys);
  out.insert(out.end(), crossing.begin(), crossing.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Sym, Sym>> crossing_pairs(const EqSystem& sys) {
  std::vector<std::pair<Sym, Sym>> out;
  if (sys.eqs.empty()) return out;
  FirstLastProfile p = first_last_profile(sys);
  if (p.a < 0 || p.b < 0) return out;
  for (const auto& eq : sys.eqs) {
    for (const auto* side : {&eq.lhs, &eq.rhs}) {
      for (size_t wi = 0; wi < side->words.size(); ++wi) {
        const auto& w = side->words[wi];
        bool followed_by_x = wi + 1 < side->words.size();
        bool follows_x = wi > 0;
        if (followed_by_x && !w.empty() && w.syms.back() != p.a)
          out.emplace_back(w.syms.back(), p.a);
        if (follows_x && !w.empty() && w.syms.front() != p.b)
          out.emplace_back(p.b, w.syms.front());
        // XX: an empty word flanked by X on both sides
        if (follows_x && followed_by_x && w.empty() && p.b != p.a)
          out.emplace_back(p.b, p.a);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PairOccList gather_pairs(const EqSystem& sys, const std::vector<std::pair<Sym, Sym>>& pairs) {
  PairOccList list;
  auto wanted = [&](Sym a, Sym b) {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  };
  for (uint32_t e = 0; e < sys.eqs.size(); ++e)
    for (uint8_t sd = 0; sd < 2; ++sd) {
      const Side& side = sd ? sys.eqs[e].rhs : sys.eqs[e].lhs;
      for (uint32_t wi = 0; wi < side.words.size(); ++wi) {
        const auto& w = side.words[wi].syms;
        for (uint32_t j = 0; j + 1 < w.size(); ++j)
          if (w[j] != w[j + 1] && wanted(w[j], w[j + 1]))
            list.entries.push_back({w[j], w[j + 1], e, sd, wi, j});
      }
    }
  radix_sort_pairs(list.entries, sys.alphabet.sym_count());
  return list;
}

BlockOccList gather_blocks(const EqSystem& sys, const std::vector<bool>& letter_in_set) {
  BlockOccList list;
  uint64_t max_len = 0;
  for (uint32_t e = 0; e < sys.eqs.size(); ++e)
    for (uint8_t sd = 0; sd < 2; ++sd) {
      const Side& side = sd ? sys.eqs[e].rhs : sys.eqs[e].lhs;
      for (uint32_t wi = 0; wi < side.words.size(); ++wi) {
        const auto& w = side.words[wi].syms;
        for (uint32_t j = 0; j < w.size();) {
          uint32_t k = j + 1;
          while (k < w.size() && w[k] == w[j]) ++k;
          uint64_t len = k - j;
          if (len >= 2 && letter_in_set[static_cast<size_t>(w[j])]) {
            list.entries.push_back({w[j], len, e, sd, wi, j});
            max_len = std::max(max_len, len);
          }
          j = k;
        }
      }
    }
  radix_sort_blocks(list.entries, sys.alphabet.sym_count(), max_len);
  return list;
}

SysState pop(Sym a, Sym b, EqSystem& sys, Reporter& rep, const TestFn& tester) {
  if (sys.eqs.empty()) return {SysState::Kind::AllTrivial, {}};
  const ExplicitWord& fw = sys.eqs.front().first_word();
  if (!fw.empty() && fw.syms.front() == b) {
    if (tester(b, 1, sys)) rep.single(b, sys);
    left_pop_letter(sys, b);
    sys.popped.push_prefix(sys.alphabet, b);
    SysState st = to_sys_state(canonicalize(sys));
    if (!st.is_ok()) return st;
  }
  if (sys.eqs.empty()) return {SysState::Kind::AllTrivial, {}};
  const ExplicitWord* lw = sys.eqs.front().last_word();
  if (lw && lw->syms.back() == a) {
    if (tester(a, 1, sys)) rep.single(a, sys);
    right_pop_letter(sys, a);
    sys.popped.push_suffix(sys.alphabet, a);
    SysState st = to_sys_state(canonicalize(sys));
    if (!st.is_ok()) return st;
  }
  return SysState::ok();
}

void compress_pair_list(const PairOccList& list, EqSystem& sys) {
  for (size_t i = 0; i < list.entries.size();) {
    Sym a = list.entries[i].a, b = list.entries[i].b;
    Sym fresh = sys.alphabet.fresh_pair_letter(a, b);
    size_t j = i;
    for (; j < list.entries.size() && list.entries[j].a == a && list.entries[j].b == b; ++j) {
      const PairOcc& occ = list.entries[j];
      Side& side = occ.side ? sys.eqs[occ.eq].rhs : sys.eqs[occ.eq].lhs;
      auto& w = side.words[occ.word].syms;
      // the pair may have been consumed by an earlier replacement
      if (w[occ.off] != a || w[occ.off + 1] != b) continue;
      w[occ.off] = fresh;
      w[occ.off + 1] = kTombstone;
    }
    i = j;
  }
}

void pair_comp_ncr(Sym a, Sym b, EqSystem& sys) {
  if (a == b) throw std::invalid_argument("block, not pair");
  PairOccList list = gather_pairs(sys, {{a, b}});
  compress_pair_list(list, sys);
  compact_words(sys);
}

void block_comp_ncr(Sym a, EqSystem& sys) {
  for (auto& eq : sys.eqs)
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (auto& word : side->words) {
        auto& w = word.syms;
        bool has_run = false;
        for (size_t j = 0; j + 1 < w.size() && !has_run; ++j)
          has_run = w[j] == a && w[j + 1] == a;
        if (!has_run) continue;
        std::vector<Sym> out;
        out.reserve(w.size());
        for (size_t j = 0; j < w.size();) {
          size_t k = j + 1;
          while (k < w.size() && w[k] == w[j]) ++k;
          if (w[j] == a && k - j >= 2)
            out.push_back(sys.alphabet.fresh_block_letter(a, k - j));
          else
            out.insert(out.end(), w.begin() + static_cast<ptrdiff_t>(j),
                       w.begin() + static_cast<ptrdiff_t>(k));
          j = k;
        }
        w = std::move(out);
      }
}

SysState cut_pref_suff(EqSystem& sys, Reporter& rep, const TestFn& tester) {
  if (sys.eqs.empty()) return {SysState::Kind::AllTrivial, {}};
  if (single_letter_block(sys.eqs.front().first_word()))
    throw std::logic_error("caller must route to a* testing");

  // prefix half
  Sym a = sys.eqs.front().first_word().syms.front();
  if (auto ell = test_simple_solution(a, sys, tester)) rep.power(a, *ell, sys);
  size_t run = 0;
  for (Sym s : sys.eqs.front().first_word().syms) {
    if (s != a) break;
    ++run;
  }
  for (auto& eq : sys.eqs)
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (size_t wi = 0; wi + 1 < side->words.size(); ++wi)
        side->words[wi].syms.insert(side->words[wi].syms.end(), run, a);
  for (size_t i = 0; i < run; ++i) sys.popped.push_prefix(sys.alphabet, a);
  SysState st = to_sys_state(canonicalize(sys));
  if (!st.is_ok()) return st;
  if (sys.eqs.empty()) return {SysState::Kind::AllTrivial, {}};

  // the first equation may have changed; degenerate shapes go to a* testing
  {
    const Equation& eq = sys.eqs.front();
    const ExplicitWord* lw = eq.last_word();
    if (single_letter_block(eq.first_word()) || !lw || single_letter_block(*lw))
      return {SysState::Kind::ExitAStar, {}};
  }

  // suffix half
  Sym b = sys.eqs.front().last_word()->syms.back();
  if (auto ell = test_simple_solution(b, sys, tester)) rep.power(b, *ell, sys);
  const auto& last_syms = sys.eqs.front().last_word()->syms;
  size_t rrun = 0;
  for (auto it = last_syms.rbegin(); it != last_syms.rend(); ++it) {
    if (*it != b) break;
    ++rrun;
  }
  for (auto& eq : sys.eqs)
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (size_t wi = 1; wi < side->words.size(); ++wi)
        side->words[wi].syms.insert(side->words[wi].syms.begin(), rrun, b);
  for (size_t i = 0; i < rrun; ++i) sys.popped.push_suffix(sys.alphabet, b);
  st = to_sys_state(canonicalize(sys));
  if (!st.is_ok()) return st;
  if (sys.eqs.empty()) return {SysState::Kind::AllTrivial, {}};
  return SysState::ok();
}

SysState block_comp(EqSystem& sys, Reporter& rep, const TestFn& tester) {
  std::vector<bool> present(sys.alphabet.sym_count(), false);
  for (const auto& eq : sys.eqs)
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (const auto& w : side->words)
        for (Sym s : w.syms) present[static_cast<size_t>(s)] = true;

  SysState st = cut_pref_suff(sys, rep, tester);
  if (!st.is_ok()) return st;

  present.resize(sys.alphabet.sym_count(), false);
  BlockOccList blocks = gather_blocks(sys, present);
  for (const auto& occ : blocks.entries)
    sys.alphabet.fresh_block_letter(occ.a, occ.len);  // ids in radix order

  for (auto& eq : sys.eqs)
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (auto& word : side->words) {
        auto& w = word.syms;
        bool has_run = false;
        for (size_t j = 0; j + 1 < w.size() && !has_run; ++j)
          has_run = w[j] == w[j + 1] && present[static_cast<size_t>(w[j])];
        if (!has_run) continue;
        std::vector<Sym> out;
        out.reserve(w.size());
        for (size_t j = 0; j < w.size();) {
          size_t k = j + 1;
          while (k < w.size() && w[k] == w[j]) ++k;
          if (k - j >= 2 && present[static_cast<size_t>(w[j])])
            out.push_back(sys.alphabet.fresh_block_letter(w[j], k - j));
          else
            out.insert(out.end(), w.begin() + static_cast<ptrdiff_t>(j),
                       w.begin() + static_cast<ptrdiff_t>(k));
          j = k;
        }
        w = std::move(out);
      }
  return SysState::ok();
}

SysState preproc(EqSystem& sys, Reporter& rep, const TestFn& tester) {
  if (sys.eqs.empty()) return {SysState::Kind::AllTrivial, {}};
  FirstLastProfile p = first_last_profile(sys);
  return pop(p.b, p.a, sys, rep, tester);
}

SysState pair_comp(Sym a, Sym b, EqSystem& sys, Reporter& rep, const TestFn& tester) {
  if (a == b) throw std::invalid_argument("block, not pair");
  SysState st = pop(a, b, sys, rep, tester);
  if (!st.is_ok()) return st;
  pair_comp_ncr(a, b, sys);
  return SysState::ok();
}

}  // namespace wordeq
