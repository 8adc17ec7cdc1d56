#pragma once

#include <set>
#include <string>

#include "wordeq/solver.hpp"
#include "wordeq/testing.hpp"
#include "wordeq/text.hpp"

namespace wordeq::testutil {

inline ParsedEquation P(const std::string& line) {
  ParseResult r = parse_equation(line);
  if (!r.eq) throw std::runtime_error("test parse failed: " + line);
  return *r.eq;
}

// un-canonicalized one-equation system
inline EqSystem S(const std::string& line) { return make_system(P(line)); }

// canonicalized; throws unless the outcome is Ok
inline EqSystem SC(const std::string& line) {
  EqSystem sys = S(line);
  CanonOutcome out = canonicalize(sys);
  if (out.kind != CanonOutcome::Kind::Ok)
    throw std::runtime_error("test system not in form (1): " + line);
  return sys;
}

inline std::vector<Sym> side_tokens(const Side& s) {
  std::vector<Sym> t;
  s.to_tokens(t);
  return t;
}

// Independent check that X := cand solves every equation: materialize both
// sides as token vectors and compare. Shares nothing with the solver path.
inline bool brute_holds(const EqSystem& sys, const std::vector<Sym>& cand) {
  for (const auto& eq : sys.eqs) {
    std::vector<Sym> l, r;
    for (const auto* side : {&eq.lhs, &eq.rhs}) {
      std::vector<Sym>& out = side == &eq.lhs ? l : r;
      for (size_t wi = 0; wi < side->words.size(); ++wi) {
        if (wi) out.insert(out.end(), cand.begin(), cand.end());
        out.insert(out.end(), side->words[wi].syms.begin(), side->words[wi].syms.end());
      }
    }
    if (l != r) return false;
  }
  return true;
}

// Solution lengths of the system measured in original letters (weights plus
// the popped record), for current solution lengths 1..bound. Exhaustive by
// the unique-candidate-per-length property.
inline std::set<uint64_t> system_oracle(const EqSystem& sys, uint64_t bound) {
  std::set<uint64_t> lengths;
  if (sys.eqs.empty()) throw std::runtime_error("system_oracle: empty system");
  const auto& a0 = sys.eqs.front().first_word().syms;
  if (a0.empty()) throw std::runtime_error("system_oracle: empty first word");
  for (uint64_t len = 1; len <= bound; ++len) {
    std::vector<Sym> cand;
    cand.reserve(len);
    for (uint64_t i = 0; i < len; ++i) cand.push_back(a0[i % a0.size()]);
    if (!brute_holds(sys, cand)) continue;
    uint64_t orig = sys.popped.prefix_weight + sys.popped.suffix_weight;
    for (Sym s : cand) orig += sys.alphabet.weight(s);
    lengths.insert(orig);
  }
  return lengths;
}

// Reported finite lengths plus family members, clipped to the window.
inline std::set<uint64_t> set_lengths(const SolutionSet& s, uint64_t bound) {
  std::set<uint64_t> out;
  for (const auto& f : s.finite)
    if (f.length <= bound) out.insert(f.length);
  if (s.family) {
    uint64_t base = s.family->prefix_len + s.family->suffix_len;
    for (uint64_t l = 1; base + l * s.family->period_len <= bound; ++l)
      out.insert(base + l * s.family->period_len);
  }
  return out;
}

inline std::string u32_to_utf8(const std::u32string& s) { return utf8_encode(s); }

inline bool naive_substring(const std::vector<Sym>& needle, const std::vector<Sym>& hay) {
  if (needle.empty()) return true;
  if (needle.size() > hay.size()) return false;
  for (size_t p = 0; p + needle.size() <= hay.size(); ++p)
    if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<ptrdiff_t>(p)))
      return true;
  return false;
}

// overdue by definition: a short word that is a substring of no long word nor
// of A0 A0
inline std::set<std::vector<Sym>> naive_overdue(const EqSystem& sys, int n_short) {
  std::set<std::vector<Sym>> overdue;
  std::vector<std::vector<Sym>> longs;
  const auto& a0 = sys.eqs.front().first_word().syms;
  std::vector<Sym> a00 = a0;
  a00.insert(a00.end(), a0.begin(), a0.end());
  longs.push_back(a00);
  for (const auto& eq : sys.eqs)
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (const auto& w : side->words)
        if (!w.is_short(n_short)) longs.push_back(w.syms);
  for (const auto& eq : sys.eqs)
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (const auto& w : side->words) {
        if (!w.is_short(n_short) || w.empty() || w.overdue_since >= 0) continue;
        bool inside = false;
        for (const auto& big : longs)
          if (naive_substring(w.syms, big)) {
            inside = true;
            break;
          }
        if (!inside) overdue.insert(w.syms);
      }
  return overdue;
}

// letter at position t of (word . a^x)^inf or (a^x . word)^inf
inline Sym stream_at(const std::vector<Sym>& word, Sym a, uint64_t x, bool word_first,
                     uint64_t pos) {
  uint64_t unit = word.size() + x;
  uint64_t q = pos % unit;
  if (word_first) return q < word.size() ? word[static_cast<size_t>(q)] : a;
  return q < x ? a : word[static_cast<size_t>(q - x)];
}

inline Sym sym_of(const EqSystem& sys, char32_t cp) {
  for (Sym s = 0; s < static_cast<Sym>(sys.alphabet.sym_count()); ++s) {
    const auto& r = sys.alphabet.rule(sys.alphabet.gram_of(s));
    if (r.kind == Expansion::Kind::Original && r.codepoint == cp) return s;
  }
  throw std::runtime_error("letter not in system");
}

inline std::vector<Sym> word_of(const EqSystem& sys, const std::string& s) {
  std::vector<Sym> out;
  for (char c : s) out.push_back(sym_of(sys, static_cast<char32_t>(c)));
  return out;
}

inline std::string side_str(const EqSystem& sys, const Side& side) {
  std::string out;
  for (size_t wi = 0; wi < side.words.size(); ++wi) {
    if (wi) out += 'X';
    for (Sym s : side.words[wi].syms)
      out += u32_to_utf8(sys.alphabet.expand_sym(s, 1 << 20));
  }
  return out;
}

inline std::string eq_str(const EqSystem& sys, size_t i = 0) {
  return side_str(sys, sys.eqs[i].lhs) + " = " + side_str(sys, sys.eqs[i].rhs);
}

// The shared random-suite parameterization: sizes up to 60, alphabets up to 3,
// every other instance planted.
struct SuiteSpec {
  uint64_t seed;
  size_t size;
  int alphabet;
  bool plant;
};

inline std::vector<SuiteSpec> suite_specs(size_t count) {
  std::vector<SuiteSpec> v;
  v.reserve(count);
  for (size_t i = 0; i < count; ++i)
    v.push_back({i, 4 + (i * 7919) % 57, 1 + static_cast<int>(i % 3), i % 2 == 0});
  return v;
}

// Hand-built system: each equation is two lists of explicit words (possibly
// empty strings), implicitly interleaved with X. No canonicalization.
inline EqSystem raw_system(
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& eqs) {
  EqSystem sys;
  std::unordered_map<char, Sym> interned;
  auto intern = [&](char c) {
    auto [it, fresh] = interned.emplace(c, 0);
    if (fresh) it->second = sys.alphabet.add_original(static_cast<char32_t>(c));
    return it->second;
  };
  for (const auto& [lw, rw] : eqs) {
    Equation eq;
    for (int side = 0; side < 2; ++side) {
      const auto& words = side ? rw : lw;
      Side& s = side ? eq.rhs : eq.lhs;
      int orig = 0;
      for (const auto& w : words) {
        std::vector<Sym> syms;
        for (char c : w) syms.push_back(intern(c));
        s.words.push_back(sys.make_word(std::move(syms), orig++));
      }
    }
    sys.eqs.push_back(std::move(eq));
  }
  return sys;
}

}  // namespace wordeq::testutil
