#include "wordeq/testing.hpp"

#include <algorithm>

namespace wordeq {

namespace {

struct Run {
  Sym s;
  uint64_t n;
};

// Walks one side as (letter, multiplicity) runs with X expanded to a fixed
// run sequence (a^ell, or the runs of an explicit word).
class RunStream {
 public:
  RunStream(const Side& side, std::span<const Run> x_runs)
      : side_(side), x_runs_(x_runs) {
    normalize();
  }

  std::optional<Run> peek() const {
    if (done_) return std::nullopt;
    if (in_x_) {
      const Run& r = x_runs_[xi_];
      return Run{r.s, r.n - xoff_};
    }
    const auto& w = side_.words[wi_].syms;
    Sym s = w[off_];
    size_t j = off_;
    while (j < w.size() && w[j] == s) ++j;
    return Run{s, j - off_};
  }

  void consume(uint64_t n) {
    if (in_x_) {
      xoff_ += n;
      if (xoff_ == x_runs_[xi_].n) {
        ++xi_;
        xoff_ = 0;
      }
    } else {
      off_ += static_cast<size_t>(n);
    }
    normalize();
  }

 private:
  void normalize() {
    for (;;) {
      if (in_x_) {
        if (xi_ < x_runs_.size()) return;
        in_x_ = false;
        xi_ = 0;
        ++wi_;
        off_ = 0;
        continue;
      }
      if (wi_ >= side_.words.size()) {
        done_ = true;
        return;
      }
      if (off_ < side_.words[wi_].syms.size()) return;
      if (wi_ + 1 < side_.words.size()) {
        in_x_ = true;
        xoff_ = 0;
        continue;
      }
      done_ = true;
      return;
    }
  }

  const Side& side_;
  std::span<const Run> x_runs_;
  size_t wi_ = 0, off_ = 0;
  bool in_x_ = false;
  size_t xi_ = 0;
  uint64_t xoff_ = 0;
  bool done_ = false;
};

bool streams_equal(const Side& lhs, const Side& rhs, std::span<const Run> x_runs,
                   Counters* cnt) {
  RunStream s1(lhs, x_runs), s2(rhs, x_runs);
  for (;;) {
    auto r1 = s1.peek();
    auto r2 = s2.peek();
    if (!r1 && !r2) return true;
    if (cnt) ++cnt->comparisons;
    if (!r1 || !r2) return false;
    if (r1->s != r2->s) return false;
    uint64_t take = std::min(r1->n, r2->n);
    s1.consume(take);
    s2.consume(take);
  }
}

std::vector<Run> run_encode(std::span<const Sym> w) {
  std::vector<Run> runs;
  for (Sym s : w) {
    if (!runs.empty() && runs.back().s == s)
      ++runs.back().n;
    else
      runs.push_back({s, 1});
  }
  return runs;
}

}  // namespace

bool test_substitution(Sym a, uint64_t ell, const EqSystem& sys, Counters* cnt) {
  if (cnt) ++cnt->substitution_tests;
  Run xr{a, ell};
  std::span<const Run> x_runs(&xr, ell > 0 ? 1 : 0);
  for (const auto& eq : sys.eqs)
    if (!streams_equal(eq.lhs, eq.rhs, x_runs, cnt)) return false;
  return true;
}

bool test_word_substitution(std::span<const Sym> w, const EqSystem& sys, Counters* cnt) {
  if (cnt) ++cnt->substitution_tests;
  std::vector<Run> x_runs = run_encode(w);
  for (const auto& eq : sys.eqs)
    if (!streams_equal(eq.lhs, eq.rhs, x_runs, cnt)) return false;
  return true;
}

TestFn baseline_tester(Counters* cnt) {
  return [cnt](Sym a, uint64_t ell, const EqSystem& sys) {
    return test_substitution(a, ell, sys, cnt);
  };
}

APrefixProfile a_prefix_profile(Sym a, const EqSystem& sys) {
  APrefixProfile p;
  const Equation& eq = sys.eqs.front();
  const Side& letters = eq.letter_side();
  const Side& xs = (&letters == &eq.lhs) ? eq.rhs : eq.lhs;
  for (Sym s : letters.words.front().syms) {
    if (s != a) break;
    ++p.ell_A;
  }
  p.x_side_all_a = true;
  for (size_t wi = 0; wi < xs.words.size() && p.x_side_all_a; ++wi) {
    if (wi) ++p.i;
    for (Sym s : xs.words[wi].syms) {
      if (s == a) {
        ++p.ell_B;
      } else {
        p.x_side_all_a = false;
        break;
      }
    }
  }
  return p;
}

std::optional<uint64_t> test_simple_solution(Sym a, const EqSystem& sys, const TestFn& tester) {
  const ExplicitWord& a0 = sys.eqs.front().first_word();
  if (a0.empty() || a0.syms.front() != a) return std::nullopt;
  bool all_a = std::all_of(a0.syms.begin(), a0.syms.end(), [&](Sym s) { return s == a; });
  if (all_a) throw std::logic_error("A0 in a+: route to test_astar");

  APrefixProfile p = a_prefix_profile(a, sys);
  if (p.x_side_all_a) return std::nullopt;
  if (p.i == 0) return std::nullopt;
  if (p.ell_A <= p.ell_B) return std::nullopt;
  uint64_t diff = p.ell_A - p.ell_B;
  if (diff % p.i != 0) return std::nullopt;
  uint64_t ell = diff / p.i;
  if (ell < 1) return std::nullopt;
  if (!tester(a, ell, sys)) return std::nullopt;
  return ell;
}

namespace {

struct SidePrefix {
  uint64_t k = 0;    // X occurrences before the first non-a letter
  uint64_t ell = 0;  // explicit a's before it
  bool at_end = true;
  size_t word_index = 0;  // word holding the first non-a letter
  size_t offset = 0;      // its offset in that word
};

SidePrefix scan_prefix(const Side& side, Sym a, Counters* cnt) {
  SidePrefix r;
  for (size_t wi = 0; wi < side.words.size(); ++wi) {
    if (wi) ++r.k;
    const auto& syms = side.words[wi].syms;
    for (size_t j = 0; j < syms.size(); ++j) {
      if (cnt) ++cnt->comparisons;
      if (syms[j] == a) {
        ++r.ell;
      } else {
        r.at_end = false;
        r.word_index = wi;
        r.offset = j;
        return r;
      }
    }
  }
  return r;
}

// Removes the leading a's and X's up to the first non-a letter.
void strip_prefix(Side& side, Sym a, const SidePrefix& p) {
  if (p.at_end) {
    ExplicitWord empty_word = side.words.front();
    empty_word.syms.clear();
    side.words.clear();
    side.words.push_back(std::move(empty_word));
    return;
  }
  side.words.erase(side.words.begin(),
                   side.words.begin() + static_cast<ptrdiff_t>(p.word_index));
  auto& w = side.words.front().syms;
  w.erase(w.begin(), w.begin() + static_cast<ptrdiff_t>(p.offset));
}

}  // namespace

AStarOutcome test_astar(Sym a, const EqSystem& sys, const TestFn& tester, Counters* cnt) {
  EqSystem work = sys;
  for (;;) {
    if (work.eqs.empty()) return {AStarKind::All, 0};
    std::optional<uint64_t> candidate;
    std::vector<std::pair<SidePrefix, SidePrefix>> prefixes;
    prefixes.reserve(work.eqs.size());
    for (const auto& eq : work.eqs) {
      SidePrefix pl = scan_prefix(eq.lhs, a, cnt);
      SidePrefix pr = scan_prefix(eq.rhs, a, cnt);
      prefixes.emplace_back(pl, pr);
      if (pl.k == pr.k) {
        if (pl.ell != pr.ell) return {AStarKind::None, 0};
        continue;  // satisfied by every x
      }
      // k_l x + ell_l = k_r x + ell_r has at most one solution
      uint64_t kd, elld;
      if (pl.k > pr.k) {
        kd = pl.k - pr.k;
        if (pr.ell < pl.ell) return {AStarKind::None, 0};
        elld = pr.ell - pl.ell;
      } else {
        kd = pr.k - pl.k;
        if (pl.ell < pr.ell) return {AStarKind::None, 0};
        elld = pl.ell - pr.ell;
      }
      if (elld % kd != 0) return {AStarKind::None, 0};
      uint64_t x = elld / kd;
      if (x < 1) return {AStarKind::None, 0};
      if (!candidate) candidate = x;
    }
    if (candidate) {
      if (tester(a, *candidate, sys)) return {AStarKind::Unique, *candidate};
      return {AStarKind::None, 0};
    }
    // every equation balances for all x: strip the consumed prefixes and recurse
    for (size_t i = 0; i < work.eqs.size(); ++i) {
      strip_prefix(work.eqs[i].lhs, a, prefixes[i].first);
      strip_prefix(work.eqs[i].rhs, a, prefixes[i].second);
    }
    CanonOutcome out = canonicalize(work);
    switch (out.kind) {
      case CanonOutcome::Kind::NoSolution:
        return {AStarKind::None, 0};
      case CanonOutcome::Kind::Universal:
        return {AStarKind::All, 0};
      case CanonOutcome::Kind::UniqueExplicit: {
        const auto& w = out.unique_words.front();
        bool all_a = std::all_of(w.begin(), w.end(), [&](Sym s) { return s == a; });
        if (!all_a || w.empty()) return {AStarKind::None, 0};
        if (tester(a, w.size(), sys)) return {AStarKind::Unique, w.size()};
        return {AStarKind::None, 0};
      }
      case CanonOutcome::Kind::Ok:
        break;
    }
  }
}

void Reporter::add_finite(Weight length, std::optional<std::u32string> text) {
  finite_.emplace(length, std::move(text));  // keep the first report of a length
}

void Reporter::single(Sym s, const EqSystem& sys) {
  power(s, 1, sys);
}

void Reporter::power(Sym s, uint64_t ell, const EqSystem& sys) {
  const Alphabet& a = sys.alphabet;
  Weight len = sys.popped.prefix_weight + ell * a.weight(s) + sys.popped.suffix_weight;
  std::optional<std::u32string> text;
  if (len <= limit_) {
    std::u32string t = a.expand_seq(sys.popped.prefix, limit_);
    std::u32string body = a.expand_sym(s, limit_);
    for (uint64_t i = 0; i < ell; ++i) t += body;
    t += a.expand_seq(sys.popped.suffix, limit_);
    text = std::move(t);
  }
  add_finite(len, std::move(text));
}

void Reporter::word(std::span<const Sym> w, const EqSystem& sys) {
  const Alphabet& a = sys.alphabet;
  Weight len = sys.popped.prefix_weight + sys.popped.suffix_weight;
  for (Sym s : w) len += a.weight(s);
  std::optional<std::u32string> text;
  if (len <= limit_) {
    std::u32string t = a.expand_seq(sys.popped.prefix, limit_);
    for (Sym s : w) t += a.expand_sym(s, limit_);
    t += a.expand_seq(sys.popped.suffix, limit_);
    text = std::move(t);
  }
  add_finite(len, std::move(text));
}

void Reporter::family(Sym s, const EqSystem& sys) {
  if (raw_family_) {
    family_conflict_ = true;
    return;
  }
  RawFamily f;
  f.letter = sys.alphabet.gram_of(s);
  f.base = sys.popped.prefix_weight + sys.popped.suffix_weight;
  f.step = sys.alphabet.weight(s);
  if (f.base + f.step <= limit_) {
    std::u32string t = sys.alphabet.expand_seq(sys.popped.prefix, limit_);
    t += sys.alphabet.expand(f.letter, limit_);
    t += sys.alphabet.expand_seq(sys.popped.suffix, limit_);
    f.member_text = std::move(t);
  }
  raw_family_ = std::move(f);
}

SolutionSet Reporter::assemble(bool epsilon, bool universal) const {
  SolutionSet out;
  out.epsilon = epsilon;
  out.universal = universal;
  auto finite = finite_;  // working copy

  if (raw_family_) {
    const RawFamily& f = *raw_family_;
    Weight step = f.step;
    Weight m0 = f.base + step;  // smallest member
    // drop finite solutions that the family already covers
    for (auto it = finite.begin(); it != finite.end();) {
      if (it->first >= m0 && (it->first - m0) % step == 0)
        it = finite.erase(it);
      else
        ++it;
    }
    // Absorb finite members sitting exactly one step below the family. A
    // rebase keeps the length set identical; the string representation stays
    // valid only when the period extends down, which the member text shows.
    std::optional<std::u32string> member = f.member_text;  // smallest member
    while (m0 >= 2 * step && member) {
      auto it = finite.find(m0 - step);
      if (it == finite.end() || !it->second) break;
      bool periodic = true;
      for (uint64_t x = m0 - 2 * step; x + step < m0 && periodic; ++x)
        periodic = (*member)[static_cast<size_t>(x)] == (*member)[static_cast<size_t>(x + step)];
      if (!periodic) break;
      m0 -= step;
      member = it->second;
      finite.erase(it);
    }

    FamilyDesc d;
    d.period_len = step;
    d.prefix_len = m0 - step;
    d.suffix_len = 0;
    if (member) {
      d.prefix = member->substr(0, static_cast<size_t>(d.prefix_len));
      d.period = member->substr(static_cast<size_t>(d.prefix_len));
      d.suffix = std::u32string{};
    }
    out.family = std::move(d);
  }

  out.finite.reserve(finite.size());
  for (auto& [len, text] : finite) out.finite.push_back({len, std::move(text)});
  return out;
}

}  // namespace wordeq
