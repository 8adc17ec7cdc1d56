#include "wordeq/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>

#include "wordeq/linear.hpp"
#include "wordeq/recompress.hpp"

namespace wordeq {

namespace {

bool single_letter_block(const ExplicitWord& w) {
  if (w.empty()) return false;
  return std::all_of(w.syms.begin(), w.syms.end(), [&](Sym s) { return s == w.syms.front(); });
}

void stamp_short(EqSystem& sys, int n_short, int phase) {
  for (auto& eq : sys.eqs)
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (auto& w : side->words)
        if (w.became_short_phase < 0 && w.is_short(n_short)) w.became_short_phase = phase;
}

struct WordSnap {
  uint64_t uid = 0;
  size_t len = 0;
  bool first = false;
  bool last = false;
};

std::vector<WordSnap> snapshot_words(const EqSystem& sys) {
  std::vector<WordSnap> out;
  for (const auto& eq : sys.eqs) {
    const ExplicitWord* fw = &eq.first_word();
    const ExplicitWord* lw = eq.last_word();
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (const auto& w : side->words)
        out.push_back({w.uid, w.size(), &w == fw, &w == lw});
  }
  return out;
}

void check_shrinkage(const EqSystem& sys, const std::vector<WordSnap>& before, int n_short,
                     RunStats* stats) {
  std::unordered_map<uint64_t, size_t> now;
  for (const auto& eq : sys.eqs)
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (const auto& w : side->words) now.emplace(w.uid, w.size());
  auto note = [&](const std::string& msg) { stats->violations.push_back(msg); };
  // the 2/3·L + 8 shrinking arithmetic beats 3/4 only from length 100 up, and
  // keeps short words short only for N >= 25; below that the bounds are void
  size_t long_from = std::max<size_t>(static_cast<size_t>(n_short), 100);
  for (const auto& s : before) {
    auto it = now.find(s.uid);
    if (it == now.end()) continue;
    size_t after = it->second;
    if (s.len > long_from) {
      if (4 * after > 3 * s.len + 3)
        note("long word did not shrink to 3/4: " + std::to_string(s.len) + " -> " +
             std::to_string(after) + " @phase " + std::to_string(sys.phase));
    } else if (s.len <= static_cast<size_t>(n_short) && n_short >= 25 &&
               after > static_cast<size_t>(n_short)) {
      note("short word grew past N @phase " + std::to_string(sys.phase));
    }
    if ((s.first || s.last) && s.len >= 2 && s.len <= static_cast<size_t>(n_short) &&
        after >= s.len)
      note("short first/last word did not strictly shrink @phase " +
           std::to_string(sys.phase));
  }
}

void check_no_crossing_blocks(const EqSystem& sys, RunStats* stats) {
  if (sys.eqs.empty()) return;
  FirstLastProfile p = first_last_profile(sys);
  for (const auto& eq : sys.eqs)
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (size_t wi = 0; wi < side->words.size(); ++wi) {
        const auto& w = side->words[wi];
        bool followed_by_x = wi + 1 < side->words.size();
        bool follows_x = wi > 0;
        if (followed_by_x && !w.empty() && w.syms.back() == p.a)
          stats->violations.push_back("crossing block: first letter precedes X @phase " +
                                      std::to_string(sys.phase));
        if (follows_x && !w.empty() && w.syms.front() == p.b)
          stats->violations.push_back("crossing block: last letter follows X @phase " +
                                      std::to_string(sys.phase));
        if (follows_x && followed_by_x && w.empty() && p.a == p.b)
          stats->violations.push_back("crossing block: XX with equal ends @phase " +
                                      std::to_string(sys.phase));
      }
}

}  // namespace

int phase_bound(size_t input_size, int n_short) {
  double n = static_cast<double>(std::max<size_t>(input_size, 2));
  return static_cast<int>(std::ceil(std::log(n) / std::log(4.0 / 3.0))) + n_short + 2;
}

SysState run_phase(EqSystem& sys, const SolverOptions& opt, Reporter& rep,
                   const TestFn& tester, RunStats* stats) {
  sys.alphabet.begin_phase();
  std::vector<WordSnap> before;
  if (opt.validate && stats) before = snapshot_words(sys);
  PhaseStats ps;
  ps.phase = sys.phase;
  ps.size_before = sys.total_symbols();

  auto pairs = list_pairs(sys);
  ps.pairs_listed = pairs.size();

  SysState st = block_comp(sys, rep, tester);
  if (!st.is_ok()) return st;
  if (opt.validate && stats) check_no_crossing_blocks(sys, stats);

  st = preproc(sys, rep, tester);
  if (!st.is_ok()) return st;

  auto crossing_now = crossing_pairs(sys);
  ps.crossing_after_preproc = crossing_now.size();
  if (opt.validate && stats && crossing_now.size() > 2)
    stats->violations.push_back("more than two crossing pairs after preproc @phase " +
                                std::to_string(sys.phase));

  std::vector<std::pair<Sym, Sym>> noncrossing;
  noncrossing.reserve(pairs.size());
  for (const auto& p : pairs)
    if (!std::binary_search(crossing_now.begin(), crossing_now.end(), p))
      noncrossing.push_back(p);
  PairOccList occs = gather_pairs(sys, noncrossing);
  compress_pair_list(occs, sys);
  compact_words(sys);

  for (const auto& p : crossing_now) {
    if (!std::binary_search(pairs.begin(), pairs.end(), p)) continue;
    st = pair_comp(p.first, p.second, sys, rep, tester);
    if (!st.is_ok()) return st;
  }

  renumber(sys);
  sys.phase += 1;
  stamp_short(sys, opt.n_short, sys.phase);

  if (stats) {
    if (opt.validate) {
      check_shrinkage(sys, before, opt.n_short, stats);
      for (const auto& d : check_form(sys))
        stats->violations.push_back("form violation: " + d + " @phase " +
                                    std::to_string(sys.phase));
    }
    ps.size_after = sys.total_symbols();
    if (opt.collect_stats) stats->per_phase.push_back(ps);
  }
  return SysState::ok();
}

EqSystem make_system(const ParsedEquation& input) {
  EqSystem sys;
  std::unordered_map<int32_t, Sym> interned;
  auto build_side = [&](const std::vector<int32_t>& tokens) {
    Side side;
    std::vector<Sym> cur;
    int orig = 0;
    for (int32_t t : tokens) {
      if (t == kVar) {
        side.words.push_back(sys.make_word(std::move(cur), orig++));
        cur = {};
      } else {
        auto [it, fresh] = interned.emplace(t, 0);
        if (fresh) it->second = sys.alphabet.add_original(static_cast<char32_t>(t));
        cur.push_back(it->second);
      }
    }
    side.words.push_back(sys.make_word(std::move(cur), orig++));
    return side;
  };
  Equation eq;
  eq.lhs = build_side(input.lhs);
  eq.rhs = build_side(input.rhs);
  sys.eqs.push_back(std::move(eq));
  return sys;
}

namespace {

// X = w: the remaining system filters the single candidate
void handle_unique(const std::vector<std::vector<Sym>>& words, EqSystem& sys, Reporter& rep,
                   Counters* cnt) {
  if (words.empty()) return;
  const auto& w = words.front();
  for (const auto& other : words)
    if (other != w) return;
  if (w.empty()) return;  // epsilon is handled separately
  if (test_word_substitution(w, sys, cnt)) rep.word(w, sys);
}

}  // namespace

SolveResult solve(const ParsedEquation& input, const SolverOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SolveResult out;
  RunStats& stats = out.stats;
  stats.input_size = input.lhs.size() + input.rhs.size();

  bool epsilon = epsilon_check(std::span<const Sym>(input.lhs), std::span<const Sym>(input.rhs));
  Reporter rep(opt.max_expand);
  EqSystem sys = make_system(input);

  bool universal = false;
  bool resolved = false;

  CanonOutcome canon = canonicalize(sys);
  switch (canon.kind) {
    case CanonOutcome::Kind::NoSolution:
      resolved = true;
      break;
    case CanonOutcome::Kind::Universal:
      universal = true;
      resolved = true;
      break;
    case CanonOutcome::Kind::UniqueExplicit:
      handle_unique(canon.unique_words, sys, rep, &stats.counters);
      resolved = true;
      break;
    case CanonOutcome::Kind::Ok:
      break;
  }

  if (!resolved) {
    stamp_short(sys, opt.n_short, 0);

    LinearState lin;
    bool linear_mode = false;
    if (opt.engine == Engine::Linear) {
      lin.n_short = opt.n_short;
      lin.overdue_delay = opt.paranoid ? -1 : opt.overdue_delay;
      lin.jump = build_jump_index(input);
      linear_mode = true;
    }
    EqSystem* sys_ptr = &sys;
    TestFn baseline = baseline_tester(&stats.counters);
    TestFn fast = [&lin, sys_ptr, &stats](Sym a, uint64_t ell, const EqSystem& s) {
      // refreshed lazily: compression and popping may have reshaped the system
      refresh_linear_caches(lin, *sys_ptr);
      return fast_test_substitution(a, ell, s, lin, sys_ptr->phase, &stats.counters);
    };

    const int bound = phase_bound(stats.input_size, opt.n_short);
    bool exit_astar = false;

    while (!resolved) {
      if (sys.eqs.empty()) {
        stats.violations.push_back("system emptied mid-run");
        resolved = true;
        break;
      }
      const Equation& first = sys.eqs.front();
      const ExplicitWord* lw = first.last_word();
      if (single_letter_block(first.first_word()) || (lw && single_letter_block(*lw))) break;

      bool use_fast = false;
      if (linear_mode) {
        auto bs = build_succinct(sys, opt.n_short);
        if (bs.short_first_or_last) {
          linear_mode = false;
          stats.short_tail_switch_phase = sys.phase;
        } else {
          detect_overdue(bs.rep, sys, sys.phase);
          if (!opt.paranoid) {
            SysState st = remove_overdue(sys, sys.phase, opt.overdue_delay);
            if (st.kind == SysState::Kind::NoSolution) {
              resolved = true;
              break;
            }
            if (st.kind == SysState::Kind::Unique) {
              handle_unique(st.unique_words, sys, rep, &stats.counters);
              resolved = true;
              break;
            }
            if (st.kind == SysState::Kind::AllTrivial) {
              stats.violations.push_back("system emptied by overdue removal");
              resolved = true;
              break;
            }
          }
          // splits may have exposed short first/last words
          for (const auto& eq : sys.eqs) {
            const ExplicitWord* l2 = eq.last_word();
            if (eq.first_word().is_short(opt.n_short) ||
                (l2 && l2->is_short(opt.n_short))) {
              linear_mode = false;
              stats.short_tail_switch_phase = sys.phase;
              break;
            }
          }
          use_fast = linear_mode;
        }
      }

      SysState st = run_phase(sys, opt, rep, use_fast ? fast : baseline, &stats);
      stats.phases += 1;
      switch (st.kind) {
        case SysState::Kind::Ok:
          break;
        case SysState::Kind::NoSolution:
          resolved = true;
          break;
        case SysState::Kind::Unique:
          handle_unique(st.unique_words, sys, rep, &stats.counters);
          resolved = true;
          break;
        case SysState::Kind::AllTrivial:
          stats.violations.push_back("system emptied mid-phase");
          resolved = true;
          break;
        case SysState::Kind::ExitAStar:
          exit_astar = true;
          break;
      }
      if (exit_astar) break;
      if (!resolved && stats.phases > bound) {
        stats.violations.push_back("phase bound exceeded: " + std::to_string(stats.phases) +
                                   " > " + std::to_string(bound));
        resolved = true;
      }
    }

    if (!resolved && !sys.eqs.empty()) {
      const Equation& first = sys.eqs.front();
      const ExplicitWord* lw = first.last_word();
      Sym letter;
      if (single_letter_block(first.first_word()))
        letter = first.first_word().syms.front();
      else if (lw && single_letter_block(*lw))
        letter = lw->syms.back();
      else {
        stats.violations.push_back("a* exit without a block end");
        letter = first.first_word().syms.front();
      }
      AStarOutcome res = test_astar(letter, sys, baseline, &stats.counters);
      if (res.kind == AStarKind::All)
        rep.family(letter, sys);
      else if (res.kind == AStarKind::Unique)
        rep.power(letter, res.ell, sys);
    }
  }

  if (rep.family_conflict())
    stats.violations.push_back("more than one infinite family reported");

  out.set = rep.assemble(epsilon, universal);

  size_t max_solutions =
      static_cast<size_t>(8.0 * std::log2(static_cast<double>(std::max<size_t>(stats.input_size, 2))) + 8.0);
  if (out.set.finite.size() > max_solutions)
    stats.findings.push_back("distinct finite solutions " + std::to_string(out.set.finite.size()) +
                             " above 8*log2(n)+8 = " + std::to_string(max_solutions));

  auto t1 = std::chrono::steady_clock::now();
  stats.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return out;
}

std::optional<std::string> compare_with_oracle(const ParsedEquation& eq,
                                               const SolutionSet& set, uint64_t B) {
  OracleResult ref = oracle_solve(eq, B);
  if (ref.universal != set.universal)
    return std::string("universal flag: oracle ") + (ref.universal ? "true" : "false");
  if (ref.epsilon != set.epsilon)
    return std::string("epsilon flag: oracle ") + (ref.epsilon ? "true" : "false");
  if (ref.universal) return std::nullopt;

  std::vector<uint64_t> got;
  for (const auto& f : set.finite)
    if (f.length <= B) got.push_back(f.length);
  if (set.family) {
    uint64_t base = set.family->prefix_len + set.family->suffix_len;
    for (uint64_t l = 1; base + l * set.family->period_len <= B; ++l)
      got.push_back(base + l * set.family->period_len);
  }
  std::sort(got.begin(), got.end());
  got.erase(std::unique(got.begin(), got.end()), got.end());
  if (got != ref.lengths) {
    auto fmt = [](const std::vector<uint64_t>& v) {
      std::string s = "{";
      for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    return "lengths: solver " + fmt(got) + " oracle " + fmt(ref.lengths);
  }
  // cross-check the strings the solver expanded
  for (const auto& f : set.finite) {
    if (!f.text || f.length > B) continue;
    auto it = std::lower_bound(ref.lengths.begin(), ref.lengths.end(), f.length);
    const auto& want = ref.strings[static_cast<size_t>(it - ref.lengths.begin())];
    if (f.text->size() != want.size() ||
        !std::equal(want.begin(), want.end(), f.text->begin(),
                    [](int32_t a, char32_t b) { return a == static_cast<int32_t>(b); }))
      return "solution string differs at length " + std::to_string(f.length);
  }
  return std::nullopt;
}

}  // namespace wordeq
