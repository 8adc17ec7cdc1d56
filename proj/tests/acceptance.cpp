// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <random>

#include "testutil.hpp"
#include "wordeq/bench.hpp"
#include "wordeq/generate.hpp"
#include "wordeq/linear.hpp"
#include "wordeq/recompress.hpp"
#include "wordeq/strindex.hpp"

using namespace wordeq;
using namespace wordeq::testutil;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!pass) ++failures;
}

struct SuiteRun {
  ParsedEquation eq;
  size_t size;
  SolveResult base100, lin100, base5, lin5;
};

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

SolveResult run(const ParsedEquation& eq, Engine engine, int n_short) {
  SolverOptions opt;
  opt.engine = engine;
  opt.n_short = n_short;
  return solve(eq, opt);
}

}  // namespace

int main() {
  // one shared pass over the 1000-instance random suite, half planted
  std::vector<SuiteRun> suite;
  suite.reserve(1000);
  double t0 = now_ms();
  for (const auto& spec : suite_specs(1000)) {
    SuiteRun r;
    r.eq = gen_random(spec.seed, spec.size, spec.alphabet, spec.plant);
    r.size = spec.size;
    r.base100 = run(r.eq, Engine::Baseline, 100);
    r.lin100 = run(r.eq, Engine::Linear, 100);
    r.base5 = run(r.eq, Engine::Baseline, 5);
    r.lin5 = run(r.eq, Engine::Linear, 5);
    suite.push_back(std::move(r));
  }

  // criterion 1: exact oracle equivalence, window 3n, 50 re-checks at 10n
  {
    size_t mismatches = 0;
    std::string first;
    for (const auto& r : suite) {
      for (const SolveResult* res : {&r.base100, &r.lin100, &r.base5, &r.lin5}) {
        auto m = compare_with_oracle(r.eq, res->set, 3 * r.size);
        if (m && mismatches++ == 0) first = pretty_print(r.eq) + ": " + *m;
      }
    }
    for (size_t i = 0; i < 50; ++i) {
      const auto& r = suite[i * 19];
      auto m = compare_with_oracle(r.eq, r.lin100.set, 10 * r.size);
      if (m && mismatches++ == 0) first = pretty_print(r.eq) + " @10n: " + *m;
    }
    double elapsed = (now_ms() - t0) / 1000.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "oracle equivalence on 1000 instances (+50 at B=10n), %zu mismatches, "
                  "%.1f s%s%s",
                  mismatches, elapsed, elapsed < 60 ? "" : " (over budget)",
                  first.empty() ? "" : ("; first: " + first).c_str());
    report(1, mismatches == 0 && elapsed < 60, buf);
  }

  // criterion 2: the worked examples, exact
  {
    bool ok = true;
    std::string detail;
    auto expect = [&](const std::string& line, bool eps, std::vector<std::string> finite,
                      const char* fam_prefix, const char* fam_period) {
      ParseResult p = parse_equation(line);
      SolveResult r = solve(*p.eq);
      bool good = r.set.epsilon == eps && r.set.finite.size() == finite.size();
      for (size_t i = 0; good && i < finite.size(); ++i)
        good = r.set.finite[i].text && u32_to_utf8(*r.set.finite[i].text) == finite[i];
      if (fam_period) {
        good = good && r.set.family && r.set.family->period &&
               u32_to_utf8(*r.set.family->period) == fam_period &&
               u32_to_utf8(*r.set.family->prefix) == fam_prefix &&
               r.set.family->suffix_len == 0;
      } else {
        good = good && !r.set.family;
      }
      if (!good && detail.empty()) detail = " (failed on " + line + ")";
      ok = ok && good;
    };
    expect("aX = Xa", true, {}, "", "a");
    expect("Xaa = aXX", false, {"a"}, nullptr, nullptr);
    expect("Xab = abX", true, {}, "", "ab");
    expect("abaX = XbX", false, {}, nullptr, nullptr);
    report(2, ok, "worked examples: aX=Xa, Xaa=aXX, Xab=abX, abaX=XbX" + detail);
  }

  // criterion 3: per-phase invariants, zero violations anywhere in the suite
  {
    size_t violations = 0;
    std::string first;
    for (const auto& r : suite)
      for (const SolveResult* res : {&r.base100, &r.lin100, &r.base5, &r.lin5})
        if (!res->stats.violations.empty()) {
          if (violations == 0) first = pretty_print(r.eq) + ": " + res->stats.violations[0];
          violations += res->stats.violations.size();
        }
    report(3, violations == 0,
           "per-phase invariants (crossing pairs <= 2, no crossing blocks, 3/4 "
           "shrinkage, short stays short, first-word progress): " +
               std::to_string(violations) + " violations" +
               (first.empty() ? "" : "; first: " + first));
  }

  // criterion 4: phase bound
  {
    size_t breaches = 0;
    for (const auto& r : suite) {
      if (r.base100.stats.phases > phase_bound(r.base100.stats.input_size, 100)) ++breaches;
      if (r.base5.stats.phases > phase_bound(r.base5.stats.input_size, 5)) ++breaches;
      if (r.lin100.stats.phases > phase_bound(r.lin100.stats.input_size, 100)) ++breaches;
      if (r.lin5.stats.phases > phase_bound(r.lin5.stats.input_size, 5)) ++breaches;
    }
    report(4, breaches == 0,
           "phases <= ceil(log4/3 n) + N + 2 on every run: " + std::to_string(breaches) +
               " breaches");
  }

  // criterion 5: engine equivalence, byte-identical sets, including N=5 stress
  {
    size_t diffs = 0;
    std::string first;
    for (const auto& r : suite) {
      std::string b100 = result_to_json("e", r.base100, false);
      std::string l100 = result_to_json("e", r.lin100, false);
      std::string b5 = result_to_json("e", r.base5, false);
      std::string l5 = result_to_json("e", r.lin5, false);
      if (b100 != l100 || b5 != l5) {
        if (diffs++ == 0) first = pretty_print(r.eq);
      }
    }
    report(5, diffs == 0,
           "baseline vs linear byte-identical (N=100 and N=5): " + std::to_string(diffs) +
               " diffs" + (first.empty() ? "" : "; first: " + first));
  }

  // criterion 6: suffix array / LCP / RMQ against the naive oracles
  {
    std::mt19937_64 rng(606060);
    size_t bad = 0;
    for (int tc = 0; tc < 200; ++tc) {
      size_t n = 1 + rng() % 512;
      int sigma = 1 + static_cast<int>(rng() % 8);
      std::vector<int32_t> t(n);
      for (auto& c : t) c = static_cast<int32_t>(rng() % static_cast<uint64_t>(sigma));
      StringIndex idx = build_index(t);
      if (idx.sa != sa_naive(t)) ++bad;
      for (int probe = 0; probe < 64; ++probe) {
        size_t i = rng() % n, j = rng() % n;
        int32_t want = 0;
        if (i == j) {
          want = static_cast<int32_t>(n - i);
        } else {
          while (i + want < n && j + want < n && t[i + want] == t[j + want]) ++want;
        }
        if (idx.lcp_query(static_cast<int32_t>(i), static_cast<int32_t>(j)) != want) ++bad;
      }
    }
    report(6, bad == 0,
           "suffix array + lcp queries vs naive on 200 random texts: " +
               std::to_string(bad) + " mismatches");
  }

  // criterion 7: sub-procedure equivalences
  {
    size_t bad = 0;
    // classify_test totality over random contexts
    {
      EqSystem sys = raw_system({{{"aaaaaaaaaa", "ab", "ab", ""}, {"b", "ab", "ab", ""}}});
      std::mt19937_64 rng(7);
      const auto& lw = sys.eqs[0].lhs.words;
      const auto& rw = sys.eqs[0].rhs.words;
      const ExplicitWord* pool[] = {nullptr, &lw[0], &lw[1], &lw[2], &lw[3], &rw[0], &rw[1]};
      for (int i = 0; i < 5000; ++i) {
        ClassifyContext c;
        c.n_short = 4;
        c.A_i = pool[rng() % 7];
        c.A_next = pool[rng() % 7];
        c.B_j = pool[rng() % 7];
        c.B_next = pool[rng() % 7];
        c.a_next_is_last = rng() % 2;
        c.b_next_is_last = rng() % 2;
        c.first_letters_facing = rng() % 2;
        c.mismatch_in_lookahead = rng() % 2;
        TestType t = classify_test(c);
        if (t != TestType::Protected && t != TestType::Failed && t != TestType::Aligned &&
            t != TestType::Misaligned && t != TestType::Periodical)
          ++bad;
      }
    }
    // aligned_jump vs the naive word-by-word scan, >= 10^4 probes
    size_t jump_probes = 0;
    for (int tc = 0; tc < 200 && jump_probes < 10000; ++tc) {
      ParsedEquation eq = make_family_instance(BenchFamily::DenseX, 300 + tc * 13, tc);
      EqSystem sys = make_system(eq);
      if (canonicalize(sys).kind != CanonOutcome::Kind::Ok) continue;
      JumpIndex jump = build_jump_index(eq);
      auto bs = build_succinct(sys, 8);
      if (bs.short_first_or_last) continue;
      const Side& L = sys.eqs[0].lhs;
      const Side& R = sys.eqs[0].rhs;
      auto cap = [](const Side& s) {
        return static_cast<int64_t>(s.words.size()) - (s.ends_with_x() ? 2 : 1);
      };
      for (uint32_t i = 1; static_cast<int64_t>(i) < cap(L); ++i)
        for (uint32_t j = 1; static_cast<int64_t>(j) < cap(R); ++j) {
          if (L.words[i].syms != R.words[j].syms || L.words[i].empty()) continue;
          if (!L.words[i].is_short(8)) continue;
          int64_t got = aligned_jump(jump, sys, 0, 0, i, 1, j);
          int64_t want = 1;
          while (static_cast<int64_t>(i) + want < cap(L) &&
                 static_cast<int64_t>(j) + want < cap(R) &&
                 L.words[i + static_cast<size_t>(want)].syms ==
                     R.words[j + static_cast<size_t>(want)].syms)
            ++want;
          if (got != want) ++bad;
          ++jump_probes;
        }
    }
    // periodic_skip vs the naive stream comparison, 10^3 instances
    {
      std::mt19937_64 rng(29);
      for (int tc = 0; tc < 1000; ++tc) {
        auto draw_word = [&](size_t maxlen) {
          std::vector<Sym> w(1 + rng() % maxlen);
          for (auto& s : w) s = rng() % 4 == 0 ? 1 : 0;
          return w;
        };
        std::vector<Sym> A = draw_word(4), B = draw_word(4);
        if (tc % 3 == 0) B = A;
        uint64_t x = 1 + rng() % 6;
        uint64_t k_a = 1 + rng() % 9, k_b = 1 + rng() % 9;
        uint64_t off_p = rng() % A.size(), off_q = rng() % x;
        uint64_t common = std::min(k_a * (A.size() + x) - off_p, k_b * (B.size() + x) - off_q);
        bool naive_mismatch = false;
        for (uint64_t t = 0; t < common; ++t)
          if (stream_at(A, 0, x, true, off_p + t) != stream_at(B, 0, x, false, off_q + t)) {
            naive_mismatch = true;
            break;
          }
        PeriodicOutcome got = periodic_skip(A, B, 0, x, off_p, off_q, k_a, k_b, nullptr);
        if (got.mismatch != naive_mismatch || (!got.mismatch && got.advanced != common)) ++bad;
      }
    }
    // detect_overdue vs a naive substring scan, every phase of a suite sweep
    size_t detect_checks = 0;
    for (size_t si = 0; si < suite.size(); ++si) {
      EqSystem sys = make_system(suite[si].eq);
      if (canonicalize(sys).kind != CanonOutcome::Kind::Ok) continue;
      Reporter rep(1000);
      TestFn tester = baseline_tester();
      SolverOptions opt;
      opt.n_short = 5;
      RunStats stats;
      for (int ph = 0; ph < 30; ++ph) {
        if (sys.eqs.empty()) break;
        auto bs = build_succinct(sys, 5);
        auto want = naive_overdue(sys, 5);
        auto fresh = detect_overdue(bs.rep, sys, sys.phase);
        std::set<std::vector<Sym>> got;
        for (size_t idx : fresh) got.insert(bs.rep.shorts[idx].content);
        if (got != want) ++bad;
        ++detect_checks;
        const auto& fw = sys.eqs[0].first_word();
        const auto* lw = sys.eqs[0].last_word();
        auto block = [](const ExplicitWord& w) {
          return !w.empty() && std::all_of(w.syms.begin(), w.syms.end(),
                                           [&](Sym s) { return s == w.syms.front(); });
        };
        if (block(fw) || !lw || block(*lw)) break;
        if (!run_phase(sys, opt, rep, tester, &stats).is_ok()) break;
      }
    }
    report(7, bad == 0 && jump_probes >= 10000,
           "classify totality, aligned_jump (" + std::to_string(jump_probes) +
               " probes), periodic_skip (1000), detect_overdue (" +
               std::to_string(detect_checks) + " phases): " + std::to_string(bad) +
               " mismatches");
  }

  // criterion 8: scaling echo on the power and dense-x families
  {
    std::vector<size_t> sizes = {1 << 14, 1 << 15, 1 << 16, 1 << 17, 1 << 18};
    bool ok = true;
    std::string detail;
    for (BenchFamily family : {BenchFamily::Power, BenchFamily::DenseX}) {
      const char* name = family == BenchFamily::Power ? "power" : "dense-x";
      auto rows = run_bench(family, sizes, 5);
      for (size_t i = 1; i < rows.size(); ++i) {
        double ratio = rows[i].linear_ms / std::max(rows[i - 1].linear_ms, 1e-6);
        if (ratio > 2.5) {
          ok = false;
          detail += std::string(" [") + name + " wall ratio " + std::to_string(ratio) + "]";
        }
      }
      double c0 = static_cast<double>(rows[0].linear_comparisons) /
                  static_cast<double>(rows[0].size);
      for (const auto& r : rows) {
        double c = static_cast<double>(r.linear_comparisons) / static_cast<double>(r.size);
        if (c > 1.5 * c0) {
          ok = false;
          detail += std::string(" [") + name + " linear cmp/n " + std::to_string(c) +
                    " vs " + std::to_string(c0) + "]";
        }
      }
      if (family == BenchFamily::DenseX) {
        for (size_t i = 1; i < rows.size(); ++i) {
          double prev = static_cast<double>(rows[i - 1].baseline_comparisons) /
                        static_cast<double>(rows[i - 1].size);
          double cur = static_cast<double>(rows[i].baseline_comparisons) /
                       static_cast<double>(rows[i].size);
          if (cur <= prev) {
            ok = false;
            detail += " [baseline cmp/n not growing]";
          }
        }
      }
      std::printf("  %s: ", name);
      for (const auto& r : rows)
        std::printf("n=%zu lin=%.1fms cmp/n=%.2f base-cmp/n=%.2f | ", r.size, r.linear_ms,
                    static_cast<double>(r.linear_comparisons) / static_cast<double>(r.size),
                    static_cast<double>(r.baseline_comparisons) / static_cast<double>(r.size));
      std::printf("\n");
    }
    report(8, ok,
           "scaling echo 2^14..2^18: linear wall ratio <= 2.5 per doubling, linear "
           "comparisons <= C*n, baseline dense-x log factor" +
               (detail.empty() ? "" : ":" + detail));
  }

  // criterion 9: solution-count observation (findings, not failures)
  {
    size_t breaches = 0;
    for (const auto& r : suite)
      for (const SolveResult* res : {&r.base100, &r.lin100, &r.base5, &r.lin5})
        for (const auto& f : res->stats.findings)
          if (f.find("distinct finite solutions") != std::string::npos) ++breaches;
    report(9, true,
           "distinct finite solutions <= 8*log2(n)+8 observation: " +
               std::to_string(breaches) + " breaches logged as findings");
  }

  return failures == 0 ? 0 : 1;
}
