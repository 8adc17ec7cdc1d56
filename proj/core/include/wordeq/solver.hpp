#pragma once

#include <string>
#include <vector>

#include "wordeq/equation.hpp"
#include "wordeq/oracle.hpp"
#include "wordeq/testing.hpp"

namespace wordeq {

enum class Engine { Baseline, Linear };

struct SolverOptions {
  int n_short = 100;       // short-word threshold N
  Engine engine = Engine::Linear;
  int overdue_delay = 32;  // phases between flagging a word overdue and removing it
  bool paranoid = false;   // disable overdue removal and the misaligned early exit
  uint64_t max_expand = 10000;
  bool collect_stats = false;
  bool validate = true;    // record per-phase invariant violations
};

struct PhaseStats {
  int phase = 0;
  size_t crossing_after_preproc = 0;
  size_t pairs_listed = 0;
  size_t size_before = 0;
  size_t size_after = 0;
};

struct RunStats {
  size_t input_size = 0;
  int phases = 0;
  int short_tail_switch_phase = -1;  // -1: never left the succinct path
  Counters counters;
  std::vector<PhaseStats> per_phase;      // filled when collect_stats
  std::vector<std::string> violations;    // invariant breaches (should stay empty)
  std::vector<std::string> findings;      // observations, not failures
  double wall_ms = 0.0;
};

struct SolveResult {
  SolutionSet set;
  RunStats stats;
};

/// Ceiling of the phase budget: long first/last words shrink geometrically,
/// then the short tail runs for at most N more phases.
int phase_bound(size_t input_size, int n_short);

/// One full phase: list pairs, block compression, preprocessing, non-crossing
/// then crossing pair compression, renumbering. The tester routes substitution
/// checks to the engine in use.
SysState run_phase(EqSystem& sys, const SolverOptions& opt, Reporter& rep,
                   const TestFn& tester, RunStats* stats);

SolveResult solve(const ParsedEquation& input, const SolverOptions& opt = {});

/// Interns the input letters and wraps the equation into a one-equation system.
EqSystem make_system(const ParsedEquation& input);

/// Checks a solved set against the brute-force reference up to length B.
/// Returns a description of the first mismatch, if any.
std::optional<std::string> compare_with_oracle(const ParsedEquation& eq,
                                               const SolutionSet& set, uint64_t B);

}  // namespace wordeq
