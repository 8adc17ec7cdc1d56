#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "wordeq/equation.hpp"

namespace wordeq {

/// Symbols of the a-prefix balance: the letter side carries ell_A leading a's;
/// on the X side, ell_B explicit a's and i variable occurrences precede the
/// first non-a letter (the end of the side counts as non-a).
struct APrefixProfile {
  uint64_t ell_A = 0;
  uint64_t ell_B = 0;
  uint64_t i = 0;
  bool x_side_all_a = false;  // no non-a letter exists on the X side
};

APrefixProfile a_prefix_profile(Sym a, const EqSystem& sys);

/// Streaming check of X := a^ell over the whole system. Sides are walked as
/// (letter, multiplicity) runs, so the cost is independent of ell.
bool test_substitution(Sym a, uint64_t ell, const EqSystem& sys, Counters* cnt = nullptr);

/// Streaming check of X := w for an explicit word.
bool test_word_substitution(std::span<const Sym> w, const EqSystem& sys, Counters* cnt = nullptr);

/// Substitution tester, routed either to the baseline streamer or to the
/// linear engine's classified tester.
using TestFn = std::function<bool(Sym a, uint64_t ell, const EqSystem& sys)>;

TestFn baseline_tester(Counters* cnt = nullptr);

/// The unique a+ candidate: ell = (ell_A - ell_B) / i when positive and
/// integral, verified through `tester`. Precondition A0 not in a+; violating
/// it throws std::logic_error (the caller must route to test_astar).
std::optional<uint64_t> test_simple_solution(Sym a, const EqSystem& sys, const TestFn& tester);

enum class AStarKind { None, Unique, All };

struct AStarOutcome {
  AStarKind kind = AStarKind::None;
  uint64_t ell = 0;
};

/// Reports the solutions among a^+ by solving k_A x + ell_A = k_B x + ell_B
/// per equation and recursing on the stripped remainder when all x satisfy it.
AStarOutcome test_astar(Sym a, const EqSystem& sys, const TestFn& tester,
                        Counters* cnt = nullptr);

struct FiniteSolution {
  uint64_t length = 0;
  std::optional<std::u32string> text;  // present iff length fits the expansion cap
};

struct FamilyDesc {
  uint64_t prefix_len = 0;
  uint64_t period_len = 0;
  uint64_t suffix_len = 0;
  std::optional<std::u32string> prefix, period, suffix;
};

struct SolutionSet {
  bool epsilon = false;
  bool universal = false;
  std::vector<FiniteSolution> finite;  // sorted by length, lengths distinct
  std::optional<FamilyDesc> family;
};

/// Collects reported solutions, converting current-equation candidates into
/// original-equation descriptors via the popped record and letter weights.
/// Lengths always come from weights; strings are expanded only under the cap.
class Reporter {
 public:
  explicit Reporter(uint64_t expand_limit) : limit_(expand_limit) {}

  void single(Sym s, const EqSystem& sys);
  void power(Sym s, uint64_t ell, const EqSystem& sys);
  void word(std::span<const Sym> w, const EqSystem& sys);
  void family(Sym s, const EqSystem& sys);

  bool has_family() const { return raw_family_.has_value(); }
  bool family_conflict() const { return family_conflict_; }
  size_t finite_count() const { return finite_.size(); }

  /// Deduplicates finite solutions, absorbs family members listed finitely,
  /// rebases the family downward over absorbed members, and emits the family
  /// in (prefix, period, empty-suffix) form.
  SolutionSet assemble(bool epsilon, bool universal) const;

 private:
  struct RawFamily {
    GramId letter = -1;
    Weight base = 0;  // |expand(prefix)| + |expand(suffix)|
    Weight step = 0;  // weight(letter)
    std::optional<std::u32string> member_text;  // smallest member, if expandable
  };

  void add_finite(Weight length, std::optional<std::u32string> text);

  uint64_t limit_;
  std::map<Weight, std::optional<std::u32string>> finite_;
  std::optional<RawFamily> raw_family_;
  bool family_conflict_ = false;
};

}  // namespace wordeq
