#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "wordeq/equation.hpp"
#include "wordeq/oracle.hpp"
#include "wordeq/strindex.hpp"
#include "wordeq/testing.hpp"

namespace wordeq {

enum class TestType { Protected, Failed, Aligned, Misaligned, Periodical };

struct WordRef {
  uint32_t eq;
  uint8_t side;  // 0 = lhs, 1 = rhs
  uint32_t word;
};

struct ShortInfo {
  std::vector<Sym> content;
  std::vector<WordRef> lhs_occs, rhs_occs;  // in equation order
  bool overdue = false;
};

/// Deduplicated short-word storage index: every two equal short words share
/// one entry; long words are listed per side with their positions.
struct SuccinctRep {
  std::vector<ShortInfo> shorts;
  std::vector<WordRef> long_lhs, long_rhs;
  size_t succinct_size = 0;  // sum of long lengths + distinct short lengths
};

/// Builds the dedup index and stamps short_id on every word. Sets
/// `short_first_or_last` when some equation's first or last word is short,
/// which sends the solver back to the plain representation.
struct BuildSuccinctResult {
  SuccinctRep rep;
  bool short_first_or_last = false;
};
BuildSuccinctResult build_succinct(EqSystem& sys, int n_short);

/// Flags the short words that are not substrings of any long word nor of
/// A0 A0, via one suffix array over the concatenation; stamps overdue_since
/// on their occurrences. Returns indices into rep.shorts of the new ones.
std::vector<size_t> detect_overdue(SuccinctRep& rep, EqSystem& sys, int phase);

/// Splits equations at matched X w X occurrences until no occurrence of any
/// due overdue word remains. Unsatisfiable occurrence structure surfaces as
/// NoSolution (modulo solutions already reported).
SysState remove_overdue(EqSystem& sys, int phase, int overdue_delay);

/// Suffix structure over the input equation, with X markers, used to answer
/// "how many consecutive words match" in O(1). Word numbering is the input
/// numbering carried by ExplicitWord::orig_index.
struct JumpIndex {
  StringIndex index;
  std::vector<int32_t> pref_x;  // X markers strictly before each position
  std::vector<std::vector<int64_t>> word_pos;  // [side][orig word idx] -> text pos
};

JumpIndex build_jump_index(const ParsedEquation& input);

/// Smallest k >= 1 such that the words k steps after (side_i, i) and
/// (side_j, j) differ, or one of them is the last or almost-last word of the
/// equation. Requires equal starting words.
int64_t aligned_jump(const JumpIndex& jump, const EqSystem& sys, uint32_t eq,
                     uint8_t side_i, uint32_t i, uint8_t side_j, uint32_t j);

struct PeriodContext {
  uint64_t a = 0, b = 0;  // |A_i|, |B_j|
  uint64_t x = 0;         // |S(X)|
  uint64_t p = 0;         // gcd(a+x, b+x)
  uint64_t k_A = 1, k_B = 1;
};

/// Classification context: the word whose letter is being tested, the word
/// following the engaged X on the other side, and their successors.
struct ClassifyContext {
  const ExplicitWord* A_i = nullptr;
  const ExplicitWord* A_next = nullptr;
  const ExplicitWord* B_j = nullptr;
  const ExplicitWord* B_next = nullptr;
  bool a_next_is_last = false;  // A_{i+1} is last/almost-last or absent
  bool b_next_is_last = false;
  bool first_letters_facing = false;
  bool mismatch_in_lookahead = false;  // bounded scan result, supplied by caller
  int n_short = 100;
};

TestType classify_test(const ClassifyContext& ctx);

/// Outcome of a periodical stretch comparison: either a mismatch exists in the
/// common part, or `advanced` positions are known equal.
struct PeriodicOutcome {
  bool mismatch = false;
  uint64_t advanced = 0;
};

/// Compares (a_word . a^x)^k_a starting at off_p against (a^x . b_word)^k_b
/// starting at off_q. Equal-length words repeat the same tests; otherwise
/// either the shorter power fits within three repeats of the longer (bounded
/// scan) or both stretches must have period gcd(|a_word|+x, |b_word|+x).
PeriodicOutcome periodic_skip(std::span<const Sym> a_word, std::span<const Sym> b_word,
                              Sym a, uint64_t x, uint64_t off_p, uint64_t off_q,
                              uint64_t k_a, uint64_t k_b, Counters* cnt);

/// Per-phase caches and the immutable jump structure.
struct LinearState {
  JumpIndex jump;
  int n_short = 100;
  int overdue_delay = 32;   // <0 disables the misaligned early exit
  // run_len[eq][side][wi]: consecutive words with equal content starting at wi
  std::vector<std::array<std::vector<int32_t>, 2>> run_len;
};

/// Recomputes short ids and run lengths; call at phase start and after splits.
void refresh_linear_caches(LinearState& lin, EqSystem& sys);

/// Classified substitution test: verdict equals test_substitution(a, ell, sys).
/// X-against-X spans are skipped by run arithmetic, aligned stretches jump via
/// the suffix structure, periodical stretches use the gcd period, and stale
/// misaligned contexts abort (the candidate would have been reported already).
bool fast_test_substitution(Sym a, uint64_t ell, const EqSystem& sys,
                            const LinearState& lin, int phase, Counters* cnt);

}  // namespace wordeq
