#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wordeq/equation.hpp"
#include "wordeq/testing.hpp"

namespace wordeq {

struct PairOcc {
  Sym a, b;
  uint32_t eq;
  uint8_t side;  // 0 = lhs, 1 = rhs
  uint32_t word;
  uint32_t off;
};

/// Explicit pair occurrences, radix-sorted by (a, b).
struct PairOccList {
  std::vector<PairOcc> entries;
};

struct BlockOcc {
  Sym a;
  uint64_t len;  // maximal run length, >= 2
  uint32_t eq;
  uint8_t side;
  uint32_t word;
  uint32_t off;
};

/// Maximal-run occurrences, radix-sorted by (a, len).
struct BlockOccList {
  std::vector<BlockOcc> entries;
};

/// Every ordered pair to try compressing this phase: explicit adjacencies plus
/// the crossing candidates formed with the first/last letter of S(X).
std::vector<std::pair<Sym, Sym>> list_pairs(const EqSystem& sys);

/// The pairs with a crossing occurrence right now: (c, first) for any letter c
/// directly preceding an X, (last, d) for any d directly following an X, and
/// (last, first) when XX occurs. At most two once every X is flanked.
std::vector<std::pair<Sym, Sym>> crossing_pairs(const EqSystem& sys);

PairOccList gather_pairs(const EqSystem& sys, const std::vector<std::pair<Sym, Sym>>& pairs);
BlockOccList gather_blocks(const EqSystem& sys, const std::vector<bool>& letter_in_set);

/// Left-pops b when b is the first letter of S(X), right-pops a when a is the
/// last; each side is preceded by the single-letter solution test. Afterwards
/// the pair ab has no crossing occurrence.
SysState pop(Sym a, Sym b, EqSystem& sys, Reporter& rep, const TestFn& tester);

/// Replaces every explicit occurrence of ab by the memoized fresh letter.
/// Occurrences invalidated by earlier replacements are skipped.
void pair_comp_ncr(Sym a, Sym b, EqSystem& sys);

/// Compresses the occurrences in a pre-gathered, sorted list; used to run all
/// non-crossing compressions off one scan. Words still carry tombstones after
/// this; the caller compacts.
void compress_pair_list(const PairOccList& list, EqSystem& sys);

/// Replaces every maximal run a^len (len >= 2) by the memoized block letter.
void block_comp_ncr(Sym a, EqSystem& sys);

/// Reports the unique a+ (b+) candidates, then rewrites X to a^l X b^r with the
/// first word's a-prefix and the last word's b-suffix. Throws std::logic_error
/// when the first or last word is a single-letter block on entry; returns
/// ExitAStar when that degenerates mid-operation.
SysState cut_pref_suff(EqSystem& sys, Reporter& rep, const TestFn& tester);

/// cut_pref_suff followed by run compression for every letter present at entry.
SysState block_comp(EqSystem& sys, Reporter& rep, const TestFn& tester);

/// pop(last, first): afterwards every X is flanked and at most two crossing
/// pairs remain.
SysState preproc(EqSystem& sys, Reporter& rep, const TestFn& tester);

/// Uncrosses ab by popping, then compresses it.
SysState pair_comp(Sym a, Sym b, EqSystem& sys, Reporter& rep, const TestFn& tester);

}  // namespace wordeq
