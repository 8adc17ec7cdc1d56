#pragma once

#include <cstdint>

namespace wordeq {

// Symbol id in the current equation. Dense after each renumbering so that
// radix sorting stays linear.
using Sym = int32_t;

// Stable id in the expansion grammar; never renumbered.
using GramId = int32_t;

// Length measured in original-alphabet letters.
using Weight = uint64_t;

// Placeholder left in a word by an in-place pair replacement; compacted away
// before the next operation reads the word.
inline constexpr Sym kTombstone = -2;

// The variable in token streams.
inline constexpr Sym kVar = -1;

struct Counters {
  uint64_t comparisons = 0;
  uint64_t substitution_tests = 0;
  uint64_t protected_tests = 0;
  uint64_t failed_tests = 0;
  uint64_t aligned_tests = 0;
  uint64_t misaligned_tests = 0;
  uint64_t periodical_tests = 0;
  uint64_t misaligned_aborts = 0;
};

}  // namespace wordeq
