#pragma once

#include <cstdint>

#include "wordeq/oracle.hpp"

namespace wordeq {

/// Deterministic random instance. With `plant`, a solution string S is drawn,
/// one side is materialized under X := S and non-overlapping occurrences of S
/// are carved back out of the copy, so S solves the result by construction.
/// Without it, the sides are independent with letter counts adjusted so some
/// solution length is arithmetically possible.
ParsedEquation gen_random(uint64_t seed, size_t size, int alphabet, bool plant);

}  // namespace wordeq
