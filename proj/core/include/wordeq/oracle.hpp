#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wordeq/types.hpp"

namespace wordeq {

/// Tokenized input equation: kVar marks the variable, any other value is a
/// letter (parse uses Unicode codepoints).
struct ParsedEquation {
  std::vector<int32_t> lhs, rhs;
};

/// Exhaustive reference result up to length bound B.
struct OracleResult {
  bool epsilon = false;
  bool universal = false;
  std::vector<uint64_t> lengths;            // sorted solution lengths in 1..B
  std::vector<std::vector<int32_t>> strings; // the corresponding solutions
  uint64_t truncated_at = 0;
};

/// The only possible solution of a given length: the prefix of A0^omega.
std::vector<int32_t> candidate_for_length(const std::vector<int32_t>& a0, uint64_t len);

/// Brute-force solve by trying every length in 1..B. Kept independent of the
/// solver: its own trimming and its own substitute-and-compare.
/// Throws std::invalid_argument when |equation| * B exceeds `budget`.
OracleResult oracle_solve(const ParsedEquation& eq, uint64_t B,
                          uint64_t budget = uint64_t{1} << 34);

/// Direct substitute-and-compare used by the oracle and by property tests.
bool oracle_substitution_holds(const ParsedEquation& eq, const std::vector<int32_t>& s);

}  // namespace wordeq
