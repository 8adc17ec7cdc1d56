#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordeq/oracle.hpp"
#include "wordeq/solver.hpp"

namespace wordeq {

/// One equation per line, `LHS = RHS`. `X` is the variable, every other
/// non-whitespace codepoint is a letter, `#` starts a comment.
struct ParseResult {
  std::optional<ParsedEquation> eq;
  std::vector<std::string> diagnostics;  // empty on success
  bool ground = false;       // no variable anywhere
  bool ground_equal = false; // the direct-equality verdict for ground lines
};

ParseResult parse_equation(const std::string& line);

/// Normalized source: letters with no whitespace, one " = " separator.
std::string pretty_print(const ParsedEquation& eq);

std::u32string utf8_decode(const std::string& s);
std::string utf8_encode(const std::u32string& s);

std::string result_to_json(const std::string& source, const SolveResult& r, bool with_stats);
std::string result_to_text(const std::string& source, const SolveResult& r, bool with_stats);

}  // namespace wordeq
