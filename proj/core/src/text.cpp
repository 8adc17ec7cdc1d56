#include "wordeq/text.hpp"

#include <nlohmann/json.hpp>

namespace wordeq {

std::u32string utf8_decode(const std::string& s) {
  std::u32string out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    size_t extra = 0;
    if (c < 0x80) {
      cp = c;
    } else if ((c >> 5) == 0x6) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c >> 4) == 0xE) {
      cp = c & 0x0F;
      extra = 2;
    } else if ((c >> 3) == 0x1E) {
      cp = c & 0x07;
      extra = 3;
    } else {
      throw std::invalid_argument("invalid UTF-8 at byte " + std::to_string(i));
    }
    if (i + extra >= s.size()) throw std::invalid_argument("truncated UTF-8 sequence");
    for (size_t k = 1; k <= extra; ++k) {
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc >> 6) != 0x2) throw std::invalid_argument("invalid UTF-8 continuation");
      cp = (cp << 6) | (cc & 0x3F);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string utf8_encode(const std::u32string& s) {
  std::string out;
  for (char32_t cp : s) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

ParseResult parse_equation(const std::string& raw) {
  ParseResult res;
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);

  std::u32string text;
  try {
    text = utf8_decode(line);
  } catch (const std::invalid_argument& e) {
    res.diagnostics.push_back(e.what());
    return res;
  }

  size_t eq_pos = std::u32string::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != U'=') continue;
    if (eq_pos != std::u32string::npos) {
      res.diagnostics.push_back("more than one '=' (column " + std::to_string(i + 1) + ")");
      return res;
    }
    eq_pos = i;
  }
  if (eq_pos == std::u32string::npos) {
    res.diagnostics.push_back("missing '='");
    return res;
  }

  ParsedEquation eq;
  auto scan = [](std::u32string_view part, std::vector<int32_t>& out) {
    for (char32_t cp : part) {
      if (cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\n') continue;
      out.push_back(cp == U'X' ? kVar : static_cast<int32_t>(cp));
    }
  };
  scan(std::u32string_view(text).substr(0, eq_pos), eq.lhs);
  scan(std::u32string_view(text).substr(eq_pos + 1), eq.rhs);

  if (eq.lhs.empty()) res.diagnostics.push_back("empty left side (column 1)");
  if (eq.rhs.empty())
    res.diagnostics.push_back("empty right side (column " + std::to_string(eq_pos + 2) + ")");
  if (!res.diagnostics.empty()) return res;

  bool has_var = false;
  for (const auto* side : {&eq.lhs, &eq.rhs})
    for (int32_t t : *side)
      if (t == kVar) has_var = true;
  if (!has_var) {
    res.ground = true;
    res.ground_equal = eq.lhs == eq.rhs;
    res.diagnostics.push_back(std::string("no variable occurrence; sides are ") +
                              (res.ground_equal ? "equal" : "different"));
    return res;
  }
  res.eq = std::move(eq);
  return res;
}

std::string pretty_print(const ParsedEquation& eq) {
  std::u32string out;
  for (int32_t t : eq.lhs) out.push_back(t == kVar ? U'X' : static_cast<char32_t>(t));
  out += U" = ";
  for (int32_t t : eq.rhs) out.push_back(t == kVar ? U'X' : static_cast<char32_t>(t));
  return utf8_encode(out);
}

namespace {

using Json = nlohmann::ordered_json;

Json set_to_json(const SolutionSet& set) {
  Json j;
  j["epsilon"] = set.epsilon;
  j["universal"] = set.universal;
  Json finite = Json::array();
  for (const auto& f : set.finite) {
    Json e;
    e["length"] = f.length;
    if (f.text)
      e["string"] = utf8_encode(*f.text);
    else
      e["truncated"] = true;
    finite.push_back(std::move(e));
  }
  j["finite"] = std::move(finite);
  if (set.family) {
    Json fam;
    fam["prefix_length"] = set.family->prefix_len;
    fam["period_length"] = set.family->period_len;
    fam["suffix_length"] = set.family->suffix_len;
    if (set.family->period) {
      fam["prefix"] = utf8_encode(*set.family->prefix);
      fam["period"] = utf8_encode(*set.family->period);
      fam["suffix"] = utf8_encode(*set.family->suffix);
    } else {
      fam["truncated"] = true;
    }
    j["family"] = std::move(fam);
  } else {
    j["family"] = nullptr;
  }
  return j;
}

Json stats_to_json(const RunStats& s) {
  Json j;
  j["input_size"] = s.input_size;
  j["phases"] = s.phases;
  j["short_tail_switch_phase"] = s.short_tail_switch_phase;
  j["comparisons"] = s.counters.comparisons;
  j["substitution_tests"] = s.counters.substitution_tests;
  j["tests"] = {{"protected", s.counters.protected_tests},
                {"failed", s.counters.failed_tests},
                {"aligned", s.counters.aligned_tests},
                {"misaligned", s.counters.misaligned_tests},
                {"periodical", s.counters.periodical_tests},
                {"misaligned_aborts", s.counters.misaligned_aborts}};
  j["violations"] = s.violations;
  j["findings"] = s.findings;
  j["wall_ms"] = s.wall_ms;
  return j;
}

}  // namespace

std::string result_to_json(const std::string& source, const SolveResult& r, bool with_stats) {
  Json j;
  j["equation"] = source;
  Json body = set_to_json(r.set);
  for (auto& [k, v] : body.items()) j[k] = v;
  if (with_stats) j["stats"] = stats_to_json(r.stats);
  return j.dump();
}

std::string result_to_text(const std::string& source, const SolveResult& r, bool with_stats) {
  std::string out = source + "\n";
  const SolutionSet& s = r.set;
  if (s.universal) {
    out += "  universal: every substitution is a solution\n";
    return out;
  }
  out += std::string("  epsilon: ") + (s.epsilon ? "yes" : "no") + "\n";
  if (s.finite.empty() && !s.family && !s.epsilon) {
    out += "  no solutions\n";
  }
  for (const auto& f : s.finite) {
    out += "  solution length " + std::to_string(f.length);
    if (f.text)
      out += ": \"" + utf8_encode(*f.text) + "\"";
    else
      out += " (truncated)";
    out += "\n";
  }
  if (s.family) {
    const auto& fam = *s.family;
    out += "  family: ";
    if (fam.period)
      out += "\"" + utf8_encode(*fam.prefix) + "\" (\"" + utf8_encode(*fam.period) +
             "\")^l \"" + utf8_encode(*fam.suffix) + "\", l >= 1\n";
    else
      out += "prefix length " + std::to_string(fam.prefix_len) + ", period length " +
             std::to_string(fam.period_len) + ", suffix length " +
             std::to_string(fam.suffix_len) + " (truncated), l >= 1\n";
  }
  if (with_stats) {
    out += "  phases: " + std::to_string(r.stats.phases) +
           ", comparisons: " + std::to_string(r.stats.counters.comparisons) +
           ", wall: " + std::to_string(r.stats.wall_ms) + " ms\n";
    if (!r.stats.violations.empty())
      out += "  violations: " + std::to_string(r.stats.violations.size()) + "\n";
  }
  return out;
}

}  // namespace wordeq
