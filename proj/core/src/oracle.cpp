#include "wordeq/oracle.hpp"

#include <algorithm>

namespace wordeq {

namespace {

std::vector<int32_t> substitute(const std::vector<int32_t>& side, const std::vector<int32_t>& s) {
  std::vector<int32_t> out;
  for (int32_t t : side) {
    if (t == kVar)
      out.insert(out.end(), s.begin(), s.end());
    else
      out.push_back(t);
  }
  return out;
}

struct Trimmed {
  enum class Kind { Ok, NoSolution, Universal, UniqueExplicit };
  Kind kind = Kind::Ok;
  std::vector<int32_t> lhs, rhs;
  std::vector<int32_t> unique_word;
};

bool has_var(const std::vector<int32_t>& v) {
  return std::find(v.begin(), v.end(), kVar) != v.end();
}

Trimmed trim(const ParsedEquation& eq) {
  Trimmed t;
  t.lhs = eq.lhs;
  t.rhs = eq.rhs;
  auto& L = t.lhs;
  auto& R = t.rhs;
  size_t lo = 0;
  while (lo < L.size() && lo < R.size() && L[lo] == R[lo]) ++lo;
  L.erase(L.begin(), L.begin() + static_cast<ptrdiff_t>(lo));
  R.erase(R.begin(), R.begin() + static_cast<ptrdiff_t>(lo));
  while (!L.empty() && !R.empty() && L.back() == R.back()) {
    L.pop_back();
    R.pop_back();
  }
  if (L.empty() && R.empty()) {
    t.kind = Trimmed::Kind::Universal;
    return t;
  }
  if (L.empty() || R.empty()) {
    t.kind = Trimmed::Kind::NoSolution;  // epsilon is reported separately
    return t;
  }
  if (L.front() != kVar && R.front() != kVar) {
    t.kind = Trimmed::Kind::NoSolution;
    return t;
  }
  if (L.back() != kVar && R.back() != kVar) {
    t.kind = Trimmed::Kind::NoSolution;
    return t;
  }
  if (L.size() == 1 && L[0] == kVar && !has_var(R)) {
    t.kind = Trimmed::Kind::UniqueExplicit;
    t.unique_word = R;
    return t;
  }
  if (R.size() == 1 && R[0] == kVar && !has_var(L)) {
    t.kind = Trimmed::Kind::UniqueExplicit;
    t.unique_word = L;
    return t;
  }
  return t;
}

std::vector<int32_t> first_letter_word(const std::vector<int32_t>& lhs,
                                       const std::vector<int32_t>& rhs) {
  // A0 of the letter-starting side
  const auto& side = (lhs.front() != kVar) ? lhs : rhs;
  std::vector<int32_t> a0;
  for (int32_t tkn : side) {
    if (tkn == kVar) break;
    a0.push_back(tkn);
  }
  return a0;
}

}  // namespace

std::vector<int32_t> candidate_for_length(const std::vector<int32_t>& a0, uint64_t len) {
  std::vector<int32_t> out;
  out.reserve(static_cast<size_t>(len));
  for (uint64_t i = 0; i < len; ++i)
    out.push_back(a0[static_cast<size_t>(i % a0.size())]);
  return out;
}

bool oracle_substitution_holds(const ParsedEquation& eq, const std::vector<int32_t>& s) {
  return substitute(eq.lhs, s) == substitute(eq.rhs, s);
}

OracleResult oracle_solve(const ParsedEquation& eq, uint64_t B, uint64_t budget) {
  OracleResult res;
  res.truncated_at = B;
  uint64_t sz = eq.lhs.size() + eq.rhs.size();
  if (sz * (B + 1) > budget) throw std::invalid_argument("oracle budget exceeded");

  res.epsilon = oracle_substitution_holds(eq, {});

  Trimmed t = trim(eq);
  switch (t.kind) {
    case Trimmed::Kind::NoSolution:
      return res;
    case Trimmed::Kind::Universal:
      res.universal = true;
      return res;
    case Trimmed::Kind::UniqueExplicit: {
      uint64_t len = t.unique_word.size();
      if (len >= 1 && len <= B && oracle_substitution_holds(eq, t.unique_word)) {
        res.lengths.push_back(len);
        res.strings.push_back(t.unique_word);
      }
      return res;
    }
    case Trimmed::Kind::Ok:
      break;
  }

  std::vector<int32_t> a0 = first_letter_word(t.lhs, t.rhs);
  for (uint64_t len = 1; len <= B; ++len) {
    std::vector<int32_t> cand = candidate_for_length(a0, len);
    if (oracle_substitution_holds(eq, cand)) {
      res.lengths.push_back(len);
      res.strings.push_back(std::move(cand));
    }
  }
  return res;
}

}  // namespace wordeq
