#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wordeq {

/// Suffix array + LCP + sparse-table RMQ over a fixed symbol sequence.
/// Immutable after construction; queries are O(1) and thread-safe.
struct StringIndex {
  std::vector<int32_t> text;
  std::vector<int32_t> sa;    // suffixes in increasing lexicographic order
  std::vector<int32_t> rank;  // rank[sa[i]] == i
  std::vector<int32_t> lcp;   // lcp[i] = |lcp(suffix sa[i], suffix sa[i+1])|

  /// Longest common prefix of the suffixes starting at i and j.
  int32_t lcp_query(int32_t i, int32_t j) const;

  size_t size() const { return text.size(); }

 private:
  friend StringIndex build_index(std::span<const int32_t> text);
  std::vector<int32_t> sparse_;  // row-major sparse table of lcp minima
  size_t rows_ = 0;
  int32_t range_min(int32_t lo, int32_t hi) const;  // min of lcp[lo..hi], inclusive
};

/// O(n log n) doubling construction plus Kasai LCP. Throws on empty text.
StringIndex build_index(std::span<const int32_t> text);

/// Suffix array by direct comparison sort; test oracle.
std::vector<int32_t> sa_naive(std::span<const int32_t> text);

}  // namespace wordeq
