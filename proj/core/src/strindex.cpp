#include "wordeq/strindex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace wordeq {

StringIndex build_index(std::span<const int32_t> text) {
  if (text.empty()) throw std::invalid_argument("empty text");
  StringIndex idx;
  idx.text.assign(text.begin(), text.end());
  const size_t n = text.size();

  idx.sa.resize(n);
  std::iota(idx.sa.begin(), idx.sa.end(), 0);
  std::vector<int32_t> key(n), tmp(n);
  for (size_t i = 0; i < n; ++i) key[i] = text[i];
  for (size_t k = 1;; k *= 2) {
    auto less = [&](int32_t a, int32_t b) {
      if (key[static_cast<size_t>(a)] != key[static_cast<size_t>(b)])
        return key[static_cast<size_t>(a)] < key[static_cast<size_t>(b)];
      int32_t ka = static_cast<size_t>(a) + k < n ? key[static_cast<size_t>(a) + k] : -1;
      int32_t kb = static_cast<size_t>(b) + k < n ? key[static_cast<size_t>(b) + k] : -1;
      return ka < kb;
    };
    std::sort(idx.sa.begin(), idx.sa.end(), less);
    tmp[static_cast<size_t>(idx.sa[0])] = 0;
    for (size_t i = 1; i < n; ++i)
      tmp[static_cast<size_t>(idx.sa[i])] =
          tmp[static_cast<size_t>(idx.sa[i - 1])] + (less(idx.sa[i - 1], idx.sa[i]) ? 1 : 0);
    key = tmp;
    if (key[static_cast<size_t>(idx.sa[n - 1])] == static_cast<int32_t>(n - 1)) break;
  }

  idx.rank.resize(n);
  for (size_t i = 0; i < n; ++i) idx.rank[static_cast<size_t>(idx.sa[i])] = static_cast<int32_t>(i);

  // Kasai
  if (n > 1) {
    idx.lcp.assign(n - 1, 0);
    size_t h = 0;
    for (size_t i = 0; i < n; ++i) {
      int32_t r = idx.rank[i];
      if (r + 1 < static_cast<int32_t>(n)) {
        size_t j = static_cast<size_t>(idx.sa[static_cast<size_t>(r) + 1]);
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        idx.lcp[static_cast<size_t>(r)] = static_cast<int32_t>(h);
        if (h) --h;
      } else {
        h = 0;
      }
    }
    // sparse table over lcp
    const size_t m = idx.lcp.size();
    idx.rows_ = static_cast<size_t>(std::bit_width(m)) ;
    idx.sparse_.resize(idx.rows_ * m);
    for (size_t i = 0; i < m; ++i) idx.sparse_[i] = idx.lcp[i];
    for (size_t r = 1; r < idx.rows_; ++r) {
      size_t span = size_t{1} << r;
      for (size_t i = 0; i + span <= m; ++i)
        idx.sparse_[r * m + i] =
            std::min(idx.sparse_[(r - 1) * m + i], idx.sparse_[(r - 1) * m + i + span / 2]);
    }
  }
  return idx;
}

int32_t StringIndex::range_min(int32_t lo, int32_t hi) const {
  const size_t m = lcp.size();
  size_t len = static_cast<size_t>(hi - lo + 1);
  size_t r = static_cast<size_t>(std::bit_width(len)) - 1;
  return std::min(sparse_[r * m + static_cast<size_t>(lo)],
                  sparse_[r * m + static_cast<size_t>(hi) + 1 - (size_t{1} << r)]);
}

int32_t StringIndex::lcp_query(int32_t i, int32_t j) const {
  const auto n = static_cast<int32_t>(text.size());
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("lcp_query position");
  if (i == j) return n - i;
  int32_t ri = rank[static_cast<size_t>(i)], rj = rank[static_cast<size_t>(j)];
  if (ri > rj) std::swap(ri, rj);
  return range_min(ri, rj - 1);
}

std::vector<int32_t> sa_naive(std::span<const int32_t> text) {
  if (text.empty()) throw std::invalid_argument("empty text");
  std::vector<int32_t> sa(text.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](int32_t a, int32_t b) {
    return std::lexicographical_compare(text.begin() + a, text.end(), text.begin() + b, text.end());
  });
  return sa;
}

}  // namespace wordeq
