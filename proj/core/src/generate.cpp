#include "wordeq/generate.hpp"

#include <algorithm>
#include <random>

namespace wordeq {

namespace {

// engine output used directly so the sequence is identical everywhere
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  uint64_t next(uint64_t bound) { return eng() % bound; }
};

int32_t letter(Rng& rng, int alphabet) {
  return static_cast<int32_t>(U'a' + rng.next(static_cast<uint64_t>(alphabet)));
}

std::vector<int32_t> substitute_all(const std::vector<int32_t>& side,
                                    const std::vector<int32_t>& s) {
  std::vector<int32_t> out;
  for (int32_t t : side) {
    if (t == kVar)
      out.insert(out.end(), s.begin(), s.end());
    else
      out.push_back(t);
  }
  return out;
}

ParsedEquation gen_planted(Rng& rng, size_t size, int alphabet) {
  size_t slen = 1 + rng.next(std::max<size_t>(size / 6, 1));
  std::vector<int32_t> sol(slen);
  for (auto& c : sol) c = letter(rng, alphabet);

  size_t m = std::max<size_t>(size / 2, 4);
  std::vector<int32_t> lhs;
  lhs.reserve(m);
  for (size_t i = 0; i < m; ++i)
    lhs.push_back(rng.next(6) == 0 ? kVar : letter(rng, alphabet));
  if (std::find(lhs.begin(), lhs.end(), kVar) == lhs.end())
    lhs[rng.next(lhs.size())] = kVar;

  std::vector<int32_t> full = substitute_all(lhs, sol);
  std::vector<int32_t> rhs;
  rhs.reserve(full.size());
  for (size_t p = 0; p < full.size();) {
    bool occ = p + slen <= full.size() &&
               std::equal(sol.begin(), sol.end(), full.begin() + static_cast<ptrdiff_t>(p));
    if (occ && rng.next(2) == 0) {
      rhs.push_back(kVar);
      p += slen;
    } else {
      rhs.push_back(full[p]);
      p += 1;
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

ParsedEquation gen_free(Rng& rng, size_t size, int alphabet) {
  auto draw_side = [&](size_t m) {
    std::vector<int32_t> side;
    side.reserve(m + 1);
    for (size_t i = 0; i < m; ++i)
      side.push_back(rng.next(5) == 0 ? kVar : letter(rng, alphabet));
    return side;
  };
  size_t half = std::max<size_t>(size / 2, 2);
  std::vector<int32_t> lhs = draw_side(half);
  std::vector<int32_t> rhs = draw_side(size - half);

  auto xs = [](const std::vector<int32_t>& v) {
    return std::count(v.begin(), v.end(), kVar);
  };
  if (xs(lhs) + xs(rhs) == 0) lhs[rng.next(lhs.size())] = kVar;

  // adjust letter counts so that some solution length L >= 0 satisfies
  // letters(lhs) + xs(lhs) * L == letters(rhs) + xs(rhs) * L
  int64_t xl = xs(lhs), xr = xs(rhs);
  int64_t ll = static_cast<int64_t>(lhs.size()) - xl;
  int64_t lr = static_cast<int64_t>(rhs.size()) - xr;
  int64_t want_diff;  // target lr - ll
  if (xl == xr) {
    want_diff = 0;
  } else {
    int64_t l0 = static_cast<int64_t>(rng.next(std::max<size_t>(size / 3, 2)));
    want_diff = (xl - xr) * l0;
  }
  while (lr - ll < want_diff) {
    rhs.push_back(letter(rng, alphabet));
    ++lr;
  }
  while (lr - ll > want_diff) {
    lhs.push_back(letter(rng, alphabet));
    ++ll;
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace

ParsedEquation gen_random(uint64_t seed, size_t size, int alphabet, bool plant) {
  if (size < 4) size = 4;
  if (alphabet < 1) alphabet = 1;
  Rng rng(seed * 0x9E3779B97F4A7C15ull + (plant ? 1 : 0));
  return plant ? gen_planted(rng, size, alphabet) : gen_free(rng, size, alphabet);
}

}  // namespace wordeq
