#include "wordeq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace wordeq {

namespace {

std::vector<int32_t> random_letters(std::mt19937_64& rng, size_t n, int alphabet) {
  std::vector<int32_t> out(n);
  for (auto& c : out) c = static_cast<int32_t>(U'a' + rng() % static_cast<uint64_t>(alphabet));
  return out;
}

ParsedEquation make_power(size_t size) {
  size_t m = std::max<size_t>(size / 2, 2) - 1;
  ParsedEquation eq;
  eq.lhs.push_back(kVar);
  eq.lhs.insert(eq.lhs.end(), m, 'a');
  eq.rhs.insert(eq.rhs.end(), m, 'a');
  eq.rhs.push_back(kVar);
  return eq;
}

// template: LONG X (w X)^k LONG', planted with a random solution
ParsedEquation make_dense_x(size_t size, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xD1CEF00DULL);
  const int alphabet = 3;
  size_t long_len = std::max<size_t>(size / 4, 8);
  size_t units = std::max<size_t>(size / 8, 2);

  std::vector<int32_t> sol = random_letters(rng, 1 + rng() % 4, alphabet);
  std::vector<int32_t> w = {'a', 'b'};

  std::vector<int32_t> lhs = random_letters(rng, long_len, alphabet);
  // keep the shared short word a substring of the first long word
  lhs[long_len / 2] = 'a';
  lhs[long_len / 2 + 1] = 'b';
  lhs.push_back(kVar);
  for (size_t u = 0; u < units; ++u) {
    lhs.insert(lhs.end(), w.begin(), w.end());
    lhs.push_back(kVar);
  }
  auto tail = random_letters(rng, long_len, alphabet);
  lhs.insert(lhs.end(), tail.begin(), tail.end());

  std::vector<int32_t> full;
  for (int32_t t : lhs) {
    if (t == kVar)
      full.insert(full.end(), sol.begin(), sol.end());
    else
      full.push_back(t);
  }
  std::vector<int32_t> rhs;
  rhs.reserve(full.size());
  size_t guard = sol.size() + 2;  // keep the carved copy's ends long
  for (size_t p = 0; p < full.size();) {
    bool occ = p > guard && p + sol.size() + guard < full.size() &&
               std::equal(sol.begin(), sol.end(), full.begin() + static_cast<ptrdiff_t>(p));
    if (occ && rng() % 3 == 0) {
      rhs.push_back(kVar);
      p += sol.size();
    } else {
      rhs.push_back(full[p]);
      p += 1;
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

ParsedEquation make_planted_long(size_t size, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xBADA55ULL);
  const int alphabet = 3;
  size_t third = std::max<size_t>(size / 3, 8);
  std::vector<int32_t> sol = random_letters(rng, 2 + rng() % 6, alphabet);
  std::vector<int32_t> lhs = random_letters(rng, third, alphabet);
  lhs.push_back(kVar);
  auto mid = random_letters(rng, third, alphabet);
  lhs.insert(lhs.end(), mid.begin(), mid.end());
  lhs.push_back(kVar);
  auto tail = random_letters(rng, third, alphabet);
  lhs.insert(lhs.end(), tail.begin(), tail.end());

  std::vector<int32_t> full;
  for (int32_t t : lhs) {
    if (t == kVar)
      full.insert(full.end(), sol.begin(), sol.end());
    else
      full.push_back(t);
  }
  std::vector<int32_t> rhs;
  size_t guard = sol.size() + 2;
  size_t carved = 0;
  for (size_t p = 0; p < full.size();) {
    bool occ = carved < 3 && p > guard && p + sol.size() + guard < full.size() &&
               std::equal(sol.begin(), sol.end(), full.begin() + static_cast<ptrdiff_t>(p));
    if (occ && rng() % 2 == 0) {
      rhs.push_back(kVar);
      p += sol.size();
      ++carved;
    } else {
      rhs.push_back(full[p]);
      p += 1;
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

ParsedEquation make_family_instance(BenchFamily family, size_t size, uint64_t seed) {
  switch (family) {
    case BenchFamily::Power: return make_power(size);
    case BenchFamily::DenseX: return make_dense_x(size, seed);
    case BenchFamily::PlantedLong: return make_planted_long(size, seed);
  }
  return {};
}

BenchRow bench_one(BenchFamily family, size_t size, int reps) {
  BenchRow row;
  row.size = size;
  ParsedEquation eq = make_family_instance(family, size, 7);
  for (Engine engine : {Engine::Baseline, Engine::Linear}) {
    SolverOptions opt;
    opt.engine = engine;
    opt.collect_stats = false;
    opt.validate = false;
    std::vector<double> times;
    uint64_t comparisons = 0;
    int phases = 0;
    solve(eq, opt);  // warmup
    for (int r = 0; r < reps; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      SolveResult res = solve(eq, opt);
      auto t1 = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      comparisons = res.stats.counters.comparisons;
      phases = res.stats.phases;
    }
    if (engine == Engine::Baseline) {
      row.baseline_ms = median(times);
      row.baseline_comparisons = comparisons;
      row.baseline_phases = phases;
    } else {
      row.linear_ms = median(times);
      row.linear_comparisons = comparisons;
      row.linear_phases = phases;
    }
  }
  return row;
}

std::vector<BenchRow> run_bench(BenchFamily family, const std::vector<size_t>& sizes, int reps) {
  std::vector<BenchRow> rows;
  for (size_t s : sizes) rows.push_back(bench_one(family, s, reps));
  return rows;
}

std::optional<BenchFamily> parse_family(const std::string& name) {
  if (name == "power") return BenchFamily::Power;
  if (name == "dense-x" || name == "dense_x") return BenchFamily::DenseX;
  if (name == "planted-long" || name == "planted_long") return BenchFamily::PlantedLong;
  return std::nullopt;
}

std::string bench_table(BenchFamily family, const std::vector<BenchRow>& rows) {
  const char* name = family == BenchFamily::Power      ? "power"
                     : family == BenchFamily::DenseX   ? "dense-x"
                                                       : "planted-long";
  std::string out = "family " + std::string(name) + "\n";
  out += "size        base_ms   linear_ms     base_cmp   linear_cmp  base_ph  lin_ph\n";
  char buf[160];
  for (const auto& r : rows) {
    snprintf(buf, sizeof buf, "%-10zu %9.3f %11.3f %12llu %12llu %8d %7d\n", r.size,
             r.baseline_ms, r.linear_ms,
             static_cast<unsigned long long>(r.baseline_comparisons),
             static_cast<unsigned long long>(r.linear_comparisons), r.baseline_phases,
             r.linear_phases);
    out += buf;
  }
  return out;
}

}  // namespace wordeq
