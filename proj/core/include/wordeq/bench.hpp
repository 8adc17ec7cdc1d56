#pragma once

#include <string>
#include <vector>

#include "wordeq/oracle.hpp"
#include "wordeq/solver.hpp"

namespace wordeq {

enum class BenchFamily { Power, DenseX, PlantedLong };

/// power: X a^m = a^m X. dense-x: long first/last words around many X w units
/// with one shared short word, planted. planted-long: few variables, long
/// words, planted.
ParsedEquation make_family_instance(BenchFamily family, size_t size, uint64_t seed);

struct BenchRow {
  size_t size = 0;
  double baseline_ms = 0, linear_ms = 0;       // medians
  uint64_t baseline_comparisons = 0, linear_comparisons = 0;
  int baseline_phases = 0, linear_phases = 0;
};

BenchRow bench_one(BenchFamily family, size_t size, int reps);
std::vector<BenchRow> run_bench(BenchFamily family, const std::vector<size_t>& sizes, int reps);

std::optional<BenchFamily> parse_family(const std::string& name);
std::string bench_table(BenchFamily family, const std::vector<BenchRow>& rows);

}  // namespace wordeq
