#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordeq/bench.hpp"
#include "wordeq/generate.hpp"
#include "wordeq/solver.hpp"
#include "wordeq/text.hpp"

namespace {

int worst(int a, int b) { return std::max(a, b); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-variable word equation solver"};

  std::string engine_name = "linear";
  app.add_option("--engine", engine_name, "baseline|linear")->default_str("linear");
  uint64_t oracle_b = 0;
  app.add_option("--oracle-check", oracle_b, "cross-check against brute force up to length B");
  bool json = false;
  app.add_flag("--json", json, "emit one JSON document per equation");
  uint64_t expand_limit = 10000;
  app.add_option("--expand-limit", expand_limit, "longest solution expanded to a string");
  int n_short = 100;
  app.add_option("--short-threshold", n_short, "short-word threshold N")->check(CLI::Range(2, 1 << 20));
  int overdue_delay = 32;
  app.add_option("--overdue-delay", overdue_delay, "phases before an overdue word is removed");
  bool paranoid = false;
  app.add_flag("--paranoid", paranoid, "disable overdue removal and early test exits");
  bool stats = false;
  app.add_flag("--stats", stats, "include phase and comparison counters");
  uint64_t seed = 1;
  app.add_option("--seed", seed, "generator seed");
  std::vector<uint64_t> gen_args;
  app.add_option("--gen", gen_args, "generate a random equation: SIZE ALPHABET")->expected(2);
  bool plant = false;
  app.add_flag("--plant", plant, "plant a solution into the generated equation");
  std::string bench_family;
  app.add_option("--bench", bench_family, "benchmark family: power|dense-x|planted-long");
  std::vector<size_t> bench_sizes = {1 << 14, 1 << 15, 1 << 16, 1 << 17, 1 << 18};
  app.add_option("--sizes", bench_sizes, "benchmark sizes");
  int reps = 5;
  app.add_option("--reps", reps, "benchmark repetitions per size");
  std::vector<std::string> files;
  app.add_option("files", files, "equation files (default: stdin)");

  CLI11_PARSE(app, argc, argv);

  if (!gen_args.empty()) {
    wordeq::ParsedEquation eq =
        wordeq::gen_random(seed, gen_args[0], static_cast<int>(gen_args[1]), plant);
    std::cout << wordeq::pretty_print(eq) << "\n";
    return 0;
  }

  if (!bench_family.empty()) {
    auto family = wordeq::parse_family(bench_family);
    if (!family) {
      std::cerr << "unknown family: " << bench_family << "\n";
      return 1;
    }
    auto rows = wordeq::run_bench(*family, bench_sizes, reps);
    std::cout << wordeq::bench_table(*family, rows);
    return 0;
  }

  wordeq::SolverOptions opt;
  opt.engine = engine_name == "baseline" ? wordeq::Engine::Baseline : wordeq::Engine::Linear;
  if (engine_name != "baseline" && engine_name != "linear") {
    std::cerr << "unknown engine: " << engine_name << "\n";
    return 1;
  }
  opt.n_short = n_short;
  opt.overdue_delay = overdue_delay;
  opt.paranoid = paranoid;
  opt.max_expand = expand_limit;
  opt.collect_stats = stats;

  auto process = [&](std::istream& in) {
    int code = 0;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      bool blank = true;
      for (char c : line)
        if (!isspace(static_cast<unsigned char>(c)) && c != '#') {
          blank = false;
          break;
        }
      if (blank) continue;
      wordeq::ParseResult parsed = wordeq::parse_equation(line);
      if (!parsed.eq) {
        for (const auto& d : parsed.diagnostics)
          std::cerr << "line " << lineno << ": " << d << "\n";
        code = worst(code, 1);
        continue;
      }
      wordeq::SolveResult res = wordeq::solve(*parsed.eq, opt);
      std::string src = wordeq::pretty_print(*parsed.eq);
      if (json)
        std::cout << wordeq::result_to_json(src, res, stats) << "\n";
      else
        std::cout << wordeq::result_to_text(src, res, stats);
      if (!res.stats.violations.empty()) {
        for (const auto& v : res.stats.violations)
          std::cerr << "line " << lineno << ": invariant violation: " << v << "\n";
        code = worst(code, 2);
      }
      if (oracle_b > 0) {
        if (auto mismatch = wordeq::compare_with_oracle(*parsed.eq, res.set, oracle_b)) {
          std::cerr << "line " << lineno << ": oracle mismatch: " << *mismatch << "\n";
          code = worst(code, 3);
        }
      }
    }
    return code;
  };

  int code = 0;
  if (files.empty()) {
    code = process(std::cin);
  } else {
    for (const auto& f : files) {
      std::ifstream in(f);
      if (!in) {
        std::cerr << "cannot open " << f << "\n";
        code = worst(code, 1);
        continue;
      }
      code = worst(code, process(in));
    }
  }
  return code;
}
