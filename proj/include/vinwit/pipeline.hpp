#pragma once

// Report assembly for the command-line tool. Every command produces one JSON
// report: {"tool", "command", "config", "stages": [...], "status"}; each stage
// names the operation that produced its numbers in "op".

#include <cstdint>
#include <optional>
#include <string>

#include "vinwit/serialize.hpp"

namespace vinwit {

enum class StageStatus { pass, best_effort, skipped, inconclusive, fail };
const char* to_string(StageStatus s);

struct Budgets {
  std::size_t max_cosets = 1000000;
  std::size_t max_index = 16;
  std::size_t low_index_nodes = 20000000;
  std::size_t word_length = 8;
  std::uint64_t prime_bound = 1000;
  std::size_t density_words = 200000;
  std::size_t depth = 6;
  std::size_t samples = 200;
  std::size_t sample_length = 40;
  int kernel_radius = 1;
};

struct RunConfig {
  CoxeterDiagram diagram;
  CartanMatrix cartan;  // integer Vinberg-compatible matrix
  Budgets budgets;
  std::uint64_t seed = 1;
  std::optional<std::string> out_dir;
  bool timings = false;
};

/// The built-in inputs: the pentagon diagram and its integer Cartan matrix.
RunConfig default_config();
IntMatrix default_integer_cartan();

struct Report {
  Json json;
  StageStatus status = StageStatus::pass;
  /// 0 pass, 1 incomplete or inconclusive, 2 a check failed.
  int exit_code() const;
  /// One line per stage plus a few key numbers.
  std::string text() const;
};

Report diagram_analyze(const RunConfig& cfg);
Report lanner_enumerate(std::size_t rank, const RunConfig& cfg);
Report rep_build(const RunConfig& cfg);
Report rep_verify(const RunConfig& cfg);
/// which = "even" (products g_i g_j) or "generators".
Report density_certify(const RunConfig& cfg, const std::string& which);
Report subgroups_search(const RunConfig& cfg);
Report geometry_orbit(const RunConfig& cfg);
/// Writes limitset.csv and limitset.svg into cfg.out_dir when set.
Report geometry_limitset(const RunConfig& cfg);
Report witness_pipeline(const RunConfig& cfg);

}  // namespace vinwit
