#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgp/grid_map.h"
#include "mgp/mission.h"
#include "mgp/pipeline.h"

namespace mgp {

struct BenchOptions {
  std::vector<SelectionMethod> methods{SelectionMethod::Idp};
  std::size_t trials{10};
  std::uint64_t seed{0};
  // One row group per checker config; the default compares nothing.
  std::vector<CheckerConfig> checker_configs{};
  bool parallel_trials{false};
  MissionConfig base;  // method and checker fields are overridden per run
};

struct BenchTrial {
  std::string method;
  double t_low{0.0};
  double t_high{0.0};
  std::uint64_t seed{0};
  bool failed{false};
  std::string error;
  double wall_time_s{0.0};
  double total_cost{0.0};
  std::size_t paths_planned{0};
  std::size_t cost_matrix_paths{0};
  std::uint64_t tsdf_queries{0};
  std::uint64_t traversability_queries{0};
  std::size_t idp_iterations{0};
};

struct BenchAggregate {
  std::string method;
  double t_low{0.0};
  double t_high{0.0};
  std::size_t trials_ok{0};
  std::size_t trials_failed{0};
  double time_mean{0.0}, time_std{0.0};
  double cost_mean{0.0}, cost_std{0.0};
  double paths_planned_mean{0.0};
  double tsdf_queries_mean{0.0};
  double traversability_queries_mean{0.0};
};

struct BenchReport {
  std::vector<BenchTrial> trials;
  std::vector<BenchAggregate> aggregates;
};

// Runs every (method, checker config) combination `trials` times with seeds
// seed .. seed+trials-1, each trial on its own fresh roadmap. Failed trials
// are recorded and skipped in the aggregates.
BenchReport run_benchmark(const MapBundle& map, const Mission& mission,
                          const BenchOptions& options);

std::string bench_report_to_json(const BenchReport& report);
std::string bench_report_to_table(const BenchReport& report);

const char* method_name(SelectionMethod method);
SelectionMethod method_from_name(const std::string& name);

}  // namespace mgp
