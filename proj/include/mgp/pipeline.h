#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgp/cost.h"
#include "mgp/grid_map.h"
#include "mgp/mission.h"
#include "mgp/path.h"
#include "mgp/roadmap.h"
#include "mgp/selection.h"
#include "mgp/tsp.h"
#include "mgp/validity.h"

namespace mgp {

enum class SelectionMethod { Idp, Dp, Irba };
enum class TspMode { Auto, Exact, Heuristic };

struct MissionConfig {
  CostWeights weights;
  RobotFootprint footprint;
  CheckerConfig checker;
  QueryConfig query;
  SelectionMethod method{SelectionMethod::Idp};
  TspMode tsp{TspMode::Auto};

  // Share of the vertex budget spent on uniform coverage before the first
  // query; the rest is grown informed, per query.
  double uniform_growth_fraction{0.5};
};

struct PhaseTimes {
  double cost_matrix_s{0.0};
  double tsp_s{0.0};
  double selection_s{0.0};
  double stitch_s{0.0};
  double total_s{0.0};
};

struct PlanReport {
  std::size_t paths_planned{0};       // selection-phase plans
  std::size_t cost_matrix_paths{0};   // sequencing-phase plans
  std::uint64_t tsdf_queries{0};
  std::uint64_t traversability_queries{0};
  std::size_t idp_iterations{0};
  std::size_t roadmap_vertices{0};
  std::size_t roadmap_edges{0};
  std::size_t alignment_reverted_stages{0};
  PhaseTimes wall_times;
};

// Full mission answer: visit order, PoI choices, and the closed waypoint
// path (first == last == start). total_cost is the certified cost of the
// planned chain; segment_costs are its per-stage components.
struct Plan {
  std::vector<std::string> sequence;
  std::vector<std::size_t> chosen_pois;
  Path waypoints;
  std::vector<double> segment_costs;
  double total_cost{0.0};
  bool closed{true};
  PlanReport stats;
};

// Whole pipeline: validate -> cost matrix -> visit sequence -> PoI selection
// -> stitch -> align headings (PoIs and start stay fixed) -> re-validate.
// Throws InputError for bad missions, PlanningError for unreachable ones.
Plan run_mission(const MapBundle& map, const Mission& mission, const MissionConfig& config);

Plan load_plan(const std::string& path);
void save_plan(const Plan& plan, const std::string& path);

}  // namespace mgp
