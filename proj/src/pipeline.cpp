#include "mgp/pipeline.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "mgp/errors.h"
#include "mgp/sequencing.h"

namespace mgp {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool near_same_state(const SE2State& a, const SE2State& b) {
  return xy_distance(a, b) <= 1e-9 && angle_diff(a.yaw, b.yaw) <= 1e-9;
}

Tour solve_sequence(const CostMatrix& matrix, TspMode mode) {
  switch (mode) {
    case TspMode::Exact:
      return solve_tsp_exact(matrix);
    case TspMode::Heuristic:
      return solve_tsp_heuristic(matrix);
    case TspMode::Auto:
      break;
  }
  return matrix.n <= 15 ? solve_tsp_exact(matrix) : solve_tsp_heuristic(matrix);
}

}  // namespace

Plan run_mission(const MapBundle& map, const Mission& mission, const MissionConfig& config) {
  validate_weights(config.weights);
  validate_checker_config(config.checker);
  validate_query_config(config.query);
  const ValidityChecker checker(map, config.footprint, config.checker);
  validate_mission(mission, checker);

  const auto t_total = Clock::now();
  Plan plan;

  if (mission.tois.empty()) {
    plan.waypoints = {mission.start};
    plan.total_cost = 0.0;
    plan.stats.wall_times.total_s = seconds_since(t_total);
    return plan;
  }

  Roadmap roadmap(config.query.rng_seed);
  Planner planner(checker, config.weights, config.query);
  const auto uniform_target = static_cast<std::size_t>(
      std::clamp(config.uniform_growth_fraction, 0.0, 1.0) * config.query.max_vertices);
  planner.grow_uniform(roadmap, uniform_target);

  // Visit sequence over ToI representatives.
  const auto t_matrix = Clock::now();
  CostMatrixResult matrix = build_cost_matrix(mission, planner, roadmap);
  plan.stats.wall_times.cost_matrix_s = seconds_since(t_matrix);
  plan.stats.cost_matrix_paths = matrix.pairs_planned;

  const auto t_tsp = Clock::now();
  const Tour tour = solve_sequence(matrix.matrix, config.tsp);
  plan.stats.wall_times.tsp_s = seconds_since(t_tsp);

  // PoI selection along the fixed sequence.
  const auto t_selection = Clock::now();
  std::vector<std::vector<SE2State>> poi_sets;
  std::vector<std::size_t> toi_order;
  poi_sets.reserve(tour.order.size());
  for (const std::size_t city : tour.order) {
    const std::size_t toi_index = city - 1;
    toi_order.push_back(toi_index);
    poi_sets.push_back(mission.tois[toi_index].pois);
  }
  const SelectionProblem problem(mission.start, std::move(poi_sets), toi_order);
  PlannerEdgeSource edges(problem, planner, roadmap);

  Selection selection;
  switch (config.method) {
    case SelectionMethod::Dp:
      plan_all_pairs(problem, edges);
      selection = dp_select(problem, edges);
      selection.paths_planned = edges.paths_planned();
      break;
    case SelectionMethod::Idp:
      selection = idp_select(problem, edges);
      break;
    case SelectionMethod::Irba:
      selection = irba_select(problem, edges);
      break;
  }
  plan.stats.wall_times.selection_s = seconds_since(t_selection);

  // Stitch the chain into one closed path and align interior headings.
  const auto t_stitch = Clock::now();
  const std::size_t n = problem.num_stages();
  std::vector<PoseId> chain_ids;
  chain_ids.push_back(SelectionProblem::kStartId);
  for (std::size_t i = 0; i < n; ++i) {
    chain_ids.push_back(problem.pose_id(i, selection.chosen[i]));
  }
  chain_ids.push_back(SelectionProblem::kStartId);

  Path stitched;
  std::vector<std::size_t> junction_indices;  // start, each PoI, final start
  std::vector<std::pair<std::size_t, std::size_t>> stage_spans;
  junction_indices.push_back(0);
  for (std::size_t seg = 0; seg + 1 < chain_ids.size(); ++seg) {
    Path part = edges.oriented_path(chain_ids[seg], chain_ids[seg + 1]);
    if (part.empty()) {
      throw std::logic_error("pipeline: chain segment missing from edge cache");
    }
    plan.segment_costs.push_back(
        edges.lower_bound_or_cost(chain_ids[seg], chain_ids[seg + 1]));
    const std::size_t span_begin = stitched.empty() ? 0 : stitched.size() - 1;
    std::size_t first = 0;
    if (!stitched.empty()) {
      if (!near_same_state(stitched.back(), part.front())) {
        throw std::logic_error("pipeline: stage paths do not meet at their junction");
      }
      first = 1;  // drop the duplicated junction state
    }
    stitched.insert(stitched.end(), part.begin() + first, part.end());
    stage_spans.emplace_back(span_begin, stitched.size() - 1);
    junction_indices.push_back(stitched.size() - 1);
  }

  std::set<std::size_t> fixed(junction_indices.begin(), junction_indices.end());
  const Path pre_align = stitched;
  Path aligned = align_headings(stitched, fixed);

  // Alignment alters yaws, which can flip marginal volumetric verdicts near
  // obstacles. Any stage whose aligned segment no longer validates falls
  // back to its planned yaws, which are known valid.
  CheckStats revalidation;
  for (std::size_t s = 0; s < stage_spans.size(); ++s) {
    const auto [lo, hi] = stage_spans[s];
    bool ok = true;
    for (std::size_t i = lo; i < hi && ok; ++i) {
      ok = checker.check_motion(aligned[i], aligned[i + 1], revalidation);
    }
    if (!ok) {
      for (std::size_t i = lo + 1; i < hi; ++i) aligned[i].yaw = pre_align[i].yaw;
      ++plan.stats.alignment_reverted_stages;
    }
  }

  plan.waypoints = std::move(aligned);
  plan.total_cost = selection.total_cost;
  plan.chosen_pois = selection.chosen;
  for (const std::size_t toi_index : toi_order) {
    plan.sequence.push_back(mission.tois[toi_index].id);
  }
  plan.stats.wall_times.stitch_s = seconds_since(t_stitch);

  plan.stats.paths_planned = selection.paths_planned;
  plan.stats.idp_iterations = selection.iterations;
  plan.stats.roadmap_vertices = roadmap.num_vertices();
  plan.stats.roadmap_edges = roadmap.edges().size();
  CheckStats checks = edges.stats().checks;
  checks.merge(matrix.stats.checks);
  checks.merge(revalidation);
  plan.stats.tsdf_queries = checks.tsdf_queries;
  plan.stats.traversability_queries = checks.traversability_queries;
  plan.stats.wall_times.total_s = seconds_since(t_total);
  return plan;
}

Plan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("plan file: cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("plan file: invalid JSON in " + path + ": " + e.what());
  }

  Plan plan;
  try {
    plan.sequence = j.at("sequence").get<std::vector<std::string>>();
    plan.chosen_pois = j.at("chosen_pois").get<std::vector<std::size_t>>();
    for (const auto& w : j.at("waypoints")) {
      plan.waypoints.push_back(SE2State{w[0].get<double>(), w[1].get<double>(),
                                        w[2].get<double>()});
    }
    plan.segment_costs = j.at("segment_costs").get<std::vector<double>>();
    plan.total_cost = j.at("total_cost").get<double>();
    plan.closed = j.at("closed").get<bool>();
    const auto& s = j.at("stats");
    plan.stats.paths_planned = s.at("paths_planned").get<std::size_t>();
    plan.stats.cost_matrix_paths = s.at("cost_matrix_paths").get<std::size_t>();
    plan.stats.tsdf_queries = s.at("tsdf_queries").get<std::uint64_t>();
    plan.stats.traversability_queries = s.at("traversability_queries").get<std::uint64_t>();
    plan.stats.idp_iterations = s.at("idp_iterations").get<std::size_t>();
    plan.stats.roadmap_vertices = s.at("roadmap_vertices").get<std::size_t>();
    plan.stats.roadmap_edges = s.at("roadmap_edges").get<std::size_t>();
    plan.stats.alignment_reverted_stages = s.at("alignment_reverted_stages").get<std::size_t>();
    const auto& t = s.at("wall_times");
    plan.stats.wall_times.cost_matrix_s = t.at("cost_matrix").get<double>();
    plan.stats.wall_times.tsp_s = t.at("tsp").get<double>();
    plan.stats.wall_times.selection_s = t.at("selection").get<double>();
    plan.stats.wall_times.stitch_s = t.at("stitch").get<double>();
    plan.stats.wall_times.total_s = t.at("total").get<double>();
  } catch (const std::exception& e) {
    throw InputError(std::string("plan file: ") + e.what());
  }
  return plan;
}

void save_plan(const Plan& plan, const std::string& path) {
  ordered_json j;
  j["sequence"] = plan.sequence;
  j["chosen_pois"] = plan.chosen_pois;
  ordered_json waypoints = ordered_json::array();
  for (const SE2State& w : plan.waypoints) {
    waypoints.push_back(ordered_json{w.x, w.y, w.yaw});
  }
  j["waypoints"] = waypoints;
  j["segment_costs"] = plan.segment_costs;
  j["total_cost"] = plan.total_cost;
  j["closed"] = plan.closed;
  ordered_json stats;
  stats["paths_planned"] = plan.stats.paths_planned;
  stats["cost_matrix_paths"] = plan.stats.cost_matrix_paths;
  stats["tsdf_queries"] = plan.stats.tsdf_queries;
  stats["traversability_queries"] = plan.stats.traversability_queries;
  stats["idp_iterations"] = plan.stats.idp_iterations;
  stats["roadmap_vertices"] = plan.stats.roadmap_vertices;
  stats["roadmap_edges"] = plan.stats.roadmap_edges;
  stats["alignment_reverted_stages"] = plan.stats.alignment_reverted_stages;
  ordered_json times;
  times["cost_matrix"] = plan.stats.wall_times.cost_matrix_s;
  times["tsp"] = plan.stats.wall_times.tsp_s;
  times["selection"] = plan.stats.wall_times.selection_s;
  times["stitch"] = plan.stats.wall_times.stitch_s;
  times["total"] = plan.stats.wall_times.total_s;
  stats["wall_times"] = times;
  j["stats"] = stats;
  std::ofstream out(path);
  if (!out) throw InputError("plan file: cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace mgp
