// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Everything runs in memory on synthetic environments.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mgp/benchmark.h"
#include "mgp/env_gen.h"
#include "mgp/errors.h"
#include "mgp/mission.h"
#include "mgp/pipeline.h"
#include "mgp/roadmap.h"
#include "mgp/sampler.h"
#include "mgp/selection.h"
#include "mgp/sequencing.h"
#include "mgp/tsp.h"
#include "test_support.h"

using namespace mgp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Fixtures

// Lunar-analog arena, 30 x 29 m: a few solid rocks (with intermediate
// traversability bands painted around them), two craters and a slope patch
// that are hazards rather than geometry.
EnvSpec lunar_spec() {
  EnvSpec spec;
  spec.xmin = 0.0;
  spec.xmax = 30.0;
  spec.ymin = 0.0;
  spec.ymax = 29.0;
  spec.resolution = 0.1;
  spec.truncation = 2.0;
  spec.base_traversability = 0.9;

  spec.obstacles.push_back(Rect{8.0, 20.0, 1.5, 1.0});
  spec.obstacles.push_back(Disc{20.0, 8.0, 1.8});
  spec.obstacles.push_back(Disc{15.5, 15.5, 1.2});

  // Uncertain ground around each rock: forces volumetric checks nearby and
  // guarantees that "clearly traversable" cells really are clear of geometry.
  spec.trav_regions.push_back({Rect{8.0, 20.0, 2.4, 1.9}, 0.5});
  spec.trav_regions.push_back({Disc{20.0, 8.0, 2.7}, 0.5});
  spec.trav_regions.push_back({Disc{15.5, 15.5, 2.1}, 0.5});

  // Craters: collision-free but too risky to cross.
  spec.trav_regions.push_back({Disc{5.0, 7.0, 1.3}, 0.15});
  spec.trav_regions.push_back({Disc{24.0, 20.0, 1.5}, 0.15});
  spec.trav_regions.push_back({Disc{12.0, 25.0, 1.2}, 0.15});

  // A gravel slope: crossable after volumetric checking.
  spec.trav_regions.push_back({Disc{25.0, 14.0, 2.0}, 0.6});
  return spec;
}

// N targets with a ring of M inspection poses each, rejection-sampled until
// every pose validates. Deterministic per seed.
Mission ring_mission(const MapBundle& map, const ValidityChecker& checker, std::size_t n_tois,
                     std::size_t n_pois, std::uint64_t seed) {
  const GridHeader& h = map.header();
  const double ring = 1.2;
  const double margin = 2.0;
  Mission mission;
  mission.start = SE2State{2.0, 2.0, 0.0};

  Rng rng(seed);
  CheckStats stats;
  int guard = 0;
  while (mission.tois.size() < n_tois) {
    if (++guard > 100000) throw std::logic_error("ring_mission: placement did not converge");
    const double cx = rng.uniform(h.min_x() + margin, h.max_x() - margin);
    const double cy = rng.uniform(h.min_y() + margin, h.max_y() - margin);
    if (std::hypot(cx - mission.start.x, cy - mission.start.y) < 3.2) continue;
    bool spaced = true;
    for (const Toi& other : mission.tois) {
      if (std::hypot(cx - other.pose.x, cy - other.pose.y) < 3.2) {
        spaced = false;
        break;
      }
    }
    if (!spaced) continue;

    Toi toi;
    toi.pose = SE2State{cx, cy, 0.0};
    bool all_valid = true;
    for (std::size_t j = 0; j < n_pois && all_valid; ++j) {
      const double ang = 2.0 * M_PI * static_cast<double>(j) / n_pois;
      const SE2State poi{cx + ring * std::cos(ang), cy + ring * std::sin(ang),
                         wrap_angle(ang + M_PI)};
      all_valid = checker.check_state(poi, stats);
      toi.pois.push_back(poi);
    }
    if (!all_valid) continue;
    toi.id = "toi" + std::to_string(mission.tois.size() + 1);
    mission.tois.push_back(std::move(toi));
  }
  return mission;
}

double polyline_length(const Path& path) {
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    length += xy_distance(path[i], path[i + 1]);
  }
  return length;
}

struct EmittedPlan {
  std::string origin;
  Mission mission;
  MissionConfig config;
  Plan plan;
};

std::vector<EmittedPlan> g_emitted;  // consumed by criterion 10

MissionConfig lunar_config(std::uint64_t seed) {
  MissionConfig cfg;
  cfg.query.max_vertices = 3000;
  cfg.query.rng_seed = seed;
  return cfg;
}

// ---------------------------------------------------------------------------
// Criterion runners

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool criterion_dp_oracle(std::string& detail) {
  const auto t0 = Clock::now();
  Rng rng(201);
  int exact_matches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform01() * 5.0);   // <= 5
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < n; ++i) {
      sizes.push_back(1 + static_cast<std::size_t>(rng.uniform01() * 4.0));      // <= 4
    }
    std::vector<std::vector<SE2State>> sets;
    double x = 1.0;
    for (const std::size_t size : sizes) {
      std::vector<SE2State> set;
      for (std::size_t j = 0; j < size; ++j) set.push_back(SE2State{x, double(j), 0});
      sets.push_back(std::move(set));
      x += 1.0;
    }
    const SelectionProblem problem(SE2State{0, 0, 0}, std::move(sets));

    TableEdgeSource::CostTable costs;
    auto add = [&](PoseId a, PoseId b) {
      costs[std::minmax(a, b)] = std::floor(rng.uniform(0.5, 20.0) * 1024.0) / 1024.0;
    };
    for (std::size_t p = 0; p < problem.set_size(0); ++p) add(0, problem.pose_id(0, p));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t p = 0; p < problem.set_size(i); ++p) {
        for (std::size_t q = 0; q < problem.set_size(i + 1); ++q) {
          add(problem.pose_id(i, p), problem.pose_id(i + 1, q));
        }
      }
    }
    for (std::size_t p = 0; p < problem.set_size(n - 1); ++p) {
      add(problem.pose_id(n - 1, p), 0);
    }

    TableEdgeSource source(costs);
    const Selection dp = dp_select(problem, source);
    const auto [oracle_chain, oracle_total] = test::brute_force_chain(problem, source);
    if (dp.chosen == oracle_chain && dp.total_cost == oracle_total) ++exact_matches;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << exact_matches << "/200 instances exact, " << elapsed << " s (< 10 s)";
  detail = os.str();
  return exact_matches == 200 && elapsed < 10.0;
}

bool criterion_idp_preserves_dp(std::string& detail) {
  Rng rng(211);
  int matches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform01() * 5.0);
    std::vector<std::vector<SE2State>> sets;
    std::vector<std::size_t> sizes;
    double x = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform01() * 4.0);
      sizes.push_back(m);
      std::vector<SE2State> set;
      for (std::size_t j = 0; j < m; ++j) set.push_back(SE2State{x, double(j), 0});
      sets.push_back(std::move(set));
      x += 1.0;
    }
    const SelectionProblem problem(SE2State{0, 0, 0}, std::move(sets));
    TableEdgeSource::CostTable costs;
    auto add = [&](PoseId a, PoseId b) {
      costs[std::minmax(a, b)] = std::floor(rng.uniform(0.5, 20.0) * 1024.0) / 1024.0;
    };
    for (std::size_t p = 0; p < problem.set_size(0); ++p) add(0, problem.pose_id(0, p));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t p = 0; p < problem.set_size(i); ++p) {
        for (std::size_t q = 0; q < problem.set_size(i + 1); ++q) {
          add(problem.pose_id(i, p), problem.pose_id(i + 1, q));
        }
      }
    }
    for (std::size_t p = 0; p < problem.set_size(n - 1); ++p) add(problem.pose_id(n - 1, p), 0);

    TableEdgeSource dp_source(costs);
    TableEdgeSource idp_source(costs);
    const Selection dp = dp_select(problem, dp_source);
    const Selection idp = idp_select(problem, idp_source);
    if (dp.chosen == idp.chosen && dp.total_cost == idp.total_cost) ++matches;
  }
  std::ostringstream os;
  os << matches << "/100 instances identical (chain and cost)";
  detail = os.str();
  return matches == 100;
}

bool criterion_idp_path_count(std::string& detail) {
  const auto t0 = Clock::now();
  const MapBundle map = generate_synthetic_env(lunar_spec(), 0);
  MissionConfig probe_cfg = lunar_config(0);
  const ValidityChecker checker(map, probe_cfg.footprint, probe_cfg.checker);
  const Mission mission = ring_mission(map, checker, 13, 10, 77);

  const std::size_t full_count = 10 * 10 * 12 + 2 * 10;  // 1220
  bool dp_counts_exact = true;
  double dp_cost_sum = 0.0, idp_cost_sum = 0.0, idp_paths_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    MissionConfig dp_cfg = lunar_config(seed);
    dp_cfg.method = SelectionMethod::Dp;
    const Plan dp_plan = run_mission(map, mission, dp_cfg);
    dp_counts_exact = dp_counts_exact && (dp_plan.stats.paths_planned == full_count);
    dp_cost_sum += dp_plan.total_cost;
    g_emitted.push_back({"criterion-3 dp seed " + std::to_string(seed), mission, dp_cfg, dp_plan});

    MissionConfig idp_cfg = lunar_config(seed);
    idp_cfg.method = SelectionMethod::Idp;
    const Plan idp_plan = run_mission(map, mission, idp_cfg);
    idp_cost_sum += idp_plan.total_cost;
    idp_paths_sum += static_cast<double>(idp_plan.stats.paths_planned);
    g_emitted.push_back(
        {"criterion-3 idp seed " + std::to_string(seed), mission, idp_cfg, idp_plan});
  }
  const double elapsed = seconds_since(t0);
  const double idp_paths_mean = idp_paths_sum / 10.0;
  const double cost_ratio = (idp_cost_sum / 10.0) / (dp_cost_sum / 10.0);
  std::ostringstream os;
  os << "dp plans " << full_count << " paths (exact: " << (dp_counts_exact ? "yes" : "NO")
     << "), idp mean " << idp_paths_mean << " (" << 100.0 * idp_paths_mean / full_count
     << "% of dp), cost ratio " << cost_ratio << ", " << elapsed << " s";
  detail = os.str();
  return dp_counts_exact && idp_paths_mean <= 0.30 * full_count && cost_ratio <= 1.02 &&
         elapsed < 120.0;
}

bool criterion_checker_economy(std::string& detail) {
  const MapBundle map = generate_synthetic_env(lunar_spec(), 0);
  MissionConfig probe_cfg = lunar_config(0);
  const ValidityChecker checker(map, probe_cfg.footprint, probe_cfg.checker);
  const Mission mission = ring_mission(map, checker, 13, 10, 77);

  double thresholded_queries = 0.0, full_queries = 0.0;
  double thresholded_cost = 0.0, full_cost = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    MissionConfig hier = lunar_config(seed);
    const Plan hier_plan = run_mission(map, mission, hier);
    thresholded_queries += static_cast<double>(hier_plan.stats.tsdf_queries);
    thresholded_cost += hier_plan.total_cost;
    g_emitted.push_back(
        {"criterion-4 hierarchical seed " + std::to_string(seed), mission, hier, hier_plan});

    MissionConfig full = lunar_config(seed);
    full.checker.t_low = 0.0;
    full.checker.t_high = 1.0;
    const Plan full_plan = run_mission(map, mission, full);
    full_queries += static_cast<double>(full_plan.stats.tsdf_queries);
    full_cost += full_plan.total_cost;
    g_emitted.push_back(
        {"criterion-4 full-collision seed " + std::to_string(seed), mission, full, full_plan});
  }
  const double query_ratio = thresholded_queries / full_queries;
  const double cost_diff = std::fabs(thresholded_cost - full_cost) / full_cost;
  std::ostringstream os;
  os << "tsdf queries at " << 100.0 * query_ratio << "% of full checking, cost difference "
     << 100.0 * cost_diff << "%";
  detail = os.str();
  return query_ratio <= 0.80 && cost_diff <= 0.02;
}

bool criterion_safety_detour(std::string& detail) {
  EnvSpec spec;
  spec.xmin = 0.0;
  spec.xmax = 10.0;
  spec.ymin = 0.0;
  spec.ymax = 6.0;
  spec.resolution = 0.1;
  spec.truncation = 2.0;
  spec.base_traversability = 0.9;
  spec.trav_regions.push_back({Rect{5.0, 3.0, 0.5, 2.0}, 0.1});  // risky strip, no geometry
  const MapBundle map = generate_synthetic_env(spec, 0);

  Mission mission;
  mission.start = SE2State{1.0, 3.0, 0.0};
  mission.tois.push_back({"far", SE2State{9.3, 3.0, 0.0}, {SE2State{9.0, 3.0, 0.0}}});

  MissionConfig cfg;
  cfg.query.max_vertices = 2500;
  cfg.query.rng_seed = 5;
  const Plan plan = run_mission(map, mission, cfg);
  g_emitted.push_back({"criterion-5 detour", mission, cfg, plan});

  const ValidityChecker checker(map, cfg.footprint, cfg.checker);
  CheckStats stats;
  bool waypoints_safe = true;
  for (const SE2State& w : plan.waypoints) {
    waypoints_safe = waypoints_safe && checker.check_state(w, stats);
    const auto trav = map.query_traversability(w.x, w.y);
    waypoints_safe = waypoints_safe && trav.has_value() && *trav >= cfg.checker.t_low;
  }
  const double straight = 2.0 * xy_distance(mission.start, mission.tois[0].pois[0]);
  const double length = polyline_length(plan.waypoints);
  std::ostringstream os;
  os << "waypoints safe: " << (waypoints_safe ? "yes" : "NO") << ", closed-path length "
     << length << " > straight out-and-back " << straight;
  detail = os.str();
  return waypoints_safe && length > straight + 0.2;
}

bool criterion_informed_sampler(std::string& detail) {
  Rng rng(223);
  const CostWeights w{1.2, 0.7, 1};
  const SE2State s1{-1.0, 0.5, 0.4};
  const SE2State s2{3.0, -1.0, -2.0};
  const double best = 1.2 * segment_cost(s1, s2, w);
  const SampleBounds bounds{-10.0, 10.0, -10.0, 10.0};

  std::size_t outside_checked = 0, outside_violations = 0;
  while (outside_checked < 100000) {
    const SE2State s{rng.uniform(-9.0, 9.0), rng.uniform(-9.0, 9.0), rng.uniform(-M_PI, M_PI)};
    if (informed_region_contains(s1, s2, best, w, s.x, s.y)) continue;
    ++outside_checked;
    if (segment_cost(s1, s, w) + segment_cost(s, s2, w) < best) ++outside_violations;
  }

  std::size_t inside_violations = 0;
  for (std::size_t i = 0; i < 100000; ++i) {
    const auto s = sample_se2(s1, s2, best, bounds, w, rng);
    if (!s || !informed_region_contains(s1, s2, best, w, s->x, s->y)) ++inside_violations;
  }
  std::ostringstream os;
  os << outside_violations << " outside-region violations, " << inside_violations
     << " membership violations over 1e5 each";
  detail = os.str();
  return outside_violations == 0 && inside_violations == 0;
}

bool criterion_tsp_oracles(std::string& detail) {
  Rng rng(227);
  int exact_matches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform01() * 7.0);  // <= 8
    const CostMatrix m = test::random_symmetric_matrix(n, rng);
    const Tour exact = solve_tsp_exact(m);
    const Tour oracle = test::brute_force_tsp(m);
    if (exact.cost == oracle.cost) ++exact_matches;
  }
  double gap_sum = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const CostMatrix m = test::random_euclidean_matrix(10, rng);
    const Tour exact = solve_tsp_exact(m);
    const Tour heur = solve_tsp_heuristic(m);
    gap_sum += (heur.cost - exact.cost) / exact.cost;
  }
  const double mean_gap = gap_sum / 50.0;
  std::ostringstream os;
  os << exact_matches << "/100 exact-cost matches, heuristic mean gap " << 100.0 * mean_gap
     << "% at n=10";
  detail = os.str();
  return exact_matches == 100 && mean_gap <= 0.05;
}

bool criterion_scalability(std::string& detail) {
  const MapBundle map = generate_synthetic_env(lunar_spec(), 0);
  MissionConfig probe_cfg = lunar_config(0);
  const ValidityChecker checker(map, probe_cfg.footprint, probe_cfg.checker);

  double idp_time_6 = 0.0, idp_time_24 = 0.0;
  bool cost_ok = true;
  std::ostringstream os;
  for (const std::size_t n : {std::size_t{6}, std::size_t{12}, std::size_t{24}}) {
    const Mission mission = ring_mission(map, checker, n, 6, 311);

    MissionConfig idp_cfg = lunar_config(1);
    const auto t_idp = Clock::now();
    const Plan idp_plan = run_mission(map, mission, idp_cfg);
    const double idp_seconds = seconds_since(t_idp);
    g_emitted.push_back(
        {"criterion-8 idp N=" + std::to_string(n), mission, idp_cfg, idp_plan});
    if (n == 6) idp_time_6 = idp_seconds;
    if (n == 24) idp_time_24 = idp_seconds;

    os << "N=" << n << ": idp " << idp_seconds << " s";
    if (n <= 12) {
      MissionConfig dp_cfg = lunar_config(1);
      dp_cfg.method = SelectionMethod::Dp;
      const Plan dp_plan = run_mission(map, mission, dp_cfg);
      const double ratio = idp_plan.total_cost / dp_plan.total_cost;
      cost_ok = cost_ok && ratio <= 1.02;
      os << " (cost ratio vs dp " << ratio << ")";
    }
    os << "; ";
  }
  const bool time_ok = idp_time_24 < 300.0 && idp_time_24 > idp_time_6;
  detail = os.str();
  return cost_ok && time_ok;
}

bool criterion_irba_suboptimal(std::string& detail) {
  // Constructed stall instance: coordinate descent cannot leave (a, y).
  const std::vector<std::vector<SE2State>> sets{
      {SE2State{1, 0, 0}, SE2State{1, 1, 0}},
      {SE2State{2, 0, 0}, SE2State{2, 1, 0}},
  };
  const SelectionProblem problem(SE2State{0, 0, 0}, sets);
  const PoseId s = SelectionProblem::kStartId;
  const PoseId a = problem.pose_id(0, 0), b = problem.pose_id(0, 1);
  const PoseId x = problem.pose_id(1, 0), y = problem.pose_id(1, 1);
  const TableEdgeSource::CostTable true_costs{
      {std::minmax(s, a), 1.0},  {std::minmax(s, b), 1.1},
      {std::minmax(a, x), 10.0}, {std::minmax(a, y), 1.0},
      {std::minmax(b, x), 1.0},  {std::minmax(b, y), 10.0},
      {std::minmax(x, s), 1.0},  {std::minmax(y, s), 10.0},
  };
  const TableEdgeSource::CostTable lower_bounds{
      {std::minmax(s, a), 1.0},  {std::minmax(s, b), 1.1},
      {std::minmax(a, x), 10.0}, {std::minmax(a, y), 1.0},
      {std::minmax(b, x), 1.0},  {std::minmax(b, y), 9.0},
      {std::minmax(x, s), 1.0},  {std::minmax(y, s), 1.0},
  };
  TableEdgeSource irba_source(true_costs, lower_bounds);
  TableEdgeSource idp_source(true_costs, lower_bounds);
  const Selection irba = irba_select(problem, irba_source);
  const Selection idp = idp_select(problem, idp_source);
  const bool stall_ok = irba.total_cost == 12.0 && std::fabs(idp.total_cost - 3.1) < 1e-9;

  // Live-planner instances: idp never loses to irba from the same cache
  // state on the same frozen roadmap.
  EnvSpec spec = test::free_space_spec(7.0);
  spec.obstacles.push_back(Disc{2.5, 2.5, 1.2});
  spec.obstacles.push_back(Rect{-3.0, -1.0, 1.0, 0.8});
  spec.trav_regions.push_back({Disc{2.5, 2.5, 2.0}, 0.5});
  spec.trav_regions.push_back({Rect{-3.0, -1.0, 1.8, 1.6}, 0.5});
  const MapBundle map = generate_synthetic_env(spec, 0);
  const RobotFootprint fp;
  const CheckerConfig checker_cfg;
  const ValidityChecker checker(map, fp, checker_cfg);
  QueryConfig qc;
  qc.max_vertices = 1400;
  qc.rng_seed = 9;
  Planner planner(checker, CostWeights{}, qc);
  Roadmap base(9);
  planner.grow_uniform(base, 1400);

  Rng rng(233);
  CheckStats stats;
  auto random_state = [&]() {
    for (;;) {
      const SE2State state{rng.uniform(-6.0, 6.0), rng.uniform(-6.0, 6.0),
                           rng.uniform(-M_PI, M_PI)};
      if (checker.check_state(state, stats)) return state;
    }
  };

  int live_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform01() * 3.0);  // 2..4
    std::vector<std::vector<SE2State>> poi_sets(n);
    const SE2State start = random_state();
    for (auto& set : poi_sets) {
      const std::size_t m = 2 + static_cast<std::size_t>(rng.uniform01() * 2.0);  // 2..3
      for (std::size_t j = 0; j < m; ++j) set.push_back(random_state());
    }
    const SelectionProblem live(start, poi_sets);
    // Insert every pose once so both runs see the identical graph.
    planner.add_query_endpoints(base, start, start);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < poi_sets[i].size(); ++j) {
        planner.add_query_endpoints(base, poi_sets[i][j], poi_sets[i][j]);
      }
    }
    Roadmap for_idp = base;
    Roadmap for_irba = base;
    PlannerEdgeSource idp_edges(live, planner, for_idp);
    PlannerEdgeSource irba_edges(live, planner, for_irba);
    const Selection live_idp = idp_select(live, idp_edges);
    const Selection live_irba = irba_select(live, irba_edges);
    if (live_idp.total_cost <= live_irba.total_cost + 1e-9) ++live_ok;
  }
  std::ostringstream os;
  os << "stall instance irba " << irba.total_cost << " vs idp " << idp.total_cost << "; "
     << live_ok << "/100 live instances with idp <= irba";
  detail = os.str();
  return stall_ok && live_ok == 100;
}

bool criterion_end_to_end(std::string& detail) {
  std::size_t checked = 0, failures = 0;
  std::string first_failure;
  for (const EmittedPlan& e : g_emitted) {
    ++checked;
    const MapBundle* map = nullptr;
    // Re-derive the map from the origin tag.
    static const MapBundle lunar = generate_synthetic_env(lunar_spec(), 0);
    static MapBundle strip_map = [] {
      EnvSpec spec;
      spec.xmin = 0.0;
      spec.xmax = 10.0;
      spec.ymin = 0.0;
      spec.ymax = 6.0;
      spec.resolution = 0.1;
      spec.truncation = 2.0;
      spec.base_traversability = 0.9;
      spec.trav_regions.push_back({Rect{5.0, 3.0, 0.5, 2.0}, 0.1});
      return generate_synthetic_env(spec, 0);
    }();
    map = (e.origin.find("criterion-5") != std::string::npos) ? &strip_map : &lunar;

    const ValidityChecker checker(*map, e.config.footprint, e.config.checker);
    bool ok = true;

    // Closed at the start pose.
    ok = ok && !e.plan.waypoints.empty();
    ok = ok && xy_distance(e.plan.waypoints.front(), e.mission.start) <= 1e-9;
    ok = ok && xy_distance(e.plan.waypoints.back(), e.mission.start) <= 1e-9;

    // Exactly one chosen PoI per ToI, present among the waypoints.
    ok = ok && e.plan.sequence.size() == e.mission.tois.size();
    for (std::size_t i = 0; ok && i < e.plan.sequence.size(); ++i) {
      const Toi* toi = nullptr;
      for (const Toi& t : e.mission.tois) {
        if (t.id == e.plan.sequence[i]) toi = &t;
      }
      ok = ok && toi != nullptr;
      if (!ok) break;
      const SE2State& poi = toi->pois[e.plan.chosen_pois[i]];
      bool present = false;
      for (const SE2State& w : e.plan.waypoints) {
        if (xy_distance(w, poi) <= 1e-9 && angle_diff(w.yaw, poi.yaw) <= 1e-9) present = true;
      }
      ok = ok && present;
    }

    // Every consecutive motion re-validates.
    CheckStats stats;
    for (std::size_t i = 0; ok && i + 1 < e.plan.waypoints.size(); ++i) {
      ok = checker.check_motion(e.plan.waypoints[i], e.plan.waypoints[i + 1], stats);
    }

    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = e.origin;
    }
  }
  std::ostringstream os;
  os << checked - failures << "/" << checked << " emitted plans re-validate";
  if (!first_failure.empty()) os << " (first failure: " << first_failure << ")";
  detail = os.str();
  return failures == 0 && checked >= 41;  // 20 + 20 + 1 + 5 runs feed this criterion
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"dp-oracle-equivalence", criterion_dp_oracle},
      {"idp-preserves-dp-optimality", criterion_idp_preserves_dp},
      {"idp-path-count-economy", criterion_idp_path_count},
      {"hierarchical-checking-economy", criterion_checker_economy},
      {"safety-filtering-detour", criterion_safety_detour},
      {"informed-sampler-soundness", criterion_informed_sampler},
      {"tsp-oracles", criterion_tsp_oracles},
      {"scalability-trend", criterion_scalability},
      {"irba-suboptimality", criterion_irba_suboptimal},
      {"end-to-end-validity", criterion_end_to_end},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string det;
    bool pass = false;
    const auto t0 = Clock::now();
    try {
      pass = criteria[i].run(det);
    } catch (const std::exception& e) {
      det = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(t0);
    std::printf("[%2zu/10] %s  %-30s (%.1f s)  %s\n", i + 1, pass ? "PASS" : "FAIL",
                criteria[i].name.c_str(), elapsed, det.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
