#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mgp/benchmark.h"
#include "mgp/env_gen.h"
#include "mgp/errors.h"
#include "mgp/grid_map.h"
#include "mgp/mission.h"
#include "mgp/pipeline.h"
#include "mgp/svg_render.h"

namespace {

struct CommonFlags {
  double t_low{0.3};
  double t_high{0.8};
  double wt{1.0};
  double wr{1.0};
  int cost_exponent{1};
  std::uint64_t seed{0};
  std::uint32_t max_vertices{3000};
  std::string footprint{"0.8x0.6"};
  std::string tsp{"auto"};
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--t-low", flags.t_low, "Lower traversability threshold");
  cmd->add_option("--t-high", flags.t_high, "Upper traversability threshold");
  cmd->add_option("--wt", flags.wt, "Translational cost weight");
  cmd->add_option("--wr", flags.wr, "Rotational cost weight");
  cmd->add_option("--cost-exponent", flags.cost_exponent,
                  "Translational cost exponent (1 or 2)");
  cmd->add_option("--seed", flags.seed, "Random seed");
  cmd->add_option("--max-vertices", flags.max_vertices, "Roadmap vertex budget per mission");
  cmd->add_option("--footprint", flags.footprint, "Robot footprint as LxW in meters");
  cmd->add_option("--tsp", flags.tsp, "TSP solver: auto, exact or heuristic")
      ->check(CLI::IsMember({"auto", "exact", "heuristic"}));
}

mgp::RobotFootprint parse_footprint(const std::string& text) {
  double length = 0.0, width = 0.0;
  char sep = 0;
  std::istringstream is(text);
  if (!(is >> length >> sep >> width) || (sep != 'x' && sep != 'X')) {
    throw mgp::InputError("--footprint must look like 0.8x0.6");
  }
  return mgp::RobotFootprint(length, width);
}

mgp::MissionConfig make_config(const CommonFlags& flags) {
  mgp::MissionConfig cfg;
  cfg.weights.w_t = flags.wt;
  cfg.weights.w_r = flags.wr;
  cfg.weights.exponent = flags.cost_exponent;
  cfg.checker.t_low = flags.t_low;
  cfg.checker.t_high = flags.t_high;
  cfg.query.max_vertices = flags.max_vertices;
  cfg.query.rng_seed = flags.seed;
  cfg.footprint = parse_footprint(flags.footprint);
  if (flags.tsp == "exact") {
    cfg.tsp = mgp::TspMode::Exact;
  } else if (flags.tsp == "heuristic") {
    cfg.tsp = mgp::TspMode::Heuristic;
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Safe multi-goal planner for grid-mapped ground robots"};
  app.require_subcommand(1);

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "Plan a multi-goal mission");
  std::string plan_map, plan_mission, plan_out;
  std::string plan_method = "idp";
  CommonFlags plan_flags;
  plan_cmd->add_option("--map", plan_map, "Map JSON file")->required();
  plan_cmd->add_option("--mission", plan_mission, "Mission JSON file")->required();
  plan_cmd->add_option("--out", plan_out, "Output plan JSON file")->required();
  plan_cmd->add_option("--method", plan_method, "PoI selection method")
      ->check(CLI::IsMember({"idp", "dp", "irba"}));
  add_common_flags(plan_cmd, plan_flags);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark selection methods");
  std::string bench_map, bench_mission, bench_out;
  std::vector<std::string> bench_methods{"idp"};
  std::size_t bench_trials = 10;
  bool compare_checkers = false;
  bool parallel_trials = false;
  CommonFlags bench_flags;
  bench_cmd->add_option("--map", bench_map, "Map JSON file")->required();
  bench_cmd->add_option("--mission", bench_mission, "Mission JSON file")->required();
  bench_cmd->add_option("--out", bench_out, "Output report JSON file")->required();
  bench_cmd->add_option("--method", bench_methods, "Methods to run (repeatable)")
      ->check(CLI::IsMember({"idp", "dp", "irba"}));
  bench_cmd->add_option("--trials", bench_trials, "Trials per method");
  bench_cmd->add_flag("--compare-checkers", compare_checkers,
                      "Also run with full collision checking (t_low=0, t_high=1)");
  bench_cmd->add_flag("--parallel", parallel_trials, "Run trials in parallel");
  add_common_flags(bench_cmd, bench_flags);

  // gen-env
  auto* gen_cmd = app.add_subcommand("gen-env", "Generate a synthetic map from an env spec");
  std::string gen_spec, gen_out;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--spec", gen_spec, "Env spec JSON file")->required();
  gen_cmd->add_option("--out", gen_out, "Output map JSON file")->required();
  gen_cmd->add_option("--seed", gen_seed, "Random seed");

  // render
  auto* render_cmd = app.add_subcommand("render", "Render a map (and plan/mission) to SVG");
  std::string render_map, render_plan, render_mission, render_out;
  render_cmd->add_option("--map", render_map, "Map JSON file")->required();
  render_cmd->add_option("--plan", render_plan, "Plan JSON file");
  render_cmd->add_option("--mission", render_mission, "Mission JSON file");
  render_cmd->add_option("--out", render_out, "Output SVG file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (plan_cmd->parsed()) {
      const mgp::MapBundle map = mgp::load_map(plan_map);
      const mgp::Mission mission = mgp::load_mission(plan_mission);
      mgp::MissionConfig cfg = make_config(plan_flags);
      cfg.method = mgp::method_from_name(plan_method);
      const mgp::Plan plan = mgp::run_mission(map, mission, cfg);
      mgp::save_plan(plan, plan_out);
      std::cout << "sequence:";
      for (const std::string& id : plan.sequence) std::cout << " " << id;
      std::cout << "\ntotal cost: " << plan.total_cost << "\npaths planned: "
                << plan.stats.paths_planned << " (+" << plan.stats.cost_matrix_paths
                << " for the cost matrix)\nplan written to " << plan_out << "\n";
    } else if (bench_cmd->parsed()) {
      const mgp::MapBundle map = mgp::load_map(bench_map);
      const mgp::Mission mission = mgp::load_mission(bench_mission);
      mgp::BenchOptions options;
      options.base = make_config(bench_flags);
      options.methods.clear();
      for (const std::string& m : bench_methods) {
        options.methods.push_back(mgp::method_from_name(m));
      }
      options.trials = bench_trials;
      options.seed = bench_flags.seed;
      options.parallel_trials = parallel_trials;
      options.checker_configs.push_back(options.base.checker);
      if (compare_checkers) {
        mgp::CheckerConfig full = options.base.checker;
        full.t_low = 0.0;
        full.t_high = 1.0;
        options.checker_configs.push_back(full);
      }
      const mgp::BenchReport report = mgp::run_benchmark(map, mission, options);
      std::ofstream out(bench_out);
      if (!out) throw mgp::InputError("bench: cannot write " + bench_out);
      out << mgp::bench_report_to_json(report);
      std::cout << mgp::bench_report_to_table(report);
    } else if (gen_cmd->parsed()) {
      const mgp::EnvSpec spec = mgp::load_env_spec(gen_spec);
      const mgp::MapBundle map = mgp::generate_synthetic_env(spec, gen_seed);
      mgp::save_map(map, gen_out);
      std::cout << "map written to " << gen_out << " (" << map.header().width << "x"
                << map.header().height << " cells)\n";
    } else if (render_cmd->parsed()) {
      const mgp::MapBundle map = mgp::load_map(render_map);
      std::optional<mgp::Mission> mission;
      std::optional<mgp::Plan> plan;
      if (!render_mission.empty()) mission = mgp::load_mission(render_mission);
      if (!render_plan.empty()) plan = mgp::load_plan(render_plan);
      mgp::render_svg(map, mission, plan, render_out);
      std::cout << "svg written to " << render_out << "\n";
    }
  } catch (const mgp::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const mgp::PlanningError& e) {
    std::cerr << "planning failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
