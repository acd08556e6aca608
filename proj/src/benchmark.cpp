#include "mgp/benchmark.h"

#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "mgp/errors.h"

namespace mgp {

namespace {

using nlohmann::ordered_json;

BenchTrial run_trial(const MapBundle& map, const Mission& mission, const MissionConfig& cfg,
                     SelectionMethod method, std::uint64_t seed) {
  BenchTrial trial;
  trial.method = method_name(method);
  trial.t_low = cfg.checker.t_low;
  trial.t_high = cfg.checker.t_high;
  trial.seed = seed;

  MissionConfig run_cfg = cfg;
  run_cfg.method = method;
  run_cfg.query.rng_seed = seed;

  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Plan plan = run_mission(map, mission, run_cfg);
    trial.total_cost = plan.total_cost;
    trial.paths_planned = plan.stats.paths_planned;
    trial.cost_matrix_paths = plan.stats.cost_matrix_paths;
    trial.tsdf_queries = plan.stats.tsdf_queries;
    trial.traversability_queries = plan.stats.traversability_queries;
    trial.idp_iterations = plan.stats.idp_iterations;
  } catch (const std::exception& e) {
    trial.failed = true;
    trial.error = e.what();
  }
  trial.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return trial;
}

void accumulate(BenchReport& report, const std::string& method, const CheckerConfig& checker) {
  BenchAggregate agg;
  agg.method = method;
  agg.t_low = checker.t_low;
  agg.t_high = checker.t_high;

  std::vector<double> times, costs;
  for (const BenchTrial& t : report.trials) {
    if (t.method != method || t.t_low != checker.t_low || t.t_high != checker.t_high) continue;
    if (t.failed) {
      ++agg.trials_failed;
      continue;
    }
    ++agg.trials_ok;
    times.push_back(t.wall_time_s);
    costs.push_back(t.total_cost);
    agg.paths_planned_mean += static_cast<double>(t.paths_planned);
    agg.tsdf_queries_mean += static_cast<double>(t.tsdf_queries);
    agg.traversability_queries_mean += static_cast<double>(t.traversability_queries);
  }
  if (agg.trials_ok > 0) {
    const double n = static_cast<double>(agg.trials_ok);
    auto mean_std = [&](const std::vector<double>& xs, double& mean, double& stddev) {
      mean = 0.0;
      for (const double x : xs) mean += x;
      mean /= n;
      double var = 0.0;
      for (const double x : xs) var += (x - mean) * (x - mean);
      stddev = std::sqrt(var / n);
    };
    mean_std(times, agg.time_mean, agg.time_std);
    mean_std(costs, agg.cost_mean, agg.cost_std);
    agg.paths_planned_mean /= n;
    agg.tsdf_queries_mean /= n;
    agg.traversability_queries_mean /= n;
  }
  report.aggregates.push_back(agg);
}

}  // namespace

const char* method_name(SelectionMethod method) {
  switch (method) {
    case SelectionMethod::Idp:
      return "idp";
    case SelectionMethod::Dp:
      return "dp";
    case SelectionMethod::Irba:
      return "irba";
  }
  return "?";
}

SelectionMethod method_from_name(const std::string& name) {
  if (name == "idp") return SelectionMethod::Idp;
  if (name == "dp") return SelectionMethod::Dp;
  if (name == "irba") return SelectionMethod::Irba;
  throw InputError("unknown method '" + name + "' (expected idp, dp or irba)");
}

BenchReport run_benchmark(const MapBundle& map, const Mission& mission,
                          const BenchOptions& options) {
  if (options.methods.empty()) throw InputError("benchmark: no methods given");
  if (options.trials < 1) throw InputError("benchmark: trials must be >= 1");

  std::vector<CheckerConfig> checkers = options.checker_configs;
  if (checkers.empty()) checkers.push_back(options.base.checker);

  BenchReport report;
  for (const CheckerConfig& checker : checkers) {
    MissionConfig cfg = options.base;
    cfg.checker = checker;
    for (const SelectionMethod method : options.methods) {
      if (options.parallel_trials) {
        std::vector<std::future<BenchTrial>> futures;
        futures.reserve(options.trials);
        for (std::size_t t = 0; t < options.trials; ++t) {
          futures.push_back(std::async(std::launch::async, run_trial, std::cref(map),
                                       std::cref(mission), cfg, method, options.seed + t));
        }
        for (auto& f : futures) report.trials.push_back(f.get());
      } else {
        for (std::size_t t = 0; t < options.trials; ++t) {
          report.trials.push_back(run_trial(map, mission, cfg, method, options.seed + t));
        }
      }
      accumulate(report, method_name(method), checker);
    }
  }
  return report;
}

std::string bench_report_to_json(const BenchReport& report) {
  ordered_json j;
  ordered_json trials = ordered_json::array();
  for (const BenchTrial& t : report.trials) {
    ordered_json row;
    row["method"] = t.method;
    row["t_low"] = t.t_low;
    row["t_high"] = t.t_high;
    row["seed"] = t.seed;
    row["failed"] = t.failed;
    if (t.failed) row["error"] = t.error;
    row["wall_time_s"] = t.wall_time_s;
    row["total_cost"] = t.total_cost;
    row["paths_planned"] = t.paths_planned;
    row["cost_matrix_paths"] = t.cost_matrix_paths;
    row["tsdf_queries"] = t.tsdf_queries;
    row["traversability_queries"] = t.traversability_queries;
    row["idp_iterations"] = t.idp_iterations;
    trials.push_back(row);
  }
  j["trials"] = trials;
  ordered_json aggregates = ordered_json::array();
  for (const BenchAggregate& a : report.aggregates) {
    ordered_json row;
    row["method"] = a.method;
    row["t_low"] = a.t_low;
    row["t_high"] = a.t_high;
    row["trials_ok"] = a.trials_ok;
    row["trials_failed"] = a.trials_failed;
    row["time_mean"] = a.time_mean;
    row["time_std"] = a.time_std;
    row["cost_mean"] = a.cost_mean;
    row["cost_std"] = a.cost_std;
    row["paths_planned_mean"] = a.paths_planned_mean;
    row["tsdf_queries_mean"] = a.tsdf_queries_mean;
    row["traversability_queries_mean"] = a.traversability_queries_mean;
    aggregates.push_back(row);
  }
  j["aggregates"] = aggregates;
  return j.dump(2) + "\n";
}

std::string bench_report_to_table(const BenchReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "method" << std::right << std::setw(7) << "t_low"
     << std::setw(7) << "t_high" << std::setw(5) << "ok" << std::setw(5) << "fail"
     << std::setw(12) << "time_mean" << std::setw(11) << "time_std" << std::setw(12)
     << "cost_mean" << std::setw(11) << "cost_std" << std::setw(9) << "paths"
     << std::setw(12) << "tsdf_q" << std::setw(12) << "trav_q" << "\n";
  os << std::string(109, '-') << "\n";
  os << std::fixed;
  for (const BenchAggregate& a : report.aggregates) {
    os << std::left << std::setw(6) << a.method << std::right << std::setprecision(2)
       << std::setw(7) << a.t_low << std::setw(7) << a.t_high << std::setw(5) << a.trials_ok
       << std::setw(5) << a.trials_failed << std::setprecision(3) << std::setw(12)
       << a.time_mean << std::setw(11) << a.time_std << std::setw(12) << a.cost_mean
       << std::setw(11) << a.cost_std << std::setprecision(1) << std::setw(9)
       << a.paths_planned_mean << std::setw(12) << a.tsdf_queries_mean << std::setw(12)
       << a.traversability_queries_mean << "\n";
  }
  return os.str();
}

}  // namespace mgp
