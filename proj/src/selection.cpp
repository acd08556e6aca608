#include "mgp/selection.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "mgp/errors.h"

namespace mgp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::pair<PoseId, PoseId> pair_key(PoseId a, PoseId b) { return std::minmax(a, b); }

std::string pair_name(PoseId a, PoseId b) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ")";
  return os.str();
}

using CostFn = std::function<double(PoseId, PoseId)>;

// Backward value recursion + forward argmin extraction (lowest index wins
// ties). Returns the chain; `total` gets the J0 optimum.
std::vector<std::size_t> dp_core(const SelectionProblem& problem, const CostFn& cost,
                                 double* total) {
  const std::size_t n = problem.num_stages();
  if (n == 0) {
    if (total) *total = 0.0;
    return {};
  }

  std::vector<std::vector<double>> value(n);  // value[i][p]: cost-to-go from stage i pose p
  value[n - 1].resize(problem.set_size(n - 1));
  for (std::size_t p = 0; p < problem.set_size(n - 1); ++p) {
    value[n - 1][p] = cost(problem.pose_id(n - 1, p), SelectionProblem::kStartId);
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    value[i].resize(problem.set_size(i));
    for (std::size_t p = 0; p < problem.set_size(i); ++p) {
      double best = kInf;
      for (std::size_t q = 0; q < problem.set_size(i + 1); ++q) {
        const double cand =
            cost(problem.pose_id(i, p), problem.pose_id(i + 1, q)) + value[i + 1][q];
        if (cand < best) best = cand;
      }
      value[i][p] = best;
    }
  }

  std::vector<std::size_t> chain(n);
  PoseId prev = SelectionProblem::kStartId;
  double j0 = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    double best = kInf;
    std::size_t pick = 0;
    for (std::size_t p = 0; p < problem.set_size(i); ++p) {
      const double cand = cost(prev, problem.pose_id(i, p)) + value[i][p];
      if (cand < best) {
        best = cand;
        pick = p;
      }
    }
    if (i == 0) j0 = best;
    chain[i] = pick;
    prev = problem.pose_id(i, pick);
  }
  if (total) *total = j0;
  return chain;
}

// Iteration safety cap. Every iteration either plans at least one new pair,
// or repeats the previous chain (termination), or selects an already fully
// planned chain, which forces a repeat one iteration later. The pair count
// plus two therefore bounds any honest run; the cap only trips on a bug.
std::size_t iteration_cap(const SelectionProblem& problem) {
  const std::size_t n = problem.num_stages();
  const std::size_t m = problem.max_set_size();
  const std::size_t pair_bound = (n > 1) ? m * m * (n - 1) + 2 * m : 2 * m;
  return std::max(m * n, pair_bound + 2);
}

// Plans the chain's consecutive segments; errors name the failing stage.
void plan_chain(const SelectionProblem& problem, const std::vector<std::size_t>& chain,
                EdgeSource& source) {
  const std::size_t n = problem.num_stages();
  PoseId prev = SelectionProblem::kStartId;
  for (std::size_t i = 0; i < n; ++i) {
    const PoseId cur = problem.pose_id(i, chain[i]);
    try {
      source.plan_pair(prev, cur);
    } catch (const PlanningError& e) {
      std::ostringstream os;
      os << "chain segment into stage " << i << " unreachable: " << e.what();
      throw PlanningError(os.str());
    }
    prev = cur;
  }
  try {
    source.plan_pair(prev, SelectionProblem::kStartId);
  } catch (const PlanningError& e) {
    std::ostringstream os;
    os << "chain segment back to start (after stage " << n - 1 << ") unreachable: " << e.what();
    throw PlanningError(os.str());
  }
}

}  // namespace

SelectionProblem::SelectionProblem(SE2State start, std::vector<std::vector<SE2State>> poi_sets,
                                   std::vector<std::size_t> toi_sequence)
    : sequence_(std::move(toi_sequence)) {
  poses_.push_back(start);
  for (std::size_t i = 0; i < poi_sets.size(); ++i) {
    if (poi_sets[i].empty()) {
      throw InputError("selection: stage " + std::to_string(i) + " has no PoI");
    }
    offsets_.push_back(static_cast<PoseId>(poses_.size()));
    set_sizes_.push_back(poi_sets[i].size());
    for (const SE2State& p : poi_sets[i]) poses_.push_back(p);
  }
}

std::size_t SelectionProblem::max_set_size() const {
  std::size_t m = 0;
  for (const std::size_t s : set_sizes_) m = std::max(m, s);
  return m;
}

PlannerEdgeSource::PlannerEdgeSource(const SelectionProblem& problem, Planner& planner,
                                     Roadmap& roadmap)
    : problem_(&problem), planner_(&planner), roadmap_(&roadmap) {}

double PlannerEdgeSource::lower_bound_or_cost(PoseId a, PoseId b) const {
  const auto it = cache_.find(pair_key(a, b));
  if (it != cache_.end()) return it->second.cost;
  return segment_cost(problem_->pose(a), problem_->pose(b), planner_->weights());
}

bool PlannerEdgeSource::is_planned(PoseId a, PoseId b) const {
  return cache_.count(pair_key(a, b)) > 0;
}

double PlannerEdgeSource::plan_pair(PoseId a, PoseId b) {
  const auto key = pair_key(a, b);
  const auto it = cache_.find(key);
  if (it != cache_.end()) return it->second.cost;

  PlanResult pr = planner_->plan(*roadmap_, problem_->pose(key.first), problem_->pose(key.second));
  stats_.merge(pr.stats);
  if (pr.status != PlanStatus::Solved) {
    throw PlanningError("pose pair " + pair_name(a, b) + " unreachable");
  }
  ++planned_count_;
  cache_.emplace(key, Entry{pr.cost, std::move(pr.path)});
  return cache_.at(key).cost;
}

Path PlannerEdgeSource::oriented_path(PoseId a, PoseId b) const {
  const auto it = cache_.find(pair_key(a, b));
  if (it == cache_.end()) return {};
  Path path = it->second.path;
  if (a > b) std::reverse(path.begin(), path.end());
  return path;
}

TableEdgeSource::TableEdgeSource(CostTable true_costs) : true_costs_(std::move(true_costs)) {
  for (const auto& entry : true_costs_) planned_[entry.first] = true;
  planned_count_ = planned_.size();
}

TableEdgeSource::TableEdgeSource(CostTable true_costs, CostTable lower_bounds)
    : true_costs_(std::move(true_costs)), lower_bounds_(std::move(lower_bounds)) {}

const double& TableEdgeSource::true_cost(PoseId a, PoseId b) const {
  const auto it = true_costs_.find(pair_key(a, b));
  if (it == true_costs_.end()) {
    throw InputError("missing cost for pair " + pair_name(a, b));
  }
  return it->second;
}

double TableEdgeSource::lower_bound_or_cost(PoseId a, PoseId b) const {
  if (is_planned(a, b)) return true_cost(a, b);
  const auto it = lower_bounds_.find(pair_key(a, b));
  if (it == lower_bounds_.end()) {
    throw InputError("missing lower bound for pair " + pair_name(a, b));
  }
  return it->second;
}

bool TableEdgeSource::is_planned(PoseId a, PoseId b) const {
  const auto it = planned_.find(pair_key(a, b));
  return it != planned_.end() && it->second;
}

double TableEdgeSource::plan_pair(PoseId a, PoseId b) {
  const double cost = true_cost(a, b);
  auto& flag = planned_[pair_key(a, b)];
  if (!flag) {
    flag = true;
    ++planned_count_;
  }
  return cost;
}

double chain_cost(const SelectionProblem& problem, const std::vector<std::size_t>& chain,
                  const EdgeSource& source) {
  const std::size_t n = problem.num_stages();
  if (n == 0) return 0.0;
  // Back-to-front accumulation, matching the DP recursion's associativity.
  double total = source.lower_bound_or_cost(problem.pose_id(n - 1, chain[n - 1]),
                                            SelectionProblem::kStartId);
  for (std::size_t i = n - 1; i-- > 0;) {
    total = source.lower_bound_or_cost(problem.pose_id(i, chain[i]),
                                       problem.pose_id(i + 1, chain[i + 1])) +
            total;
  }
  total = source.lower_bound_or_cost(SelectionProblem::kStartId, problem.pose_id(0, chain[0])) +
          total;
  return total;
}

Selection dp_select(const SelectionProblem& problem, const EdgeSource& complete_costs) {
  const CostFn cost = [&](PoseId a, PoseId b) {
    if (!complete_costs.is_planned(a, b)) {
      throw InputError("missing cost for pair " + pair_name(a, b));
    }
    return complete_costs.lower_bound_or_cost(a, b);
  };
  Selection sel;
  sel.chosen = dp_core(problem, cost, &sel.total_cost);
  sel.iterations = 1;
  return sel;
}

Selection idp_select(const SelectionProblem& problem, EdgeSource& source) {
  Selection sel;
  if (problem.num_stages() == 0) {
    sel.iterations = 1;
    return sel;
  }

  const CostFn lower = [&](PoseId a, PoseId b) { return source.lower_bound_or_cost(a, b); };
  const std::size_t planned_before = source.paths_planned();
  const std::size_t cap = iteration_cap(problem);

  std::vector<std::size_t> prev_chain;
  bool have_prev = false;
  double best_certified = kInf;
  std::vector<std::size_t> best_chain;

  for (;;) {
    ++sel.iterations;
    std::vector<std::size_t> chain = dp_core(problem, lower, nullptr);
    if (have_prev && chain == prev_chain) {
      sel.chosen = chain;
      sel.total_cost = chain_cost(problem, chain, source);  // fully planned by now
      break;
    }
    plan_chain(problem, chain, source);
    const double certified = chain_cost(problem, chain, source);
    if (certified < best_certified) {
      best_certified = certified;
      best_chain = chain;
    }
    prev_chain = std::move(chain);
    have_prev = true;
    if (sel.iterations >= cap) {
      // Safety net for pathological cycling; the best fully planned chain is
      // still a sound answer.
      sel.iteration_cap_hit = true;
      sel.chosen = best_chain;
      sel.total_cost = best_certified;
      break;
    }
  }
  sel.paths_planned = source.paths_planned() - planned_before;
  return sel;
}

Selection irba_select(const SelectionProblem& problem, EdgeSource& source) {
  Selection sel;
  const std::size_t n = problem.num_stages();
  if (n == 0) {
    sel.iterations = 1;
    return sel;
  }

  const CostFn lower = [&](PoseId a, PoseId b) { return source.lower_bound_or_cost(a, b); };
  const std::size_t planned_before = source.paths_planned();
  const std::size_t cap = iteration_cap(problem);

  // Same initialization as IDP's first iteration.
  std::vector<std::size_t> chain = dp_core(problem, lower, nullptr);
  plan_chain(problem, chain, source);
  sel.iterations = 1;

  for (;;) {
    ++sel.iterations;
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const PoseId prev_id =
          (i == 0) ? SelectionProblem::kStartId : problem.pose_id(i - 1, chain[i - 1]);
      const PoseId next_id =
          (i + 1 == n) ? SelectionProblem::kStartId : problem.pose_id(i + 1, chain[i + 1]);
      std::size_t pick = chain[i];
      double best = source.lower_bound_or_cost(prev_id, problem.pose_id(i, pick)) +
                    source.lower_bound_or_cost(problem.pose_id(i, pick), next_id);
      for (std::size_t p = 0; p < problem.set_size(i); ++p) {
        if (p == pick) continue;
        const double cand = source.lower_bound_or_cost(prev_id, problem.pose_id(i, p)) +
                            source.lower_bound_or_cost(problem.pose_id(i, p), next_id);
        if (cand < best) {  // ties keep the incumbent
          best = cand;
          pick = p;
        }
      }
      if (pick != chain[i]) {
        chain[i] = pick;
        changed = true;
      }
    }
    plan_chain(problem, chain, source);
    if (!changed) break;
    if (sel.iterations >= cap) {
      sel.iteration_cap_hit = true;
      break;
    }
  }

  sel.chosen = chain;
  sel.total_cost = chain_cost(problem, chain, source);
  sel.paths_planned = source.paths_planned() - planned_before;
  return sel;
}

void plan_all_pairs(const SelectionProblem& problem, EdgeSource& source) {
  const std::size_t n = problem.num_stages();
  if (n == 0) return;
  for (std::size_t p = 0; p < problem.set_size(0); ++p) {
    source.plan_pair(SelectionProblem::kStartId, problem.pose_id(0, p));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t p = 0; p < problem.set_size(i); ++p) {
      for (std::size_t q = 0; q < problem.set_size(i + 1); ++q) {
        source.plan_pair(problem.pose_id(i, p), problem.pose_id(i + 1, q));
      }
    }
  }
  for (std::size_t p = 0; p < problem.set_size(n - 1); ++p) {
    source.plan_pair(problem.pose_id(n - 1, p), SelectionProblem::kStartId);
  }
}

}  // namespace mgp
