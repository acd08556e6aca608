#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mgp/path.h"
#include "mgp/roadmap.h"
#include "mgp/se2.h"

namespace mgp {

using PoseId = std::uint32_t;

// One PoI choice per stage of a fixed visiting sequence: the chain
// start -> p1 -> ... -> pN -> start. Poses get flat ids with the start at 0.
class SelectionProblem {
 public:
  SelectionProblem() = default;
  SelectionProblem(SE2State start, std::vector<std::vector<SE2State>> poi_sets,
                   std::vector<std::size_t> toi_sequence = {});

  std::size_t num_stages() const { return set_sizes_.size(); }
  std::size_t set_size(std::size_t stage) const { return set_sizes_[stage]; }
  std::size_t max_set_size() const;

  static constexpr PoseId kStartId = 0;
  PoseId pose_id(std::size_t stage, std::size_t poi_index) const {
    return offsets_[stage] + static_cast<PoseId>(poi_index);
  }
  const SE2State& pose(PoseId id) const { return poses_[id]; }

  // Original ToI indices behind each stage (empty if not provided).
  const std::vector<std::size_t>& sequence() const { return sequence_; }

 private:
  std::vector<SE2State> poses_;
  std::vector<PoseId> offsets_;
  std::vector<std::size_t> set_sizes_;
  std::vector<std::size_t> sequence_;
};

// Cost oracle over pose pairs. For a planned pair it answers the true
// collision-free path cost; otherwise the straight-line segment cost, which
// is a lower bound on any collision-free path cost (exponent 1).
class EdgeSource {
 public:
  virtual ~EdgeSource() = default;

  virtual double lower_bound_or_cost(PoseId a, PoseId b) const = 0;
  virtual bool is_planned(PoseId a, PoseId b) const = 0;

  // Ensures the pair is planned and returns its true cost.
  // Throws PlanningError if the pair is unreachable.
  virtual double plan_pair(PoseId a, PoseId b) = 0;

  // Waypoints of the planned pair oriented a -> b; empty if unplanned or the
  // source carries no geometry.
  virtual Path oriented_path(PoseId a, PoseId b) const = 0;

  virtual std::size_t paths_planned() const = 0;
};

// Live source: plans pairs on the shared roadmap on demand and caches them.
class PlannerEdgeSource : public EdgeSource {
 public:
  PlannerEdgeSource(const SelectionProblem& problem, Planner& planner, Roadmap& roadmap);

  double lower_bound_or_cost(PoseId a, PoseId b) const override;
  bool is_planned(PoseId a, PoseId b) const override;
  double plan_pair(PoseId a, PoseId b) override;
  Path oriented_path(PoseId a, PoseId b) const override;
  std::size_t paths_planned() const override { return planned_count_; }

  const PlanStats& stats() const { return stats_; }

 private:
  struct Entry {
    double cost;
    Path path;  // stored in (min id) -> (max id) direction
  };

  const SelectionProblem* problem_;
  Planner* planner_;
  Roadmap* roadmap_;
  std::map<std::pair<PoseId, PoseId>, Entry> cache_;
  std::size_t planned_count_{0};
  PlanStats stats_;
};

// Test/injection source backed by explicit tables: every listed pair counts
// as planned at its true cost; a separate lower-bound table (optional)
// stands in for unplanned pairs.
class TableEdgeSource : public EdgeSource {
 public:
  using CostTable = std::map<std::pair<PoseId, PoseId>, double>;

  // All pairs in `true_costs` are planned up front (a complete cache).
  explicit TableEdgeSource(CostTable true_costs);

  // Pairs become planned (revealing their true cost) only via plan_pair;
  // until then lower_bound_or_cost answers from `lower_bounds`.
  TableEdgeSource(CostTable true_costs, CostTable lower_bounds);

  double lower_bound_or_cost(PoseId a, PoseId b) const override;
  bool is_planned(PoseId a, PoseId b) const override;
  double plan_pair(PoseId a, PoseId b) override;
  Path oriented_path(PoseId, PoseId) const override { return {}; }
  std::size_t paths_planned() const override { return planned_count_; }

 private:
  const double& true_cost(PoseId a, PoseId b) const;

  CostTable true_costs_;
  CostTable lower_bounds_;
  std::map<std::pair<PoseId, PoseId>, bool> planned_;
  std::size_t planned_count_{0};
};

struct Selection {
  std::vector<std::size_t> chosen;  // PoI index per stage, in visit order
  double total_cost{0.0};
  std::size_t paths_planned{0};
  std::size_t iterations{0};
  bool iteration_cap_hit{false};
};

// Exact backward value recursion with forward argmin extraction over a
// complete cost source (every consecutive-stage pair planned). Ties pick the
// lowest PoI index, which makes the result equal to exhaustive enumeration
// in lexicographic order. Throws InputError naming any missing pair.
Selection dp_select(const SelectionProblem& problem, const EdgeSource& complete_costs);

// Iterative DP: runs the DP on lower_bound_or_cost, plans only the chain it
// selected, and repeats until the selection is a fixed point. Given the same
// pair costs this preserves the DP optimum while planning far fewer paths.
Selection idp_select(const SelectionProblem& problem, EdgeSource& source);

// Baseline: same initialization as IDP, then coordinate-descent sweeps that
// re-choose each stage against its two fixed neighbors only. Locally optimal;
// can stall arbitrarily far from the DP optimum.
Selection irba_select(const SelectionProblem& problem, EdgeSource& source);

// Plans every consecutive-stage pair (start->P1, Pi->Pi+1, PN->start);
// the full-DP workload of M^2 (N-1) + 2 M pairs for equal set sizes.
void plan_all_pairs(const SelectionProblem& problem, EdgeSource& source);

// Certified cost of a fully planned chain, accumulated back-to-front in the
// same association order as the DP so equality comparisons stay exact.
double chain_cost(const SelectionProblem& problem, const std::vector<std::size_t>& chain,
                  const EdgeSource& source);

}  // namespace mgp
