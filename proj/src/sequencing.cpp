#include "mgp/sequencing.h"

#include <limits>

#include "mgp/errors.h"

namespace mgp {

const SE2State& representative_pose(const Mission& mission, std::size_t toi_index) {
  const Toi& toi = mission.tois.at(toi_index);
  if (toi.pois.empty()) {
    throw InputError("ToI '" + toi.id + "' has no PoI");
  }
  std::size_t best = 0;
  double best_dist = xy_distance(toi.pose, toi.pois[0]);
  for (std::size_t p = 1; p < toi.pois.size(); ++p) {
    const double d = xy_distance(toi.pose, toi.pois[p]);
    if (d < best_dist) {
      best_dist = d;
      best = p;
    }
  }
  return toi.pois[best];
}

CostMatrixResult build_cost_matrix(const Mission& mission, Planner& planner,
                                   Roadmap& roadmap) {
  const std::size_t n = mission.tois.size();
  CostMatrixResult result;
  result.matrix = CostMatrix(n);

  std::vector<const SE2State*> reps(n + 1);
  reps[0] = &mission.start;
  for (std::size_t i = 0; i < n; ++i) reps[i + 1] = &representative_pose(mission, i);

  for (std::size_t i = 0; i + 1 <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      PlanResult pr;
      try {
        pr = planner.plan(roadmap, *reps[i], *reps[j]);
      } catch (const PlanningError& e) {
        throw PlanningError("cost matrix pair (" + std::to_string(i) + ", " +
                            std::to_string(j) + "): " + e.what());
      }
      ++result.pairs_planned;
      result.stats.merge(pr.stats);
      const double cost = (pr.status == PlanStatus::Solved)
                              ? pr.cost
                              : std::numeric_limits<double>::infinity();
      result.matrix.at(i, j) = cost;
      result.matrix.at(j, i) = cost;
    }
  }
  return result;
}

}  // namespace mgp
