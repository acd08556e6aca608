#pragma once

#include <cstddef>
#include <vector>

#include "mgp/mission.h"
#include "mgp/roadmap.h"
#include "mgp/tsp.h"

namespace mgp {

// The PoI standing in for a ToI in the sequencing stage: the one whose
// position is nearest to the ToI pose (ties go to the lowest PoI index).
// PoIs are collision-free and close to their ToI, so any is a faithful
// proxy; the ToI pose itself may be unreachable.
// Throws InputError if the ToI has no PoI.
const SE2State& representative_pose(const Mission& mission, std::size_t toi_index);

struct CostMatrixResult {
  CostMatrix matrix;
  PlanStats stats;        // merged over all pair queries
  std::size_t pairs_planned{0};
};

// Plans a collision-free path between the representatives of every unordered
// pair (including the start, index 0) on the shared roadmap and mirrors the
// cost; unreachable pairs become +infinity.
CostMatrixResult build_cost_matrix(const Mission& mission, Planner& planner,
                                   Roadmap& roadmap);

}  // namespace mgp
