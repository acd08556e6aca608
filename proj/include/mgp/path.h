#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "mgp/cost.h"
#include "mgp/se2.h"

namespace mgp {

// A path is a non-empty waypoint sequence. A single waypoint has cost 0.
using Path = std::vector<SE2State>;

// Sum of segment_cost over consecutive waypoint pairs.
// Throws InputError("empty path") if the path has no waypoints.
double path_cost(const Path& path, const CostWeights& w);

// Rewrites each non-fixed waypoint's yaw to point at the next waypoint (the
// last non-fixed waypoint takes the direction from its predecessor). Fixed
// indices keep their yaw; positions are never touched. Zero-displacement
// pairs copy the previously assigned yaw forward.
Path align_headings(const Path& path, const std::set<std::size_t>& fixed_indices);

}  // namespace mgp
