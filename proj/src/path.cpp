#include "mgp/path.h"

#include <cmath>

#include "mgp/errors.h"

namespace mgp {

double path_cost(const Path& path, const CostWeights& w) {
  if (path.empty()) {
    throw InputError("empty path");
  }
  double cost = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    cost += segment_cost(path[i], path[i + 1], w);
  }
  return cost;
}

Path align_headings(const Path& path, const std::set<std::size_t>& fixed_indices) {
  Path out = path;
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (fixed_indices.count(i)) continue;
    double dx, dy;
    if (i + 1 < n) {
      dx = path[i + 1].x - path[i].x;
      dy = path[i + 1].y - path[i].y;
    } else if (i > 0) {
      dx = path[i].x - path[i - 1].x;
      dy = path[i].y - path[i - 1].y;
    } else {
      continue;  // single waypoint, nothing to align with
    }
    if (dx == 0.0 && dy == 0.0) {
      // Degenerate displacement: carry the earlier waypoint's yaw forward.
      if (i > 0) out[i].yaw = out[i - 1].yaw;
      continue;
    }
    out[i].yaw = wrap_angle(std::atan2(dy, dx));
  }
  return out;
}

}  // namespace mgp
