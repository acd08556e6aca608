#include "mgp/validity.h"

#include <algorithm>
#include <cmath>

#include "mgp/errors.h"

namespace mgp {

RobotFootprint::RobotFootprint(double length, double width)
    : length_(length), width_(width) {
  if (!(length > 0.0) || !(width > 0.0)) {
    throw InputError("footprint: length and width must be > 0");
  }
  if (width_ > length_) {
    std::swap(length_, width_);
    rotated_ = true;
  }
}

void validate_checker_config(const CheckerConfig& cfg) {
  if (!(cfg.t_low >= 0.0 && cfg.t_low <= cfg.t_high && cfg.t_high <= 1.0)) {
    throw InputError("checker config: need 0 <= t_low <= t_high <= 1");
  }
  if (cfg.max_depth < 0) throw InputError("checker config: max_depth must be >= 0");
  if (!(cfg.motion_step > 0.0)) throw InputError("checker config: motion_step must be > 0");
}

ValidityChecker::ValidityChecker(const MapBundle& map, RobotFootprint footprint,
                                 CheckerConfig cfg)
    : map_(&map), footprint_(footprint), cfg_(cfg) {
  validate_checker_config(cfg_);
}

BoxCheck ValidityChecker::check_box_collision(double cx, double cy, double half_len,
                                              double half_wid, double yaw, int depth,
                                              CheckStats& stats) const {
  ++stats.tsdf_queries;
  const auto d = map_->query_tsdf(cx, cy);
  if (!d) return BoxCheck::Collision;  // unknown space is not provably free

  const double r_in = half_wid;
  const double r_out = std::hypot(half_len, half_wid);
  if (*d < r_in) return BoxCheck::Collision;
  if (*d > r_out) return BoxCheck::Free;
  if (depth >= cfg_.max_depth) {
    // Leaf: only the outer sphere decides, and d <= r_out here.
    return BoxCheck::Collision;
  }

  // Split along the long axis into two half-length boxes, re-orienting the
  // children so their long side leads again.
  const double off = 0.5 * half_len;
  const double ox = std::cos(yaw) * off;
  const double oy = std::sin(yaw) * off;
  double c_len = 0.5 * half_len;
  double c_wid = half_wid;
  double c_yaw = yaw;
  if (c_wid > c_len) {
    std::swap(c_len, c_wid);
    c_yaw = wrap_angle(yaw + 0.5 * M_PI);
  }
  if (check_box_collision(cx - ox, cy - oy, c_len, c_wid, c_yaw, depth + 1, stats) ==
      BoxCheck::Collision) {
    return BoxCheck::Collision;
  }
  return check_box_collision(cx + ox, cy + oy, c_len, c_wid, c_yaw, depth + 1, stats);
}

bool ValidityChecker::check_state(const SE2State& s, CheckStats& stats) const {
  ++stats.traversability_queries;
  const auto trav = map_->query_traversability(s.x, s.y);
  if (!trav || *trav < cfg_.t_low) {
    ++stats.states_rejected_by_traversability;
    return false;
  }
  if (*trav > cfg_.t_high) {
    ++stats.states_accepted_by_traversability;
    return true;
  }
  ++stats.states_sent_to_volumetric;
  const double yaw = footprint_.rotated() ? wrap_angle(s.yaw + 0.5 * M_PI) : s.yaw;
  return check_box_collision(s.x, s.y, footprint_.half_length(), footprint_.half_width(),
                             yaw, 0, stats) == BoxCheck::Free;
}

bool ValidityChecker::check_motion(const SE2State& s1, const SE2State& s2,
                                   CheckStats& stats) const {
  const double trans = xy_distance(s1, s2);
  const double dyaw = angle_diff(s1.yaw, s2.yaw);
  // One sub-state per motion_step of translation, and per radian of rotation
  // so pure turns are still sampled.
  const double span = std::max(trans / cfg_.motion_step, dyaw);
  const int steps = std::max(1, static_cast<int>(std::ceil(span)));
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    if (!check_state(interpolate(s1, s2, t), stats)) return false;
  }
  return true;
}

}  // namespace mgp
