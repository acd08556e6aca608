#include "mgp/sampler.h"

#include <cmath>

namespace mgp {

namespace {

constexpr int kMaxRejections = 10000;

double yaw_uniform(Rng& rng) { return rng.uniform(-M_PI, M_PI); }

bool in_bounds(const SampleBounds& b, double x, double y) {
  return x >= b.min_x && x <= b.max_x && y >= b.min_y && y <= b.max_y;
}

}  // namespace

bool informed_region_contains(const SE2State& s1, const SE2State& s2, double best_cost,
                              const CostWeights& w, double x, double y) {
  const double budget = best_cost - w.w_r * angle_diff(s1.yaw, s2.yaw);
  const double d1 = std::hypot(x - s1.x, y - s1.y);
  const double d2 = std::hypot(x - s2.x, y - s2.y);
  if (w.exponent == 2) {
    return w.w_t * (d1 * d1 + d2 * d2) < budget;
  }
  return w.w_t * (d1 + d2) < budget;
}

std::optional<SE2State> sample_se2(const SE2State& s1, const SE2State& s2,
                                   std::optional<double> best_cost,
                                   const SampleBounds& bounds, const CostWeights& w,
                                   Rng& rng, std::uint64_t* attempts) {
  auto bump = [&] {
    if (attempts) ++*attempts;
  };

  if (!best_cost) {
    bump();
    return SE2State{rng.uniform(bounds.min_x, bounds.max_x),
                    rng.uniform(bounds.min_y, bounds.max_y), yaw_uniform(rng)};
  }

  const double c_r = w.w_r * angle_diff(s1.yaw, s2.yaw);
  const double budget = (*best_cost - c_r) / w.w_t;
  const double focal_dist = xy_distance(s1, s2);
  const double mid_x = 0.5 * (s1.x + s2.x);
  const double mid_y = 0.5 * (s1.y + s2.y);

  if (w.exponent == 2) {
    // Sum of squared distances below budget is a disc around the midpoint.
    const double r_sq = 0.5 * (budget - 0.5 * focal_dist * focal_dist);
    if (!(r_sq > 0.0)) return std::nullopt;
    const double radius = std::sqrt(r_sq);
    for (int i = 0; i < kMaxRejections; ++i) {
      bump();
      const double ang = rng.uniform(0.0, 2.0 * M_PI);
      const double rad = radius * std::sqrt(rng.uniform01());
      const double x = mid_x + rad * std::cos(ang);
      const double y = mid_y + rad * std::sin(ang);
      if (in_bounds(bounds, x, y) && informed_region_contains(s1, s2, *best_cost, w, x, y)) {
        return SE2State{x, y, yaw_uniform(rng)};
      }
    }
    return std::nullopt;
  }

  // Sum of distances below budget is an ellipse with foci at the endpoints.
  if (!(budget > focal_dist)) return std::nullopt;
  const double a = 0.5 * budget;
  const double c = 0.5 * focal_dist;
  const double b = std::sqrt(std::max(a * a - c * c, 0.0));
  const double rot = (focal_dist > 0.0) ? std::atan2(s2.y - s1.y, s2.x - s1.x) : 0.0;
  const double cos_r = std::cos(rot);
  const double sin_r = std::sin(rot);

  for (int i = 0; i < kMaxRejections; ++i) {
    bump();
    const double ang = rng.uniform(0.0, 2.0 * M_PI);
    const double rad = std::sqrt(rng.uniform01());
    const double ex = a * rad * std::cos(ang);
    const double ey = b * rad * std::sin(ang);
    const double x = mid_x + cos_r * ex - sin_r * ey;
    const double y = mid_y + sin_r * ex + cos_r * ey;
    // The transform can land a boundary point a rounding error outside the
    // strict region; re-test with the membership formula before accepting.
    if (in_bounds(bounds, x, y) && informed_region_contains(s1, s2, *best_cost, w, x, y)) {
      return SE2State{x, y, yaw_uniform(rng)};
    }
  }
  return std::nullopt;
}

}  // namespace mgp
