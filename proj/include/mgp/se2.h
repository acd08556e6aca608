#pragma once

#include <cmath>

namespace mgp {

// Wraps an angle to [-pi, pi).
double wrap_angle(double a);

// Unsigned circular distance between two angles, in [0, pi].
double angle_diff(double psi1, double psi2);

// Signed rotation that takes `from` to `to` along the shorter arc, in [-pi, pi).
double shortest_arc(double from, double to);

// Planar robot pose. Yaw is kept normalized to [-pi, pi) by every
// constructing or mutating operation in this library.
struct SE2State {
  double x{0.0};
  double y{0.0};
  double yaw{0.0};

  SE2State() = default;
  SE2State(double x_in, double y_in, double yaw_in)
      : x(x_in), y(y_in), yaw(wrap_angle(yaw_in)) {}

  bool operator==(const SE2State& o) const {
    return x == o.x && y == o.y && yaw == o.yaw;
  }
};

inline double xy_distance(const SE2State& a, const SE2State& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Linear interpolation in (x, y), shorter-arc interpolation in yaw.
// t must lie in [0, 1]; t=0 yields s1 and t=1 yields s2.
SE2State interpolate(const SE2State& s1, const SE2State& s2, double t);

}  // namespace mgp
