#include "mgp/se2.h"

#include <stdexcept>

namespace mgp {

double wrap_angle(double a) {
  double w = a - 2.0 * M_PI * std::floor((a + M_PI) / (2.0 * M_PI));
  // Rounding can land exactly on pi for inputs just below a wrap boundary.
  if (w >= M_PI) {
    w -= 2.0 * M_PI;
  } else if (w < -M_PI) {
    w += 2.0 * M_PI;
  }
  return w;
}

double angle_diff(double psi1, double psi2) {
  const double d = std::fabs(wrap_angle(psi1) - wrap_angle(psi2));
  return std::min(d, 2.0 * M_PI - d);
}

double shortest_arc(double from, double to) {
  return wrap_angle(wrap_angle(to) - wrap_angle(from));
}

SE2State interpolate(const SE2State& s1, const SE2State& s2, double t) {
  if (t < 0.0 || t > 1.0) {
    throw std::invalid_argument("interpolate: t outside [0, 1]");
  }
  if (t == 0.0) return s1;
  if (t == 1.0) return s2;
  return SE2State{s1.x + t * (s2.x - s1.x),
                  s1.y + t * (s2.y - s1.y),
                  s1.yaw + t * shortest_arc(s1.yaw, s2.yaw)};
}

}  // namespace mgp
