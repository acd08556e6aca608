#include "mgp/cost.h"

#include "mgp/errors.h"

namespace mgp {

void validate_weights(const CostWeights& w) {
  if (!(w.w_t > 0.0)) {
    throw InputError("cost weights: w_t must be > 0");
  }
  if (!(w.w_r >= 0.0)) {
    throw InputError("cost weights: w_r must be >= 0");
  }
  if (w.exponent != 1 && w.exponent != 2) {
    throw InputError("cost weights: exponent must be 1 or 2");
  }
}

double segment_cost(const SE2State& s1, const SE2State& s2, const CostWeights& w) {
  const double d = xy_distance(s1, s2);
  const double trans = (w.exponent == 2) ? d * d : d;
  return w.w_t * trans + w.w_r * angle_diff(s1.yaw, s2.yaw);
}

}  // namespace mgp
