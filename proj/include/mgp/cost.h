#pragma once

#include "mgp/se2.h"

namespace mgp {

// Weights of the SE(2) path cost c(s1, s2) = w_t * |dxy|^exponent + w_r * d(yaw1, yaw2).
//
// exponent 1 (default) keeps the cost additive along straight lines, which
// makes it a true metric for w_t, w_r > 0 and makes the straight-line cost a
// lower bound on any collision-free path cost. exponent 2 (squared
// translation) is available for comparison but none of the lower-bound or
// metric guarantees hold for it. w_r = 0 is accepted as a degenerate
// translation-only pseudometric.
struct CostWeights {
  double w_t{1.0};
  double w_r{1.0};
  int exponent{1};
};

// Throws InputError if w_t <= 0, w_r < 0, or exponent not in {1, 2}.
void validate_weights(const CostWeights& w);

double segment_cost(const SE2State& s1, const SE2State& s2, const CostWeights& w);

}  // namespace mgp
