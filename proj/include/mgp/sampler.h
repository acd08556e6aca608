#pragma once

#include <cstdint>
#include <optional>

#include "mgp/cost.h"
#include "mgp/rng.h"
#include "mgp/se2.h"

namespace mgp {

struct SampleBounds {
  double min_x{0.0};
  double max_x{1.0};
  double min_y{0.0};
  double max_y{1.0};
};

// True iff (x, y) can still be part of a path between s1 and s2 cheaper than
// best_cost, i.e. lies strictly inside the informed region. Any state with a
// position outside this region satisfies
//   segment_cost(s1, s) + segment_cost(s, s2) >= best_cost
// because the yaw terms alone contribute at least w_r * d(yaw1, yaw2).
bool informed_region_contains(const SE2State& s1, const SE2State& s2, double best_cost,
                              const CostWeights& w, double x, double y);

// Informed SE(2) sampler. Without an incumbent cost it draws (x, y) uniformly
// in `bounds`; with one it draws uniformly in the informed region clipped to
// the bounds. Yaw is uniform in [-pi, pi). Returns nullopt when the region is
// empty (the incumbent cannot be improved) or when no draw landed in
// region ∩ bounds within the retry budget. `attempts`, when given, is
// incremented once per draw, including rejected ones.
std::optional<SE2State> sample_se2(const SE2State& s1, const SE2State& s2,
                                   std::optional<double> best_cost,
                                   const SampleBounds& bounds, const CostWeights& w,
                                   Rng& rng, std::uint64_t* attempts = nullptr);

}  // namespace mgp
