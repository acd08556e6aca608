#pragma once

#include <cstddef>
#include <vector>

namespace mgp {

// Pairwise tour costs between the start (row/col 0) and n targets. Entries
// may be +infinity for unreachable pairs; the diagonal is zero. Matrices
// built from one shared roadmap are symmetric.
struct CostMatrix {
  std::size_t n{0};
  std::vector<double> entries;  // (n+1) x (n+1), row-major

  explicit CostMatrix(std::size_t n_targets = 0)
      : n(n_targets), entries((n_targets + 1) * (n_targets + 1), 0.0) {}

  double& at(std::size_t i, std::size_t j) { return entries[i * (n + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return entries[i * (n + 1) + j]; }
};

// Closed-tour visiting order: indices 1..n in visit sequence, start implicit
// at both ends.
struct Tour {
  std::vector<std::size_t> order;
  double cost{0.0};
};

double tour_cost(const CostMatrix& m, const std::vector<std::size_t>& order);

// Held-Karp dynamic program, exact for n <= 15. Among cost ties the
// lexicographically smallest order is returned, which keeps the output
// identical to exhaustive enumeration in first-improvement order.
// Throws InputError beyond the size limit, PlanningError("disconnected ToI")
// when no finite closed tour exists.
Tour solve_tsp_exact(const CostMatrix& m);

// Nearest-neighbor construction followed by best-improvement 2-opt, for
// symmetric matrices. Never better than the exact solver; deterministic.
Tour solve_tsp_heuristic(const CostMatrix& m);

}  // namespace mgp
