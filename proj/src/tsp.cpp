#include "mgp/tsp.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgp/errors.h"

namespace mgp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_connectivity(const CostMatrix& m) {
  for (std::size_t i = 1; i <= m.n; ++i) {
    bool any_finite = false;
    for (std::size_t j = 0; j <= m.n && !any_finite; ++j) {
      if (j != i && std::isfinite(m.at(i, j))) any_finite = true;
    }
    if (!any_finite) throw PlanningError("disconnected ToI");
  }
}

}  // namespace

double tour_cost(const CostMatrix& m, const std::vector<std::size_t>& order) {
  double cost = 0.0;
  std::size_t prev = 0;
  for (const std::size_t city : order) {
    cost += m.at(prev, city);
    prev = city;
  }
  cost += m.at(prev, 0);
  return cost;
}

Tour solve_tsp_exact(const CostMatrix& m) {
  const std::size_t n = m.n;
  if (n > 15) throw InputError("exact solver size limit (n <= 15)");
  check_connectivity(m);
  if (n == 0) return Tour{{}, 0.0};

  // h[S][j]: cheapest cost of leaving j, visiting exactly the cities in S,
  // and returning to 0. Answer is h[full][0].
  const std::size_t n_sets = std::size_t{1} << n;
  std::vector<double> h(n_sets * (n + 1), kInf);
  auto at = [&](std::size_t set, std::size_t j) -> double& { return h[set * (n + 1) + j]; };

  for (std::size_t j = 0; j <= n; ++j) at(0, j) = m.at(j, 0);
  for (std::size_t set = 1; set < n_sets; ++set) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (j > 0 && (set & (std::size_t{1} << (j - 1)))) continue;  // j not yet visited
      double best = kInf;
      for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t bit = std::size_t{1} << (k - 1);
        if (!(set & bit)) continue;
        const double cand = m.at(j, k) + at(set ^ bit, k);
        if (cand < best) best = cand;
      }
      at(set, j) = best;
    }
  }

  const std::size_t full = n_sets - 1;
  if (!std::isfinite(at(full, 0))) throw PlanningError("disconnected ToI");

  Tour tour;
  tour.cost = at(full, 0);
  std::size_t set = full;
  std::size_t j = 0;
  while (set != 0) {
    // Smallest next city that preserves optimality; the equality is exact
    // because it re-evaluates the very sums the DP minimized over.
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t bit = std::size_t{1} << (k - 1);
      if (!(set & bit)) continue;
      if (m.at(j, k) + at(set ^ bit, k) == at(set, j)) {
        tour.order.push_back(k);
        set ^= bit;
        j = k;
        break;
      }
    }
  }
  return tour;
}

Tour solve_tsp_heuristic(const CostMatrix& m) {
  const std::size_t n = m.n;
  check_connectivity(m);
  if (n == 0) return Tour{{}, 0.0};

  // Nearest-neighbor construction from the start.
  std::vector<bool> visited(n + 1, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  std::size_t current = 0;
  for (std::size_t step = 0; step < n; ++step) {
    double best = kInf;
    std::size_t pick = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (visited[k]) continue;
      if (m.at(current, k) < best) {
        best = m.at(current, k);
        pick = k;
      }
    }
    if (pick == 0) throw PlanningError("disconnected ToI");
    visited[pick] = true;
    order.push_back(pick);
    current = pick;
  }

  // Best-improvement 2-opt until locally optimal. Reversing order[i..j]
  // swaps two tour edges; the interior cost is unchanged for symmetric m.
  for (;;) {
    double best_delta = -1e-12;
    std::size_t best_i = 0, best_j = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t before = (i == 0) ? 0 : order[i - 1];
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t after = (j + 1 == n) ? 0 : order[j + 1];
        const double delta = m.at(before, order[j]) + m.at(order[i], after) -
                             m.at(before, order[i]) - m.at(order[j], after);
        if (delta < best_delta) {
          best_delta = delta;
          best_i = i;
          best_j = j;
          found = true;
        }
      }
    }
    if (!found) break;
    std::reverse(order.begin() + best_i, order.begin() + best_j + 1);
  }

  Tour tour;
  tour.cost = tour_cost(m, order);
  tour.order = std::move(order);
  return tour;
}

}  // namespace mgp
