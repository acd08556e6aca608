#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mgp/cost.h"
#include "mgp/path.h"
#include "mgp/rng.h"
#include "mgp/sampler.h"
#include "mgp/se2.h"
#include "mgp/validity.h"

namespace mgp {

enum class Validity : std::uint8_t { Unchecked, Valid, Invalid };

struct RoadmapVertex {
  SE2State state;
  Validity status{Validity::Unchecked};
};

// Undirected, lazily validated edge; cost is the cached segment_cost.
struct RoadmapEdge {
  std::uint32_t a{0};
  std::uint32_t b{0};
  double cost{0.0};
  Validity status{Validity::Unchecked};
};

// Incrementally grown graph of SE(2) states, reused across the queries of a
// mission. One planning session owns a roadmap at a time.
class Roadmap {
 public:
  explicit Roadmap(std::uint64_t rng_seed) : rng_(rng_seed), rng_seed_(rng_seed) {}

  std::size_t num_vertices() const { return vertices_.size(); }

  const std::vector<RoadmapVertex>& vertices() const { return vertices_; }
  const std::vector<RoadmapEdge>& edges() const { return edges_; }
  const std::vector<std::vector<std::uint32_t>>& adjacency() const { return adj_; }
  Rng& rng() { return rng_; }
  std::uint64_t rng_seed() const { return rng_seed_; }

 private:
  friend class Planner;

  std::vector<RoadmapVertex> vertices_;
  std::vector<RoadmapEdge> edges_;
  std::vector<std::vector<std::uint32_t>> adj_;  // per-vertex edge indices
  Rng rng_;
  std::uint64_t rng_seed_;
};

struct QueryConfig {
  std::uint32_t max_vertices{3000};  // cap on sampled roadmap growth
  std::uint32_t batch_size{256};
  std::optional<double> time_budget_s{};
  double k_neighbors_scale{1.5};
  std::uint64_t rng_seed{0};
};

void validate_query_config(const QueryConfig& cfg);

enum class PlanStatus { Solved, Unreachable, BudgetExhausted };

struct PlanStats {
  CheckStats checks;
  std::uint64_t samples_drawn{0};
  std::uint64_t vertices_added{0};
  std::uint64_t vertices_validated{0};
  std::uint64_t edges_validated{0};
  std::uint64_t candidate_paths{0};
  std::uint64_t candidate_path_edges{0};
  std::uint64_t searches{0};

  void merge(const PlanStats& o) {
    checks.merge(o.checks);
    samples_drawn += o.samples_drawn;
    vertices_added += o.vertices_added;
    vertices_validated += o.vertices_validated;
    edges_validated += o.edges_validated;
    candidate_paths += o.candidate_paths;
    candidate_path_edges += o.candidate_path_edges;
    searches += o.searches;
  }
};

struct PlanResult {
  Path path;
  double cost{0.0};
  PlanStatus status{PlanStatus::Unreachable};
  PlanStats stats;
};

// Lazy optimal roadmap planner with informed sampling. Vertices and edges
// are validated only when a candidate shortest path runs through them;
// between queries all collected validity knowledge stays in the roadmap.
class Planner {
 public:
  Planner(const ValidityChecker& checker, CostWeights weights, QueryConfig cfg);

  // Plans from start to goal, growing `roadmap` as the budget allows.
  // Throws PlanningError when either endpoint fails the validity check.
  PlanResult plan(Roadmap& roadmap, const SE2State& start, const SE2State& goal);

  // Inserts both endpoints (or matches existing vertices within 1e-9) and
  // connects them to their nearest neighbors. Endpoints must be valid.
  std::pair<std::uint32_t, std::uint32_t> add_query_endpoints(Roadmap& roadmap,
                                                              const SE2State& start,
                                                              const SE2State& goal);

  // Grows the roadmap with uniform samples up to `target` vertices without
  // answering a query; used to give a mission roadmap baseline coverage.
  void grow_uniform(Roadmap& roadmap, std::size_t target);

  const QueryConfig& config() const { return cfg_; }
  const CostWeights& weights() const { return weights_; }
  const ValidityChecker& checker() const { return checker_; }
  SampleBounds bounds() const { return bounds_; }

 private:
  std::uint32_t find_or_insert(Roadmap& rm, const SE2State& s, PlanStats& stats);
  void ensure_edge(Roadmap& rm, std::uint32_t a, std::uint32_t b);
  std::uint32_t insert_vertex(Roadmap& rm, const SE2State& s);
  void connect_vertex(Roadmap& rm, std::uint32_t id);
  std::size_t knn_count(std::size_t n) const;
  bool grow_batch(Roadmap& rm, const SE2State& s1, const SE2State& s2,
                  std::optional<double> best_cost, PlanStats& stats);
  std::vector<std::uint32_t> search(const Roadmap& rm, std::uint32_t start_id,
                                    std::uint32_t goal_id) const;
  bool validate_candidate(Roadmap& rm, const std::vector<std::uint32_t>& ids,
                          PlanStats& stats) const;

  const ValidityChecker& checker_;
  CostWeights weights_;
  QueryConfig cfg_;
  SampleBounds bounds_;

  // search scratch, reused across queries
  mutable std::vector<double> g_;
  mutable std::vector<std::uint32_t> parent_;
  mutable std::vector<std::uint8_t> closed_;
  mutable std::vector<std::pair<double, std::uint32_t>> knn_scratch_;
};

}  // namespace mgp
