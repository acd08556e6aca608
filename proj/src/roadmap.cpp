#include "mgp/roadmap.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <tuple>

#include "mgp/errors.h"

namespace mgp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMatchTolerance = 1e-9;
constexpr std::uint32_t kNoVertex = std::numeric_limits<std::uint32_t>::max();

bool states_match(const SE2State& a, const SE2State& b) {
  return std::fabs(a.x - b.x) <= kMatchTolerance && std::fabs(a.y - b.y) <= kMatchTolerance &&
         angle_diff(a.yaw, b.yaw) <= kMatchTolerance;
}

}  // namespace

void validate_query_config(const QueryConfig& cfg) {
  if (cfg.batch_size < 1 || cfg.max_vertices < cfg.batch_size) {
    throw InputError("query config: need max_vertices >= batch_size >= 1");
  }
  if (!(cfg.k_neighbors_scale > 0.0)) {
    throw InputError("query config: k_neighbors_scale must be > 0");
  }
}

Planner::Planner(const ValidityChecker& checker, CostWeights weights, QueryConfig cfg)
    : checker_(checker), weights_(weights), cfg_(cfg) {
  validate_weights(weights_);
  validate_query_config(cfg_);
  const GridHeader& h = checker.map().header();
  bounds_ = SampleBounds{h.min_x(), h.max_x(), h.min_y(), h.max_y()};
}

std::size_t Planner::knn_count(std::size_t n) const {
  if (n < 2) return 0;
  // PRM* connection count for d = 3 (x, y, yaw), scaled.
  const double k_prm = std::exp(1.0) * (1.0 + 1.0 / 3.0);
  return static_cast<std::size_t>(std::ceil(cfg_.k_neighbors_scale * k_prm *
                                            std::log(static_cast<double>(n))));
}

std::uint32_t Planner::insert_vertex(Roadmap& rm, const SE2State& s) {
  const auto id = static_cast<std::uint32_t>(rm.vertices_.size());
  rm.vertices_.push_back(RoadmapVertex{s, Validity::Unchecked});
  rm.adj_.emplace_back();
  connect_vertex(rm, id);
  return id;
}

void Planner::connect_vertex(Roadmap& rm, std::uint32_t id) {
  const std::size_t n = rm.vertices_.size();
  const std::size_t k = knn_count(n);
  if (k == 0) return;

  knn_scratch_.clear();
  for (std::uint32_t u = 0; u < n; ++u) {
    if (u == id || rm.vertices_[u].status == Validity::Invalid) continue;
    knn_scratch_.emplace_back(segment_cost(rm.vertices_[id].state, rm.vertices_[u].state, weights_), u);
  }
  const std::size_t take = std::min(k, knn_scratch_.size());
  std::partial_sort(knn_scratch_.begin(), knn_scratch_.begin() + take, knn_scratch_.end());

  for (std::size_t i = 0; i < take; ++i) {
    const std::uint32_t u = knn_scratch_[i].second;
    bool already = false;
    for (const std::uint32_t e : rm.adj_[id]) {
      const RoadmapEdge& edge = rm.edges_[e];
      if (edge.a == u || edge.b == u) {
        already = true;
        break;
      }
    }
    if (already) continue;
    const auto eid = static_cast<std::uint32_t>(rm.edges_.size());
    rm.edges_.push_back(RoadmapEdge{id, u, knn_scratch_[i].first, Validity::Unchecked});
    rm.adj_[id].push_back(eid);
    rm.adj_[u].push_back(eid);
  }
}

void Planner::ensure_edge(Roadmap& rm, std::uint32_t a, std::uint32_t b) {
  if (a == b) return;
  for (const std::uint32_t e : rm.adj_[a]) {
    if (rm.edges_[e].a == b || rm.edges_[e].b == b) return;
  }
  const auto eid = static_cast<std::uint32_t>(rm.edges_.size());
  rm.edges_.push_back(RoadmapEdge{
      a, b, segment_cost(rm.vertices_[a].state, rm.vertices_[b].state, weights_),
      Validity::Unchecked});
  rm.adj_[a].push_back(eid);
  rm.adj_[b].push_back(eid);
}

std::uint32_t Planner::find_or_insert(Roadmap& rm, const SE2State& s, PlanStats& stats) {
  for (std::uint32_t v = 0; v < rm.vertices_.size(); ++v) {
    if (rm.vertices_[v].status == Validity::Invalid) continue;
    if (states_match(rm.vertices_[v].state, s)) {
      rm.vertices_[v].status = Validity::Valid;
      connect_vertex(rm, v);  // pick up neighbors added since the last match
      return v;
    }
  }
  ++stats.vertices_added;
  const std::uint32_t id = insert_vertex(rm, s);
  rm.vertices_[id].status = Validity::Valid;
  return id;
}

std::pair<std::uint32_t, std::uint32_t> Planner::add_query_endpoints(Roadmap& rm,
                                                                     const SE2State& start,
                                                                     const SE2State& goal) {
  PlanStats scratch;
  CheckStats checks;
  if (!checker_.check_state(start, checks)) {
    throw PlanningError("invalid start state for roadmap query");
  }
  if (!checker_.check_state(goal, checks)) {
    throw PlanningError("invalid goal state for roadmap query");
  }
  const std::uint32_t sid = find_or_insert(rm, start, scratch);
  const std::uint32_t gid = find_or_insert(rm, goal, scratch);
  return {sid, gid};
}

void Planner::grow_uniform(Roadmap& rm, std::size_t target) {
  PlanStats stats;
  while (rm.vertices_.size() < target) {
    const auto s = sample_se2(SE2State{}, SE2State{}, std::nullopt, bounds_, weights_,
                              rm.rng(), &stats.samples_drawn);
    insert_vertex(rm, *s);
  }
}

bool Planner::grow_batch(Roadmap& rm, const SE2State& s1, const SE2State& s2,
                         std::optional<double> best_cost, PlanStats& stats) {
  std::size_t want = cfg_.batch_size;
  if (rm.vertices_.size() + want > cfg_.max_vertices) {
    want = cfg_.max_vertices > rm.vertices_.size() ? cfg_.max_vertices - rm.vertices_.size() : 0;
  }
  bool grew = false;
  for (std::size_t i = 0; i < want; ++i) {
    const auto s = sample_se2(s1, s2, best_cost, bounds_, weights_, rm.rng(), &stats.samples_drawn);
    if (!s) return grew;  // informed region empty: the incumbent is final
    insert_vertex(rm, *s);
    ++stats.vertices_added;
    grew = true;
  }
  return grew;
}

std::vector<std::uint32_t> Planner::search(const Roadmap& rm, std::uint32_t start_id,
                                           std::uint32_t goal_id) const {
  const std::size_t n = rm.vertices_.size();
  g_.assign(n, kInf);
  parent_.assign(n, kNoVertex);
  closed_.assign(n, 0);

  const SE2State& goal_state = rm.vertices_[goal_id].state;
  const bool metric = (weights_.exponent == 1);
  auto heuristic = [&](std::uint32_t v) {
    return metric ? segment_cost(rm.vertices_[v].state, goal_state, weights_) : 0.0;
  };

  using QueueItem = std::tuple<double, double, std::uint32_t>;  // (f, g, id)
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<QueueItem>> open;
  g_[start_id] = 0.0;
  open.emplace(heuristic(start_id), 0.0, start_id);

  while (!open.empty()) {
    const auto [f, gv, v] = open.top();
    open.pop();
    if (closed_[v] || gv != g_[v]) continue;
    if (v == goal_id) break;
    closed_[v] = 1;
    for (const std::uint32_t eid : rm.adj_[v]) {
      const RoadmapEdge& e = rm.edges_[eid];
      if (e.status == Validity::Invalid) continue;
      const std::uint32_t u = (e.a == v) ? e.b : e.a;
      if (closed_[u] || rm.vertices_[u].status == Validity::Invalid) continue;
      const double cand = gv + e.cost;
      if (cand < g_[u]) {
        g_[u] = cand;
        parent_[u] = v;
        open.emplace(cand + heuristic(u), cand, u);
      }
    }
  }

  if (g_[goal_id] == kInf) return {};
  std::vector<std::uint32_t> ids;
  for (std::uint32_t v = goal_id; v != kNoVertex; v = parent_[v]) {
    ids.push_back(v);
    if (v == start_id) break;
  }
  std::reverse(ids.begin(), ids.end());
  return ids;
}

bool Planner::validate_candidate(Roadmap& rm, const std::vector<std::uint32_t>& ids,
                                 PlanStats& stats) const {
  for (const std::uint32_t v : ids) {
    RoadmapVertex& vert = rm.vertices_[v];
    if (vert.status != Validity::Unchecked) continue;
    ++stats.vertices_validated;
    if (checker_.check_state(vert.state, stats.checks)) {
      vert.status = Validity::Valid;
    } else {
      vert.status = Validity::Invalid;
      for (const std::uint32_t eid : rm.adj_[v]) {
        rm.edges_[eid].status = Validity::Invalid;
      }
      return false;
    }
  }

  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    std::uint32_t eid = kNoVertex;
    for (const std::uint32_t cand : rm.adj_[ids[i]]) {
      const RoadmapEdge& e = rm.edges_[cand];
      if ((e.a == ids[i] && e.b == ids[i + 1]) || (e.b == ids[i] && e.a == ids[i + 1])) {
        eid = cand;
        break;
      }
    }
    if (eid == kNoVertex) {
      throw std::logic_error("roadmap: candidate path uses a nonexistent edge");
    }
    RoadmapEdge& e = rm.edges_[eid];
    if (e.status != Validity::Unchecked) continue;
    ++stats.edges_validated;
    // Always check in stored orientation so repeated validations of the same
    // edge are bit-identical.
    if (checker_.check_motion(rm.vertices_[e.a].state, rm.vertices_[e.b].state, stats.checks)) {
      e.status = Validity::Valid;
    } else {
      e.status = Validity::Invalid;
      return false;
    }
  }
  return true;
}

PlanResult Planner::plan(Roadmap& rm, const SE2State& start, const SE2State& goal) {
  PlanResult result;
  PlanStats& stats = result.stats;

  if (!checker_.check_state(start, stats.checks)) {
    std::ostringstream os;
    os << "invalid start state (" << start.x << ", " << start.y << ", " << start.yaw << ")";
    throw PlanningError(os.str());
  }
  if (!checker_.check_state(goal, stats.checks)) {
    std::ostringstream os;
    os << "invalid goal state (" << goal.x << ", " << goal.y << ", " << goal.yaw << ")";
    throw PlanningError(os.str());
  }

  const std::uint32_t sid = find_or_insert(rm, start, stats);
  const std::uint32_t gid = find_or_insert(rm, goal, stats);
  ensure_edge(rm, sid, gid);  // the direct connection is always a candidate

  const auto t0 = std::chrono::steady_clock::now();
  auto time_left = [&] {
    if (!cfg_.time_budget_s) return true;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
    return elapsed.count() < *cfg_.time_budget_s;
  };

  double best_cost = kInf;
  std::vector<std::uint32_t> best_ids;
  bool timed_out = false;

  for (;;) {
    // Search and lazily validate until the graph yields a validated optimum
    // or runs out of candidates.
    for (;;) {
      ++stats.searches;
      const auto ids = search(rm, sid, gid);
      if (ids.empty()) break;
      ++stats.candidate_paths;
      stats.candidate_path_edges += ids.size() - 1;
      if (validate_candidate(rm, ids, stats)) {
        double cost = 0.0;
        for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
          cost += segment_cost(rm.vertices_[ids[i]].state, rm.vertices_[ids[i + 1]].state,
                               weights_);
        }
        if (cost < best_cost) {
          best_cost = cost;
          best_ids = ids;
        }
        break;
      }
    }

    if (rm.vertices_.size() >= cfg_.max_vertices) break;
    if (!time_left()) {
      timed_out = true;
      break;
    }
    const std::optional<double> incumbent =
        best_ids.empty() ? std::nullopt : std::optional<double>(best_cost);
    if (!grow_batch(rm, start, goal, incumbent, stats)) break;
  }

  if (!best_ids.empty()) {
    result.status = PlanStatus::Solved;
    result.cost = best_cost;
    result.path.reserve(best_ids.size());
    for (const std::uint32_t v : best_ids) {
      result.path.push_back(rm.vertices_[v].state);
    }
  } else {
    result.status = timed_out ? PlanStatus::BudgetExhausted : PlanStatus::Unreachable;
    result.cost = kInf;
  }
  return result;
}

}  // namespace mgp
