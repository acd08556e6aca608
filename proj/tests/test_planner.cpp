#include <cmath>

#include <doctest.h>

#include "mgp/errors.h"
#include "mgp/roadmap.h"
#include "test_support.h"

using namespace mgp;

namespace {

QueryConfig small_budget(std::uint32_t max_vertices, std::uint64_t seed) {
  QueryConfig cfg;
  cfg.max_vertices = max_vertices;
  cfg.batch_size = 128;
  cfg.rng_seed = seed;
  return cfg;
}

bool path_motions_valid(const ValidityChecker& checker, const Path& path) {
  CheckStats stats;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!checker.check_motion(path[i], path[i + 1], stats)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("planner") {

TEST_CASE("start equals goal") {
  const MapBundle map = generate_synthetic_env(test::free_space_spec(), 0);
  const ValidityChecker checker(map, RobotFootprint(), CheckerConfig{});
  Planner planner(checker, CostWeights{}, small_budget(300, 1));
  Roadmap roadmap(1);
  const SE2State s{1.0, 2.0, 0.5};
  const PlanResult r = planner.plan(roadmap, s, s);
  CHECK(r.status == PlanStatus::Solved);
  CHECK(r.cost == 0.0);
  REQUIRE(r.path.size() == 1);
  CHECK(r.path[0] == s);
}

TEST_CASE("free-space straight line within 5 percent") {
  const MapBundle map = generate_synthetic_env(test::free_space_spec(), 0);
  const ValidityChecker checker(map, RobotFootprint(), CheckerConfig{});
  const CostWeights w{1.0, 0.0, 1};  // translation-only, per the contract example
  Planner planner(checker, w, small_budget(2000, 5));
  Roadmap roadmap(5);
  const PlanResult r = planner.plan(roadmap, SE2State{0, 0, 0}, SE2State{5, 0, 0});
  REQUIRE(r.status == PlanStatus::Solved);
  CHECK(r.cost >= 5.0);
  CHECK(r.cost <= 5.25);
  CHECK(xy_distance(r.path.front(), SE2State{0, 0, 0}) <= 1e-9);
  CHECK(xy_distance(r.path.back(), SE2State{5, 0, 0}) <= 1e-9);
  CHECK(r.cost == doctest::Approx(path_cost(r.path, w)).epsilon(1e-9));
}

TEST_CASE("wall with a gap: solved and collision-free; sealed: unreachable") {
  const EnvSpec gap_spec = test::wall_spec(true);
  const MapBundle gap_map = generate_synthetic_env(gap_spec, 0);
  const RobotFootprint fp;
  const ValidityChecker checker(gap_map, fp, CheckerConfig{});
  Planner planner(checker, CostWeights{}, small_budget(1500, 9));
  Roadmap roadmap(9);
  const SE2State start{0, 0, 0};
  const SE2State goal{5, 0, 0};
  const PlanResult r = planner.plan(roadmap, start, goal);
  REQUIRE(r.status == PlanStatus::Solved);
  CHECK(path_motions_valid(checker, r.path));
  const double slack = gap_spec.resolution * std::sqrt(2.0) / 2.0 + 1e-9;
  for (const SE2State& s : r.path) {
    CHECK(test::footprint_clear(gap_spec, s, fp, slack));
  }

  const EnvSpec sealed_spec = test::wall_spec(false);
  const MapBundle sealed_map = generate_synthetic_env(sealed_spec, 0);
  const ValidityChecker sealed_checker(sealed_map, fp, CheckerConfig{});
  Planner sealed_planner(sealed_checker, CostWeights{}, small_budget(700, 9));
  Roadmap sealed_roadmap(9);
  const PlanResult blocked = sealed_planner.plan(sealed_roadmap, start, goal);
  CHECK(blocked.status == PlanStatus::Unreachable);
}

TEST_CASE("identical seeds reproduce the result bit for bit") {
  const MapBundle map = generate_synthetic_env(test::wall_spec(true), 0);
  const ValidityChecker checker(map, RobotFootprint(), CheckerConfig{});
  auto run = [&] {
    Planner planner(checker, CostWeights{}, small_budget(900, 21));
    Roadmap roadmap(21);
    return planner.plan(roadmap, SE2State{0, 0, 0}, SE2State{5, 0, 0});
  };
  const PlanResult a = run();
  const PlanResult b = run();
  CHECK(a.status == b.status);
  CHECK(a.cost == b.cost);
  REQUIRE(a.path.size() == b.path.size());
  for (std::size_t i = 0; i < a.path.size(); ++i) CHECK(a.path[i] == b.path[i]);
  CHECK(a.stats.samples_drawn == b.stats.samples_drawn);
  CHECK(a.stats.checks.tsdf_queries == b.stats.checks.tsdf_queries);
}

TEST_CASE("cost never increases with a larger vertex budget") {
  const MapBundle map = generate_synthetic_env(test::wall_spec(true), 0);
  const ValidityChecker checker(map, RobotFootprint(), CheckerConfig{});
  double previous = std::numeric_limits<double>::infinity();
  for (const std::uint32_t budget : {400u, 800u, 1600u}) {
    Planner planner(checker, CostWeights{}, small_budget(budget, 33));
    Roadmap roadmap(33);
    const PlanResult r = planner.plan(roadmap, SE2State{0, 0, 0}, SE2State{5, 0, 0});
    REQUIRE(r.status == PlanStatus::Solved);
    CHECK(r.cost <= previous + 1e-12);
    previous = r.cost;
  }
}

TEST_CASE("endpoint handling") {
  const MapBundle map = generate_synthetic_env(test::free_space_spec(), 0);
  const ValidityChecker checker(map, RobotFootprint(), CheckerConfig{});
  Planner planner(checker, CostWeights{}, small_budget(300, 41));
  Roadmap roadmap(41);

  const SE2State a{1, 1, 0};
  const SE2State b{-2, 3, 1.0};
  const auto [ia, ib] = planner.add_query_endpoints(roadmap, a, b);
  const auto [ia2, ib2] = planner.add_query_endpoints(roadmap, a, b);
  CHECK(ia == ia2);  // deduplicated
  CHECK(ib == ib2);
  CHECK(ia != ib);

  const MapBundle walled = generate_synthetic_env(test::wall_spec(false), 0);
  const ValidityChecker walled_checker(walled, RobotFootprint(), CheckerConfig{});
  Planner walled_planner(walled_checker, CostWeights{}, small_budget(300, 41));
  Roadmap walled_roadmap(41);
  CHECK_THROWS_AS(
      walled_planner.plan(walled_roadmap, SE2State{2.5, 0, 0}, SE2State{5, 0, 0}),
      PlanningError);
  try {
    walled_planner.plan(walled_roadmap, SE2State{2.5, 0, 0}, SE2State{5, 0, 0});
  } catch (const PlanningError& e) {
    CHECK(std::string(e.what()).find("start") != std::string::npos);
  }
  try {
    walled_planner.plan(walled_roadmap, SE2State{5, 0, 0}, SE2State{2.5, 0, 0});
  } catch (const PlanningError& e) {
    CHECK(std::string(e.what()).find("goal") != std::string::npos);
  }
}

TEST_CASE("roadmap reuse: the second identical query draws no new samples") {
  const MapBundle map = generate_synthetic_env(test::wall_spec(true), 0);
  const ValidityChecker checker(map, RobotFootprint(), CheckerConfig{});
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    Planner planner(checker, CostWeights{}, small_budget(1500, seed));
    Roadmap roadmap(seed);
    const PlanResult first = planner.plan(roadmap, SE2State{0, 0, 0}, SE2State{5, 0, 0});
    const PlanResult second = planner.plan(roadmap, SE2State{0, 0, 0}, SE2State{5, 0, 0});
    REQUIRE(first.status == PlanStatus::Solved);
    REQUIRE(second.status == PlanStatus::Solved);
    CHECK(second.stats.samples_drawn < first.stats.samples_drawn);
    CHECK(second.cost <= first.cost + 1e-12);
  }
}

TEST_CASE("lazy validation only touches candidate-path edges") {
  const MapBundle map = generate_synthetic_env(test::free_space_spec(), 0);
  const ValidityChecker checker(map, RobotFootprint(), CheckerConfig{});
  Planner planner(checker, CostWeights{}, small_budget(1200, 55));
  Roadmap roadmap(55);
  planner.grow_uniform(roadmap, 1200);  // dense graph up front
  const PlanResult r = planner.plan(roadmap, SE2State{-4, -4, 0}, SE2State{4, 4, 0});
  REQUIRE(r.status == PlanStatus::Solved);
  CHECK(r.stats.edges_validated <= r.stats.candidate_path_edges);
  CHECK(r.stats.edges_validated < roadmap.edges().size());
}

TEST_CASE("expired time budget without a solution reports BudgetExhausted") {
  const MapBundle map = generate_synthetic_env(test::wall_spec(false), 0);
  const ValidityChecker checker(map, RobotFootprint(), CheckerConfig{});
  QueryConfig cfg = small_budget(2000, 77);
  cfg.time_budget_s = 0.0;
  Planner planner(checker, CostWeights{}, cfg);
  Roadmap roadmap(77);
  const PlanResult r = planner.plan(roadmap, SE2State{0, 0, 0}, SE2State{5, 0, 0});
  CHECK(r.status == PlanStatus::BudgetExhausted);
}

TEST_CASE("solved paths re-validate with check_motion") {
  const MapBundle map = generate_synthetic_env(test::wall_spec(true), 0);
  const ValidityChecker checker(map, RobotFootprint(), CheckerConfig{});
  Planner planner(checker, CostWeights{}, small_budget(1000, 61));
  Roadmap roadmap(61);
  const PlanResult r = planner.plan(roadmap, SE2State{-0.5, -3, 0}, SE2State{5.5, 3, 1.0});
  REQUIRE(r.status == PlanStatus::Solved);
  CHECK(path_motions_valid(checker, r.path));
}

}  // TEST_SUITE
