#include <cmath>
#include <set>

#include <doctest.h>

#include "mgp/cost.h"
#include "mgp/errors.h"
#include "mgp/path.h"
#include "mgp/rng.h"
#include "mgp/se2.h"

using namespace mgp;

namespace {

SE2State random_state(Rng& rng) {
  return SE2State{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
                  rng.uniform(-M_PI, M_PI)};
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("wrap_angle lands in [-pi, pi)") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(M_PI) == doctest::Approx(-M_PI));
  CHECK(wrap_angle(-M_PI) == doctest::Approx(-M_PI));
  CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(-M_PI));
  CHECK(wrap_angle(9.0) == doctest::Approx(9.0 - 2.0 * M_PI));
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double w = wrap_angle(rng.uniform(-50.0, 50.0));
    CHECK(w >= -M_PI);
    CHECK(w < M_PI);
  }
}

TEST_CASE("angle_diff examples") {
  CHECK(angle_diff(0.0, 0.0) == 0.0);
  CHECK(angle_diff(M_PI_2, -M_PI_2) == doctest::Approx(M_PI));
  CHECK(angle_diff(3.0, -3.0) == doctest::Approx(2.0 * M_PI - 6.0));
}

TEST_CASE("angle_diff is a metric on the circle") {
  Rng rng(11);
  for (int i = 0; i < 20000; ++i) {
    const double a = rng.uniform(-M_PI, M_PI);
    const double b = rng.uniform(-M_PI, M_PI);
    const double c = rng.uniform(-M_PI, M_PI);
    const double dab = angle_diff(a, b);
    CHECK(dab == doctest::Approx(angle_diff(b, a)));
    CHECK(dab >= 0.0);
    CHECK(dab <= M_PI);
    CHECK(angle_diff(a, c) <= dab + angle_diff(b, c) + 1e-12);
  }
  CHECK(angle_diff(1.25, 1.25) == 0.0);
}

TEST_CASE("segment_cost examples") {
  const CostWeights unit;
  const SE2State a{0, 0, 0};
  CHECK(segment_cost(a, a, unit) == 0.0);
  CHECK(segment_cost(a, SE2State{3, 4, 0}, unit) == doctest::Approx(5.0));
  const CostWeights w{2.0, 0.5, 1};
  CHECK(segment_cost(SE2State{1, 1, 0}, SE2State{4, 5, M_PI}, w) ==
        doctest::Approx(10.0 + M_PI / 2.0));
}

TEST_CASE("segment_cost is a metric for positive weights") {
  const CostWeights w{0.7, 1.3, 1};
  Rng rng(13);
  for (int i = 0; i < 20000; ++i) {
    const SE2State a = random_state(rng);
    const SE2State b = random_state(rng);
    const SE2State c = random_state(rng);
    const double dab = segment_cost(a, b, w);
    CHECK(dab == doctest::Approx(segment_cost(b, a, w)));
    CHECK(dab >= 0.0);
    CHECK(segment_cost(a, c, w) <= dab + segment_cost(b, c, w) + 1e-9);
  }
  const SE2State s = random_state(rng);
  CHECK(segment_cost(s, s, w) == 0.0);
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(validate_weights(CostWeights{0.0, 1.0, 1}), InputError);
  CHECK_THROWS_AS(validate_weights(CostWeights{1.0, -0.1, 1}), InputError);
  CHECK_THROWS_AS(validate_weights(CostWeights{1.0, 1.0, 3}), InputError);
  CHECK_NOTHROW(validate_weights(CostWeights{1.0, 0.0, 1}));  // rotation-free variant
  CHECK_NOTHROW(validate_weights(CostWeights{1.0, 1.0, 2}));
}

TEST_CASE("path_cost examples") {
  const CostWeights unit;
  CHECK(path_cost({SE2State{0, 0, 0}}, unit) == 0.0);
  CHECK(path_cost({SE2State{0, 0, 0}, SE2State{1, 0, 0}, SE2State{2, 0, 0}}, unit) ==
        doctest::Approx(2.0));
  CHECK(path_cost({SE2State{0, 0, 0}, SE2State{0, 0, M_PI}}, unit) == doctest::Approx(M_PI));
  CHECK_THROWS_WITH_AS(path_cost({}, unit), "empty path", InputError);
}

TEST_CASE("straight-segment refinement keeps the cost (exponent 1)") {
  const CostWeights w{1.4, 0.9, 1};
  Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const SE2State a = random_state(rng);
    const SE2State b = random_state(rng);
    Path coarse{a, b};
    Path fine{a};
    const int cuts = 1 + static_cast<int>(rng.uniform01() * 6.0);
    for (int k = 1; k <= cuts; ++k) {
      fine.push_back(interpolate(a, b, static_cast<double>(k) / (cuts + 1)));
    }
    fine.push_back(b);
    CHECK(path_cost(fine, w) == doctest::Approx(path_cost(coarse, w)).epsilon(1e-9));
  }
}

TEST_CASE("interpolate endpoints and shortest arc") {
  const SE2State a{0, 0, 3.0};
  const SE2State b{0, 0, -3.0};
  CHECK(interpolate(a, b, 0.0) == a);
  CHECK(interpolate(a, b, 1.0) == b);
  const SE2State mid = interpolate(a, b, 0.5);
  CHECK(std::fabs(mid.yaw) == doctest::Approx(M_PI));  // wraps through +-pi
  CHECK(mid.yaw < M_PI);                               // normalized representative
  CHECK_THROWS(interpolate(a, b, 1.5));
  CHECK_THROWS(interpolate(a, b, -0.1));
}

TEST_CASE("align_headings examples") {
  // All fixed: unchanged.
  const Path single{SE2State{0, 0, 9}};
  const Path aligned_single = align_headings(single, {0});
  CHECK(aligned_single[0] == single[0]);

  const Path p{SE2State{0, 0, M_PI}, SE2State{1, 0, M_PI}, SE2State{1, 1, 0.5}};
  const Path out = align_headings(p, {2});
  CHECK(out[0].yaw == doctest::Approx(0.0));
  CHECK(out[1].yaw == doctest::Approx(M_PI_2));
  CHECK(out[2].yaw == doctest::Approx(0.5));

  // Duplicate positions copy the earlier waypoint's yaw forward.
  const Path dup{SE2State{0, 0, 0}, SE2State{1, 0, 2.0}, SE2State{1, 0, 2.5},
                 SE2State{2, 0, 1.0}};
  const Path out_dup = align_headings(dup, {});
  CHECK(out_dup[0].yaw == doctest::Approx(0.0));
  CHECK(out_dup[1].yaw == doctest::Approx(out_dup[0].yaw));  // zero displacement to [2]
  CHECK(out_dup[2].yaw == doctest::Approx(std::atan2(0.0, 1.0)));
  CHECK(out_dup[3].yaw == doctest::Approx(0.0));  // last: direction from predecessor
}

TEST_CASE("align_headings never moves positions or fixed yaws") {
  Rng rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    Path p;
    const int n = 1 + static_cast<int>(rng.uniform01() * 8.0);
    std::set<std::size_t> fixed;
    for (int i = 0; i < n; ++i) {
      p.push_back(random_state(rng));
      if (rng.uniform01() < 0.3) fixed.insert(i);
    }
    const Path out = align_headings(p, fixed);
    REQUIRE(out.size() == p.size());
    for (int i = 0; i < n; ++i) {
      CHECK(out[i].x == p[i].x);
      CHECK(out[i].y == p[i].y);
      if (fixed.count(i)) CHECK(out[i].yaw == p[i].yaw);
    }
  }
}

}  // TEST_SUITE
