#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mgp/grid_map.h"

namespace mgp {

struct Disc {
  double cx{0.0};
  double cy{0.0};
  double radius{1.0};
};

// Axis-aligned rectangle given by center and half extents.
struct Rect {
  double cx{0.0};
  double cy{0.0};
  double hx{1.0};
  double hy{1.0};
};

using Shape = std::variant<Disc, Rect>;

struct TravRegion {
  Shape shape;
  double value{0.5};
};

// Synthetic planar environment: solid obstacles define the TSDF, painted
// regions override the base traversability.
struct EnvSpec {
  double xmin{0.0}, xmax{10.0}, ymin{0.0}, ymax{10.0};
  double resolution{0.1};
  double truncation{2.0};
  double base_traversability{0.9};
  std::vector<Shape> obstacles;
  std::vector<TravRegion> trav_regions;
};

// Signed distance from (px, py) to the shape boundary, negative inside.
double shape_sdf(const Shape& shape, double px, double py);

// Unclamped signed distance to the nearest obstacle boundary (union of all
// obstacles = min of member SDFs). +infinity when there are no obstacles.
double analytic_sdf(const EnvSpec& spec, double px, double py);

// Rasterizes the spec onto co-registered TSDF and traversability grids:
// TSDF = clamp(analytic_sdf, +-truncation) at cell centers; traversability =
// base value, then painted regions in list order, then 0 inside obstacles.
// Deterministic; the terrain synthesis currently ignores `seed`.
// Throws InputError on invalid specs (shape outside bounds, bad ranges).
MapBundle generate_synthetic_env(const EnvSpec& spec, std::uint64_t seed);

EnvSpec load_env_spec(const std::string& path);
void save_env_spec(const EnvSpec& spec, const std::string& path);

}  // namespace mgp
