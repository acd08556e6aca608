#include "mgp/env_gen.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mgp/errors.h"

namespace mgp {

namespace {

using nlohmann::ordered_json;

double disc_sdf(const Disc& d, double px, double py) {
  return std::hypot(px - d.cx, py - d.cy) - d.radius;
}

double rect_sdf(const Rect& r, double px, double py) {
  const double qx = std::fabs(px - r.cx) - r.hx;
  const double qy = std::fabs(py - r.cy) - r.hy;
  const double outside = std::hypot(std::max(qx, 0.0), std::max(qy, 0.0));
  const double inside = std::min(std::max(qx, qy), 0.0);
  return outside + inside;
}

void check_shape_in_bounds(const EnvSpec& spec, const Shape& shape, const char* what) {
  double lo_x, hi_x, lo_y, hi_y;
  if (const Disc* d = std::get_if<Disc>(&shape)) {
    lo_x = d->cx - d->radius;
    hi_x = d->cx + d->radius;
    lo_y = d->cy - d->radius;
    hi_y = d->cy + d->radius;
    if (!(d->radius > 0.0)) throw InputError(std::string(what) + ": disc radius must be > 0");
  } else {
    const Rect& r = std::get<Rect>(shape);
    lo_x = r.cx - r.hx;
    hi_x = r.cx + r.hx;
    lo_y = r.cy - r.hy;
    hi_y = r.cy + r.hy;
    if (!(r.hx > 0.0 && r.hy > 0.0)) {
      throw InputError(std::string(what) + ": rect half extents must be > 0");
    }
  }
  if (lo_x < spec.xmin || hi_x > spec.xmax || lo_y < spec.ymin || hi_y > spec.ymax) {
    throw InputError(std::string(what) + " outside bounds");
  }
}

void validate_spec(const EnvSpec& spec) {
  if (!(spec.xmax > spec.xmin) || !(spec.ymax > spec.ymin)) {
    throw InputError("env spec: bounds must satisfy xmin < xmax and ymin < ymax");
  }
  if (!(spec.resolution > 0.0)) throw InputError("env spec: resolution must be > 0");
  if (!(spec.truncation > 0.0)) throw InputError("env spec: truncation must be > 0");
  if (!(spec.base_traversability >= 0.0 && spec.base_traversability <= 1.0)) {
    throw InputError("env spec: base_traversability must be in [0, 1]");
  }
  for (const Shape& s : spec.obstacles) check_shape_in_bounds(spec, s, "env spec: obstacle");
  for (const TravRegion& r : spec.trav_regions) {
    check_shape_in_bounds(spec, r.shape, "env spec: traversability region");
    if (!(r.value >= 0.0 && r.value <= 1.0)) {
      throw InputError("env spec: traversability region value must be in [0, 1]");
    }
  }
}

Shape shape_from_json(const ordered_json& j, const char* ctx) {
  const std::string type = j.value("type", "");
  if (type == "disc") {
    if (!j.contains("center") || !j.contains("radius")) {
      throw InputError(std::string(ctx) + ": disc needs 'center' and 'radius'");
    }
    return Disc{j["center"][0].get<double>(), j["center"][1].get<double>(),
                j["radius"].get<double>()};
  }
  if (type == "rect") {
    if (!j.contains("center") || !j.contains("half_extents")) {
      throw InputError(std::string(ctx) + ": rect needs 'center' and 'half_extents'");
    }
    return Rect{j["center"][0].get<double>(), j["center"][1].get<double>(),
                j["half_extents"][0].get<double>(), j["half_extents"][1].get<double>()};
  }
  throw InputError(std::string(ctx) + ": shape type must be 'disc' or 'rect'");
}

ordered_json shape_to_json(const Shape& shape) {
  ordered_json j;
  if (const Disc* d = std::get_if<Disc>(&shape)) {
    j["type"] = "disc";
    j["center"] = {d->cx, d->cy};
    j["radius"] = d->radius;
  } else {
    const Rect& r = std::get<Rect>(shape);
    j["type"] = "rect";
    j["center"] = {r.cx, r.cy};
    j["half_extents"] = {r.hx, r.hy};
  }
  return j;
}

}  // namespace

double shape_sdf(const Shape& shape, double px, double py) {
  if (const Disc* d = std::get_if<Disc>(&shape)) return disc_sdf(*d, px, py);
  return rect_sdf(std::get<Rect>(shape), px, py);
}

double analytic_sdf(const EnvSpec& spec, double px, double py) {
  double sdf = std::numeric_limits<double>::infinity();
  for (const Shape& s : spec.obstacles) {
    sdf = std::min(sdf, shape_sdf(s, px, py));
  }
  return sdf;
}

MapBundle generate_synthetic_env(const EnvSpec& spec, std::uint64_t /*seed*/) {
  validate_spec(spec);

  GridHeader h;
  h.resolution = spec.resolution;
  h.origin_x = spec.xmin;
  h.origin_y = spec.ymin;
  h.width = static_cast<int>(std::floor((spec.xmax - spec.xmin) / spec.resolution + 1e-9)) + 1;
  h.height = static_cast<int>(std::floor((spec.ymax - spec.ymin) / spec.resolution + 1e-9)) + 1;

  MapBundle map;
  map.tsdf.header = h;
  map.tsdf.truncation = spec.truncation;
  map.traversability.header = h;
  const std::size_t n = static_cast<std::size_t>(h.width) * h.height;
  map.tsdf.values.resize(n);
  map.traversability.values.resize(n);

  for (int iy = 0; iy < h.height; ++iy) {
    const double cy = h.cell_center_y(iy);
    for (int ix = 0; ix < h.width; ++ix) {
      const double cx = h.cell_center_x(ix);
      const std::size_t idx = static_cast<std::size_t>(iy) * h.width + ix;

      const double raw = analytic_sdf(spec, cx, cy);
      map.tsdf.values[idx] = std::clamp(raw, -spec.truncation, spec.truncation);

      double trav = spec.base_traversability;
      for (const TravRegion& region : spec.trav_regions) {
        if (shape_sdf(region.shape, cx, cy) <= 0.0) trav = region.value;
      }
      if (raw < 0.0) trav = 0.0;
      map.traversability.values[idx] = trav;
    }
  }
  return map;
}

EnvSpec load_env_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("env spec file: cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("env spec file: invalid JSON in " + path + ": " + e.what());
  }

  auto require = [&](const char* field) -> const ordered_json& {
    if (!j.contains(field)) {
      throw InputError(std::string("env spec file: missing field '") + field + "'");
    }
    return j.at(field);
  };

  EnvSpec spec;
  try {
    const auto& bounds = require("bounds");
    if (!bounds.is_array() || bounds.size() != 4) {
      throw InputError("env spec file: field 'bounds' must be [xmin, xmax, ymin, ymax]");
    }
    spec.xmin = bounds[0].get<double>();
    spec.xmax = bounds[1].get<double>();
    spec.ymin = bounds[2].get<double>();
    spec.ymax = bounds[3].get<double>();
    spec.resolution = require("resolution").get<double>();
    spec.truncation = require("truncation").get<double>();
    spec.base_traversability = require("base_traversability").get<double>();
    for (const auto& o : j.value("obstacles", ordered_json::array())) {
      spec.obstacles.push_back(shape_from_json(o, "env spec file: obstacle"));
    }
    for (const auto& r : j.value("traversability_regions", ordered_json::array())) {
      if (!r.contains("shape") || !r.contains("value")) {
        throw InputError("env spec file: traversability region needs 'shape' and 'value'");
      }
      spec.trav_regions.push_back(
          {shape_from_json(r["shape"], "env spec file: traversability region"),
           r["value"].get<double>()});
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("env spec file: ") + e.what());
  }
  validate_spec(spec);
  return spec;
}

void save_env_spec(const EnvSpec& spec, const std::string& path) {
  validate_spec(spec);
  ordered_json j;
  j["bounds"] = {spec.xmin, spec.xmax, spec.ymin, spec.ymax};
  j["resolution"] = spec.resolution;
  j["truncation"] = spec.truncation;
  j["base_traversability"] = spec.base_traversability;
  ordered_json obstacles = ordered_json::array();
  for (const Shape& s : spec.obstacles) obstacles.push_back(shape_to_json(s));
  j["obstacles"] = obstacles;
  ordered_json regions = ordered_json::array();
  for (const TravRegion& r : spec.trav_regions) {
    ordered_json region;
    region["shape"] = shape_to_json(r.shape);
    region["value"] = r.value;
    regions.push_back(region);
  }
  j["traversability_regions"] = regions;
  std::ofstream out(path);
  if (!out) throw InputError("env spec file: cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace mgp
