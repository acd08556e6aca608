#include "mgp/grid_map.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mgp/errors.h"

namespace mgp {

namespace {

using nlohmann::ordered_json;

// Nearest index on one axis, ties toward the lower cell.
bool axis_index(double p, double origin, double resolution, int count, int& idx) {
  const double d = (p - origin) / resolution;
  const double c = std::ceil(d - 0.5);
  if (c < 0.0 || c >= static_cast<double>(count)) return false;
  idx = static_cast<int>(c);
  return true;
}

}  // namespace

bool GridHeader::cell_index(double px, double py, int& ix, int& iy) const {
  return axis_index(px, origin_x, resolution, width, ix) &&
         axis_index(py, origin_y, resolution, height, iy);
}

std::optional<double> MapBundle::query_tsdf(double px, double py) const {
  int ix, iy;
  if (!header().cell_index(px, py, ix, iy)) return std::nullopt;
  return tsdf.values[static_cast<std::size_t>(iy) * header().width + ix];
}

std::optional<double> MapBundle::query_traversability(double px, double py) const {
  int ix, iy;
  if (!header().cell_index(px, py, ix, iy)) return std::nullopt;
  const double v = traversability.values[static_cast<std::size_t>(iy) * header().width + ix];
  if (v == TraversabilityGrid::kUnknown) return std::nullopt;
  return v;
}

void validate_map(const MapBundle& map) {
  const GridHeader& h = map.header();
  if (!(h.resolution > 0.0)) throw InputError("map: resolution must be > 0");
  if (h.width <= 0 || h.height <= 0) throw InputError("map: width and height must be > 0");
  if (!(map.tsdf.truncation > 0.0)) throw InputError("map: truncation must be > 0");
  if (map.traversability.header != h) throw InputError("map: layer headers differ");
  const std::size_t n = static_cast<std::size_t>(h.width) * h.height;
  if (map.tsdf.values.size() != n) throw InputError("map: tsdf layer length mismatch");
  if (map.traversability.values.size() != n) {
    throw InputError("map: traversability layer length mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double v = map.tsdf.values[i];
    if (!std::isfinite(v) || std::fabs(v) > map.tsdf.truncation) {
      std::ostringstream os;
      os << "map: tsdf value out of range at index " << i << " (" << v << ")";
      throw InputError(os.str());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double v = map.traversability.values[i];
    if (v != TraversabilityGrid::kUnknown && !(v >= 0.0 && v <= 1.0)) {
      std::ostringstream os;
      os << "map: traversability value out of range at index " << i << " (" << v << ")";
      throw InputError(os.str());
    }
  }
}

MapBundle load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("map file: cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("map file: invalid JSON in " + path + ": " + e.what());
  }

  auto require = [&](const char* field) -> const ordered_json& {
    if (!j.contains(field)) {
      throw InputError(std::string("map file: missing field '") + field + "'");
    }
    return j.at(field);
  };

  MapBundle map;
  try {
    if (require("version").get<int>() != 1) throw InputError("map file: unsupported version");
    GridHeader h;
    h.resolution = require("resolution").get<double>();
    const auto& origin = require("origin");
    if (!origin.is_array() || origin.size() != 2) {
      throw InputError("map file: field 'origin' must be [x, y]");
    }
    h.origin_x = origin[0].get<double>();
    h.origin_y = origin[1].get<double>();
    h.width = require("width").get<int>();
    h.height = require("height").get<int>();
    map.tsdf.header = h;
    map.traversability.header = h;
    map.tsdf.truncation = require("truncation").get<double>();
    map.tsdf.values = require("tsdf").get<std::vector<double>>();
    map.traversability.values = require("traversability").get<std::vector<double>>();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("map file: ") + e.what());
  }
  validate_map(map);
  return map;
}

void save_map(const MapBundle& map, const std::string& path) {
  validate_map(map);
  ordered_json j;
  j["version"] = 1;
  j["resolution"] = map.header().resolution;
  j["origin"] = {map.header().origin_x, map.header().origin_y};
  j["width"] = map.header().width;
  j["height"] = map.header().height;
  j["truncation"] = map.tsdf.truncation;
  j["tsdf"] = map.tsdf.values;
  j["traversability"] = map.traversability.values;
  std::ofstream out(path);
  if (!out) throw InputError("map file: cannot write " + path);
  out << j.dump() << "\n";
}

}  // namespace mgp
