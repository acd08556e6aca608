#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mgp {

// Shared geometry of all map layers. `origin` is the center of cell (0, 0);
// cell (i, j) is centered at origin + (i, j) * resolution, stored row-major
// at index j * width + i.
struct GridHeader {
  double resolution{0.1};
  double origin_x{0.0};
  double origin_y{0.0};
  int width{0};
  int height{0};

  // Nearest-cell lookup. A point exactly halfway between two cell centers
  // maps to the lower index. Returns false when the point is outside the
  // covered area.
  bool cell_index(double px, double py, int& ix, int& iy) const;

  double cell_center_x(int ix) const { return origin_x + ix * resolution; }
  double cell_center_y(int iy) const { return origin_y + iy * resolution; }

  // Extent covered by nearest-cell lookups (half a cell beyond the outermost
  // cell centers).
  double min_x() const { return origin_x - 0.5 * resolution; }
  double max_x() const { return origin_x + (width - 1) * resolution + 0.5 * resolution; }
  double min_y() const { return origin_y - 0.5 * resolution; }
  double max_y() const { return origin_y + (height - 1) * resolution + 0.5 * resolution; }

  bool operator==(const GridHeader&) const = default;
};

// Truncated signed distance to the nearest obstacle surface, clamped to
// [-truncation, truncation]. Positive values are free space.
struct TsdfGrid {
  GridHeader header;
  double truncation{2.0};
  std::vector<double> values;
};

// Per-cell traversability score in [0, 1]; -1 marks unknown cells.
struct TraversabilityGrid {
  static constexpr double kUnknown = -1.0;
  GridHeader header;
  std::vector<double> values;
};

// Co-registered TSDF + traversability layers sharing one header. Immutable
// after construction; concurrent readers need no synchronization.
struct MapBundle {
  TsdfGrid tsdf;
  TraversabilityGrid traversability;

  const GridHeader& header() const { return tsdf.header; }

  // Nearest-cell value, or nullopt outside the map.
  std::optional<double> query_tsdf(double px, double py) const;

  // Nearest-cell value, or nullopt outside the map or on an unknown cell.
  std::optional<double> query_traversability(double px, double py) const;
};

// Throws InputError naming the offending field if any invariant is violated
// (header sanity, layer length mismatch, values out of range).
void validate_map(const MapBundle& map);

// JSON map file I/O. save_map followed by load_map reproduces the bundle
// bit-exactly. Both throw InputError on malformed input / unwritable output.
MapBundle load_map(const std::string& path);
void save_map(const MapBundle& map, const std::string& path);

}  // namespace mgp
