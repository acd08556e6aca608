#pragma once

#include <cstdint>

#include "mgp/grid_map.h"
#include "mgp/se2.h"

namespace mgp {

// Planar bounding box of the robot base. Normalized at construction so the
// long side runs along the heading; if the given width exceeds the length
// the axes are swapped and the box is rotated 90 degrees at check time.
class RobotFootprint {
 public:
  RobotFootprint() : RobotFootprint(0.8, 0.6) {}
  RobotFootprint(double length, double width);

  double length() const { return length_; }
  double width() const { return width_; }
  double half_length() const { return 0.5 * length_; }
  double half_width() const { return 0.5 * width_; }
  bool rotated() const { return rotated_; }

 private:
  double length_;
  double width_;
  bool rotated_{false};
};

struct CheckerConfig {
  double t_low{0.3};
  double t_high{0.8};
  int max_depth{2};
  double motion_step{0.1};
};

// Throws InputError unless 0 <= t_low <= t_high <= 1, max_depth >= 0 and
// motion_step > 0.
void validate_checker_config(const CheckerConfig& cfg);

// Query counters for one planning session. Owned by the caller and merged
// explicitly; nothing here is shared between threads.
struct CheckStats {
  std::uint64_t traversability_queries{0};
  std::uint64_t tsdf_queries{0};
  std::uint64_t states_accepted_by_traversability{0};
  std::uint64_t states_rejected_by_traversability{0};
  std::uint64_t states_sent_to_volumetric{0};

  void merge(const CheckStats& o) {
    traversability_queries += o.traversability_queries;
    tsdf_queries += o.tsdf_queries;
    states_accepted_by_traversability += o.states_accepted_by_traversability;
    states_rejected_by_traversability += o.states_rejected_by_traversability;
    states_sent_to_volumetric += o.states_sent_to_volumetric;
  }
};

enum class BoxCheck { Free, Collision };

// Hierarchical state validity: traversability below t_low rejects, above
// t_high accepts, the band in between falls through to iterative volumetric
// checking of the footprint box against the TSDF. Unknown map data is
// treated as invalid. Read-only on the map; safe for concurrent use with
// one CheckStats per caller.
class ValidityChecker {
 public:
  ValidityChecker(const MapBundle& map, RobotFootprint footprint, CheckerConfig cfg);

  bool check_state(const SE2State& s, CheckStats& stats) const;
  bool check_motion(const SE2State& s1, const SE2State& s2, CheckStats& stats) const;

  // Recursive box-vs-TSDF test. The box half extents must satisfy
  // half_len >= half_wid > 0 with the long side along `yaw`. Compares the
  // center distance against the inner/outer sphere radii, splits along the
  // long axis when inconclusive, and at max_depth decides by the outer
  // sphere alone.
  BoxCheck check_box_collision(double cx, double cy, double half_len, double half_wid,
                               double yaw, int depth, CheckStats& stats) const;

  const MapBundle& map() const { return *map_; }
  const RobotFootprint& footprint() const { return footprint_; }
  const CheckerConfig& config() const { return cfg_; }

 private:
  const MapBundle* map_;
  RobotFootprint footprint_;
  CheckerConfig cfg_;
};

}  // namespace mgp
