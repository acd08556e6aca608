#pragma once

#include <optional>
#include <string>

#include "mgp/grid_map.h"
#include "mgp/mission.h"
#include "mgp/pipeline.h"

namespace mgp {

// Renders the traversability layer as a color ramp, the TSDF zero level set
// as obstacle outlines, mission PoIs as dots, the plan path as a polyline
// and the start pose as a distinct marker. Output is deterministic for
// byte-identical inputs. Throws InputError when plan waypoints fall outside
// the map.
void render_svg(const MapBundle& map, const std::optional<Mission>& mission,
                const std::optional<Plan>& plan, const std::string& out_path);

}  // namespace mgp
