#pragma once

#include <string>
#include <vector>

#include "mgp/se2.h"
#include "mgp/validity.h"

namespace mgp {

// A target to visit, reachable from any of its candidate poses. The target
// pose itself need not be collision-free.
struct Toi {
  std::string id;
  SE2State pose;
  std::vector<SE2State> pois;
};

struct Mission {
  SE2State start;
  std::vector<Toi> tois;
};

// Structural checks: unique ids, non-empty PoI sets.
// Throws InputError naming the offending ToI.
void validate_mission_structure(const Mission& mission);

// Structural checks plus state validity of the start and every PoI against
// the map. Throws InputError naming the failing pose.
void validate_mission(const Mission& mission, const ValidityChecker& checker);

Mission load_mission(const std::string& path);
void save_mission(const Mission& mission, const std::string& path);

}  // namespace mgp
