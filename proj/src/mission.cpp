#include "mgp/mission.h"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mgp/errors.h"

namespace mgp {

namespace {

using nlohmann::ordered_json;

SE2State state_from_json(const ordered_json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) {
    throw InputError("mission file: " + what + " must be [x, y, yaw]");
  }
  return SE2State{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ordered_json state_to_json(const SE2State& s) { return ordered_json{s.x, s.y, s.yaw}; }

}  // namespace

void validate_mission_structure(const Mission& mission) {
  std::set<std::string> ids;
  for (const Toi& toi : mission.tois) {
    if (toi.id.empty()) throw InputError("mission: ToI with empty id");
    if (!ids.insert(toi.id).second) {
      throw InputError("mission: duplicate ToI id '" + toi.id + "'");
    }
    if (toi.pois.empty()) {
      throw InputError("mission: ToI '" + toi.id + "' has no PoI");
    }
  }
}

void validate_mission(const Mission& mission, const ValidityChecker& checker) {
  validate_mission_structure(mission);
  CheckStats stats;
  if (!checker.check_state(mission.start, stats)) {
    throw InputError("mission: start state is invalid");
  }
  for (const Toi& toi : mission.tois) {
    for (std::size_t p = 0; p < toi.pois.size(); ++p) {
      if (!checker.check_state(toi.pois[p], stats)) {
        std::ostringstream os;
        os << "mission: PoI " << p << " of ToI '" << toi.id << "' is invalid";
        throw InputError(os.str());
      }
    }
  }
}

Mission load_mission(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("mission file: cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("mission file: invalid JSON in " + path + ": " + e.what());
  }

  Mission mission;
  try {
    if (!j.contains("version") || j["version"].get<int>() != 1) {
      throw InputError("mission file: missing or unsupported 'version'");
    }
    if (!j.contains("start")) throw InputError("mission file: missing field 'start'");
    mission.start = state_from_json(j["start"], "start");
    for (const auto& t : j.value("tois", ordered_json::array())) {
      Toi toi;
      if (!t.contains("id")) throw InputError("mission file: ToI missing 'id'");
      toi.id = t["id"].get<std::string>();
      if (!t.contains("pose")) {
        throw InputError("mission file: ToI '" + toi.id + "' missing 'pose'");
      }
      toi.pose = state_from_json(t["pose"], "ToI '" + toi.id + "' pose");
      for (const auto& p : t.value("pois", ordered_json::array())) {
        toi.pois.push_back(state_from_json(p, "PoI of ToI '" + toi.id + "'"));
      }
      mission.tois.push_back(std::move(toi));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("mission file: ") + e.what());
  }
  validate_mission_structure(mission);
  return mission;
}

void save_mission(const Mission& mission, const std::string& path) {
  validate_mission_structure(mission);
  ordered_json j;
  j["version"] = 1;
  j["start"] = state_to_json(mission.start);
  ordered_json tois = ordered_json::array();
  for (const Toi& toi : mission.tois) {
    ordered_json t;
    t["id"] = toi.id;
    t["pose"] = state_to_json(toi.pose);
    ordered_json pois = ordered_json::array();
    for (const SE2State& p : toi.pois) pois.push_back(state_to_json(p));
    t["pois"] = pois;
    tois.push_back(t);
  }
  j["tois"] = tois;
  std::ofstream out(path);
  if (!out) throw InputError("mission file: cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace mgp
