// Copyright 2026 the auvplan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUVPLAN_SERIALIZATION_HPP_
#define AUVPLAN_SERIALIZATION_HPP_

#include <json.hpp>
#include <string>

#include "auvplan/mission.hpp"
#include "auvplan/path.hpp"
#include "auvplan/route.hpp"
#include "auvplan/scenario.hpp"

namespace auvplan
{

nlohmann::json scenario_spec_to_json(const ScenarioSpec & spec);
ScenarioSpec scenario_spec_from_json(const nlohmann::json & j);

nlohmann::json scenario_to_json(const Scenario & scenario);
Scenario scenario_from_json(const nlohmann::json & j);

nlohmann::json route_to_json(const Route & route);

nlohmann::json path_result_to_json(const PathWindow & window, const PathPlanResult & result);

nlohmann::json obstacle_to_json(const Obstacle & obstacle);
Obstacle obstacle_from_json(const nlohmann::json & j);

nlohmann::json mission_log_to_json(const MissionLog & log);
MissionLog mission_log_from_json(const nlohmann::json & j);

nlohmann::json mission_state_to_json(const MissionState & state);

/// Full mission output: log plus final state (and the mission cost summary).
nlohmann::json mission_result_to_json(const MissionResult & result);

/// RFC-4180 CSV of the route events. Header:
/// Call NO,Start,Target,Task NO,Weight,Route Cost,T_CPU,T_Available,T_Route,Validity,Route Sequence
std::string route_events_csv(const MissionLog & log);

/// RFC-4180 CSV of the path events. Header:
/// Route ID,PP Call NO,Edges,Violation,Path Cost,T_CPU,T_path-flight,T_Expected,T_Available,Replan Flag,PP Flag
std::string path_events_csv(const MissionLog & log);

/// Zeroes every wall-clock field (t_cpu, compute_time_total) in a mission
/// JSON document; used for replay-determinism comparisons.
nlohmann::json mask_wall_clock(nlohmann::json j);

}  // namespace auvplan

#endif  // AUVPLAN_SERIALIZATION_HPP_
