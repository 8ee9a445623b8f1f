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

#ifndef AUVPLAN_SVG_HPP_
#define AUVPLAN_SVG_HPP_

#include <string>

#include "auvplan/mission.hpp"
#include "auvplan/path.hpp"
#include "auvplan/scenario.hpp"

namespace auvplan
{

/// x-y projection of one planned path: obstacle disks (class "obstacle"),
/// the window chord (class "chord"), the spline (class "path") and the
/// start/target markers (class "endpoint").
std::string path_svg(const PathWindow & window, const PathPlanResult & result);

/// x-y projection of a full mission: waypoints (class "waypoint"), every
/// flown path (class "path"), and the obstacle fields the paths were flown
/// through (class "obstacle").
std::string mission_svg(const Scenario & scenario, const MissionResult & result);

}  // namespace auvplan

#endif  // AUVPLAN_SVG_HPP_
