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

#ifndef AUVPLAN_SCENARIO_HPP_
#define AUVPLAN_SCENARIO_HPP_

#include <cstdint>

#include "auvplan/network.hpp"
#include "auvplan/obstacles.hpp"

namespace auvplan
{

struct ScenarioSpec
{
  int waypoint_count = 40;
  double edge_density = 0.85;  // probability that an unordered node pair is connected
  double area_xy = 10000.0;    // waypoint x/y ~ U(0, area_xy)
  double depth_z = 100.0;      // waypoint z ~ U(0, depth_z)
  double speed = 3.0;          // m/s
  double t_available = 10800.0;
  double priority_min = 0.0;   // task priority ~ U((priority_min, priority_max])
  double priority_max = 10.0;
  double delta_min = 60.0;     // task completion time ~ U([delta_min, delta_max))
  double delta_max = 600.0;
  double taskless_fraction = 0.0;
  ObstacleFieldParams obstacles{ObstacleCounts{1, 1, 1, 1}};
  std::uint64_t seed = 1;
};

struct Scenario
{
  ScenarioSpec spec;
  OperationNetwork network;
};

/// Seeded instance generator: waypoints uniform over the operating volume,
/// edges Bernoulli(edge_density) per unordered pair, tasks uniform over the
/// configured ranges (a taskless_fraction of edges carries no task). Start is
/// node 1 and the destination the last node; generation retries with fresh
/// draws until they are connected (up to 100 attempts, then throws).
Scenario generate_scenario(const ScenarioSpec & spec);

}  // namespace auvplan

#endif  // AUVPLAN_SCENARIO_HPP_
