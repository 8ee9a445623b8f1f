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

#include "auvplan/scenario.hpp"

#include <stdexcept>

#include "auvplan/rng.hpp"

namespace auvplan
{

namespace
{

void validate_spec(const ScenarioSpec & spec)
{
  if (spec.waypoint_count < 2) {
    throw std::invalid_argument("scenario: need at least two waypoints");
  }
  if (!(spec.edge_density > 0.0 && spec.edge_density <= 1.0)) {
    throw std::invalid_argument("scenario: edge density must lie in (0, 1]");
  }
  if (!(spec.area_xy > 0.0) || !(spec.depth_z > 0.0) || !(spec.speed > 0.0) ||
      !(spec.t_available > 0.0)) {
    throw std::invalid_argument("scenario: area, depth, speed and budget must be positive");
  }
  if (!(spec.priority_max > spec.priority_min) || spec.priority_min < 0.0) {
    throw std::invalid_argument("scenario: empty priority range");
  }
  if (!(spec.delta_max >= spec.delta_min) || spec.delta_min < 0.0) {
    throw std::invalid_argument("scenario: empty task-time range");
  }
  if (spec.taskless_fraction < 0.0 || spec.taskless_fraction > 1.0) {
    throw std::invalid_argument("scenario: taskless fraction must lie in [0, 1]");
  }
}

}  // namespace

Scenario generate_scenario(const ScenarioSpec & spec)
{
  validate_spec(spec);
  Rng rng(spec.seed);

  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Waypoint> waypoints;
    waypoints.reserve(static_cast<std::size_t>(spec.waypoint_count));
    for (int id = 1; id <= spec.waypoint_count; ++id) {
      Waypoint wp;
      wp.id = id;
      wp.position = {rng.uniform(0.0, spec.area_xy), rng.uniform(0.0, spec.area_xy),
                     rng.uniform(0.0, spec.depth_z)};
      waypoints.push_back(wp);
    }

    std::vector<EdgeSpec> edges;
    for (int a = 1; a <= spec.waypoint_count; ++a) {
      for (int b = a + 1; b <= spec.waypoint_count; ++b) {
        if (rng.uniform() >= spec.edge_density) continue;
        EdgeSpec e;
        e.from = a;
        e.to = b;
        if (spec.taskless_fraction <= 0.0 || rng.uniform() >= spec.taskless_fraction) {
          TaskSpec task;
          // priority support is (min, max]: 1 - u maps [0,1) onto (0,1]
          task.priority =
            spec.priority_min + (1.0 - rng.uniform()) * (spec.priority_max - spec.priority_min);
          task.completion_time = rng.uniform(spec.delta_min, spec.delta_max);
          e.task = task;
        }
        edges.push_back(e);
      }
    }

    Scenario scenario;
    scenario.spec = spec;
    scenario.network =
      build_network(std::move(waypoints), edges, 1, spec.waypoint_count, spec.speed);
    if (start_connected_to_destination(scenario.network)) {
      return scenario;
    }
  }
  throw std::runtime_error("scenario: could not connect start and destination in 100 attempts");
}

}  // namespace auvplan
