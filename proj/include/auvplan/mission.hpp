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

#ifndef AUVPLAN_MISSION_HPP_
#define AUVPLAN_MISSION_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "auvplan/path.hpp"
#include "auvplan/route.hpp"
#include "auvplan/scenario.hpp"

namespace auvplan
{

enum class MissionStatus { InProgress, Success, Failure };

struct CompletedTask
{
  int edge_id = 0;
  double priority = 0.0;
  double completion_time = 0.0;
};

struct MissionState
{
  double remaining_time = 0.0;
  int current_waypoint = 0;
  std::vector<int> visited_edges;
  std::vector<CompletedTask> completed_tasks;
  int replan_count = 0;
  double compute_time_total = 0.0;  // planner wall-clock, bookkeeping only
  MissionStatus status = MissionStatus::InProgress;
  std::string diagnostic;
};

struct RouteEvent
{
  int call_no = 0;
  int start_id = 0;
  int target_id = 0;
  int task_count = 0;
  double weight = 0.0;
  double route_cost = 0.0;
  double t_cpu = 0.0;
  double t_available_at_call = 0.0;
  double t_route = 0.0;
  bool valid = false;
  std::vector<int> node_sequence;
};

struct PathEvent
{
  int route_id = 0;
  int call_no = 0;  // path-planner call number within its route
  int edge_from = 0;
  int edge_to = 0;
  int edge_id = 0;
  double violation = 0.0;
  double path_cost = 0.0;
  double t_cpu = 0.0;
  double t_path_flight = 0.0;
  double t_expected = 0.0;
  double t_available_after = 0.0;
  int replan_flag = 0;
  int pp_flag = 0;  // 1 when the current route continues with another path call
  double task_time = 0.0;      // completion time charged for the edge's task
  double task_priority = 0.0;  // 0 for an untasked edge
};

struct MissionLog
{
  int schema_version = 1;
  std::uint64_t seed = 0;
  double t_available_initial = 0.0;
  double inverse_priority_norm = 0.0;  // network-wide sum of 1/priority at mission start
  std::vector<RouteEvent> route_events;
  std::vector<PathEvent> path_events;
};

/// Straight-line estimate for one edge: distance/speed + task time.
double expected_edge_time(const OperationNetwork & network, const Edge & edge);

/// True when the flown path exceeded the estimate, i.e. the remaining route
/// must be re-planned. Ties continue the current route.
bool replan_check(double t_path_flight, double t_expected);

using ObstacleProvider =
  std::function<std::vector<Obstacle>(const PathWindow & window, Rng & rng)>;

struct MissionConfig
{
  bbo::BboConfig route_bbo = default_route_config();
  bbo::BboConfig path_bbo = default_path_config();
  PathConfig path;
  /// Fraction of the remaining budget handed to the route planner; the
  /// reserve absorbs per-edge detour overshoot so missions do not run the
  /// clock below zero.
  double route_budget_margin = 0.95;
  /// When set, planner wall-clock is also deducted from the running budget
  /// (it is always charged to the mission cost).
  bool charge_compute_time = false;
  /// Replaces the default per-window obstacle spawning; used to script
  /// specific fields.
  ObstacleProvider obstacle_provider;
};

struct MissionResult
{
  MissionLog log;
  MissionState state;
  std::vector<SampledPath> flown_paths;                 // geometry per path event
  std::vector<std::vector<Obstacle>> flown_obstacles;   // field state per path event
};

/// Runs the full loop: plan a route on the current network, fly it edge by
/// edge through freshly spawned obstacle fields, deduct flight + task time
/// from the budget, and re-plan from the current waypoint over the shrunk
/// network whenever a flight exceeds its estimate. Ends in Success at the
/// destination with non-negative remaining time, otherwise in Failure with a
/// diagnostic. Deterministic for a fixed scenario seed (wall-clock fields
/// excepted).
MissionResult run_mission(const Scenario & scenario, const MissionConfig & config = {});

struct MissionCost
{
  double time_term = 0.0;      // |spent - budget| / budget
  double priority_term = 0.0;  // completed-task 1/priority share of the network
  double compute_term = 0.0;   // seconds of re-planning compute
  double total = 0.0;
};

/// Aggregates a finished log through the mission cost: normalized distance
/// of the spent time from the initial budget, the completed tasks'
/// inverse-priority share, and the re-planning compute charge.
MissionCost mission_cost(const MissionLog & log);

}  // namespace auvplan

#endif  // AUVPLAN_MISSION_HPP_
