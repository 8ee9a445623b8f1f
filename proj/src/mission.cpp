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

#include "auvplan/mission.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace auvplan
{

namespace
{

constexpr std::uint64_t kRouteStreamTag = 0x0A11ULL;
constexpr std::uint64_t kPathStreamTag = 0x0B22ULL;
constexpr std::uint64_t kObstacleFieldTag = 0x0C33ULL;

double seconds_since(const std::chrono::steady_clock::time_point & t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int count_tasked_edges(const OperationNetwork & network, const std::vector<int> & edge_ids)
{
  int count = 0;
  for (int id : edge_ids) {
    const Edge * e = network.find_edge(id);
    if (e != nullptr && e->task) ++count;
  }
  return count;
}

}  // namespace

double expected_edge_time(const OperationNetwork & network, const Edge & edge)
{
  if (network.find_edge(edge.id) == nullptr) {
    throw std::invalid_argument("mission: edge is not part of the network");
  }
  return edge.distance / network.vehicle_speed + edge.task_completion_time();
}

bool replan_check(double t_path_flight, double t_expected)
{
  if (t_path_flight < 0.0 || t_expected < 0.0) {
    throw std::invalid_argument("mission: negative flight or expected time");
  }
  return t_path_flight > t_expected;
}

MissionResult run_mission(const Scenario & scenario, const MissionConfig & config)
{
  if (!(config.route_budget_margin > 0.0 && config.route_budget_margin <= 1.0)) {
    throw std::invalid_argument("mission: route budget margin must lie in (0, 1]");
  }
  const OperationNetwork & original = scenario.network;
  const std::uint64_t seed = scenario.spec.seed;

  MissionResult result;
  result.log.seed = seed;
  result.log.t_available_initial = scenario.spec.t_available;
  result.log.inverse_priority_norm = original.inverse_priority_sum;

  MissionState & state = result.state;
  state.remaining_time = scenario.spec.t_available;
  state.current_waypoint = original.start_id;

  OperationNetwork current = original;
  int route_call = 0;
  const int max_route_calls = static_cast<int>(original.edges.size()) + 2;

  while (state.status == MissionStatus::InProgress) {
    if (++route_call > max_route_calls) {
      state.status = MissionStatus::Failure;
      state.diagnostic = "route planning did not terminate";
      break;
    }
    if (!(state.remaining_time > 0.0)) {
      state.status = MissionStatus::Failure;
      state.diagnostic = "time budget exhausted before route planning";
      break;
    }

    bbo::BboConfig route_cfg = config.route_bbo;
    route_cfg.seed = derive_seed(seed, kRouteStreamTag, static_cast<std::uint64_t>(route_call));
    const double planning_budget = state.remaining_time * config.route_budget_margin;

    const auto t0 = std::chrono::steady_clock::now();
    const RoutePlanResult planned = plan_route(current, planning_budget, route_cfg);
    const double route_cpu = seconds_since(t0);
    state.compute_time_total += route_cpu;
    if (config.charge_compute_time) state.remaining_time -= route_cpu;

    RouteEvent route_event;
    route_event.call_no = route_call;
    route_event.start_id = current.start_id;
    route_event.target_id = current.destination_id;
    route_event.task_count = count_tasked_edges(current, planned.route.edge_sequence);
    route_event.weight = planned.route.total_weight;
    route_event.route_cost = planned.route.cost;
    route_event.t_cpu = route_cpu;
    route_event.t_available_at_call = state.remaining_time;
    route_event.t_route = planned.route.travel_time;
    route_event.valid = planned.route.feasible;
    route_event.node_sequence = planned.route.node_sequence;
    result.log.route_events.push_back(route_event);

    if (!planned.connected) {
      state.status = MissionStatus::Failure;
      state.diagnostic = "destination unreachable from the current waypoint";
      break;
    }
    if (!planned.route.feasible) {
      state.status = MissionStatus::Failure;
      state.diagnostic = "no feasible route within the remaining time";
      break;
    }

    bool replanned = false;
    int path_call = 0;
    for (std::size_t hop = 0; hop + 1 < planned.route.node_sequence.size(); ++hop) {
      const int from = planned.route.node_sequence[hop];
      const int to = planned.route.node_sequence[hop + 1];
      const Edge * edge = current.edge_between(from, to);
      if (edge == nullptr) {  // cannot happen for a feasible route
        state.status = MissionStatus::Failure;
        state.diagnostic = "route contains a missing edge";
        break;
      }
      ++path_call;

      const PathWindow window = make_window(current.waypoint(from).position,
                                            current.waypoint(to).position, current.vehicle_speed,
                                            config.path.control_point_count);
      Rng obstacle_rng(derive_seed(seed, kObstacleFieldTag, static_cast<std::uint64_t>(route_call),
                                   static_cast<std::uint64_t>(path_call)));
      std::vector<Obstacle> field =
        config.obstacle_provider
          ? config.obstacle_provider(window, obstacle_rng)
          : spawn_obstacles(window.start, window.target, scenario.spec.obstacles, obstacle_rng);

      bbo::BboConfig path_cfg = config.path_bbo;
      path_cfg.seed = derive_seed(seed, kPathStreamTag, static_cast<std::uint64_t>(route_call),
                                  static_cast<std::uint64_t>(path_call));

      const auto p0 = std::chrono::steady_clock::now();
      PathPlanResult flown = plan_path(window, std::move(field), path_cfg, config.path);
      const double path_cpu = seconds_since(p0);
      state.compute_time_total += path_cpu;
      if (config.charge_compute_time) state.remaining_time -= path_cpu;

      const double t_expected = expected_edge_time(current, *edge);
      state.remaining_time -= flown.path.flight_time + edge->task_completion_time();
      state.visited_edges.push_back(edge->id);
      if (edge->task) {
        state.completed_tasks.push_back(
          {edge->id, edge->task->priority, edge->task->completion_time});
      }
      state.current_waypoint = to;

      const bool replan = replan_check(flown.path.flight_time, t_expected);
      const bool route_continues = !replan && to != current.destination_id &&
                                   state.remaining_time >= 0.0;

      PathEvent path_event;
      path_event.route_id = route_call;
      path_event.call_no = path_call;
      path_event.edge_from = from;
      path_event.edge_to = to;
      path_event.edge_id = edge->id;
      path_event.violation = flown.path.violation;
      path_event.path_cost = flown.path.cost;
      path_event.t_cpu = path_cpu;
      path_event.t_path_flight = flown.path.flight_time;
      path_event.t_expected = t_expected;
      path_event.t_available_after = state.remaining_time;
      path_event.replan_flag = replan ? 1 : 0;
      path_event.pp_flag = route_continues ? 1 : 0;
      path_event.task_time = edge->task_completion_time();
      path_event.task_priority = edge->task_priority();
      result.log.path_events.push_back(path_event);
      result.flown_paths.push_back(flown.path);
      result.flown_obstacles.push_back(flown.final_field);

      if (state.remaining_time < 0.0) {
        state.status = MissionStatus::Failure;
        state.diagnostic = "time budget exhausted";
        break;
      }
      if (to == current.destination_id) {
        state.status = MissionStatus::Success;
        break;
      }
      if (replan) {
        ++state.replan_count;
        current = shrink_network(original, state.visited_edges, state.current_waypoint);
        replanned = true;
        break;
      }
    }

    if (state.status != MissionStatus::InProgress) break;
    if (!replanned) {
      // feasible routes end at the destination, so this only covers a route
      // invalidated mid-flight; re-plan from where the vehicle stopped
      ++state.replan_count;
      current = shrink_network(original, state.visited_edges, state.current_waypoint);
    }
  }
  return result;
}

MissionCost mission_cost(const MissionLog & log)
{
  MissionCost cost;
  if (!(log.t_available_initial > 0.0)) {
    throw std::invalid_argument("mission: log has no positive initial budget");
  }
  double spent = 0.0;
  double inverse_priority = 0.0;
  for (const PathEvent & event : log.path_events) {
    spent += event.t_path_flight + event.task_time;
    if (event.task_priority > 0.0) inverse_priority += 1.0 / event.task_priority;
  }
  cost.time_term = std::abs(spent - log.t_available_initial) / log.t_available_initial;
  cost.priority_term =
    log.inverse_priority_norm > 0.0 ? inverse_priority / log.inverse_priority_norm : 0.0;
  for (const RouteEvent & event : log.route_events) {
    if (event.call_no >= 2) cost.compute_term += event.t_cpu;
  }
  cost.total = cost.time_term + cost.priority_term + cost.compute_term;
  return cost;
}

}  // namespace auvplan
