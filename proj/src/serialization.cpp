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

#include "auvplan/serialization.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace auvplan
{

namespace
{

using nlohmann::json;

std::string fixed(double value, int decimals)
{
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

std::string join_ids(const std::vector<int> & ids)
{
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i != 0) out += '-';
    out += std::to_string(ids[i]);
  }
  return out;
}

json vec3_to_json(const Eigen::Vector3d & v)
{
  return json{{"x", v.x()}, {"y", v.y()}, {"z", v.z()}};
}

Eigen::Vector3d vec3_from_json(const json & j)
{
  return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("z").get<double>()};
}

const char * kind_name(ObstacleKind kind)
{
  switch (kind) {
    case ObstacleKind::StaticKnown: return "static_known";
    case ObstacleKind::QuasiStatic: return "quasi_static";
    case ObstacleKind::SelfMotivated: return "self_motivated";
    case ObstacleKind::CurrentAffected: return "current_affected";
  }
  return "static_known";
}

ObstacleKind kind_from_name(const std::string & name)
{
  if (name == "static_known") return ObstacleKind::StaticKnown;
  if (name == "quasi_static") return ObstacleKind::QuasiStatic;
  if (name == "self_motivated") return ObstacleKind::SelfMotivated;
  if (name == "current_affected") return ObstacleKind::CurrentAffected;
  throw std::invalid_argument("serialization: unknown obstacle kind '" + name + "'");
}

const char * status_name(MissionStatus status)
{
  switch (status) {
    case MissionStatus::InProgress: return "in_progress";
    case MissionStatus::Success: return "success";
    case MissionStatus::Failure: return "failure";
  }
  return "in_progress";
}

}  // namespace

json scenario_spec_to_json(const ScenarioSpec & spec)
{
  return json{
    {"waypoint_count", spec.waypoint_count},
    {"edge_density", spec.edge_density},
    {"area_xy", spec.area_xy},
    {"depth_z", spec.depth_z},
    {"speed", spec.speed},
    {"t_available", spec.t_available},
    {"priority_min", spec.priority_min},
    {"priority_max", spec.priority_max},
    {"delta_min", spec.delta_min},
    {"delta_max", spec.delta_max},
    {"taskless_fraction", spec.taskless_fraction},
    {"obstacles",
     {{"counts",
       {{"static_known", spec.obstacles.counts.static_known},
        {"quasi_static", spec.obstacles.counts.quasi_static},
        {"self_motivated", spec.obstacles.counts.self_motivated},
        {"current_affected", spec.obstacles.counts.current_affected}}},
      {"radius_sigma", spec.obstacles.radius_sigma},
      {"quasi_radius_sigma", spec.obstacles.quasi_radius_sigma},
      {"motion_sigma", spec.obstacles.motion_sigma},
      {"current_sigma", spec.obstacles.current_sigma}}}};
}

ScenarioSpec scenario_spec_from_json(const json & s)
{
  ScenarioSpec spec;
  spec.waypoint_count = s.at("waypoint_count").get<int>();
  spec.edge_density = s.at("edge_density").get<double>();
  spec.area_xy = s.at("area_xy").get<double>();
  spec.depth_z = s.at("depth_z").get<double>();
  spec.speed = s.at("speed").get<double>();
  spec.t_available = s.at("t_available").get<double>();
  spec.priority_min = s.at("priority_min").get<double>();
  spec.priority_max = s.at("priority_max").get<double>();
  spec.delta_min = s.at("delta_min").get<double>();
  spec.delta_max = s.at("delta_max").get<double>();
  spec.taskless_fraction = s.at("taskless_fraction").get<double>();
  const json & o = s.at("obstacles");
  spec.obstacles.counts.static_known = o.at("counts").at("static_known").get<int>();
  spec.obstacles.counts.quasi_static = o.at("counts").at("quasi_static").get<int>();
  spec.obstacles.counts.self_motivated = o.at("counts").at("self_motivated").get<int>();
  spec.obstacles.counts.current_affected = o.at("counts").at("current_affected").get<int>();
  spec.obstacles.radius_sigma = o.at("radius_sigma").get<double>();
  spec.obstacles.quasi_radius_sigma = o.at("quasi_radius_sigma").get<double>();
  spec.obstacles.motion_sigma = o.at("motion_sigma").get<double>();
  spec.obstacles.current_sigma = o.at("current_sigma").get<double>();
  return spec;
}

json scenario_to_json(const Scenario & scenario)
{
  json j;
  j["schema_version"] = 1;
  j["seed"] = scenario.spec.seed;
  j["spec"] = scenario_spec_to_json(scenario.spec);

  json waypoints = json::array();
  for (const Waypoint & wp : scenario.network.waypoints) {
    waypoints.push_back({{"id", wp.id},
                         {"x", wp.position.x()},
                         {"y", wp.position.y()},
                         {"z", wp.position.z()}});
  }
  json edges = json::array();
  for (const Edge & e : scenario.network.edges) {
    json je = {{"id", e.id}, {"from", e.from}, {"to", e.to}, {"distance", e.distance}};
    if (e.task) {
      je["task"] = {{"priority", e.task->priority}, {"completion_time", e.task->completion_time}};
    } else {
      je["task"] = nullptr;
    }
    edges.push_back(je);
  }
  j["network"] = {{"start_id", scenario.network.start_id},
                  {"destination_id", scenario.network.destination_id},
                  {"vehicle_speed", scenario.network.vehicle_speed},
                  {"waypoints", waypoints},
                  {"edges", edges}};
  return j;
}

Scenario scenario_from_json(const json & j)
{
  if (j.at("schema_version").get<int>() != 1) {
    throw std::invalid_argument("serialization: unsupported scenario schema version");
  }
  Scenario scenario;
  scenario.spec = scenario_spec_from_json(j.at("spec"));
  scenario.spec.seed = j.at("seed").get<std::uint64_t>();

  const json & n = j.at("network");
  std::vector<Waypoint> waypoints;
  for (const json & jw : n.at("waypoints")) {
    Waypoint wp;
    wp.id = jw.at("id").get<int>();
    wp.position = {jw.at("x").get<double>(), jw.at("y").get<double>(), jw.at("z").get<double>()};
    waypoints.push_back(wp);
  }
  std::vector<EdgeSpec> edges;
  for (const json & je : n.at("edges")) {
    EdgeSpec e;
    e.from = je.at("from").get<int>();
    e.to = je.at("to").get<int>();
    if (!je.at("task").is_null()) {
      TaskSpec task;
      task.priority = je.at("task").at("priority").get<double>();
      task.completion_time = je.at("task").at("completion_time").get<double>();
      e.task = task;
    }
    edges.push_back(e);
  }
  scenario.network = build_network(std::move(waypoints), edges, n.at("start_id").get<int>(),
                                   n.at("destination_id").get<int>(),
                                   n.at("vehicle_speed").get<double>());
  return scenario;
}

json route_to_json(const Route & route)
{
  return json{{"node_sequence", route.node_sequence},
              {"edge_sequence", route.edge_sequence},
              {"travel_time", route.travel_time},
              {"total_weight", route.total_weight},
              {"cost", route.cost},
              {"violation", route.violation},
              {"feasible", route.feasible}};
}

json obstacle_to_json(const Obstacle & obstacle)
{
  return json{{"kind", kind_name(obstacle.kind)},
              {"position", vec3_to_json(obstacle.position)},
              {"radius", obstacle.radius},
              {"effective_radius", obstacle.effective_radius},
              {"radius_sigma", obstacle.radius_sigma},
              {"motion_sigma", obstacle.motion_sigma},
              {"current_magnitude", obstacle.current_magnitude}};
}

Obstacle obstacle_from_json(const json & j)
{
  Obstacle o;
  o.kind = kind_from_name(j.at("kind").get<std::string>());
  o.position = vec3_from_json(j.at("position"));
  o.radius = j.at("radius").get<double>();
  o.effective_radius = j.at("effective_radius").get<double>();
  o.radius_sigma = j.at("radius_sigma").get<double>();
  o.motion_sigma = j.at("motion_sigma").get<double>();
  o.current_magnitude = j.at("current_magnitude").get<double>();
  return o;
}

json path_result_to_json(const PathWindow & window, const PathPlanResult & result)
{
  json control_points = json::array();
  for (const Eigen::Vector3d & p : result.polygon.points) control_points.push_back(vec3_to_json(p));
  json samples = json::array();
  for (const Eigen::Vector3d & p : result.path.samples) samples.push_back(vec3_to_json(p));
  json obstacles = json::array();
  for (const Obstacle & o : result.final_field) obstacles.push_back(obstacle_to_json(o));
  return json{{"start", vec3_to_json(window.start)},
              {"target", vec3_to_json(window.target)},
              {"vehicle_speed", window.vehicle_speed},
              {"control_points", control_points},
              {"samples", samples},
              {"length", result.path.length},
              {"flight_time", result.path.flight_time},
              {"violation", result.path.violation},
              {"cost", result.path.cost},
              {"obstacles", obstacles}};
}

json mission_log_to_json(const MissionLog & log)
{
  json route_events = json::array();
  for (const RouteEvent & e : log.route_events) {
    route_events.push_back({{"call_no", e.call_no},
                            {"start", e.start_id},
                            {"target", e.target_id},
                            {"task_count", e.task_count},
                            {"weight", e.weight},
                            {"route_cost", e.route_cost},
                            {"t_cpu", e.t_cpu},
                            {"t_available", e.t_available_at_call},
                            {"t_route", e.t_route},
                            {"valid", e.valid},
                            {"node_sequence", e.node_sequence}});
  }
  json path_events = json::array();
  for (const PathEvent & e : log.path_events) {
    path_events.push_back({{"route_id", e.route_id},
                           {"call_no", e.call_no},
                           {"edge_from", e.edge_from},
                           {"edge_to", e.edge_to},
                           {"edge_id", e.edge_id},
                           {"violation", e.violation},
                           {"path_cost", e.path_cost},
                           {"t_cpu", e.t_cpu},
                           {"t_path_flight", e.t_path_flight},
                           {"t_expected", e.t_expected},
                           {"t_available", e.t_available_after},
                           {"replan_flag", e.replan_flag},
                           {"pp_flag", e.pp_flag},
                           {"task_time", e.task_time},
                           {"task_priority", e.task_priority}});
  }
  return json{{"schema_version", log.schema_version},
              {"seed", log.seed},
              {"t_available_initial", log.t_available_initial},
              {"inverse_priority_norm", log.inverse_priority_norm},
              {"route_events", route_events},
              {"path_events", path_events}};
}

MissionLog mission_log_from_json(const json & j)
{
  if (j.at("schema_version").get<int>() != 1) {
    throw std::invalid_argument("serialization: unsupported mission log schema version");
  }
  MissionLog log;
  log.seed = j.at("seed").get<std::uint64_t>();
  log.t_available_initial = j.at("t_available_initial").get<double>();
  log.inverse_priority_norm = j.at("inverse_priority_norm").get<double>();
  for (const json & je : j.at("route_events")) {
    RouteEvent e;
    e.call_no = je.at("call_no").get<int>();
    e.start_id = je.at("start").get<int>();
    e.target_id = je.at("target").get<int>();
    e.task_count = je.at("task_count").get<int>();
    e.weight = je.at("weight").get<double>();
    e.route_cost = je.at("route_cost").get<double>();
    e.t_cpu = je.at("t_cpu").get<double>();
    e.t_available_at_call = je.at("t_available").get<double>();
    e.t_route = je.at("t_route").get<double>();
    e.valid = je.at("valid").get<bool>();
    e.node_sequence = je.at("node_sequence").get<std::vector<int>>();
    log.route_events.push_back(e);
  }
  for (const json & je : j.at("path_events")) {
    PathEvent e;
    e.route_id = je.at("route_id").get<int>();
    e.call_no = je.at("call_no").get<int>();
    e.edge_from = je.at("edge_from").get<int>();
    e.edge_to = je.at("edge_to").get<int>();
    e.edge_id = je.at("edge_id").get<int>();
    e.violation = je.at("violation").get<double>();
    e.path_cost = je.at("path_cost").get<double>();
    e.t_cpu = je.at("t_cpu").get<double>();
    e.t_path_flight = je.at("t_path_flight").get<double>();
    e.t_expected = je.at("t_expected").get<double>();
    e.t_available_after = je.at("t_available").get<double>();
    e.replan_flag = je.at("replan_flag").get<int>();
    e.pp_flag = je.at("pp_flag").get<int>();
    e.task_time = je.at("task_time").get<double>();
    e.task_priority = je.at("task_priority").get<double>();
    log.path_events.push_back(e);
  }
  return log;
}

json mission_state_to_json(const MissionState & state)
{
  json tasks = json::array();
  for (const CompletedTask & t : state.completed_tasks) {
    tasks.push_back({{"edge_id", t.edge_id},
                     {"priority", t.priority},
                     {"completion_time", t.completion_time}});
  }
  return json{{"status", status_name(state.status)},
              {"remaining_time", state.remaining_time},
              {"current_waypoint", state.current_waypoint},
              {"visited_edges", state.visited_edges},
              {"completed_tasks", tasks},
              {"replan_count", state.replan_count},
              {"compute_time_total", state.compute_time_total},
              {"diagnostic", state.diagnostic}};
}

json mission_result_to_json(const MissionResult & result)
{
  const MissionCost cost = mission_cost(result.log);
  return json{{"log", mission_log_to_json(result.log)},
              {"state", mission_state_to_json(result.state)},
              {"cost",
               {{"time_term", cost.time_term},
                {"priority_term", cost.priority_term},
                {"compute_term", cost.compute_term},
                {"total", cost.total}}}};
}

std::string route_events_csv(const MissionLog & log)
{
  std::ostringstream out;
  out << "Call NO,Start,Target,Task NO,Weight,Route Cost,T_CPU,T_Available,T_Route,Validity,"
         "Route Sequence\n";
  for (const RouteEvent & e : log.route_events) {
    out << e.call_no << ',' << e.start_id << ',' << e.target_id << ',' << e.task_count << ','
        << fixed(e.weight, 3) << ',' << fixed(e.route_cost, 3) << ',' << fixed(e.t_cpu, 3) << ','
        << fixed(e.t_available_at_call, 1) << ',' << fixed(e.t_route, 1) << ','
        << (e.valid ? "Yes" : "No") << ',' << join_ids(e.node_sequence) << '\n';
  }
  return out.str();
}

std::string path_events_csv(const MissionLog & log)
{
  std::ostringstream out;
  out << "Route ID,PP Call NO,Edges,Violation,Path Cost,T_CPU,T_path-flight,T_Expected,"
         "T_Available,Replan Flag,PP Flag\n";
  for (const PathEvent & e : log.path_events) {
    out << "Route-" << e.route_id << ',' << e.call_no << ',' << e.edge_from << '-' << e.edge_to
        << ',' << fixed(e.violation, 6) << ',' << fixed(e.path_cost, 3) << ',' << fixed(e.t_cpu, 3)
        << ',' << fixed(e.t_path_flight, 1) << ',' << fixed(e.t_expected, 1) << ','
        << fixed(e.t_available_after, 1) << ',' << e.replan_flag << ',' << e.pp_flag << '\n';
  }
  return out.str();
}

json mask_wall_clock(json j)
{
  if (j.is_object()) {
    // cost summaries carry a wall-clock compute charge inside the total
    if (j.contains("compute_term") && j.contains("total") && j.contains("time_term") &&
        j.contains("priority_term")) {
      j["compute_term"] = 0.0;
      j["total"] = j["time_term"].get<double>() + j["priority_term"].get<double>();
    }
    for (auto & [key, value] : j.items()) {
      if ((key == "t_cpu" || key == "compute_time_total") && value.is_number()) {
        value = 0.0;
      } else {
        value = mask_wall_clock(value);
      }
    }
  } else if (j.is_array()) {
    for (auto & value : j) value = mask_wall_clock(value);
  }
  return j;
}

}  // namespace auvplan
