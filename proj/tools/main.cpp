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

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "auvplan/mission.hpp"
#include "auvplan/path.hpp"
#include "auvplan/route.hpp"
#include "auvplan/scenario.hpp"
#include "auvplan/serialization.hpp"
#include "auvplan/svg.hpp"

namespace
{

// exit codes (also documented in the README)
constexpr int kOk = 0;
constexpr int kUsageError = 2;
constexpr int kConfigError = 3;
constexpr int kPlanningFailure = 4;
constexpr int kInternalError = 5;

struct CliError
{
  int code;
  std::string message;
};

void write_file(const std::string & path, const std::string & content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kConfigError, "cannot open '" + path + "' for writing"};
  out << content;
  if (!out) throw CliError{kConfigError, "failed writing '" + path + "'"};
}

nlohmann::json read_json(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kConfigError, "cannot open '" + path + "'"};
  try {
    return nlohmann::json::parse(in);
  } catch (const std::exception & e) {
    throw CliError{kConfigError, std::string("malformed JSON in '") + path + "': " + e.what()};
  }
}

auvplan::Scenario load_scenario(const std::string & path)
{
  try {
    return auvplan::scenario_from_json(read_json(path));
  } catch (const CliError &) {
    throw;
  } catch (const std::exception & e) {
    throw CliError{kConfigError, std::string("invalid scenario: ") + e.what()};
  }
}

bool deterministic_requested()
{
  const char * env = std::getenv("BBO_DETERMINISTIC");
  return env != nullptr && std::string(env) == "1";
}

void apply_parallel_policy(auvplan::bbo::BboConfig & cfg)
{
  cfg.parallel_evaluation = !deterministic_requested();
}

struct PathKindSpec
{
  std::string name = "mixed";
  auvplan::ObstacleCounts counts(int total) const
  {
    auvplan::ObstacleCounts c;
    if (name == "static") {
      c.static_known = total;
    } else if (name == "quasi") {
      c.quasi_static = total;
    } else if (name == "moving") {
      c.self_motivated = total;
    } else if (name == "current") {
      c.current_affected = total;
    } else {  // mixed: round-robin
      for (int i = 0; i < total; ++i) {
        switch (i % 4) {
          case 0: ++c.static_known; break;
          case 1: ++c.quasi_static; break;
          case 2: ++c.self_motivated; break;
          default: ++c.current_affected; break;
        }
      }
    }
    return c;
  }
};

int run_generate(const std::string & out_path, const std::string & config_path,
                 const auvplan::ScenarioSpec & flag_spec, const std::vector<bool> & flag_set)
{
  auvplan::ScenarioSpec spec;
  if (!config_path.empty()) {
    try {
      spec = auvplan::scenario_spec_from_json(read_json(config_path));
    } catch (const CliError &) {
      throw;
    } catch (const std::exception & e) {
      throw CliError{kConfigError, std::string("invalid scenario config: ") + e.what()};
    }
  }
  // flags override the config file; flag_set mirrors the field order below
  if (flag_set[0]) spec.waypoint_count = flag_spec.waypoint_count;
  if (flag_set[1]) spec.edge_density = flag_spec.edge_density;
  if (flag_set[2]) spec.area_xy = flag_spec.area_xy;
  if (flag_set[3]) spec.depth_z = flag_spec.depth_z;
  if (flag_set[4]) spec.speed = flag_spec.speed;
  if (flag_set[5]) spec.t_available = flag_spec.t_available;
  if (flag_set[6]) spec.obstacles.counts = flag_spec.obstacles.counts;
  spec.seed = flag_spec.seed;

  auvplan::Scenario scenario;
  try {
    scenario = auvplan::generate_scenario(spec);
  } catch (const std::exception & e) {
    throw CliError{kPlanningFailure, std::string("scenario generation failed: ") + e.what()};
  }
  write_file(out_path, auvplan::scenario_to_json(scenario).dump(2) + "\n");
  std::cout << "scenario: " << scenario.network.node_count() << " waypoints, "
            << scenario.network.edges.size() << " edges -> " << out_path << "\n";
  return kOk;
}

int run_route(const std::string & scenario_path, std::uint64_t seed, bool seed_given,
              const std::string & out_path, const std::string & trace_path)
{
  const auvplan::Scenario scenario = load_scenario(scenario_path);
  auvplan::bbo::BboConfig cfg = auvplan::default_route_config();
  cfg.seed = seed_given ? seed : auvplan::derive_seed(scenario.spec.seed, 0xA11ULL, 1);
  apply_parallel_policy(cfg);

  const auvplan::RoutePlanResult result =
    auvplan::plan_route(scenario.network, scenario.spec.t_available, cfg);
  if (!out_path.empty()) {
    write_file(out_path, auvplan::route_to_json(result.route).dump(2) + "\n");
  }
  if (!trace_path.empty()) {
    write_file(trace_path, auvplan::bbo::trace_to_csv(result.trace));
  }
  std::cout << "route: " << (result.route.feasible ? "feasible" : "infeasible")
            << " travel_time=" << result.route.travel_time << " cost=" << result.route.cost
            << " weight=" << result.route.total_weight << "\n";
  if (!result.connected) {
    std::cerr << "auvplan: error " << kPlanningFailure
              << ": start and destination are disconnected\n";
    return kPlanningFailure;
  }
  return result.route.feasible ? kOk : kPlanningFailure;
}

int run_path(const Eigen::Vector3d & start, const Eigen::Vector3d & target, int obstacle_count,
             const PathKindSpec & kind, double speed, std::uint64_t seed,
             const std::string & out_path, const std::string & svg_path)
{
  auvplan::PathConfig path_cfg;
  const auvplan::PathWindow window =
    auvplan::make_window(start, target, speed, path_cfg.control_point_count);

  auvplan::ObstacleFieldParams params;
  params.counts = kind.counts(obstacle_count);
  auvplan::Rng spawn_rng(auvplan::derive_seed(seed, 0x0C33ULL, 1, 1));
  std::vector<auvplan::Obstacle> field;
  try {
    field = auvplan::spawn_obstacles(window.start, window.target, params, spawn_rng);
  } catch (const std::exception & e) {
    throw CliError{kPlanningFailure, std::string("obstacle spawning failed: ") + e.what()};
  }

  auvplan::bbo::BboConfig cfg = auvplan::default_path_config();
  cfg.seed = seed;
  apply_parallel_policy(cfg);
  const auvplan::PathPlanResult result = auvplan::plan_path(window, field, cfg, path_cfg);

  if (!out_path.empty()) {
    write_file(out_path, auvplan::path_result_to_json(window, result).dump(2) + "\n");
  }
  if (!svg_path.empty()) {
    write_file(svg_path, auvplan::path_svg(window, result));
  }
  std::cout << "path: length=" << result.path.length << " flight_time=" << result.path.flight_time
            << " violation=" << result.path.violation << "\n";
  if (result.path.violation > 0.0) {
    std::cerr << "auvplan: error " << kPlanningFailure << ": no conflict-free path found\n";
    return kPlanningFailure;
  }
  return kOk;
}

int run_mission_cmd(const std::string & scenario_path, std::uint64_t seed, bool seed_given,
                    const std::string & out_dir, int repeat, double margin, bool charge_compute)
{
  auvplan::Scenario scenario = load_scenario(scenario_path);
  if (seed_given) scenario.spec.seed = seed;
  std::filesystem::create_directories(out_dir);

  auvplan::MissionConfig config;
  config.route_budget_margin = margin;
  config.charge_compute_time = charge_compute;
  apply_parallel_policy(config.route_bbo);
  apply_parallel_policy(config.path_bbo);

  std::ostringstream summary;
  summary << "seed,status,remaining_time,replans,route_calls,path_calls,cost_total\n";
  bool all_success = true;
  const std::uint64_t base_seed = scenario.spec.seed;
  for (int i = 0; i < repeat; ++i) {
    scenario.spec.seed = base_seed + static_cast<std::uint64_t>(i);
    const auvplan::MissionResult result = auvplan::run_mission(scenario, config);
    const auvplan::MissionCost cost = auvplan::mission_cost(result.log);

    const std::string suffix = repeat > 1 ? "_" + std::to_string(scenario.spec.seed) : "";
    const std::string base = out_dir + "/mission" + suffix;
    write_file(base + ".json", auvplan::mission_result_to_json(result).dump(2) + "\n");
    write_file(base + "_route_events.csv", auvplan::route_events_csv(result.log));
    write_file(base + "_path_events.csv", auvplan::path_events_csv(result.log));
    write_file(base + ".svg", auvplan::mission_svg(scenario, result));

    const bool success = result.state.status == auvplan::MissionStatus::Success;
    all_success = all_success && success;
    summary << scenario.spec.seed << ',' << (success ? "success" : "failure") << ','
            << result.state.remaining_time << ',' << result.state.replan_count << ','
            << result.log.route_events.size() << ',' << result.log.path_events.size() << ','
            << cost.total << '\n';
    std::cout << "mission seed=" << scenario.spec.seed << ": "
              << (success ? "success" : "failure")
              << " remaining=" << result.state.remaining_time
              << " replans=" << result.state.replan_count;
    if (!result.state.diagnostic.empty()) std::cout << " (" << result.state.diagnostic << ")";
    std::cout << "\n";
  }
  if (repeat > 1) {
    write_file(out_dir + "/summary.csv", summary.str());
  }
  return all_success ? kOk : kPlanningFailure;
}

int run_oracle(const std::string & scenario_path, const std::string & out_path)
{
  const auvplan::Scenario scenario = load_scenario(scenario_path);
  auvplan::RouteEnumeration enumeration;
  try {
    enumeration =
      auvplan::enumerate_best_route(scenario.network, scenario.spec.t_available);
  } catch (const std::exception & e) {
    throw CliError{kPlanningFailure, std::string("enumeration failed: ") + e.what()};
  }
  if (!enumeration.found) {
    std::cerr << "auvplan: error " << kPlanningFailure
              << ": no start-destination path exists\n";
    return kPlanningFailure;
  }
  nlohmann::json j = auvplan::route_to_json(enumeration.best);
  j["routes_considered"] = enumeration.routes_considered;
  if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
  std::cout << "oracle: optimum cost=" << enumeration.best.cost
            << " violation=" << enumeration.best.violation << " over "
            << enumeration.routes_considered << " routes\n";
  return kOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"AUV mission planning: scenario generation, route/path planning, simulation"};
  app.require_subcommand(1);

  // generate
  auto * generate = app.add_subcommand("generate", "Generate a seeded scenario JSON");
  std::string gen_out, gen_config;
  auvplan::ScenarioSpec flag_spec;
  generate->add_option("--out", gen_out, "Output scenario JSON")->required();
  generate->add_option("--config", gen_config, "Scenario defaults JSON (see configs/)");
  auto * opt_nodes = generate->add_option("--nodes", flag_spec.waypoint_count, "Waypoint count");
  auto * opt_density = generate->add_option("--density", flag_spec.edge_density,
                                            "Edge probability per node pair (0,1]");
  auto * opt_area = generate->add_option("--area", flag_spec.area_xy, "x/y extent in meters");
  auto * opt_depth = generate->add_option("--depth", flag_spec.depth_z, "z extent in meters");
  auto * opt_speed = generate->add_option("--speed", flag_spec.speed, "Vehicle speed m/s");
  auto * opt_budget = generate->add_option("--budget", flag_spec.t_available,
                                           "Mission time budget in seconds");
  int gen_obstacles = -1;
  auto * opt_obstacles = generate->add_option("--obstacles-per-kind", gen_obstacles,
                                              "Obstacles of each kind per path window");
  generate->add_option("--seed", flag_spec.seed, "Scenario seed");

  // route
  auto * route = app.add_subcommand("route", "Plan a route for a scenario");
  std::string route_scenario, route_out, route_trace;
  std::uint64_t route_seed = 0;
  route->add_option("--scenario", route_scenario, "Scenario JSON")->required();
  auto * route_seed_opt = route->add_option("--seed", route_seed, "Engine seed");
  route->add_option("--out", route_out, "Route JSON output");
  route->add_option("--trace", route_trace, "Convergence trace CSV output");

  // path
  auto * path = app.add_subcommand("path", "Plan a single conflict-free path");
  std::vector<double> path_start{0.0, 0.0, 50.0}, path_target{1000.0, 800.0, 60.0};
  int path_obstacles = 5;
  PathKindSpec path_kind;
  double path_speed = 3.0;
  std::uint64_t path_seed = 1;
  std::string path_out, path_svg_file;
  path->add_option("--start", path_start, "Window start x y z")->expected(3);
  path->add_option("--target", path_target, "Window target x y z")->expected(3);
  path->add_option("--obstacles", path_obstacles, "Obstacle count");
  path->add_option("--kind", path_kind.name, "static|quasi|moving|current|mixed")
    ->check(CLI::IsMember({"static", "quasi", "moving", "current", "mixed"}));
  path->add_option("--speed", path_speed, "Vehicle speed m/s");
  path->add_option("--seed", path_seed, "Engine seed");
  path->add_option("--out", path_out, "Path JSON output");
  path->add_option("--svg", path_svg_file, "Path SVG output");

  // mission
  auto * mission = app.add_subcommand("mission", "Run the full mission loop");
  std::string mission_scenario, mission_out = ".";
  std::uint64_t mission_seed = 0;
  int mission_repeat = 1;
  double mission_margin = 0.95;
  bool mission_charge_compute = false;
  mission->add_option("--scenario", mission_scenario, "Scenario JSON")->required();
  auto * mission_seed_opt = mission->add_option("--seed", mission_seed, "Mission seed override");
  mission->add_option("--out", mission_out, "Output directory");
  mission->add_option("--repeat", mission_repeat, "Run N missions with consecutive seeds")
    ->check(CLI::PositiveNumber);
  mission->add_option("--margin", mission_margin, "Route planning budget fraction (0,1]");
  mission->add_flag("--charge-compute", mission_charge_compute,
                    "Deduct planner wall-clock from the mission budget");

  // oracle
  auto * oracle = app.add_subcommand("oracle", "Exhaustive route optimum for small scenarios");
  std::string oracle_scenario, oracle_out;
  oracle->add_option("--scenario", oracle_scenario, "Scenario JSON")->required();
  oracle->add_option("--out", oracle_out, "Optimum route JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (generate->parsed()) {
      if (gen_obstacles >= 0) {
        flag_spec.obstacles.counts = {gen_obstacles, gen_obstacles, gen_obstacles, gen_obstacles};
      }
      const std::vector<bool> flag_set{!opt_nodes->empty(),  !opt_density->empty(),
                                       !opt_area->empty(),   !opt_depth->empty(),
                                       !opt_speed->empty(),  !opt_budget->empty(),
                                       !opt_obstacles->empty()};
      return run_generate(gen_out, gen_config, flag_spec, flag_set);
    }
    if (route->parsed()) {
      return run_route(route_scenario, route_seed, !route_seed_opt->empty(), route_out,
                       route_trace);
    }
    if (path->parsed()) {
      return run_path({path_start[0], path_start[1], path_start[2]},
                      {path_target[0], path_target[1], path_target[2]}, path_obstacles, path_kind,
                      path_speed, path_seed, path_out, path_svg_file);
    }
    if (mission->parsed()) {
      return run_mission_cmd(mission_scenario, mission_seed, !mission_seed_opt->empty(),
                             mission_out, mission_repeat, mission_margin, mission_charge_compute);
    }
    if (oracle->parsed()) {
      return run_oracle(oracle_scenario, oracle_out);
    }
  } catch (const CliError & e) {
    std::cerr << "auvplan: error " << e.code << ": " << e.message << "\n";
    return e.code;
  } catch (const std::invalid_argument & e) {
    std::cerr << "auvplan: error " << kConfigError << ": " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception & e) {
    std::cerr << "auvplan: error " << kInternalError << ": " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}
