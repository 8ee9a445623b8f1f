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

#include "auvplan/route.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace auvplan
{

namespace
{

bool route_better(const Route & a, const Route & b)
{
  if (a.violation != b.violation) return a.violation < b.violation;
  return a.cost < b.cost;
}

class RouteProblem : public bbo::Problem
{
public:
  RouteProblem(const OperationNetwork & network, double t_available)
  : network_(network), t_available_(t_available)
  {
  }

  int dimension() const override { return network_.node_count(); }
  Eigen::VectorXd lower_bounds() const override
  {
    return Eigen::VectorXd::Constant(dimension(), -kPriorityBound);
  }
  Eigen::VectorXd upper_bounds() const override
  {
    return Eigen::VectorXd::Constant(dimension(), kPriorityBound);
  }
  bbo::Score evaluate(const Eigen::VectorXd & siv) const override
  {
    const Route route = decode_priority_vector(network_, siv, t_available_);
    return {route.cost, route.violation};
  }

private:
  const OperationNetwork & network_;
  double t_available_;
};

}  // namespace

Route analyze_route(const OperationNetwork & network, std::vector<int> node_sequence,
                    double t_available)
{
  if (!(t_available > 0.0)) {
    throw std::invalid_argument("route: available time must be positive");
  }
  Route route;
  route.node_sequence = std::move(node_sequence);

  double defects = 0.0;
  if (route.node_sequence.empty()) {
    defects += 2.0;  // missing both required endpoints
  } else {
    if (route.node_sequence.front() != network.start_id) defects += 1.0;
    if (route.node_sequence.back() != network.destination_id) defects += 1.0;
  }

  std::unordered_set<int> seen_nodes;
  for (int id : route.node_sequence) {
    if (!network.has_waypoint(id)) {
      defects += 1.0;
      continue;
    }
    if (!seen_nodes.insert(id).second) defects += 1.0;
  }

  std::unordered_set<int> used_edges;
  double inverse_priority = 0.0;
  for (std::size_t i = 0; i + 1 < route.node_sequence.size(); ++i) {
    const Edge * edge = network.edge_between(route.node_sequence[i], route.node_sequence[i + 1]);
    if (edge == nullptr) {
      defects += 1.0;  // hop without a network edge
      continue;
    }
    if (!used_edges.insert(edge->id).second) {
      defects += 1.0;  // edge traversed twice
      continue;
    }
    route.edge_sequence.push_back(edge->id);
    route.travel_time += edge->distance / network.vehicle_speed + edge->task_completion_time();
    route.total_weight += edge->task_priority();
    inverse_priority += edge->inverse_priority();
  }

  const double overshoot = std::max(0.0, (route.travel_time - t_available) / t_available);
  route.violation = defects + overshoot;
  route.feasible = route.violation == 0.0;

  const double priority_share =
    network.inverse_priority_sum > 0.0 ? inverse_priority / network.inverse_priority_sum : 0.0;
  route.cost = std::abs(route.travel_time - t_available) / t_available + priority_share;
  return route;
}

Route decode_priority_vector(const OperationNetwork & network, const Eigen::VectorXd & priorities,
                             double t_available)
{
  const int n = network.node_count();
  if (priorities.size() != n) {
    throw std::invalid_argument("route: priority vector length must equal the waypoint count");
  }

  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> sequence{network.start_id};
  visited[static_cast<std::size_t>(network.start_id - 1)] = 1;

  int current = network.start_id;
  while (current != network.destination_id && static_cast<int>(sequence.size()) < n) {
    int next = -1;
    double next_priority = 0.0;
    for (const AdjacencyEntry & entry : network.neighbors(current)) {  // ascending neighbor id
      if (visited[static_cast<std::size_t>(entry.neighbor - 1)] != 0) continue;
      const double p = priorities[entry.neighbor - 1];
      if (next == -1 || p > next_priority) {  // strict: ties keep the lowest id
        next = entry.neighbor;
        next_priority = p;
      }
    }
    if (next == -1) break;  // dead end
    sequence.push_back(next);
    visited[static_cast<std::size_t>(next - 1)] = 1;
    current = next;
  }

  if (sequence.back() != network.destination_id) {
    if (sequence.size() == 1) {
      sequence.push_back(network.destination_id);
    } else {
      sequence.back() = network.destination_id;
    }
  }
  return analyze_route(network, std::move(sequence), t_available);
}

std::pair<double, double> route_cost(const OperationNetwork & network, const Route & route,
                                     double t_available)
{
  const Route scored = analyze_route(network, route.node_sequence, t_available);
  return {scored.cost, scored.violation};
}

bbo::BboConfig default_route_config()
{
  bbo::BboConfig cfg;
  cfg.population_size = 150;
  cfg.max_iterations = 300;
  cfg.keep_count = 90;  // 60% keep rate
  cfg.new_count = 0;
  cfg.rate_mode = bbo::RateMode::SpeciesModel;
  cfg.max_immigration = 0.8;
  cfg.max_emigration = 0.2;
  cfg.max_mutation_rate = 0.8;
  return cfg;
}

RoutePlanResult plan_route(const OperationNetwork & network, double t_available,
                           const bbo::BboConfig & config)
{
  RoutePlanResult result;
  result.connected = start_connected_to_destination(network);
  RouteProblem problem(network, t_available);
  bbo::EvolveResult evolved = bbo::evolve(problem, config);
  result.route = decode_priority_vector(network, evolved.best.siv, t_available);
  result.trace = std::move(evolved.trace);
  return result;
}

RouteEnumeration enumerate_best_route(const OperationNetwork & network, double t_available,
                                      int max_nodes)
{
  if (network.node_count() > max_nodes) {
    throw std::invalid_argument("route: network too large for exhaustive enumeration");
  }
  RouteEnumeration result;
  std::vector<char> visited(static_cast<std::size_t>(network.node_count()), 0);
  std::vector<int> stack{network.start_id};
  visited[static_cast<std::size_t>(network.start_id - 1)] = 1;

  auto dfs = [&](auto && self, int node) -> void {
    if (node == network.destination_id) {
      ++result.routes_considered;
      Route candidate = analyze_route(network, stack, t_available);
      if (!result.found || route_better(candidate, result.best)) {
        result.best = std::move(candidate);
        result.found = true;
      }
      return;
    }
    for (const AdjacencyEntry & entry : network.neighbors(node)) {
      if (visited[static_cast<std::size_t>(entry.neighbor - 1)] != 0) continue;
      visited[static_cast<std::size_t>(entry.neighbor - 1)] = 1;
      stack.push_back(entry.neighbor);
      self(self, entry.neighbor);
      stack.pop_back();
      visited[static_cast<std::size_t>(entry.neighbor - 1)] = 0;
    }
  };
  dfs(dfs, network.start_id);
  return result;
}

}  // namespace auvplan
