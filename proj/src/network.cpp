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

#include "auvplan/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace auvplan
{

const Edge * OperationNetwork::find_edge(int edge_id) const
{
  auto it = std::lower_bound(edges.begin(), edges.end(), edge_id,
                             [](const Edge & e, int id) { return e.id < id; });
  if (it == edges.end() || it->id != edge_id) return nullptr;
  return &*it;
}

const Edge * OperationNetwork::edge_between(int a, int b) const
{
  if (!has_waypoint(a) || !has_waypoint(b)) return nullptr;
  for (const AdjacencyEntry & entry : neighbors(a)) {
    if (entry.neighbor == b) return find_edge(entry.edge_id);
  }
  return nullptr;
}

OperationNetwork build_network(std::vector<Waypoint> waypoints, const std::vector<EdgeSpec> & edges,
                               int start_id, int destination_id, double vehicle_speed)
{
  if (waypoints.size() < 2) {
    throw std::invalid_argument("network: at least two waypoints required");
  }
  if (!(vehicle_speed > 0.0)) {
    throw std::invalid_argument("network: vehicle speed must be positive");
  }
  std::sort(waypoints.begin(), waypoints.end(),
            [](const Waypoint & a, const Waypoint & b) { return a.id < b.id; });
  const int n = static_cast<int>(waypoints.size());
  for (int i = 0; i < n; ++i) {
    const Waypoint & wp = waypoints[static_cast<std::size_t>(i)];
    if (wp.id != i + 1) {
      throw std::invalid_argument("network: waypoint ids must be unique and contiguous from 1");
    }
    if (!wp.position.allFinite()) {
      throw std::invalid_argument("network: waypoint coordinates must be finite");
    }
  }
  if (start_id < 1 || start_id > n || destination_id < 1 || destination_id > n) {
    throw std::invalid_argument("network: start/destination waypoint does not exist");
  }
  if (start_id == destination_id) {
    throw std::invalid_argument("network: start and destination must differ");
  }

  OperationNetwork net;
  net.waypoints = std::move(waypoints);
  net.start_id = start_id;
  net.destination_id = destination_id;
  net.vehicle_speed = vehicle_speed;
  net.adjacency.assign(static_cast<std::size_t>(n), {});

  std::set<std::pair<int, int>> seen;
  int next_id = 1;
  for (const EdgeSpec & spec : edges) {
    if (spec.from < 1 || spec.from > n || spec.to < 1 || spec.to > n) {
      throw std::invalid_argument("network: edge endpoint does not exist");
    }
    if (spec.from == spec.to) {
      throw std::invalid_argument("network: self-loop edges are not allowed");
    }
    if (spec.task && (!(spec.task->priority > 0.0) || spec.task->completion_time < 0.0)) {
      throw std::invalid_argument("network: task priority must be positive and delta non-negative");
    }
    const auto key = std::minmax(spec.from, spec.to);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("network: duplicate edge between the same waypoint pair");
    }
    Edge e;
    e.id = next_id++;
    e.from = spec.from;
    e.to = spec.to;
    e.task = spec.task;
    e.distance = (net.waypoint(spec.from).position - net.waypoint(spec.to).position).norm();
    net.inverse_priority_sum += e.inverse_priority();
    net.adjacency[static_cast<std::size_t>(e.from - 1)].push_back({e.to, e.id});
    net.adjacency[static_cast<std::size_t>(e.to - 1)].push_back({e.from, e.id});
    net.edges.push_back(e);
  }
  for (auto & list : net.adjacency) {
    std::sort(list.begin(), list.end(), [](const AdjacencyEntry & a, const AdjacencyEntry & b) {
      return a.neighbor < b.neighbor;
    });
  }
  return net;
}

OperationNetwork shrink_network(const OperationNetwork & network,
                                std::span<const int> visited_edge_ids, int new_start)
{
  if (!network.has_waypoint(new_start)) {
    throw std::invalid_argument("network: new start waypoint does not exist");
  }
  if (new_start == network.destination_id) {
    throw std::invalid_argument("network: cannot restart planning at the destination");
  }
  std::unordered_set<int> removed;
  for (int id : visited_edge_ids) {
    if (network.find_edge(id) == nullptr) {
      throw std::invalid_argument("network: visited edge does not exist");
    }
    removed.insert(id);
  }

  OperationNetwork out;
  out.waypoints = network.waypoints;
  out.start_id = new_start;
  out.destination_id = network.destination_id;
  out.vehicle_speed = network.vehicle_speed;
  out.adjacency.assign(network.waypoints.size(), {});
  for (const Edge & e : network.edges) {
    if (removed.count(e.id) != 0) continue;
    out.edges.push_back(e);
    out.inverse_priority_sum += e.inverse_priority();
    out.adjacency[static_cast<std::size_t>(e.from - 1)].push_back({e.to, e.id});
    out.adjacency[static_cast<std::size_t>(e.to - 1)].push_back({e.from, e.id});
  }
  for (auto & list : out.adjacency) {
    std::sort(list.begin(), list.end(), [](const AdjacencyEntry & a, const AdjacencyEntry & b) {
      return a.neighbor < b.neighbor;
    });
  }
  return out;
}

bool start_connected_to_destination(const OperationNetwork & network)
{
  std::vector<char> seen(network.waypoints.size(), 0);
  std::deque<int> queue{network.start_id};
  seen[static_cast<std::size_t>(network.start_id - 1)] = 1;
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    if (node == network.destination_id) return true;
    for (const AdjacencyEntry & entry : network.neighbors(node)) {
      char & mark = seen[static_cast<std::size_t>(entry.neighbor - 1)];
      if (mark == 0) {
        mark = 1;
        queue.push_back(entry.neighbor);
      }
    }
  }
  return false;
}

}  // namespace auvplan
