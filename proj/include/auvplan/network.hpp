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

#ifndef AUVPLAN_NETWORK_HPP_
#define AUVPLAN_NETWORK_HPP_

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

namespace auvplan
{

struct Waypoint
{
  int id = 0;  // 1-based, contiguous
  Eigen::Vector3d position{0.0, 0.0, 0.0};
};

/// Work attached to an edge: a priority weight (higher = more valuable) and
/// the absolute completion time spent on top of the traversal itself.
struct TaskSpec
{
  double priority = 1.0;         // > 0
  double completion_time = 0.0;  // seconds, >= 0
};

struct EdgeSpec
{
  int from = 0;
  int to = 0;
  std::optional<TaskSpec> task;
};

struct Edge
{
  int id = 0;  // 1-based, stable under shrinking
  int from = 0;
  int to = 0;
  double distance = 0.0;  // meters, Euclidean between endpoints
  std::optional<TaskSpec> task;

  double task_priority() const { return task ? task->priority : 0.0; }
  double task_completion_time() const { return task ? task->completion_time : 0.0; }
  /// 1/priority for tasked edges; untasked edges contribute nothing.
  double inverse_priority() const { return task ? 1.0 / task->priority : 0.0; }
};

struct AdjacencyEntry
{
  int neighbor = 0;
  int edge_id = 0;
};

/// Undirected waypoint graph with tasked edges. Adjacency lists are sorted by
/// neighbor id; every edge appears in exactly two of them.
struct OperationNetwork
{
  std::vector<Waypoint> waypoints;                    // index = id - 1
  std::vector<Edge> edges;                            // sorted by id
  std::vector<std::vector<AdjacencyEntry>> adjacency; // index = id - 1
  int start_id = 0;
  int destination_id = 0;
  double vehicle_speed = 3.0;      // m/s
  double inverse_priority_sum = 0; // sum of 1/priority over all tasked edges

  int node_count() const { return static_cast<int>(waypoints.size()); }
  bool has_waypoint(int id) const { return id >= 1 && id <= node_count(); }
  const Waypoint & waypoint(int id) const { return waypoints[static_cast<std::size_t>(id - 1)]; }
  const std::vector<AdjacencyEntry> & neighbors(int id) const
  {
    return adjacency[static_cast<std::size_t>(id - 1)];
  }
  const Edge * find_edge(int edge_id) const;
  const Edge * edge_between(int a, int b) const;
};

/// Assembles the network: recomputes every edge distance from the waypoint
/// coordinates and builds the symmetric adjacency structure. Rejects
/// malformed ids, self-loops, and duplicate edges; start and destination may
/// be disconnected at build time.
OperationNetwork build_network(std::vector<Waypoint> waypoints, const std::vector<EdgeSpec> & edges,
                               int start_id, int destination_id, double vehicle_speed);

/// Copy of the network with the given edges removed and the start moved to
/// new_start. Node set, destination, and remaining edge ids are unchanged.
OperationNetwork shrink_network(const OperationNetwork & network,
                                std::span<const int> visited_edge_ids, int new_start);

/// BFS reachability between the network's start and destination.
bool start_connected_to_destination(const OperationNetwork & network);

}  // namespace auvplan

#endif  // AUVPLAN_NETWORK_HPP_
