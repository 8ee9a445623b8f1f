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

#ifndef AUVPLAN_ROUTE_HPP_
#define AUVPLAN_ROUTE_HPP_

#include <Eigen/Dense>
#include <vector>

#include "auvplan/bbo.hpp"
#include "auvplan/network.hpp"

namespace auvplan
{

/// Node priorities handed to the decoder live in [-100, 100].
inline constexpr double kPriorityBound = 100.0;

struct Route
{
  std::vector<int> node_sequence;
  std::vector<int> edge_sequence;  // ids of the hops that exist in the network
  double travel_time = 0.0;        // sum of distance/speed + task time over edge_sequence
  double total_weight = 0.0;       // sum of task priorities over edge_sequence
  double cost = 0.0;
  double violation = 0.0;
  bool feasible = false;
};

/// Scores a node sequence against the network: maps hops to edges, sums
/// travel time and weight, and computes (cost, violation). Violation counts
/// one unit per structural defect (wrong start, off-destination end, repeated
/// node, repeated edge, hop with no edge) plus the relative time-budget
/// overshoot; cost is the relative distance of the travel time from the
/// budget plus the route's inverse-priority share of the whole network.
Route analyze_route(const OperationNetwork & network, std::vector<int> node_sequence,
                    double t_available);

/// Greedy priority-walk decoder. Starting at the network start, repeatedly
/// moves to the unvisited adjacent node with the highest priority (ties to
/// the lowest id) until the destination is reached or the walk dead-ends; a
/// non-destination ending is repaired by replacing the final node with the
/// destination (appending when the walk never left the start). Total: every
/// priority vector yields a Route, possibly infeasible with its defects
/// reflected in the violation.
Route decode_priority_vector(const OperationNetwork & network, const Eigen::VectorXd & priorities,
                             double t_available);

/// (cost, violation) of an existing route under a given budget, recomputed
/// from its node sequence.
std::pair<double, double> route_cost(const OperationNetwork & network, const Route & route,
                                     double t_available);

/// Route-planner engine defaults: population 150, 300 iterations, 60% elite
/// keep, species-model rates with maximum immigration 0.8 / emigration 0.2,
/// maximum mutation rate 0.8.
bbo::BboConfig default_route_config();

struct RoutePlanResult
{
  Route route;
  bbo::Trace trace;
  bool connected = true;  // start-destination reachability diagnostic
};

/// Runs the optimizer over node-priority vectors in [-100, 100]^nodes and
/// returns the best decoded route. A disconnected start/destination is
/// reported via `connected`; the best (necessarily infeasible) route is still
/// returned.
RoutePlanResult plan_route(const OperationNetwork & network, double t_available,
                           const bbo::BboConfig & config = default_route_config());

struct RouteEnumeration
{
  bool found = false;  // false when no start->destination path exists
  Route best;
  long long routes_considered = 0;
};

/// Exhaustive reference: enumerates every simple start->destination path and
/// returns the one with the best (violation, cost). Guarded to small graphs.
RouteEnumeration enumerate_best_route(const OperationNetwork & network, double t_available,
                                      int max_nodes = 10);

}  // namespace auvplan

#endif  // AUVPLAN_ROUTE_HPP_
