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
//
// Reference implementations used only by tests. Each one is written
// independently of the library code path it checks: the steady state comes
// from integrating the rate ODE instead of the balance recursion, the spline
// oracle sums basis functions instead of running de Boor, the feasibility
// checker re-derives the rules from the route definition, and so on.

#ifndef AUVPLAN_TESTS_ORACLES_HPP_
#define AUVPLAN_TESTS_ORACLES_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "auvplan/network.hpp"
#include "auvplan/rng.hpp"

namespace oracles
{

/// Steady state of the birth-death chain by integrating the master equation
/// dP/dt = A P with RK4 until the derivative vanishes.
inline Eigen::VectorXd ode_steady_state(const Eigen::VectorXd & lambda, const Eigen::VectorXd & mu)
{
  const Eigen::Index n = lambda.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    a(s, s) = -(lambda[s] + mu[s]);
    if (s + 1 < n) a(s, s + 1) = mu[s + 1];   // inflow: death from above
    if (s - 1 >= 0) a(s, s - 1) = lambda[s - 1];  // inflow: birth from below
  }
  Eigen::VectorXd p = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  const double dt = 0.01;
  for (int step = 0; step < 2000000; ++step) {
    const Eigen::VectorXd k1 = a * p;
    const Eigen::VectorXd k2 = a * (p + 0.5 * dt * k1);
    const Eigen::VectorXd k3 = a * (p + 0.5 * dt * k2);
    const Eigen::VectorXd k4 = a * (p + dt * k3);
    const Eigen::VectorXd next = p + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((next - p).lpNorm<Eigen::Infinity>() < 1e-15) {
      p = next;
      break;
    }
    p = next;
  }
  return p / p.sum();
}

/// Cox-de Boor basis function B_{i,k}(u) over the given knots (k = order).
/// The half-open basis intervals are closed on the right at the final knot.
inline double basis_function(int i, int k, double u, const std::vector<double> & knots)
{
  if (k == 1) {
    const double hi = knots[static_cast<std::size_t>(i + 1)];
    const bool at_end = u == knots.back() && hi == knots.back();
    return (u >= knots[static_cast<std::size_t>(i)] && (u < hi || at_end)) ? 1.0 : 0.0;
  }
  const double lo_den = knots[static_cast<std::size_t>(i + k - 1)] - knots[static_cast<std::size_t>(i)];
  const double hi_den = knots[static_cast<std::size_t>(i + k)] - knots[static_cast<std::size_t>(i + 1)];
  double value = 0.0;
  if (lo_den > 0.0) {
    value += (u - knots[static_cast<std::size_t>(i)]) / lo_den * basis_function(i, k - 1, u, knots);
  }
  if (hi_den > 0.0) {
    value += (knots[static_cast<std::size_t>(i + k)] - u) / hi_den *
             basis_function(i + 1, k - 1, u, knots);
  }
  return value;
}

/// Curve point as the basis-weighted sum of control points.
inline Eigen::Vector3d bspline_point(std::span<const Eigen::Vector3d> control_points, int order,
                                     const std::vector<double> & knots, double u)
{
  Eigen::Vector3d point = Eigen::Vector3d::Zero();
  for (int i = 0; i < static_cast<int>(control_points.size()); ++i) {
    point += basis_function(i, order, u, knots) * control_points[static_cast<std::size_t>(i)];
  }
  return point;
}

/// Independent check of the five route feasibility rules: starts at the
/// start node, ends at the destination, every hop is a network edge, no node
/// repeats, no edge repeats, and the travel time fits the budget.
inline bool route_is_feasible(const auvplan::OperationNetwork & network,
                              const std::vector<int> & nodes, double t_available)
{
  if (nodes.size() < 2) return false;
  if (nodes.front() != network.start_id || nodes.back() != network.destination_id) return false;
  std::set<int> seen_nodes;
  for (int id : nodes) {
    if (!network.has_waypoint(id)) return false;
    if (!seen_nodes.insert(id).second) return false;
  }
  std::set<int> seen_edges;
  double time = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auvplan::Edge * edge = network.edge_between(nodes[i], nodes[i + 1]);
    if (edge == nullptr) return false;
    if (!seen_edges.insert(edge->id).second) return false;
    time += edge->distance / network.vehicle_speed + edge->task_completion_time();
  }
  return time <= t_available;
}

/// Naive re-implementation of the priority walk used to cross-check the
/// decoder: scans the raw edge list rather than adjacency, tracks visits in
/// a set, and applies the same repair rule.
inline std::vector<int> reference_decode(const auvplan::OperationNetwork & network,
                                         const Eigen::VectorXd & priorities)
{
  std::set<int> visited{network.start_id};
  std::vector<int> sequence{network.start_id};
  int current = network.start_id;
  while (current != network.destination_id &&
         static_cast<int>(sequence.size()) < network.node_count()) {
    int next = -1;
    double best = -1e300;
    for (const auvplan::Edge & edge : network.edges) {
      int other = -1;
      if (edge.from == current) other = edge.to;
      if (edge.to == current) other = edge.from;
      if (other == -1 || visited.count(other) != 0) continue;
      const double p = priorities[other - 1];
      if (p > best || (p == best && other < next)) {
        best = p;
        next = other;
      }
    }
    if (next == -1) break;
    sequence.push_back(next);
    visited.insert(next);
    current = next;
  }
  if (sequence.back() != network.destination_id) {
    if (sequence.size() == 1) {
      sequence.push_back(network.destination_id);
    } else {
      sequence.back() = network.destination_id;
    }
  }
  return sequence;
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_statistic(std::vector<double> a, std::vector<double> b)
{
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    const double fa = static_cast<double>(i) / static_cast<double>(a.size());
    const double fb = static_cast<double>(j) / static_cast<double>(b.size());
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

/// R^2 of the least-squares line through (x, y).
inline double linear_fit_r2(const std::vector<double> & x, const std::vector<double> & y)
{
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 1.0;
  return (sxy * sxy) / (sxx * syy);
}

}  // namespace oracles

#endif  // AUVPLAN_TESTS_ORACLES_HPP_
