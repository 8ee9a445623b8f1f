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

#ifndef AUVPLAN_PATH_HPP_
#define AUVPLAN_PATH_HPP_

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "auvplan/bbo.hpp"
#include "auvplan/obstacles.hpp"
#include "auvplan/rng.hpp"

namespace auvplan
{

/// Per-control-point search boxes expressed in the window's path frame
/// (column 0 = along start->target, columns 1-2 = lateral axes). Interior
/// point i of n (1-based) is confined longitudinally to the slice between
/// fractions (i-1)/(n-1) and i/(n-1) of the start->target distance and
/// laterally to half that distance each side; the endpoints get degenerate
/// boxes pinned to the waypoints.
struct ControlBounds
{
  Eigen::Matrix3d frame;               // orthonormal, columns are the frame axes
  std::vector<Eigen::Vector3d> lower;  // frame coordinates relative to start
  std::vector<Eigen::Vector3d> upper;
};

ControlBounds control_bounds(const Eigen::Vector3d & start, const Eigen::Vector3d & target, int n);

struct PathWindow
{
  Eigen::Vector3d start{0.0, 0.0, 0.0};
  Eigen::Vector3d target{0.0, 0.0, 0.0};
  double vehicle_speed = 3.0;
  int control_point_count = 8;
  ControlBounds bounds;
};

/// Builds a window between a waypoint pair; rejects coincident endpoints and
/// n < 3.
PathWindow make_window(const Eigen::Vector3d & start, const Eigen::Vector3d & target,
                       double vehicle_speed, int control_point_count = 8);

struct ControlPolygon
{
  std::vector<Eigen::Vector3d> points;  // world coordinates, endpoints pinned
};

/// Maps box fractions in [0, 1]^(3*(n-2)) (interior points, frame-axis
/// order) to world-space control points: point = lower + fraction * span.
ControlPolygon decode_control_points(const PathWindow & window,
                                     const Eigen::VectorXd & fractions);

/// Uniform random polygon inside the window bounds; endpoints pinned. Draw
/// order: interior point-major, frame-axis-minor.
ControlPolygon sample_control_points(const PathWindow & window, Rng & rng);

struct SampledPath
{
  std::vector<Eigen::Vector3d> samples;
  double length = 0.0;
  double flight_time = 0.0;  // length / speed; also the path cost
  double violation = 0.0;    // penetrating-sample fraction
  double cost = 0.0;
};

/// Fraction of samples strictly inside any obstacle's effective-radius ball.
double collision_violation(std::span<const Eigen::Vector3d> samples,
                           std::span<const Obstacle> obstacles);

struct PathConfig
{
  int control_point_count = 8;
  int spline_order = 4;  // cubic segments
  int sample_count = 100;
};

/// Path-planner engine defaults: population 50, 100 iterations, 10 elites,
/// 5 fresh habitats per generation, linear-rank rates, maximum mutation rate
/// 0.1.
bbo::BboConfig default_path_config();

struct PathPlanResult
{
  ControlPolygon polygon;
  SampledPath path;
  bbo::Trace trace;
  std::vector<Obstacle> final_field;  // obstacle states after the last step
};

/// Optimizes interior control points against the obstacle field, minimizing
/// flight time under the no-collision constraint. The field advances one
/// step per engine iteration (from a stream derived from the engine seed);
/// each candidate is checked against the field state of its own iteration.
/// Always returns the best-effort path; a nonzero violation means no
/// conflict-free path was found.
PathPlanResult plan_path(const PathWindow & window, std::vector<Obstacle> obstacles,
                         const bbo::BboConfig & config = default_path_config(),
                         const PathConfig & path_config = PathConfig{});

}  // namespace auvplan

#endif  // AUVPLAN_PATH_HPP_
