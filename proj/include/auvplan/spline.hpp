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

#ifndef AUVPLAN_SPLINE_HPP_
#define AUVPLAN_SPLINE_HPP_

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

namespace auvplan
{

/// Clamped uniform knot vector for n control points at spline order k
/// (polynomial degree k-1): k leading zeros, k trailing ones, interior knots
/// uniformly spaced on (0, 1). Length n + k.
std::vector<double> clamped_uniform_knots(int control_point_count, int order);

/// Evaluates the order-k B-spline of the control points over a clamped
/// uniform knot vector at sample_count parameters uniformly spanning [0, 1],
/// via de Boor's algorithm. Clamping makes the curve interpolate the first
/// and last control points. Requires control_point_count >= order >= 2 and
/// sample_count >= 2.
std::vector<Eigen::Vector3d> evaluate_bspline(std::span<const Eigen::Vector3d> control_points,
                                              int order, int sample_count);

/// Polyline length of the samples and the flight time at constant speed.
std::pair<double, double> path_metrics(std::span<const Eigen::Vector3d> samples, double speed);

}  // namespace auvplan

#endif  // AUVPLAN_SPLINE_HPP_
