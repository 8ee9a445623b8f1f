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

#ifndef AUVPLAN_OBSTACLES_HPP_
#define AUVPLAN_OBSTACLES_HPP_

#include <Eigen/Dense>
#include <vector>

#include "auvplan/rng.hpp"

namespace auvplan
{

enum class ObstacleKind {
  StaticKnown,     // fixed position and radius
  QuasiStatic,     // fixed position, radius redrawn around the nominal each step
  SelfMotivated,   // drifts in a random direction each step
  CurrentAffected  // drifts and its collision boundary grows with the current
};

/// A spherical exclusion region. `radius` is the nominal size; the collision
/// check uses `effective_radius`, which step_obstacle updates per kind.
struct Obstacle
{
  ObstacleKind kind = ObstacleKind::StaticKnown;
  Eigen::Vector3d position{0.0, 0.0, 0.0};
  double radius = 1.0;
  double effective_radius = 1.0;
  double radius_sigma = 10.0;      // quasi-static per-step radius spread
  double motion_sigma = 5.0;       // per-axis drift scale, meters per step
  double current_magnitude = 0.0;  // |current velocity|, m/s (current-affected only)

  bool contains(const Eigen::Vector3d & point) const
  {
    return (point - position).norm() < effective_radius;  // strict interior
  }
};

struct ObstacleCounts
{
  int static_known = 0;
  int quasi_static = 0;
  int self_motivated = 0;
  int current_affected = 0;
  int total() const { return static_known + quasi_static + self_motivated + current_affected; }
};

struct ObstacleFieldParams
{
  ObstacleCounts counts;
  double radius_sigma = 100.0;      // initial radius = |N(0, radius_sigma)|, min 1 m
  double quasi_radius_sigma = 10.0; // sigma_0 for quasi-static redraws
  double motion_sigma = 5.0;        // per-axis drift per step
  double current_sigma = 0.3;       // current magnitude = |N(0, current_sigma)|
};

/// Advances an obstacle by one planning step.
///  - StaticKnown: unchanged, no draws.
///  - QuasiStatic: effective radius = nominal + |N(0, radius_sigma)|; the
///    redraw is independent of the previous step. 1 normal draw.
///  - SelfMotivated: position += (N(0, s), N(0, s), N(0, s)) with
///    s = motion_sigma. 3 normal draws.
///  - CurrentAffected: the same drift, then effective radius grows by
///    current_magnitude * (1 + |N(0, 1)|); the growth draw is skipped when
///    the current magnitude is zero, which makes the zero-current case
///    behave exactly like SelfMotivated.
Obstacle step_obstacle(const Obstacle & obstacle, Rng & rng);

/// Populates the box spanned by a window's start/target corners. Per
/// obstacle: radius = max(1, |N(0, radius_sigma)|); each position coordinate
/// is a truncated normal (mean = support midpoint, sigma = support
/// half-width) over the box edge shrunk inward by the radius. A coordinate
/// whose box edge is shorter than the diameter collapses to its midpoint; a
/// position whose ball would swallow the window start or target is redrawn
/// (radius halving as a last resort), so spawned fields always leave the
/// endpoints outside every collision ball. Spawn order: static known, quasi
/// static, self motivated, current affected.
std::vector<Obstacle> spawn_obstacles(const Eigen::Vector3d & window_start,
                                      const Eigen::Vector3d & window_target,
                                      const ObstacleFieldParams & params, Rng & rng);

}  // namespace auvplan

#endif  // AUVPLAN_OBSTACLES_HPP_
