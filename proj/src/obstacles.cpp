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

#include "auvplan/obstacles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auvplan
{

namespace
{

/// Truncated normal over [lo, hi], mean = midpoint, sigma = half-width.
/// Degenerate support returns the midpoint without a draw.
double truncated_normal(double lo, double hi, Rng & rng)
{
  if (!(hi > lo)) return 0.5 * (lo + hi);
  const double mean = 0.5 * (lo + hi);
  const double sigma = 0.5 * (hi - lo);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const double x = rng.normal(mean, sigma);
    if (x >= lo && x <= hi) return x;
  }
  return mean;  // unreachable with half-width sigma; keeps the loop bounded
}

double spawn_coordinate(double a, double b, double radius, Rng & rng)
{
  const double lo = std::min(a, b) + radius;
  const double hi = std::max(a, b) - radius;
  if (!(hi > lo)) return 0.5 * (std::min(a, b) + std::max(a, b));  // collapsed support
  return truncated_normal(lo, hi, rng);
}

Obstacle spawn_one(ObstacleKind kind, const Eigen::Vector3d & a, const Eigen::Vector3d & b,
                   const ObstacleFieldParams & params, Rng & rng)
{
  Obstacle obstacle;
  obstacle.kind = kind;
  obstacle.radius_sigma = params.quasi_radius_sigma;
  obstacle.motion_sigma = params.motion_sigma;
  obstacle.radius = std::max(1.0, std::abs(rng.normal(0.0, params.radius_sigma)));

  for (int halving = 0; halving < 12; ++halving) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      Eigen::Vector3d p;
      for (int axis = 0; axis < 3; ++axis) {
        p[axis] = spawn_coordinate(a[axis], b[axis], obstacle.radius, rng);
      }
      // keep the window endpoints strictly outside the collision ball
      if ((p - a).norm() > obstacle.radius && (p - b).norm() > obstacle.radius) {
        obstacle.position = p;
        obstacle.effective_radius = obstacle.radius;
        if (kind == ObstacleKind::CurrentAffected) {
          obstacle.current_magnitude = std::abs(rng.normal(0.0, params.current_sigma));
        }
        return obstacle;
      }
    }
    obstacle.radius = std::max(1.0, 0.5 * obstacle.radius);
  }
  throw std::invalid_argument("obstacles: window too small to place an obstacle");
}

}  // namespace

Obstacle step_obstacle(const Obstacle & obstacle, Rng & rng)
{
  Obstacle out = obstacle;
  switch (obstacle.kind) {
    case ObstacleKind::StaticKnown:
      break;
    case ObstacleKind::QuasiStatic:
      out.effective_radius = obstacle.radius + std::abs(rng.normal(0.0, obstacle.radius_sigma));
      break;
    case ObstacleKind::SelfMotivated:
      for (int axis = 0; axis < 3; ++axis) {
        out.position[axis] += rng.normal(0.0, obstacle.motion_sigma);
      }
      break;
    case ObstacleKind::CurrentAffected:
      for (int axis = 0; axis < 3; ++axis) {
        out.position[axis] += rng.normal(0.0, obstacle.motion_sigma);
      }
      if (obstacle.current_magnitude > 0.0) {
        out.effective_radius += obstacle.current_magnitude * (1.0 + std::abs(rng.normal()));
      }
      break;
  }
  return out;
}

std::vector<Obstacle> spawn_obstacles(const Eigen::Vector3d & window_start,
                                      const Eigen::Vector3d & window_target,
                                      const ObstacleFieldParams & params, Rng & rng)
{
  if ((window_target - window_start).norm() < 1e-9 && params.counts.total() > 0) {
    throw std::invalid_argument("obstacles: degenerate window cannot contain obstacles");
  }
  std::vector<Obstacle> field;
  field.reserve(static_cast<std::size_t>(params.counts.total()));
  const auto spawn_kind = [&](ObstacleKind kind, int count) {
    for (int i = 0; i < count; ++i) {
      field.push_back(spawn_one(kind, window_start, window_target, params, rng));
    }
  };
  spawn_kind(ObstacleKind::StaticKnown, params.counts.static_known);
  spawn_kind(ObstacleKind::QuasiStatic, params.counts.quasi_static);
  spawn_kind(ObstacleKind::SelfMotivated, params.counts.self_motivated);
  spawn_kind(ObstacleKind::CurrentAffected, params.counts.current_affected);
  return field;
}

}  // namespace auvplan
