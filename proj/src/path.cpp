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

#include "auvplan/path.hpp"

#include <cmath>
#include <stdexcept>

#include "auvplan/spline.hpp"

namespace auvplan
{

namespace
{

constexpr std::uint64_t kObstacleStreamTag = 0x0B57AC1EULL;

Eigen::Matrix3d path_frame(const Eigen::Vector3d & start, const Eigen::Vector3d & target)
{
  const Eigen::Vector3d along = (target - start).normalized();
  Eigen::Vector3d reference = Eigen::Vector3d::UnitZ();
  if (std::abs(along.dot(reference)) > 0.9) {
    reference = Eigen::Vector3d::UnitX();
  }
  Eigen::Matrix3d frame;
  frame.col(0) = along;
  frame.col(1) = along.cross(reference).normalized();
  frame.col(2) = along.cross(frame.col(1)).normalized();
  return frame;
}

class PathProblem : public bbo::Problem
{
public:
  PathProblem(const PathWindow & window, std::vector<Obstacle> field, const PathConfig & cfg,
              std::uint64_t obstacle_seed)
  : window_(window), field_(std::move(field)), cfg_(cfg), obstacle_rng_(obstacle_seed)
  {
  }

  int dimension() const override { return 3 * (window_.control_point_count - 2); }
  Eigen::VectorXd lower_bounds() const override { return Eigen::VectorXd::Zero(dimension()); }
  Eigen::VectorXd upper_bounds() const override { return Eigen::VectorXd::Ones(dimension()); }

  bbo::Score evaluate(const Eigen::VectorXd & siv) const override
  {
    const ControlPolygon polygon = decode_control_points(window_, siv);
    const std::vector<Eigen::Vector3d> samples =
      evaluate_bspline(polygon.points, cfg_.spline_order, cfg_.sample_count);
    const auto [length, flight_time] = path_metrics(samples, window_.vehicle_speed);
    (void)length;
    return {flight_time, collision_violation(samples, field_)};
  }

  void begin_iteration(int) override
  {
    for (Obstacle & obstacle : field_) {
      obstacle = step_obstacle(obstacle, obstacle_rng_);
    }
  }

  const std::vector<Obstacle> & field() const { return field_; }

private:
  const PathWindow & window_;
  std::vector<Obstacle> field_;
  PathConfig cfg_;
  Rng obstacle_rng_;
};

}  // namespace

ControlBounds control_bounds(const Eigen::Vector3d & start, const Eigen::Vector3d & target, int n)
{
  if (n < 3) throw std::invalid_argument("path: need at least three control points");
  const double distance = (target - start).norm();
  if (!(distance > 1e-9)) {
    throw std::invalid_argument("path: window start and target coincide");
  }

  ControlBounds bounds;
  bounds.frame = path_frame(start, target);
  bounds.lower.resize(static_cast<std::size_t>(n));
  bounds.upper.resize(static_cast<std::size_t>(n));

  const double lateral = 0.5 * distance;
  for (int i = 1; i <= n; ++i) {
    Eigen::Vector3d lo, hi;
    if (i == 1) {
      lo = hi = Eigen::Vector3d::Zero();
    } else if (i == n) {
      lo = hi = Eigen::Vector3d(distance, 0.0, 0.0);
    } else {
      lo = Eigen::Vector3d(distance * (i - 1) / (n - 1), -lateral, -lateral);
      hi = Eigen::Vector3d(distance * i / (n - 1), lateral, lateral);
    }
    bounds.lower[static_cast<std::size_t>(i - 1)] = lo;
    bounds.upper[static_cast<std::size_t>(i - 1)] = hi;
  }
  return bounds;
}

PathWindow make_window(const Eigen::Vector3d & start, const Eigen::Vector3d & target,
                       double vehicle_speed, int control_point_count)
{
  if (!(vehicle_speed > 0.0)) throw std::invalid_argument("path: speed must be positive");
  PathWindow window;
  window.start = start;
  window.target = target;
  window.vehicle_speed = vehicle_speed;
  window.control_point_count = control_point_count;
  window.bounds = control_bounds(start, target, control_point_count);
  return window;
}

ControlPolygon decode_control_points(const PathWindow & window, const Eigen::VectorXd & fractions)
{
  const int n = window.control_point_count;
  if (fractions.size() != 3 * (n - 2)) {
    throw std::invalid_argument("path: fraction vector must cover the interior control points");
  }
  ControlPolygon polygon;
  polygon.points.resize(static_cast<std::size_t>(n));
  polygon.points.front() = window.start;
  polygon.points.back() = window.target;
  for (int i = 1; i + 1 < n; ++i) {
    const Eigen::Vector3d & lo = window.bounds.lower[static_cast<std::size_t>(i)];
    const Eigen::Vector3d & hi = window.bounds.upper[static_cast<std::size_t>(i)];
    Eigen::Vector3d local;
    for (int axis = 0; axis < 3; ++axis) {
      const double f = fractions[3 * (i - 1) + axis];
      local[axis] = lo[axis] + f * (hi[axis] - lo[axis]);
    }
    polygon.points[static_cast<std::size_t>(i)] = window.start + window.bounds.frame * local;
  }
  return polygon;
}

ControlPolygon sample_control_points(const PathWindow & window, Rng & rng)
{
  const int dim = 3 * (window.control_point_count - 2);
  Eigen::VectorXd fractions(dim);
  for (int k = 0; k < dim; ++k) fractions[k] = rng.uniform();
  return decode_control_points(window, fractions);
}

double collision_violation(std::span<const Eigen::Vector3d> samples,
                           std::span<const Obstacle> obstacles)
{
  if (samples.empty()) return 0.0;
  int inside = 0;
  for (const Eigen::Vector3d & sample : samples) {
    for (const Obstacle & obstacle : obstacles) {
      if (obstacle.contains(sample)) {
        ++inside;
        break;
      }
    }
  }
  return static_cast<double>(inside) / static_cast<double>(samples.size());
}

bbo::BboConfig default_path_config()
{
  bbo::BboConfig cfg;
  cfg.population_size = 50;
  cfg.max_iterations = 100;
  cfg.keep_count = 10;
  cfg.new_count = 5;
  cfg.rate_mode = bbo::RateMode::LinearRank;
  cfg.max_mutation_rate = 0.1;
  return cfg;
}

PathPlanResult plan_path(const PathWindow & window, std::vector<Obstacle> obstacles,
                         const bbo::BboConfig & config, const PathConfig & path_config)
{
  // the window owns the control-point layout; path_config supplies the
  // spline order and the sampling density
  PathProblem problem(window, std::move(obstacles), path_config,
                      derive_seed(config.seed, kObstacleStreamTag));
  bbo::EvolveResult evolved = bbo::evolve(problem, config);

  PathPlanResult result;
  result.polygon = decode_control_points(window, evolved.best.siv);
  result.path.samples =
    evaluate_bspline(result.polygon.points, path_config.spline_order, path_config.sample_count);
  const auto [length, flight_time] = path_metrics(result.path.samples, window.vehicle_speed);
  result.path.length = length;
  result.path.flight_time = flight_time;
  result.path.cost = evolved.best.cost;
  result.path.violation = evolved.best.violation;
  result.trace = std::move(evolved.trace);
  result.final_field = problem.field();
  return result;
}

}  // namespace auvplan
