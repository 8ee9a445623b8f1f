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

#include "auvplan/spline.hpp"

#include <stdexcept>

namespace auvplan
{

std::vector<double> clamped_uniform_knots(int control_point_count, int order)
{
  const int n = control_point_count;
  const int k = order;
  std::vector<double> knots(static_cast<std::size_t>(n + k));
  const int spans = n - k + 1;  // number of non-degenerate intervals
  for (int i = 0; i < n + k; ++i) {
    if (i < k) {
      knots[static_cast<std::size_t>(i)] = 0.0;
    } else if (i >= n) {
      knots[static_cast<std::size_t>(i)] = 1.0;
    } else {
      knots[static_cast<std::size_t>(i)] = static_cast<double>(i - k + 1) / spans;
    }
  }
  return knots;
}

std::vector<Eigen::Vector3d> evaluate_bspline(std::span<const Eigen::Vector3d> control_points,
                                              int order, int sample_count)
{
  const int n = static_cast<int>(control_points.size());
  const int k = order;
  if (k < 2) throw std::invalid_argument("spline: order must be at least 2");
  if (n < k) throw std::invalid_argument("spline: need at least `order` control points");
  if (sample_count < 2) throw std::invalid_argument("spline: need at least two samples");

  const std::vector<double> knots = clamped_uniform_knots(n, k);
  const int degree = k - 1;

  std::vector<Eigen::Vector3d> samples;
  samples.reserve(static_cast<std::size_t>(sample_count));
  std::vector<Eigen::Vector3d> d(static_cast<std::size_t>(k));

  for (int s = 0; s < sample_count; ++s) {
    const double u = static_cast<double>(s) / (sample_count - 1);

    // knot span index: largest span with knots[span] <= u < knots[span+1];
    // u = 1 falls into the last non-degenerate span.
    int span = n - 1;
    if (u < 1.0) {
      span = degree;
      while (span + 1 < n && knots[static_cast<std::size_t>(span + 1)] <= u) ++span;
    }

    for (int j = 0; j <= degree; ++j) {
      d[static_cast<std::size_t>(j)] = control_points[static_cast<std::size_t>(j + span - degree)];
    }
    for (int r = 1; r <= degree; ++r) {
      for (int j = degree; j >= r; --j) {
        const double lo = knots[static_cast<std::size_t>(j + span - degree)];
        const double hi = knots[static_cast<std::size_t>(j + 1 + span - r)];
        const double alpha = hi > lo ? (u - lo) / (hi - lo) : 0.0;
        d[static_cast<std::size_t>(j)] = (1.0 - alpha) * d[static_cast<std::size_t>(j - 1)] +
                                         alpha * d[static_cast<std::size_t>(j)];
      }
    }
    samples.push_back(d[static_cast<std::size_t>(degree)]);
  }
  return samples;
}

std::pair<double, double> path_metrics(std::span<const Eigen::Vector3d> samples, double speed)
{
  if (samples.size() < 2) throw std::invalid_argument("path: need at least two samples");
  if (!(speed > 0.0)) throw std::invalid_argument("path: speed must be positive");
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    length += (samples[i + 1] - samples[i]).norm();
  }
  return {length, length / speed};
}

}  // namespace auvplan
