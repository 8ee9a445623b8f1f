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

#include "auvplan/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace auvplan
{

namespace
{

struct Bounds2d
{
  double min_x = std::numeric_limits<double>::max();
  double min_y = std::numeric_limits<double>::max();
  double max_x = std::numeric_limits<double>::lowest();
  double max_y = std::numeric_limits<double>::lowest();

  void include(double x, double y)
  {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  void include_circle(double x, double y, double r)
  {
    include(x - r, y - r);
    include(x + r, y + r);
  }
  void pad(double margin)
  {
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;
  }
};

std::string num(double v)
{
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

class SvgWriter
{
public:
  explicit SvgWriter(const Bounds2d & bounds) : bounds_(bounds) {}

  // world y grows upward; svg y grows downward
  double sy(double y) const { return bounds_.max_y - y + bounds_.min_y; }

  void circle(double x, double y, double r, const std::string & cls, const std::string & style)
  {
    body_ << "  <circle class=\"" << cls << "\" cx=\"" << num(x) << "\" cy=\"" << num(sy(y))
          << "\" r=\"" << num(r) << "\" style=\"" << style << "\"/>\n";
  }

  void polyline(const std::vector<Eigen::Vector3d> & points, const std::string & cls,
                const std::string & style)
  {
    body_ << "  <polyline class=\"" << cls << "\" style=\"" << style << "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i != 0) body_ << ' ';
      body_ << num(points[i].x()) << ',' << num(sy(points[i].y()));
    }
    body_ << "\"/>\n";
  }

  void line(double x1, double y1, double x2, double y2, const std::string & cls,
            const std::string & style)
  {
    body_ << "  <line class=\"" << cls << "\" x1=\"" << num(x1) << "\" y1=\"" << num(sy(y1))
          << "\" x2=\"" << num(x2) << "\" y2=\"" << num(sy(y2)) << "\" style=\"" << style
          << "\"/>\n";
  }

  std::string finish() const
  {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(bounds_.min_x) << ' '
        << num(bounds_.min_y) << ' ' << num(bounds_.max_x - bounds_.min_x) << ' '
        << num(bounds_.max_y - bounds_.min_y) << "\">\n";
    out << body_.str();
    out << "</svg>\n";
    return out.str();
  }

private:
  Bounds2d bounds_;
  std::ostringstream body_;
};

constexpr const char * kObstacleStyle =
  "fill:#d94f4f;fill-opacity:0.35;stroke:#8a1f1f;stroke-width:1";
constexpr const char * kPathStyle = "fill:none;stroke:#1f4f8a;stroke-width:2";
constexpr const char * kChordStyle = "fill:none;stroke:#999999;stroke-width:1;stroke-dasharray:6 4";
constexpr const char * kEndpointStyle = "fill:#1f8a3c";
constexpr const char * kWaypointStyle = "fill:#444444";

}  // namespace

std::string path_svg(const PathWindow & window, const PathPlanResult & result)
{
  Bounds2d bounds;
  bounds.include(window.start.x(), window.start.y());
  bounds.include(window.target.x(), window.target.y());
  for (const Obstacle & o : result.final_field) {
    bounds.include_circle(o.position.x(), o.position.y(), o.effective_radius);
  }
  for (const Eigen::Vector3d & p : result.path.samples) bounds.include(p.x(), p.y());
  bounds.pad(0.05 * std::max(bounds.max_x - bounds.min_x, bounds.max_y - bounds.min_y) + 1.0);

  SvgWriter svg(bounds);
  for (const Obstacle & o : result.final_field) {
    svg.circle(o.position.x(), o.position.y(), o.effective_radius, "obstacle", kObstacleStyle);
  }
  svg.line(window.start.x(), window.start.y(), window.target.x(), window.target.y(), "chord",
           kChordStyle);
  svg.polyline(result.path.samples, "path", kPathStyle);
  const double marker = 0.01 * std::max(bounds.max_x - bounds.min_x, bounds.max_y - bounds.min_y);
  svg.circle(window.start.x(), window.start.y(), marker, "endpoint", kEndpointStyle);
  svg.circle(window.target.x(), window.target.y(), marker, "endpoint", kEndpointStyle);
  return svg.finish();
}

std::string mission_svg(const Scenario & scenario, const MissionResult & result)
{
  Bounds2d bounds;
  for (const Waypoint & wp : scenario.network.waypoints) {
    bounds.include(wp.position.x(), wp.position.y());
  }
  for (const auto & field : result.flown_obstacles) {
    for (const Obstacle & o : field) {
      bounds.include_circle(o.position.x(), o.position.y(), o.effective_radius);
    }
  }
  bounds.pad(0.03 * std::max(bounds.max_x - bounds.min_x, bounds.max_y - bounds.min_y) + 1.0);

  SvgWriter svg(bounds);
  for (const auto & field : result.flown_obstacles) {
    for (const Obstacle & o : field) {
      svg.circle(o.position.x(), o.position.y(), o.effective_radius, "obstacle", kObstacleStyle);
    }
  }
  for (const SampledPath & path : result.flown_paths) {
    svg.polyline(path.samples, "path", kPathStyle);
  }
  const double marker = 0.004 * std::max(bounds.max_x - bounds.min_x, bounds.max_y - bounds.min_y);
  for (const Waypoint & wp : scenario.network.waypoints) {
    svg.circle(wp.position.x(), wp.position.y(), std::max(marker, 1.0), "waypoint",
               kWaypointStyle);
  }
  return svg.finish();
}

}  // namespace auvplan
