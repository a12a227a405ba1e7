// Copyright 2026 The swervenav Authors
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

#ifndef SWERVENAV_GRID_PLANNER_HPP_
#define SWERVENAV_GRID_PLANNER_HPP_

#include <array>
#include <vector>

#include "swervenav/costmap.hpp"

namespace swervenav {

struct GridPlanResult {
  bool found = false;
  // World-frame waypoints from start to goal (goal always included).
  std::vector<std::array<double, 2>> waypoints;
  double path_length = 0.0;  // meters along the full cell path
};

// Global path on the grid: 8-connected A* with octile heuristic, no
// cutting of corners past obstacle cells, deterministic expansion order.
// Cells closer to an obstacle than inflation_radius are treated as
// occupied so the path keeps the robot footprint clear. The cell path is
// thinned to every `decimation`-th cell plus the goal.
GridPlanResult plan_waypoints(const OccupancyGrid& grid,
                              const DistanceField& field, double start_x,
                              double start_y, double goal_x, double goal_y,
                              double inflation_radius, int decimation);

}  // namespace swervenav

#endif  // SWERVENAV_GRID_PLANNER_HPP_
