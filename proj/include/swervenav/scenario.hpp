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

#ifndef SWERVENAV_SCENARIO_HPP_
#define SWERVENAV_SCENARIO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "swervenav/costmap.hpp"
#include "swervenav/types.hpp"

namespace swervenav {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GoalSpec {
  Pose2d pose;
  // Free-form maneuver label (forward, backward, sideways, turn, ...)
  // carried through for scenario introspection.
  std::string tag;
};

struct Scenario {
  std::string name;
  OccupancyGrid grid;
  Pose2d start;
  std::vector<GoalSpec> goals;
  double goal_pos_tolerance = 0.15;      // m
  double goal_heading_tolerance = 0.3;   // rad
};

// Parses a scenario from YAML text. Grid rows are run-length encoded
// strings ("3#54.3#", '.' free, '#' occupied), listed top row first;
// omitted rows mean an all-free grid. Throws ScenarioError on malformed
// input or when the goal chain is not reachable on the raw grid.
Scenario parse_scenario(const std::string& yaml_text);

// parse_scenario on the contents of a file.
Scenario load_scenario(const std::string& path);

// Verifies start -> goal0 -> goal1 -> ... connectivity with the given
// inflation radius; throws ScenarioError naming the first unreachable goal.
void check_reachability(const Scenario& scenario, double inflation_radius);

}  // namespace swervenav

#endif  // SWERVENAV_SCENARIO_HPP_
