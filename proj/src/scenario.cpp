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

#include "swervenav/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

#include "swervenav/grid_planner.hpp"

namespace swervenav {
namespace {

Pose2d parse_pose(const YAML::Node& node, const std::string& what) {
  if (!node || !node.IsSequence() || node.size() != 3) {
    throw ScenarioError(what + " must be a [x, y, heading] triple");
  }
  return {node[0].as<double>(), node[1].as<double>(),
          wrap_angle(node[2].as<double>())};
}

void expand_rle_row(const std::string& row, int width, int iy,
                    OccupancyGrid* grid) {
  int x = 0;
  std::size_t i = 0;
  while (i < row.size()) {
    int count = 0;
    while (i < row.size() && row[i] >= '0' && row[i] <= '9') {
      count = count * 10 + (row[i] - '0');
      ++i;
    }
    if (count == 0) count = 1;
    if (i >= row.size()) {
      throw ScenarioError("run-length row ends with a count and no cell char");
    }
    const char c = row[i++];
    bool occupied = false;
    if (c == '#') {
      occupied = true;
    } else if (c != '.') {
      throw ScenarioError(std::string("unknown cell character '") + c + "'");
    }
    for (int k = 0; k < count; ++k) {
      if (x >= width) throw ScenarioError("run-length row longer than width");
      grid->set_occupied(x++, iy, occupied);
    }
  }
  if (x != width) throw ScenarioError("run-length row shorter than width");
}

}  // namespace

Scenario parse_scenario(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ScenarioError(std::string("scenario YAML parse error: ") + e.what());
  }
  if (!root.IsMap()) throw ScenarioError("scenario must be a YAML mapping");

  const YAML::Node grid_node = root["grid"];
  if (!grid_node || !grid_node.IsMap()) {
    throw ScenarioError("scenario needs a grid section");
  }
  const int width = grid_node["width"].as<int>(0);
  const int height = grid_node["height"].as<int>(0);
  const double resolution = grid_node["resolution"].as<double>(0.0);
  if (width <= 0 || height <= 0 || resolution <= 0.0) {
    throw ScenarioError("grid width, height and resolution must be positive");
  }
  double ox = 0.0;
  double oy = 0.0;
  if (const YAML::Node origin = grid_node["origin"]) {
    if (!origin.IsSequence() || origin.size() != 2) {
      throw ScenarioError("grid origin must be [x, y]");
    }
    ox = origin[0].as<double>();
    oy = origin[1].as<double>();
  }

  Scenario s{root["name"].as<std::string>("unnamed"),
             OccupancyGrid(width, height, resolution, ox, oy),
             {},
             {},
             0.15,
             0.3};

  if (const YAML::Node rows = grid_node["rows"]) {
    if (!rows.IsSequence() ||
        static_cast<int>(rows.size()) != height) {
      throw ScenarioError("grid rows must list exactly height entries");
    }
    for (int r = 0; r < height; ++r) {
      // Rows are written top first; row r covers cell row height-1-r.
      expand_rle_row(rows[r].as<std::string>(), width, height - 1 - r,
                     &s.grid);
    }
  }

  s.start = parse_pose(root["start"], "start");

  if (const YAML::Node tol = root["goal_tolerance"]) {
    s.goal_pos_tolerance = tol["position"].as<double>(s.goal_pos_tolerance);
    s.goal_heading_tolerance =
        tol["heading"].as<double>(s.goal_heading_tolerance);
  }
  if (s.goal_pos_tolerance <= 0.0 || s.goal_heading_tolerance <= 0.0) {
    throw ScenarioError("goal tolerances must be positive");
  }

  const YAML::Node goals = root["goals"];
  if (!goals || !goals.IsSequence() || goals.size() == 0) {
    throw ScenarioError("scenario needs a non-empty goals list");
  }
  for (const YAML::Node& g : goals) {
    GoalSpec spec;
    spec.pose = parse_pose(g["pose"], "goal pose");
    spec.tag = g["tag"].as<std::string>("");
    s.goals.push_back(spec);
  }

  check_reachability(s, 0.0);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

void check_reachability(const Scenario& scenario, double inflation_radius) {
  const DistanceField field(scenario.grid);
  double x = scenario.start.x;
  double y = scenario.start.y;
  for (std::size_t i = 0; i < scenario.goals.size(); ++i) {
    const Pose2d& goal = scenario.goals[i].pose;
    const GridPlanResult plan =
        plan_waypoints(scenario.grid, field, x, y, goal.x, goal.y,
                       inflation_radius, 1);
    if (!plan.found) {
      throw ScenarioError("goal " + std::to_string(i + 1) +
                          " is unreachable from the preceding pose");
    }
    x = goal.x;
    y = goal.y;
  }
}

}  // namespace swervenav
