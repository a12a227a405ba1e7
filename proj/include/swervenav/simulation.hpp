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

#ifndef SWERVENAV_SIMULATION_HPP_
#define SWERVENAV_SIMULATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "swervenav/arrangement.hpp"
#include "swervenav/controller.hpp"
#include "swervenav/planner.hpp"
#include "swervenav/scenario.hpp"
#include "swervenav/types.hpp"

namespace swervenav {

struct NoiseModel {
  double pose_sigma = 0.01;      // m (and rad for heading)
  double velocity_sigma = 0.01;  // velocity units per component
};

struct TrajectorySample {
  double t = 0.0;
  Pose2d pose;
  int region_id = kRegionStationary;  // region of the active command
  std::string event;                  // '|'-joined events since last sample
};

struct RunMetrics {
  int discontinuity_count = 0;
  double travel_time = 0.0;
  bool completed = false;
  std::vector<TrajectorySample> trajectory;
};

struct ExperimentConfig {
  ChassisGeometry geometry;  // defaults: 0.2 m square, 0.08 m wheels
  SteeringLimits limits{-130.0 * M_PI / 180.0, 130.0 * M_PI / 180.0};
  PlannerConfig planner;
  ControllerConfig controller;
  NoiseModel noise;
  double goal_timeout = 120.0;    // simulated s per goal
  // Must exceed the rollout reach (max window speed times sim_time); with a
  // nearer active waypoint the saturated smoothness cost can outweigh any
  // reachable goal progress and pin a resting robot in place.
  double waypoint_radius = 0.9;   // m, advance to next waypoint inside this
  int waypoint_decimation = 5;    // keep every Nth path cell
  // Extra standoff added to the footprint radius when planning waypoints.
  // A shortest grid path hugs its inflation boundary around corners, and a
  // robot tracking that polyline would sit exactly at the admissibility
  // limit of the obstacle critic, where any drift strands it.
  double waypoint_margin = 0.22;  // m
  std::uint64_t seed = 1;
  int repeats = 10;
};

// Applies one of the named benchmark configurations (baseline-1,
// baseline-2, aug-DWA-1..4) on top of cfg; returns false for unknown ids.
bool apply_config_id(const std::string& id, ExperimentConfig* cfg);
const std::vector<std::string>& config_ids();

// One closed-loop run; the run RNG stream is derived from (seed, run).
// `arr` must be built from cfg.geometry and cfg.limits.
RunMetrics simulate_run(const Scenario& scenario, const ExperimentConfig& cfg,
                        const ConstraintArrangement& arr, int run);

// cfg.repeats runs with per-run derived seeds.
std::vector<RunMetrics> run_experiment(const Scenario& scenario,
                                       const ExperimentConfig& cfg,
                                       const ConstraintArrangement& arr);

struct SummaryStats {
  double mean = 0.0;
  double median = 0.0;
  double std_dev = 0.0;  // sample standard deviation (n-1)
};

SummaryStats aggregate(std::vector<double> values);

struct ConfigSummary {
  std::string config_id;
  SummaryStats discontinuity_count;
  SummaryStats travel_time;
  int completed_runs = 0;
  int runs = 0;
};

ConfigSummary summarize(const std::string& config_id,
                        const std::vector<RunMetrics>& metrics);

// Index of the winning summary: lowest median, then lowest standard
// deviation, then lowest mean.
int pick_winner(const std::vector<ConfigSummary>& summaries,
                bool by_travel_time);

// Serialization; all output is byte-stable for identical inputs.
std::string metrics_csv(const std::string& scenario_name,
                        const std::string& config_id,
                        const std::vector<RunMetrics>& metrics);
std::string trajectory_csv(const RunMetrics& metrics);
std::string summary_json(const std::string& scenario_name, std::uint64_t seed,
                         const std::vector<ConfigSummary>& summaries);

}  // namespace swervenav

#endif  // SWERVENAV_SIMULATION_HPP_
