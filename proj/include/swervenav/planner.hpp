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

#ifndef SWERVENAV_PLANNER_HPP_
#define SWERVENAV_PLANNER_HPP_

#include <array>
#include <vector>

#include "swervenav/arrangement.hpp"
#include "swervenav/costmap.hpp"
#include "swervenav/types.hpp"

namespace swervenav {

// How the steering-margin critic scores candidates that stay in the
// current region: a flat class-based cost, or a cost that decays with the
// candidate's distance from the nearest active plane patch.
enum class ScoringMode { kSimple, kDistanceBased };

// Which regions count as preferred destinations.
enum class PreferredSet { kForwardOnly, kForwardBackward };

struct CriticWeights {
  double path_distance = 3.0;
  double goal_distance = 3.0;
  double obstacle = 2.0;
  double swerve = 1.0;
  double smoothness = 1.0;
};

// Accelerations are sized so one planning interval can change each axis by
// more than the smoothness saturation step; below that the saturated
// smoothness cost can pin the planner at zero velocity.
struct DynamicWindowLimits {
  double max_vx = 0.6;    // m/s
  double max_vy = 0.6;    // m/s
  double max_wz = 1.0;    // rad/s
  double accel_x = 2.5;   // m/s^2
  double accel_y = 2.5;   // m/s^2
  double accel_wz = 3.0;  // rad/s^2
  int samples_vx = 7;
  int samples_vy = 7;
  int samples_wz = 7;
};

struct PlannerConfig {
  bool use_swerve_critic = true;
  bool use_smoothness_critic = true;
  double alpha_swerve = 5.0;      // maximum swerve cost
  double alpha_smoothness = 2.0;  // maximum smoothness cost
  double gamma = 20.0;            // distance decay rate, 1/velocity-unit
  double delta_v_max = 0.2;       // velocity step that saturates smoothness
  ScoringMode scoring_mode = ScoringMode::kDistanceBased;
  PreferredSet preferred_set = PreferredSet::kForwardBackward;
  CriticWeights weights;
  DynamicWindowLimits window;
  double plan_period = 0.2;  // s, planning interval sizing the window
  double sim_time = 1.5;     // s, rollout horizon
  double sim_dt = 0.1;       // s, rollout step
  double stationary_threshold = 0.05;
  // Hard admissibility radius: the physical chassis circle, not an
  // inflated one. Standoff comes from the exponential clearance cost;
  // keeping the hard radius tight leaves slack between "penalized" and
  // "forbidden", so execution drift near a wall stays recoverable instead
  // of making every candidate, including holding still, inadmissible.
  double footprint_radius = 0.18;  // m
  // Obstacle cost shaping: high at the admissibility boundary with a short
  // decay, so wall proximity dominates candidate ordering only where the
  // footprint margin is actually at risk.
  double obstacle_alpha = 2.0;     // obstacle cost at zero clearance
  double clearance_decay = 0.3;    // m, obstacle cost decay scale
  // Path-distance normalization. Below 1.0 it amplifies the reward for
  // steering back toward the waypoint polyline; sized so a perpendicular
  // correction pays for its smoothness cost even below the saturation
  // step, otherwise a slow robot pointed off-course can never afford to
  // turn and creeps away in a straight line.
  double path_scale = 0.4;  // m
  // Sized so rotating in place toward the goal heading stays profitable
  // against the saturated smoothness cost for any heading error outside the
  // scenario tolerances; smaller values can strand a resting robot with a
  // small residual heading error.
  double goal_heading_weight = 2.5;
  // Largest per-wheel steering change, relative to the wheel targets of the
  // current command, that a moving robot may be asked to make in one
  // planning interval. Candidates beyond it would outrun the steering slew
  // so far that the tracking controller must stop the chassis; filtering
  // them makes the planner brake and reorient from rest instead. Sized so
  // that even with several maximal same-direction steps the slew lag keeps
  // the target-to-actual gap under a quarter turn. Applied only together
  // with the swerve critic; stationary candidates (the controller holds
  // steering for those) and starts from rest are exempt.
  double max_steer_step = 0.6;  // rad
};

struct PlanningContext {
  BodyVelocity current_velocity;  // previous commanded velocity
  Pose2d pose;
  std::vector<std::array<double, 2>> waypoint_path;
  std::size_t active_waypoint = 0;  // index into waypoint_path
  Pose2d goal;
  const OccupancyGrid* grid = nullptr;
  const DistanceField* distance_field = nullptr;

  bool final_waypoint_active() const {
    return active_waypoint + 1 >= waypoint_path.size();
  }
};

struct CostBreakdown {
  bool admissible = true;
  double path_distance = 0.0;
  double goal_distance = 0.0;
  double obstacle = 0.0;
  double swerve = 0.0;
  double smoothness = 0.0;
  double total = 0.0;  // weighted sum
};

struct PlanResult {
  BodyVelocity velocity;
  CostBreakdown cost;
  bool all_inadmissible = false;
};

class LocalPlanner {
 public:
  LocalPlanner(const PlannerConfig& cfg, const ConstraintArrangement* arr);

  // Velocity grid reachable from the current velocity within one planning
  // interval, clamped to the absolute bounds. Always contains the zero
  // velocity and the (clamped) current velocity.
  std::vector<BodyVelocity> sample_window(const BodyVelocity& current) const;

  // Constant-velocity Euler integration in the world frame; the returned
  // sequence starts at `pose` and has floor(sim_time/sim_dt) further steps.
  static std::vector<Pose2d> rollout(const BodyVelocity& v, const Pose2d& pose,
                                     double sim_time, double sim_dt);

  // Steering-margin cost; sets *inadmissible instead of returning a cost
  // for forbidden transitions.
  double swerve_cost(const BodyVelocity& current, const BodyVelocity& candidate,
                     bool* inadmissible) const;

  double smoothness_cost(const BodyVelocity& current,
                         const BodyVelocity& candidate) const;

  double path_distance_cost(const PlanningContext& ctx,
                            const std::vector<Pose2d>& path) const;

  double goal_distance_cost(const PlanningContext& ctx,
                            const std::vector<Pose2d>& path) const;

  double obstacle_cost(const PlanningContext& ctx,
                       const std::vector<Pose2d>& path,
                       bool* inadmissible) const;

  // Scores the whole window and picks the admissible candidate with the
  // lowest weighted cost; ties go to the earlier candidate in grid order.
  PlanResult select_velocity(const PlanningContext& ctx) const;

  const PlannerConfig& config() const { return cfg_; }

 private:
  bool preferred(int region) const;

  PlannerConfig cfg_;
  const ConstraintArrangement* arr_;
};

}  // namespace swervenav

#endif  // SWERVENAV_PLANNER_HPP_
