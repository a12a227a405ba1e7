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

#include "swervenav/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swervenav/kinematics.hpp"

namespace swervenav {
namespace {

double point_segment_distance(double px, double py, double ax, double ay,
                              double bx, double by) {
  const double abx = bx - ax;
  const double aby = by - ay;
  const double len2 = abx * abx + aby * aby;
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp(((px - ax) * abx + (py - ay) * aby) / len2, 0.0, 1.0);
  }
  const double cx = ax + t * abx;
  const double cy = ay + t * aby;
  return std::hypot(px - cx, py - cy);
}

std::vector<double> axis_samples(double center, double reach, double bound,
                                 int count) {
  std::vector<double> out;
  out.reserve(count);
  if (count <= 1) {
    out.push_back(std::clamp(center, -bound, bound));
    return out;
  }
  const double lo = center - reach;
  const double step = 2.0 * reach / (count - 1);
  for (int i = 0; i < count; ++i) {
    const double v = std::clamp(lo + i * step, -bound, bound);
    if (!out.empty() && out.back() == v) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace

LocalPlanner::LocalPlanner(const PlannerConfig& cfg,
                           const ConstraintArrangement* arr)
    : cfg_(cfg), arr_(arr) {
  if (cfg_.alpha_swerve <= 0.0 || cfg_.alpha_smoothness <= 0.0 ||
      cfg_.gamma <= 0.0 || cfg_.delta_v_max <= 0.0) {
    throw std::invalid_argument("planner cost parameters must be positive");
  }
  if (arr_ == nullptr) {
    throw std::invalid_argument("planner requires a constraint arrangement");
  }
}

bool LocalPlanner::preferred(int region) const {
  if (region == kRegionForward) return true;
  return cfg_.preferred_set == PreferredSet::kForwardBackward &&
         region == kRegionBackward;
}

std::vector<BodyVelocity> LocalPlanner::sample_window(
    const BodyVelocity& current) const {
  const DynamicWindowLimits& w = cfg_.window;
  const double dt = cfg_.plan_period;
  const auto xs =
      axis_samples(current.vx, w.accel_x * dt, w.max_vx, w.samples_vx);
  const auto ys =
      axis_samples(current.vy, w.accel_y * dt, w.max_vy, w.samples_vy);
  const auto zs =
      axis_samples(current.wz, w.accel_wz * dt, w.max_wz, w.samples_wz);
  std::vector<BodyVelocity> out;
  out.reserve(xs.size() * ys.size() * zs.size() + 2);
  for (const double x : xs) {
    for (const double y : ys) {
      for (const double z : zs) out.push_back({x, y, z});
    }
  }
  auto contains = [&out](const BodyVelocity& v) {
    return std::any_of(out.begin(), out.end(), [&v](const BodyVelocity& u) {
      return u.vx == v.vx && u.vy == v.vy && u.wz == v.wz;
    });
  };
  if (!contains({0.0, 0.0, 0.0})) out.push_back({0.0, 0.0, 0.0});
  const BodyVelocity clamped{std::clamp(current.vx, -w.max_vx, w.max_vx),
                             std::clamp(current.vy, -w.max_vy, w.max_vy),
                             std::clamp(current.wz, -w.max_wz, w.max_wz)};
  if (!contains(clamped)) out.push_back(clamped);
  return out;
}

std::vector<Pose2d> LocalPlanner::rollout(const BodyVelocity& v,
                                          const Pose2d& pose, double sim_time,
                                          double sim_dt) {
  const int steps = static_cast<int>(std::floor(sim_time / sim_dt));
  std::vector<Pose2d> out;
  out.reserve(steps + 1);
  Pose2d p = pose;
  out.push_back(p);
  for (int i = 0; i < steps; ++i) {
    const double c = std::cos(p.heading);
    const double s = std::sin(p.heading);
    p.x += (v.vx * c - v.vy * s) * sim_dt;
    p.y += (v.vx * s + v.vy * c) * sim_dt;
    p.heading = wrap_angle(p.heading + v.wz * sim_dt);
    out.push_back(p);
  }
  return out;
}

double LocalPlanner::swerve_cost(const BodyVelocity& current,
                                 const BodyVelocity& candidate,
                                 bool* inadmissible) const {
  *inadmissible = false;
  if (arr_->regime() == SteeringRegime::kUnconstrained) return 0.0;
  const int current_region = arr_->region_of(current);
  // From rest (or nearly so) the wheels can be repositioned before the
  // motion starts, so entering any region is free.
  if (current_region == kRegionStationary) return 0.0;
  const int candidate_region = arr_->region_of(candidate);
  // Stopping is always allowed; a stationary candidate crosses nothing.
  if (candidate_region == kRegionStationary) return 0.0;
  if (candidate_region == current_region) {
    if (cfg_.scoring_mode == ScoringMode::kDistanceBased) {
      const double d = arr_->distance_to_boundary(candidate);
      return cfg_.alpha_swerve * std::exp(-cfg_.gamma * d);
    }
    return preferred(candidate_region) ? 0.0 : 0.5 * cfg_.alpha_swerve;
  }
  if (!preferred(candidate_region)) {
    *inadmissible = true;
    return 0.0;
  }
  return cfg_.alpha_swerve;
}

double LocalPlanner::smoothness_cost(const BodyVelocity& current,
                                     const BodyVelocity& candidate) const {
  const double step = (candidate - current).norm();
  return cfg_.alpha_smoothness * std::min(step / cfg_.delta_v_max, 1.0);
}

double LocalPlanner::path_distance_cost(const PlanningContext& ctx,
                                        const std::vector<Pose2d>& path) const {
  if (ctx.waypoint_path.empty()) return 0.0;
  const Pose2d& end = path.back();
  if (ctx.waypoint_path.size() == 1) {
    return std::hypot(end.x - ctx.waypoint_path[0][0],
                      end.y - ctx.waypoint_path[0][1]) /
           cfg_.path_scale;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < ctx.waypoint_path.size(); ++i) {
    best = std::min(best, point_segment_distance(
                              end.x, end.y, ctx.waypoint_path[i][0],
                              ctx.waypoint_path[i][1],
                              ctx.waypoint_path[i + 1][0],
                              ctx.waypoint_path[i + 1][1]));
  }
  return best / cfg_.path_scale;
}

double LocalPlanner::goal_distance_cost(const PlanningContext& ctx,
                                        const std::vector<Pose2d>& path) const {
  if (ctx.waypoint_path.empty()) return 0.0;
  const Pose2d& end = path.back();
  const auto& wp = ctx.waypoint_path[std::min(
      ctx.active_waypoint, ctx.waypoint_path.size() - 1)];
  double cost = std::hypot(end.x - wp[0], end.y - wp[1]);
  if (ctx.final_waypoint_active()) {
    cost += cfg_.goal_heading_weight *
            std::abs(wrap_angle(end.heading - ctx.goal.heading));
  }
  return cost;
}

double LocalPlanner::obstacle_cost(const PlanningContext& ctx,
                                   const std::vector<Pose2d>& path,
                                   bool* inadmissible) const {
  *inadmissible = false;
  if (ctx.grid == nullptr || ctx.distance_field == nullptr) return 0.0;
  double min_clearance = std::numeric_limits<double>::infinity();
  for (const Pose2d& p : path) {
    if (ctx.grid->occupied_at(p.x, p.y)) {
      *inadmissible = true;
      return 0.0;
    }
    const double c =
        ctx.distance_field->clearance_at(p.x, p.y) - cfg_.footprint_radius;
    if (c < 0.0) {
      *inadmissible = true;
      return 0.0;
    }
    min_clearance = std::min(min_clearance, c);
  }
  if (std::isinf(min_clearance)) return 0.0;
  return cfg_.obstacle_alpha *
         std::exp(-min_clearance / cfg_.clearance_decay);
}

PlanResult LocalPlanner::select_velocity(const PlanningContext& ctx) const {
  const std::vector<BodyVelocity> window =
      sample_window(ctx.current_velocity);
  PlanResult result;
  result.all_inadmissible = true;
  double best_total = std::numeric_limits<double>::infinity();
  // Wheel targets of the command currently being tracked; reference point
  // for the per-interval steering-step limit. Unused from rest, where the
  // wheels are free to reorient before the motion starts.
  const bool check_steer_step =
      cfg_.use_swerve_critic &&
      arr_->regime() != SteeringRegime::kUnconstrained &&
      arr_->region_of(ctx.current_velocity) != kRegionStationary;
  WheelStates current_targets{};
  if (check_steer_step) {
    current_targets =
        inverse_kinematics(arr_->geometry(), arr_->limits(),
                           ctx.current_velocity)
            .wheels;
  }
  for (const BodyVelocity& cand : window) {
    if (check_steer_step && arr_->region_of(cand) != kRegionStationary) {
      const WheelStates targets =
          inverse_kinematics(arr_->geometry(), arr_->limits(), cand).wheels;
      bool executable = true;
      for (int i = 0; i < kNumWheels && executable; ++i) {
        executable = std::abs(targets[i].steer - current_targets[i].steer) <=
                     cfg_.max_steer_step;
      }
      if (!executable) continue;
    }
    const std::vector<Pose2d> path =
        rollout(cand, ctx.pose, cfg_.sim_time, cfg_.sim_dt);
    CostBreakdown cost;
    bool inadmissible = false;
    cost.obstacle = obstacle_cost(ctx, path, &inadmissible);
    if (inadmissible) continue;
    if (cfg_.use_swerve_critic) {
      cost.swerve = swerve_cost(ctx.current_velocity, cand, &inadmissible);
      if (inadmissible) continue;
    }
    if (cfg_.use_smoothness_critic) {
      cost.smoothness = smoothness_cost(ctx.current_velocity, cand);
    }
    cost.path_distance = path_distance_cost(ctx, path);
    cost.goal_distance = goal_distance_cost(ctx, path);
    cost.total = cfg_.weights.path_distance * cost.path_distance +
                 cfg_.weights.goal_distance * cost.goal_distance +
                 cfg_.weights.obstacle * cost.obstacle +
                 cfg_.weights.swerve * cost.swerve +
                 cfg_.weights.smoothness * cost.smoothness;
    if (cost.total < best_total) {
      best_total = cost.total;
      result.velocity = cand;
      result.cost = cost;
      result.all_inadmissible = false;
    }
  }
  if (result.all_inadmissible) {
    result.velocity = {0.0, 0.0, 0.0};
    result.cost = CostBreakdown{};
    result.cost.admissible = false;
  }
  return result;
}

}  // namespace swervenav
