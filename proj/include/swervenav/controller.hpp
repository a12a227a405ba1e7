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

#ifndef SWERVENAV_CONTROLLER_HPP_
#define SWERVENAV_CONTROLLER_HPP_

#include <vector>

#include "swervenav/arrangement.hpp"
#include "swervenav/kinematics.hpp"
#include "swervenav/types.hpp"

namespace swervenav {

struct ControllerConfig {
  double steering_rate_max = 2.0;    // rad/s
  double drive_accel_max = 40.0;     // rad/s^2
  double reposition_tolerance = 0.05;  // rad
  bool shortest_transition = false;
  double control_dt = 0.01;  // s
};

enum class ControllerMode { kTracking, kStopAndReposition };

enum class ControllerEvent { kRegionChanged, kStopStarted, kRepositionDone };

// Tracks commanded body velocities with rate-limited wheel actuation.
// When a command requires a wheel flip (the command's region differs from
// the previous one, or some wheel would have to move more than a quarter
// turn), the controller stops the drives, repositions the steering, and
// resumes; each such stop is counted once.
class MotionController {
 public:
  MotionController(const ControllerConfig& cfg, const ChassisGeometry& geo,
                   const SteeringLimits& lim,
                   const ConstraintArrangement* arr);

  // Wheel targets for a command from the current actual wheel states.
  // A command below the stationary threshold holds the current steering
  // with zero drive. With shortest_transition set, wheels whose flipped
  // and unflipped orientations are both inside the range take the one
  // closer to the current angle.
  WheelStates compute_targets(const BodyVelocity& v_cmd) const;

  // Advances one control period; returns the events raised by this step.
  std::vector<ControllerEvent> step(const BodyVelocity& v_cmd);

  void reset(const WheelStates& initial);

  const WheelStates& wheel_actual() const { return actual_; }
  ControllerMode mode() const { return mode_; }
  int discontinuity_count() const { return discontinuity_count_; }
  int last_region() const { return last_region_; }
  const ControllerConfig& config() const { return cfg_; }

 private:
  ControllerConfig cfg_;
  ChassisGeometry geo_;
  SteeringLimits lim_;
  const ConstraintArrangement* arr_;

  ControllerMode mode_ = ControllerMode::kTracking;
  WheelStates actual_{};
  int last_region_ = kRegionStationary;
  int discontinuity_count_ = 0;
  // True while the wheels are still converging on the first command after a
  // stationary phase. Repositioning from rest is free, and that freedom has
  // to cover the whole swing, not just the control step that leaves rest.
  bool from_rest_ = true;
};

}  // namespace swervenav

#endif  // SWERVENAV_CONTROLLER_HPP_
