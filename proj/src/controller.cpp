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

#include "swervenav/controller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swervenav {
namespace {

// Moves `value` toward `target` by at most `max_step`.
double slew(double value, double target, double max_step) {
  const double delta = std::clamp(target - value, -max_step, max_step);
  return value + delta;
}

}  // namespace

MotionController::MotionController(const ControllerConfig& cfg,
                                   const ChassisGeometry& geo,
                                   const SteeringLimits& lim,
                                   const ConstraintArrangement* arr)
    : cfg_(cfg), geo_(geo), lim_(lim), arr_(arr) {
  if (cfg_.steering_rate_max <= 0.0 || cfg_.drive_accel_max <= 0.0 ||
      cfg_.reposition_tolerance <= 0.0 || cfg_.control_dt <= 0.0) {
    throw std::invalid_argument("controller parameters must be positive");
  }
  if (arr_ == nullptr) {
    throw std::invalid_argument("controller requires a constraint arrangement");
  }
}

void MotionController::reset(const WheelStates& initial) {
  mode_ = ControllerMode::kTracking;
  actual_ = initial;
  last_region_ = kRegionStationary;
  discontinuity_count_ = 0;
  from_rest_ = true;
}

WheelStates MotionController::compute_targets(const BodyVelocity& v_cmd) const {
  if (v_cmd.norm() < arr_->stationary_threshold()) {
    WheelStates hold = actual_;
    for (WheelState& w : hold) w.drive = 0.0;
    return hold;
  }
  IkResult ik = inverse_kinematics(geo_, lim_, v_cmd);
  if (!cfg_.shortest_transition) return ik.wheels;
  WheelStates out = ik.wheels;
  for (int i = 0; i < kNumWheels; ++i) {
    const WheelState& mapped = out[i];
    const double shift = mapped.steer > 0.0 ? -M_PI : M_PI;
    const WheelState alt{mapped.steer + shift, -mapped.drive};
    if (within_limits(lim_, alt.steer) &&
        std::abs(alt.steer - actual_[i].steer) <
            std::abs(mapped.steer - actual_[i].steer)) {
      out[i] = alt;
    }
  }
  return out;
}

std::vector<ControllerEvent> MotionController::step(const BodyVelocity& v_cmd) {
  std::vector<ControllerEvent> events;
  const WheelStates targets = compute_targets(v_cmd);
  const int new_region = arr_->region_of(v_cmd);
  if (new_region != last_region_) {
    events.push_back(ControllerEvent::kRegionChanged);
  }

  if (new_region == kRegionStationary) {
    from_rest_ = true;
  } else if (from_rest_) {
    // The free repositioning window after rest stays open until every wheel
    // is within a quarter turn of its target; only then does the normal
    // crossing detection resume.
    bool converged = true;
    for (int i = 0; i < kNumWheels; ++i) {
      converged =
          converged && std::abs(targets[i].steer - actual_[i].steer) <= M_PI_2;
    }
    if (converged) from_rest_ = false;
  }

  if (mode_ == ControllerMode::kTracking && !from_rest_ &&
      last_region_ != kRegionStationary) {
    // A commanded region change forces a stop only for the plain controller:
    // it must execute the wheel flip literally. With shortest transitions the
    // wheels take the nearest equivalent configuration and reverse drive
    // direction through the accel-limited ramp, so only a target more than a
    // quarter turn away still requires stopping.
    bool crossing = !cfg_.shortest_transition &&
                    new_region != kRegionStationary &&
                    new_region != last_region_;
    for (int i = 0; i < kNumWheels && !crossing; ++i) {
      crossing = std::abs(targets[i].steer - actual_[i].steer) > M_PI_2;
    }
    if (crossing) {
      mode_ = ControllerMode::kStopAndReposition;
      ++discontinuity_count_;
      events.push_back(ControllerEvent::kStopStarted);
    }
  }

  const double steer_step = cfg_.steering_rate_max * cfg_.control_dt;
  const double drive_step = cfg_.drive_accel_max * cfg_.control_dt;
  if (mode_ == ControllerMode::kTracking) {
    for (int i = 0; i < kNumWheels; ++i) {
      actual_[i].steer = slew(actual_[i].steer, targets[i].steer, steer_step);
      actual_[i].drive = slew(actual_[i].drive, targets[i].drive, drive_step);
    }
  } else {
    bool drives_stopped = true;
    for (const WheelState& w : actual_) {
      drives_stopped = drives_stopped && std::abs(w.drive) <= 1e-12;
    }
    if (!drives_stopped) {
      // Steering stays frozen until the wheels stop turning.
      for (WheelState& w : actual_) w.drive = slew(w.drive, 0.0, drive_step);
    } else {
      bool done = true;
      for (int i = 0; i < kNumWheels; ++i) {
        actual_[i].steer =
            slew(actual_[i].steer, targets[i].steer, steer_step);
        done = done && std::abs(targets[i].steer - actual_[i].steer) <=
                           cfg_.reposition_tolerance;
      }
      if (done) {
        mode_ = ControllerMode::kTracking;
        events.push_back(ControllerEvent::kRepositionDone);
      }
    }
  }

  last_region_ = new_region;
  return events;
}

}  // namespace swervenav
