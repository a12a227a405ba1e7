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

#include "swervenav/kinematics.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace swervenav {

std::array<double, 2> contact_velocity(const ChassisGeometry& g,
                                       const BodyVelocity& v, int wheel) {
  const auto p = wheel_position(g, wheel);
  return {v.vx - p[1] * v.wz, v.vy + p[0] * v.wz};
}

WheelStates inverse_kinematics_raw(const ChassisGeometry& g,
                                   const BodyVelocity& v) {
  WheelStates out;
  for (int i = 0; i < kNumWheels; ++i) {
    const auto c = contact_velocity(g, v, i);
    out[i].steer = std::atan2(c[1], c[0]);
    out[i].drive = std::hypot(c[0], c[1]) / g.wheel_radius;
  }
  return out;
}

bool within_limits(const SteeringLimits& lim, double angle) {
  return angle >= lim.min_angle && angle <= lim.max_angle;
}

WheelState map_into_range(const SteeringLimits& lim, const WheelState& raw,
                          bool* flipped) {
  if (within_limits(lim, raw.steer)) {
    if (flipped) *flipped = false;
    return raw;
  }
  if (flipped) *flipped = true;
  const double shift = raw.steer > 0.0 ? -M_PI : M_PI;
  return {raw.steer + shift, -raw.drive};
}

IkResult inverse_kinematics(const ChassisGeometry& g, const SteeringLimits& lim,
                            const BodyVelocity& v) {
  IkResult r;
  r.wheels = inverse_kinematics_raw(g, v);
  for (int i = 0; i < kNumWheels; ++i) {
    r.wheels[i] = map_into_range(lim, r.wheels[i], &r.flipped[i]);
  }
  return r;
}

BodyVelocity forward_kinematics(const ChassisGeometry& g,
                                const WheelStates& wheels) {
  Eigen::Matrix<double, 8, 3> a;
  Eigen::Matrix<double, 8, 1> b;
  for (int i = 0; i < kNumWheels; ++i) {
    const auto p = wheel_position(g, i);
    const double speed = wheels[i].drive * g.wheel_radius;
    a.row(2 * i) << 1.0, 0.0, -p[1];
    a.row(2 * i + 1) << 0.0, 1.0, p[0];
    b(2 * i) = speed * std::cos(wheels[i].steer);
    b(2 * i + 1) = speed * std::sin(wheels[i].steer);
  }
  const Eigen::Vector3d x =
      (a.transpose() * a).ldlt().solve(a.transpose() * b);
  return {x(0), x(1), x(2)};
}

}  // namespace swervenav
