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

#ifndef SWERVENAV_KINEMATICS_HPP_
#define SWERVENAV_KINEMATICS_HPP_

#include <array>

#include "swervenav/types.hpp"

namespace swervenav {

// Velocity of wheel i's contact point in the body frame, from rigid-body
// motion: (vx - y_i * wz, vy + x_i * wz).
std::array<double, 2> contact_velocity(const ChassisGeometry& g,
                                       const BodyVelocity& v, int wheel);

// Steering angles that align each wheel with its contact-point velocity,
// and the matching drive speeds (always non-negative here). Angles are in
// (-pi, pi] and ignore the steering range.
WheelStates inverse_kinematics_raw(const ChassisGeometry& g,
                                   const BodyVelocity& v);

// True if the angle lies inside the mechanical range (closed interval).
bool within_limits(const SteeringLimits& lim, double angle);

// Maps a wheel command into the mechanical range: an out-of-range angle is
// rotated by half a turn toward zero and the drive direction is reversed,
// which leaves the contact-point velocity unchanged. Sets *flipped if the
// mapping was applied.
WheelState map_into_range(const SteeringLimits& lim, const WheelState& raw,
                          bool* flipped = nullptr);

struct IkResult {
  WheelStates wheels;
  std::array<bool, kNumWheels> flipped{};
};

// Full inverse kinematics: raw solution followed by range mapping per wheel.
IkResult inverse_kinematics(const ChassisGeometry& g, const SteeringLimits& lim,
                            const BodyVelocity& v);

// Least-squares body velocity from the four wheel states. The 8 contact
// constraints overdetermine the 3 velocity components; this is the exact
// inverse of inverse_kinematics on consistent inputs.
BodyVelocity forward_kinematics(const ChassisGeometry& g,
                                const WheelStates& wheels);

}  // namespace swervenav

#endif  // SWERVENAV_KINEMATICS_HPP_
