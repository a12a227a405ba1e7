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

#ifndef SWERVENAV_TYPES_HPP_
#define SWERVENAV_TYPES_HPP_

#include <array>
#include <cmath>
#include <cstdint>

namespace swervenav {

// Body frame: x forward, y left, yaw counter-clockwise.
struct BodyVelocity {
  double vx = 0.0;   // m/s
  double vy = 0.0;   // m/s
  double wz = 0.0;   // rad/s

  double norm() const { return std::sqrt(vx * vx + vy * vy + wz * wz); }
};

inline BodyVelocity operator+(const BodyVelocity& a, const BodyVelocity& b) {
  return {a.vx + b.vx, a.vy + b.vy, a.wz + b.wz};
}
inline BodyVelocity operator-(const BodyVelocity& a, const BodyVelocity& b) {
  return {a.vx - b.vx, a.vy - b.vy, a.wz - b.wz};
}
inline BodyVelocity operator*(double s, const BodyVelocity& v) {
  return {s * v.vx, s * v.vy, s * v.wz};
}

struct Pose2d {
  double x = 0.0;        // m, world frame
  double y = 0.0;        // m, world frame
  double heading = 0.0;  // rad, world frame
};

// Normalizes an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

// Distances from the body origin to each axle and wheel track side.
// All four must be positive.
struct ChassisGeometry {
  double front = 0.2;         // m, origin to front axle
  double rear = 0.2;          // m, origin to rear axle
  double left = 0.2;          // m, origin to left wheel centers
  double right = 0.2;         // m, origin to right wheel centers
  double wheel_radius = 0.08; // m

  bool valid() const {
    return front > 0.0 && rear > 0.0 && left > 0.0 && right > 0.0 &&
           wheel_radius > 0.0;
  }
};

// Wheel index order used everywhere: 0 front-left, 1 rear-left,
// 2 rear-right, 3 front-right.
inline constexpr int kNumWheels = 4;

// Wheel mount position in the body frame for a given index.
inline std::array<double, 2> wheel_position(const ChassisGeometry& g, int i) {
  switch (i) {
    case 0: return {g.front, g.left};
    case 1: return {-g.rear, g.left};
    case 2: return {-g.rear, -g.right};
    default: return {g.front, -g.right};
  }
}

// Mechanical steering range [min_angle, max_angle], radians.
// Supported shapes: symmetric ranges with max_angle in [pi/2, pi).
// A range covering (-pi, pi] entirely means the wheels can swerve freely.
struct SteeringLimits {
  double min_angle = -M_PI;
  double max_angle = M_PI;

  bool covers_full_circle() const {
    return min_angle <= -M_PI && max_angle >= M_PI;
  }
};

// Per-wheel steering angle (rad) and signed drive speed (rad/s).
struct WheelState {
  double steer = 0.0;
  double drive = 0.0;
};

using WheelStates = std::array<WheelState, kNumWheels>;

}  // namespace swervenav

#endif  // SWERVENAV_TYPES_HPP_
