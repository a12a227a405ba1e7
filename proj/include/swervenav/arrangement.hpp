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

#ifndef SWERVENAV_ARRANGEMENT_HPP_
#define SWERVENAV_ARRANGEMENT_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "swervenav/types.hpp"

namespace swervenav {

// Steering ranges fall into three shapes that need different handling.
enum class SteeringRegime {
  kUnconstrained,  // wheels swerve freely, velocity space is one region
  kRightAngle,     // range is exactly [-pi/2, pi/2]
  kGeneral,        // symmetric range with max in (pi/2, pi)
};

// Pseudo region id for velocities below the stationary threshold.
inline constexpr int kRegionStationary = -1;
// The region containing pure forward motion always gets id 0, the one
// containing pure backward motion id 1.
inline constexpr int kRegionForward = 0;
inline constexpr int kRegionBackward = 1;

struct UnsupportedLimitsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArrangementOptions {
  // Velocities with norm below this are treated as stationary.
  double stationary_threshold = 0.05;
  // Directions sampled on the unit sphere when enumerating cells.
  int sphere_samples = 1000000;
  // Probe points per plane when classifying walls between cells.
  int wall_samples = 1 << 16;
  // Seed for the construction sampling. Fixed so the table is identical
  // on every run; this is not the experiment seed.
  std::uint64_t seed = 0x5eedc0de902d1ull;
};

// Partition of body-velocity space (vx, vy, wz) induced by the steering
// range. Eight homogeneous planes mark where some wheel's steering solution
// jumps between the two ends of its range; cells of the plane arrangement
// that are separated only by inactive plane patches are merged into
// continuous regions. Moving within one region never forces a wheel to
// flip; crossing between regions does.
class ConstraintArrangement {
 public:
  // Throws UnsupportedLimitsError for invalid geometry, asymmetric ranges,
  // ranges narrower than a right angle, or ranges too close to a right
  // angle for a stable tangent. Throws ConstructionError when cell
  // enumeration does not reproduce the expected structure.
  ConstraintArrangement(const ChassisGeometry& g, const SteeringLimits& lim,
                        const ArrangementOptions& opt = {});

  SteeringRegime regime() const { return regime_; }
  int signature_count() const { return signature_count_; }
  int region_count() const { return region_count_; }
  double stationary_threshold() const { return opt_.stationary_threshold; }
  const ChassisGeometry& geometry() const { return geometry_; }
  const SteeringLimits& limits() const { return limits_; }

  // Bit i is the half-space test against plane row i (set when the dot
  // product is >= 0). Meaningful for the general regime only.
  std::uint8_t signature_of(const BodyVelocity& v) const;

  // Region id of a velocity, or kRegionStationary below the threshold.
  int region_of(const BodyVelocity& v) const;

  // Distance from v to the nearest plane patch a wheel flip actually
  // happens on, given the region v lies in. This is the margin the local
  // planner uses to price velocities near a discontinuity. Returns 0 for
  // stationary velocities and +inf in the unconstrained regime.
  double distance_to_boundary(const BodyVelocity& v) const;

  // The eight plane normals (rows over (vx, vy, wz)), general regime only.
  const std::array<std::array<double, 3>, 8>& plane_rows() const {
    return rows_;
  }

  // Cell signatures belonging to one region, sorted ascending.
  std::vector<int> region_signatures(int region) const;

  // Fraction of sampled velocity directions falling in each region.
  const std::vector<double>& region_weights() const { return weights_; }

  // Plane rows that carry an active wall of the given region.
  const std::vector<int>& region_bounding_rows(int region) const;

 private:
  void build_general(const ChassisGeometry& g, double max_angle);
  double plane_distance(const BodyVelocity& v, int row) const;
  double min_plane_distance(const BodyVelocity& v) const;

  SteeringRegime regime_ = SteeringRegime::kUnconstrained;
  ArrangementOptions opt_;
  ChassisGeometry geometry_;
  SteeringLimits limits_;
  double left_track_ = 0.0;   // origin to left wheels
  double right_track_ = 0.0;  // origin to right wheels
  int signature_count_ = 1;
  int region_count_ = 1;
  std::array<std::array<double, 3>, 8> rows_{};
  std::array<double, 8> row_norms_{};
  std::array<std::int16_t, 256> region_of_signature_{};
  std::vector<std::uint8_t> known_signatures_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> bounding_rows_;
};

}  // namespace swervenav

#endif  // SWERVENAV_ARRANGEMENT_HPP_
