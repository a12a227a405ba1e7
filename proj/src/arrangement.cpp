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

#include "swervenav/arrangement.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "swervenav/rng.hpp"

namespace swervenav {
namespace {

constexpr double kRightAngleTol = 1e-9;
// tan() is never evaluated this close to a right angle.
constexpr double kTangentGuard = 1e-6;
// Wall probes this close to an unrelated plane are discarded so the two
// perturbed probes stay inside the two cells actually meeting at the wall.
constexpr double kWallExclusion = 1e-5;
// Wall probes with an ambiguous activity test are discarded.
constexpr double kSideAmbiguous = 1e-9;
constexpr double kWallPerturb = 1e-7;

// Expected cell structure for supported general-regime geometries.
constexpr int kExpectedSignatures = 46;
constexpr int kExpectedRegions = 12;

struct UnionFind {
  std::array<std::uint8_t, 256> parent;
  UnionFind() {
    for (int i = 0; i < 256; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = static_cast<std::uint8_t>(a);
  }
};

}  // namespace

ConstraintArrangement::ConstraintArrangement(const ChassisGeometry& g,
                                             const SteeringLimits& lim,
                                             const ArrangementOptions& opt)
    : opt_(opt), geometry_(g), limits_(lim) {
  if (!g.valid()) {
    throw UnsupportedLimitsError("chassis geometry lengths must be positive");
  }
  left_track_ = g.left;
  right_track_ = g.right;
  region_of_signature_.fill(-1);

  if (lim.covers_full_circle()) {
    regime_ = SteeringRegime::kUnconstrained;
    signature_count_ = 1;
    region_count_ = 1;
    weights_ = {1.0};
    bounding_rows_ = {{}};
    region_of_signature_[0] = 0;
    return;
  }
  if (std::abs(lim.min_angle + lim.max_angle) > kRightAngleTol) {
    throw UnsupportedLimitsError(
        "steering range must be symmetric about zero");
  }
  const double m = lim.max_angle;
  if (std::abs(m - M_PI_2) <= kRightAngleTol) {
    regime_ = SteeringRegime::kRightAngle;
    signature_count_ = 4;
    region_count_ = 4;
    rows_[0] = {1.0, 0.0, -left_track_};
    rows_[1] = {1.0, 0.0, right_track_};
    row_norms_[0] = std::sqrt(1.0 + left_track_ * left_track_);
    row_norms_[1] = std::sqrt(1.0 + right_track_ * right_track_);
    // Quadrants of the two planes: both ahead, both behind, left behind
    // only, right behind only.
    region_of_signature_[3] = 0;
    region_of_signature_[0] = 1;
    region_of_signature_[2] = 2;
    region_of_signature_[1] = 3;
    bounding_rows_.assign(4, {0, 1});
    weights_.assign(4, 0.0);
    DeterministicRng rng(opt_.seed);
    std::int64_t total = 0;
    for (int s = 0; s < opt_.sphere_samples; ++s) {
      const double x = rng.gaussian();
      const double y = rng.gaussian();
      const double z = rng.gaussian();
      const double n = std::sqrt(x * x + y * y + z * z);
      if (n < 1e-12) continue;
      const BodyVelocity v{x / n, y / n, z / n};
      weights_[region_of_signature_[signature_of(v)]] += 1.0;
      ++total;
    }
    for (double& w : weights_) w /= static_cast<double>(total);
    return;
  }
  if (m < M_PI_2) {
    throw UnsupportedLimitsError(
        "steering ranges narrower than a right angle are not supported");
  }
  if (m - M_PI_2 < kTangentGuard) {
    throw UnsupportedLimitsError(
        "steering range too close to a right angle for a stable tangent");
  }
  if (m >= M_PI - kTangentGuard) {
    throw UnsupportedLimitsError(
        "steering range covers nearly the full circle; declare it "
        "unconstrained instead");
  }
  regime_ = SteeringRegime::kGeneral;
  build_general(g, m);
}

void ConstraintArrangement::build_general(const ChassisGeometry& g,
                                          double max_angle) {
  const double t1 = std::tan(max_angle);   // negative for angles past pi/2
  const double t2 = std::tan(-max_angle);  // = -t1
  const double lf = g.front;
  const double lr = g.rear;
  const double wl = g.left;
  const double wr = g.right;

  // One row per wheel and range end. A wheel's raw steering solution
  // crosses the corresponding end of the range exactly on its plane.
  rows_[0] = {-t1, 1.0, lf + wl * t1};
  rows_[1] = {-t1, 1.0, -(lr - wl * t1)};
  rows_[2] = {-t1, 1.0, -(lr + wr * t1)};
  rows_[3] = {-t1, 1.0, lf - wr * t1};
  rows_[4] = {t2, -1.0, -(lf + wl * t2)};
  rows_[5] = {t2, -1.0, lr - wl * t2};
  rows_[6] = {t2, -1.0, lr + wr * t2};
  rows_[7] = {t2, -1.0, -(lf - wr * t2)};
  for (int j = 0; j < 8; ++j) {
    row_norms_[j] = std::sqrt(rows_[j][0] * rows_[j][0] +
                              rows_[j][1] * rows_[j][1] +
                              rows_[j][2] * rows_[j][2]);
  }

  // Enumerate cells by sampling velocity directions.
  DeterministicRng rng(opt_.seed);
  std::array<std::int64_t, 256> counts{};
  std::int64_t total = 0;
  for (int s = 0; s < opt_.sphere_samples; ++s) {
    const double x = rng.gaussian();
    const double y = rng.gaussian();
    const double z = rng.gaussian();
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n < 1e-12) continue;
    ++counts[signature_of({x / n, y / n, z / n})];
    ++total;
  }
  std::array<bool, 256> known{};
  signature_count_ = 0;
  for (int s = 0; s < 256; ++s) {
    if (counts[s] > 0) {
      known[s] = true;
      known_signatures_.push_back(static_cast<std::uint8_t>(s));
      ++signature_count_;
    }
  }
  if (signature_count_ != kExpectedSignatures) {
    throw ConstructionError("cell enumeration found " +
                            std::to_string(signature_count_) +
                            " signatures, expected " +
                            std::to_string(kExpectedSignatures));
  }

  // Classify wall patches between adjacent cells. A patch on a wheel's
  // plane only forces that wheel to flip where the wheel's longitudinal
  // contact speed is negative; patches without that are seams in the
  // half-space encoding, not discontinuities, and the cells they separate
  // are merged.
  UnionFind uf;
  std::vector<std::tuple<int, std::uint8_t, std::uint8_t>> active_walls;
  for (int j = 0; j < 8; ++j) {
    const Eigen::Vector3d nj(rows_[j][0], rows_[j][1], rows_[j][2]);
    const Eigen::Vector3d nhat = nj.normalized();
    int least = 0;
    for (int k = 1; k < 3; ++k) {
      if (std::abs(nhat[k]) < std::abs(nhat[least])) least = k;
    }
    const Eigen::Vector3d u =
        nhat.cross(Eigen::Vector3d::Unit(least)).normalized();
    const Eigen::Vector3d w = nhat.cross(u);
    const bool left_side = (j % 4) < 2;  // rows of wheels on the left track
    for (int s = 0; s < opt_.wall_samples; ++s) {
      const double theta = rng.uniform(0.0, 2.0 * M_PI);
      const Eigen::Vector3d p = std::cos(theta) * u + std::sin(theta) * w;
      bool near_other = false;
      for (int k = 0; k < 8 && !near_other; ++k) {
        if (k == j) continue;
        const double d = std::abs(rows_[k][0] * p[0] + rows_[k][1] * p[1] +
                                  rows_[k][2] * p[2]) /
                         row_norms_[k];
        near_other = d < kWallExclusion;
      }
      if (near_other) continue;
      const double side =
          left_side ? p[0] - wl * p[2] : p[0] + wr * p[2];
      if (std::abs(side) < kSideAmbiguous) continue;
      const Eigen::Vector3d hi = p + kWallPerturb * nhat;
      const Eigen::Vector3d lo = p - kWallPerturb * nhat;
      const std::uint8_t sh = signature_of({hi[0], hi[1], hi[2]});
      const std::uint8_t sl = signature_of({lo[0], lo[1], lo[2]});
      if (sh == sl || !known[sh] || !known[sl]) continue;
      if (side > 0.0) {
        uf.unite(sh, sl);
      } else {
        active_walls.emplace_back(j, sh, sl);
      }
    }
  }

  // Group cells into regions.
  std::map<int, std::vector<int>> groups;
  for (const std::uint8_t s : known_signatures_) groups[uf.find(s)].push_back(s);
  region_count_ = static_cast<int>(groups.size());
  if (region_count_ != kExpectedRegions) {
    throw ConstructionError("cell merging produced " +
                            std::to_string(region_count_) +
                            " regions, expected " +
                            std::to_string(kExpectedRegions));
  }

  const int forward_root = uf.find(0xFF);
  const int backward_root = uf.find(0x00);
  if (!known[0xFF] || !known[0x00] || forward_root == backward_root) {
    throw ConstructionError(
        "forward and backward motion did not land in distinct regions");
  }

  struct Group {
    int root;
    std::int64_t count;
    std::vector<int> members;
  };
  std::vector<Group> rest;
  std::int64_t forward_count = 0;
  std::int64_t backward_count = 0;
  std::vector<int> forward_members;
  std::vector<int> backward_members;
  for (auto& [root, members] : groups) {
    std::int64_t c = 0;
    for (const int s : members) c += counts[s];
    if (root == forward_root) {
      forward_count = c;
      forward_members = members;
    } else if (root == backward_root) {
      backward_count = c;
      backward_members = members;
    } else {
      rest.push_back({root, c, members});
    }
  }
  for (const Group& gr : rest) {
    if (gr.count >= forward_count) {
      throw ConstructionError(
          "the forward region is not the unique largest region");
    }
  }
  if (backward_count >= forward_count) {
    throw ConstructionError(
        "the forward region is not the unique largest region");
  }
  std::sort(rest.begin(), rest.end(), [](const Group& a, const Group& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.members.front() < b.members.front();
  });

  std::map<int, int> region_of_root;
  region_of_root[forward_root] = kRegionForward;
  region_of_root[backward_root] = kRegionBackward;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    region_of_root[rest[i].root] = static_cast<int>(i) + 2;
  }
  for (const std::uint8_t s : known_signatures_) {
    region_of_signature_[s] =
        static_cast<std::int16_t>(region_of_root[uf.find(s)]);
  }

  weights_.assign(region_count_, 0.0);
  for (const std::uint8_t s : known_signatures_) {
    weights_[region_of_signature_[s]] +=
        static_cast<double>(counts[s]) / static_cast<double>(total);
  }

  std::vector<std::set<int>> row_sets(region_count_);
  for (const auto& [j, sa, sb] : active_walls) {
    row_sets[region_of_signature_[sa]].insert(j);
    row_sets[region_of_signature_[sb]].insert(j);
  }
  bounding_rows_.resize(region_count_);
  for (int r = 0; r < region_count_; ++r) {
    bounding_rows_[r].assign(row_sets[r].begin(), row_sets[r].end());
  }
}

std::uint8_t ConstraintArrangement::signature_of(const BodyVelocity& v) const {
  switch (regime_) {
    case SteeringRegime::kUnconstrained:
      return 0;
    case SteeringRegime::kRightAngle: {
      std::uint8_t s = 0;
      if (v.vx - left_track_ * v.wz >= 0.0) s |= 1;
      if (v.vx + right_track_ * v.wz >= 0.0) s |= 2;
      return s;
    }
    case SteeringRegime::kGeneral: {
      std::uint8_t s = 0;
      for (int j = 0; j < 8; ++j) {
        const double d =
            rows_[j][0] * v.vx + rows_[j][1] * v.vy + rows_[j][2] * v.wz;
        if (d >= 0.0) s |= static_cast<std::uint8_t>(1u << j);
      }
      return s;
    }
  }
  return 0;
}

int ConstraintArrangement::region_of(const BodyVelocity& v) const {
  if (v.norm() < opt_.stationary_threshold) return kRegionStationary;
  if (regime_ == SteeringRegime::kUnconstrained) return 0;
  const std::uint8_t s = signature_of(v);
  const int r = region_of_signature_[s];
  if (r >= 0) return r;
  // A signature can be missed by cell enumeration only for sliver cells of
  // negligible solid angle; map those to the nearest known cell.
  int best = -1;
  int best_dist = 9;
  for (const std::uint8_t k : known_signatures_) {
    const int d = std::popcount(static_cast<unsigned>(s ^ k));
    if (d < best_dist) {
      best_dist = d;
      best = k;
    }
  }
  return region_of_signature_[best];
}

double ConstraintArrangement::plane_distance(const BodyVelocity& v,
                                             int row) const {
  return std::abs(rows_[row][0] * v.vx + rows_[row][1] * v.vy +
                  rows_[row][2] * v.wz) /
         row_norms_[row];
}

double ConstraintArrangement::min_plane_distance(const BodyVelocity& v) const {
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 8; ++j) best = std::min(best, plane_distance(v, j));
  return best;
}

double ConstraintArrangement::distance_to_boundary(
    const BodyVelocity& v) const {
  if (regime_ == SteeringRegime::kUnconstrained) {
    return std::numeric_limits<double>::infinity();
  }
  if (v.norm() < opt_.stationary_threshold) return 0.0;
  if (regime_ == SteeringRegime::kRightAngle) {
    return std::min(plane_distance(v, 0), plane_distance(v, 1));
  }
  const int r = region_of(v);
  if (r == kRegionBackward && !bounding_rows_[kRegionBackward].empty()) {
    double best = std::numeric_limits<double>::infinity();
    for (const int j : bounding_rows_[kRegionBackward]) {
      best = std::min(best, plane_distance(v, j));
    }
    return best;
  }
  if (r != kRegionForward) return min_plane_distance(v);

  // Forward region. Plane patches are only active behind one of the two
  // track planes, so distance along a straight line understates how far a
  // forward velocity is from any active patch. Ahead of both track planes
  // the distance is routed through the nearer plane: travel to it, then
  // from the foot point to the nearest constraint plane.
  const double al = v.vx - left_track_ * v.wz;
  const double ar = v.vx + right_track_ * v.wz;
  if (al < 0.0 || ar < 0.0) return min_plane_distance(v);
  const double nl2 = 1.0 + left_track_ * left_track_;
  const double nr2 = 1.0 + right_track_ * right_track_;
  const BodyVelocity foot_l{v.vx - al / nl2, v.vy,
                            v.wz + al * left_track_ / nl2};
  const BodyVelocity foot_r{v.vx - ar / nr2, v.vy,
                            v.wz - ar * right_track_ / nr2};
  const double route_l = al / std::sqrt(nl2) + min_plane_distance(foot_l);
  const double route_r = ar / std::sqrt(nr2) + min_plane_distance(foot_r);
  return std::min(route_l, route_r);
}

std::vector<int> ConstraintArrangement::region_signatures(int region) const {
  std::vector<int> out;
  if (regime_ == SteeringRegime::kUnconstrained) {
    if (region == 0) out.push_back(0);
    return out;
  }
  for (int s = 0; s < 256; ++s) {
    if (region_of_signature_[s] == region) out.push_back(s);
  }
  return out;
}

const std::vector<int>& ConstraintArrangement::region_bounding_rows(
    int region) const {
  return bounding_rows_.at(region);
}

}  // namespace swervenav
