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

#include "swervenav/costmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swervenav {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Free-space seed for the squared-distance transform. A finite sentinel
// keeps the parabola intersection arithmetic NaN-free when whole rows or
// columns contain no obstacle; real squared distances never get near it.
constexpr double kFarSq = 1e30;
constexpr double kFarCutoffSq = 1e15;

// 1D lower envelope of parabolas (squared-distance transform pass).
void transform_1d(const std::vector<double>& f, std::vector<double>* d,
                  std::vector<int>* v, std::vector<double>* z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  (*v)[0] = 0;
  (*z)[0] = -kInf;
  (*z)[1] = kInf;
  for (int q = 1; q < n; ++q) {
    double s;
    while (true) {
      const int p = (*v)[k];
      s = ((f[q] + q * q) - (f[p] + p * p)) / (2.0 * (q - p));
      if (s > (*z)[k]) break;
      --k;
    }
    ++k;
    (*v)[k] = q;
    (*z)[k] = s;
    (*z)[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while ((*z)[k + 1] < q) ++k;
    const int p = (*v)[k];
    (*d)[q] = (q - p) * (q - p) + f[p];
  }
}

}  // namespace

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             double origin_x, double origin_y)
    : width_(width),
      height_(height),
      resolution_(resolution),
      origin_x_(origin_x),
      origin_y_(origin_y),
      cells_(static_cast<std::size_t>(width) * height, 0) {
  if (width <= 0 || height <= 0 || resolution <= 0.0) {
    throw std::invalid_argument("grid dimensions and resolution must be positive");
  }
}

bool OccupancyGrid::world_to_cell(double x, double y, int* ix, int* iy) const {
  const int cx = static_cast<int>(std::floor((x - origin_x_) / resolution_));
  const int cy = static_cast<int>(std::floor((y - origin_y_) / resolution_));
  if (ix) *ix = cx;
  if (iy) *iy = cy;
  return cx >= 0 && cx < width_ && cy >= 0 && cy < height_;
}

void OccupancyGrid::cell_center(int ix, int iy, double* x, double* y) const {
  *x = origin_x_ + (ix + 0.5) * resolution_;
  *y = origin_y_ + (iy + 0.5) * resolution_;
}

bool OccupancyGrid::occupied_at(double x, double y) const {
  int ix = 0;
  int iy = 0;
  if (!world_to_cell(x, y, &ix, &iy)) return false;
  return occupied(ix, iy);
}

bool OccupancyGrid::any_occupied() const {
  return std::any_of(cells_.begin(), cells_.end(),
                     [](char c) { return c != 0; });
}

DistanceField::DistanceField(const OccupancyGrid& grid)
    : width_(grid.width()),
      height_(grid.height()),
      resolution_(grid.resolution()),
      origin_x_(grid.origin_x()),
      origin_y_(grid.origin_y()),
      field_(static_cast<std::size_t>(width_) * height_, kInf) {
  if (!grid.any_occupied()) return;  // all clearances stay infinite

  std::vector<double> sq(field_.size());
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      sq[y * width_ + x] = grid.occupied(x, y) ? 0.0 : kFarSq;
    }
  }
  const int n = std::max(width_, height_);
  std::vector<double> f(n), d(n), z(n + 1);
  std::vector<int> v(n);
  for (int x = 0; x < width_; ++x) {
    for (int y = 0; y < height_; ++y) f[y] = sq[y * width_ + x];
    std::vector<double> fy(f.begin(), f.begin() + height_);
    transform_1d(fy, &d, &v, &z);
    for (int y = 0; y < height_; ++y) sq[y * width_ + x] = d[y];
  }
  for (int y = 0; y < height_; ++y) {
    std::vector<double> fx(sq.begin() + y * width_,
                           sq.begin() + (y + 1) * width_);
    transform_1d(fx, &d, &v, &z);
    for (int x = 0; x < width_; ++x) {
      field_[y * width_ + x] =
          d[x] >= kFarCutoffSq ? kInf : std::sqrt(d[x]) * resolution_;
    }
  }
}

double DistanceField::clearance_at(double x, double y) const {
  const double gx = (x - origin_x_) / resolution_ - 0.5;
  const double gy = (y - origin_y_) / resolution_ - 0.5;
  const int ix = std::clamp(static_cast<int>(std::lround(gx)), 0, width_ - 1);
  const int iy = std::clamp(static_cast<int>(std::lround(gy)), 0, height_ - 1);
  const double cell_value = field_[iy * width_ + ix];
  if (std::isinf(cell_value)) return cell_value;
  const double dx = (gx - ix) * resolution_;
  const double dy = (gy - iy) * resolution_;
  const double offset = std::hypot(dx, dy);
  return std::max(0.0, cell_value - offset);
}

}  // namespace swervenav
