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

#ifndef SWERVENAV_COSTMAP_HPP_
#define SWERVENAV_COSTMAP_HPP_

#include <vector>

namespace swervenav {

// Binary occupancy grid. Cell (0, 0) is the corner at the world origin
// given at construction; x grows with column index, y with row index.
class OccupancyGrid {
 public:
  OccupancyGrid(int width, int height, double resolution, double origin_x,
                double origin_y);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  double origin_x() const { return origin_x_; }
  double origin_y() const { return origin_y_; }

  bool occupied(int ix, int iy) const { return cells_[index(ix, iy)]; }
  void set_occupied(int ix, int iy, bool value) {
    cells_[index(ix, iy)] = value;
  }

  // False when the point lies outside the grid.
  bool world_to_cell(double x, double y, int* ix, int* iy) const;
  void cell_center(int ix, int iy, double* x, double* y) const;

  // Points outside the grid count as free.
  bool occupied_at(double x, double y) const;

  bool any_occupied() const;

 private:
  int index(int ix, int iy) const { return iy * width_ + ix; }

  int width_;
  int height_;
  double resolution_;
  double origin_x_;
  double origin_y_;
  std::vector<char> cells_;
};

// Euclidean distance (meters) from each cell center to the nearest
// occupied cell center, computed once with the exact two-pass squared
// distance transform.
class DistanceField {
 public:
  explicit DistanceField(const OccupancyGrid& grid);

  // Distance from a world point to the nearest obstacle. Outside the grid
  // the value is a lower bound (field at the nearest edge cell minus the
  // distance to that cell), never an overestimate.
  double clearance_at(double x, double y) const;

  double at_cell(int ix, int iy) const {
    return field_[iy * width_ + ix];
  }

 private:
  int width_;
  int height_;
  double resolution_;
  double origin_x_;
  double origin_y_;
  std::vector<double> field_;
};

}  // namespace swervenav

#endif  // SWERVENAV_COSTMAP_HPP_
