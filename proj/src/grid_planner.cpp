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

#include "swervenav/grid_planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>

namespace swervenav {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

struct QueueEntry {
  double f;
  std::uint64_t order;  // insertion counter, breaks f ties deterministically
  int cell;
  bool operator>(const QueueEntry& o) const {
    if (f != o.f) return f > o.f;
    return order > o.order;
  }
};

double octile(int ax, int ay, int bx, int by) {
  const int dx = std::abs(ax - bx);
  const int dy = std::abs(ay - by);
  return (dx + dy) + (kSqrt2 - 2.0) * std::min(dx, dy);
}

}  // namespace

GridPlanResult plan_waypoints(const OccupancyGrid& grid,
                              const DistanceField& field, double start_x,
                              double start_y, double goal_x, double goal_y,
                              double inflation_radius, int decimation) {
  GridPlanResult result;
  const int w = grid.width();
  const int h = grid.height();

  int sx = 0, sy = 0, gx = 0, gy = 0;
  if (!grid.world_to_cell(start_x, start_y, &sx, &sy) ||
      !grid.world_to_cell(goal_x, goal_y, &gx, &gy)) {
    return result;
  }
  auto blocked = [&](int x, int y) {
    return grid.occupied(x, y) || field.at_cell(x, y) < inflation_radius;
  };
  if (blocked(sx, sy) || blocked(gx, gy)) return result;

  if (sx == gx && sy == gy) {
    result.found = true;
    result.waypoints.push_back({goal_x, goal_y});
    return result;
  }

  // Fixed neighbor order; axis moves before diagonals.
  static constexpr int kDx[8] = {1, 0, -1, 0, 1, -1, -1, 1};
  static constexpr int kDy[8] = {0, 1, 0, -1, 1, 1, -1, -1};

  const int n = w * h;
  std::vector<double> g_cost(n, std::numeric_limits<double>::infinity());
  std::vector<int> parent(n, -1);
  std::vector<char> closed(n, 0);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>,
                      std::greater<QueueEntry>>
      open;
  std::uint64_t order = 0;

  const int start_idx = sy * w + sx;
  const int goal_idx = gy * w + gx;
  g_cost[start_idx] = 0.0;
  open.push({octile(sx, sy, gx, gy), order++, start_idx});

  while (!open.empty()) {
    const QueueEntry top = open.top();
    open.pop();
    const int cur = top.cell;
    if (closed[cur]) continue;
    closed[cur] = 1;
    if (cur == goal_idx) break;
    const int cx = cur % w;
    const int cy = cur / w;
    for (int k = 0; k < 8; ++k) {
      const int nx = cx + kDx[k];
      const int ny = cy + kDy[k];
      if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
      if (blocked(nx, ny)) continue;
      if (k >= 4 && (blocked(cx, ny) || blocked(nx, cy))) continue;
      const int ni = ny * w + nx;
      if (closed[ni]) continue;
      const double step = k < 4 ? 1.0 : kSqrt2;
      const double cand = g_cost[cur] + step;
      if (cand < g_cost[ni]) {
        g_cost[ni] = cand;
        parent[ni] = cur;
        open.push({cand + octile(nx, ny, gx, gy), order++, ni});
      }
    }
  }
  if (!closed[goal_idx]) return result;

  std::vector<int> cells;
  for (int c = goal_idx; c != -1; c = parent[c]) cells.push_back(c);
  std::reverse(cells.begin(), cells.end());

  result.found = true;
  result.path_length = g_cost[goal_idx] * grid.resolution();
  const int dec = std::max(1, decimation);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool last = i + 1 == cells.size();
    if (!last && i % static_cast<std::size_t>(dec) != 0) continue;
    double x = 0.0, y = 0.0;
    grid.cell_center(cells[i] % w, cells[i] / w, &x, &y);
    result.waypoints.push_back({x, y});
  }
  // End exactly on the requested goal point, not its cell center.
  result.waypoints.back() = {goal_x, goal_y};
  return result;
}

}  // namespace swervenav
