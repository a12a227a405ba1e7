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

// Release gate: runs the ten acceptance checks end to end and prints one
// PASS/FAIL line each. Exits nonzero if any check fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "swervenav/arrangement.hpp"
#include "swervenav/controller.hpp"
#include "swervenav/kinematics.hpp"
#include "swervenav/planner.hpp"
#include "swervenav/rng.hpp"
#include "swervenav/scenario.hpp"
#include "swervenav/simulation.hpp"

namespace swervenav {
namespace {

#ifndef SWERVENAV_SCENARIO_DIR
#define SWERVENAV_SCENARIO_DIR "scenarios"
#endif
#ifndef SWERVENAV_CLI_PATH
#define SWERVENAV_CLI_PATH ""
#endif

const ChassisGeometry kSquare{0.2, 0.2, 0.2, 0.2, 0.08};
const SteeringLimits kLimits{-130.0 * M_PI / 180.0, 130.0 * M_PI / 180.0};

struct Gate {
  int failures = 0;

  void check(int index, const std::string& what, bool ok,
             const std::string& detail = "") {
    std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", index, what.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

double median_count(const std::vector<RunMetrics>& runs) {
  std::vector<double> counts;
  counts.reserve(runs.size());
  for (const RunMetrics& m : runs) {
    counts.push_back(static_cast<double>(m.discontinuity_count));
  }
  return aggregate(counts).median;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double row_distance(const std::array<double, 3>& row, const BodyVelocity& v) {
  const double num = std::abs(row[0] * v.vx + row[1] * v.vy + row[2] * v.wz);
  return num / std::sqrt(row[0] * row[0] + row[1] * row[1] + row[2] * row[2]);
}

}  // namespace

int run_gate() {
  Gate gate;
  using Clock = std::chrono::steady_clock;

  // 1: cell enumeration count and build time.
  {
    const auto t0 = Clock::now();
    ArrangementOptions opt;  // 10^6 sphere samples by default
    const ConstraintArrangement arr(kSquare, kLimits, opt);
    const double secs =
        std::chrono::duration<double>(Clock::now() - t0).count();
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "%d signatures, %d regions, build %.1f s",
                  arr.signature_count(), arr.region_count(), secs);
    gate.check(1, "region enumeration for the benchmark steering range",
               arr.signature_count() == 46 && arr.region_count() == 12 &&
                   opt.sphere_samples == 1000000 && secs <= 30.0,
               detail);
  }

  const ConstraintArrangement arr(kSquare, kLimits);

  // 2: right-angle and unconstrained special cases.
  {
    const ConstraintArrangement ra(kSquare, {-M_PI_2, M_PI_2});
    bool ok = ra.regime() == SteeringRegime::kRightAngle &&
              ra.region_count() == 4;
    const auto& rows = ra.plane_rows();
    ok = ok && std::abs(rows[0][0] - 1.0) < 1e-12 &&
         std::abs(rows[0][1]) < 1e-12 && std::abs(rows[0][2] + 0.2) < 1e-12 &&
         std::abs(rows[1][2] - 0.2) < 1e-12;

    const ConstraintArrangement un(kSquare, {-M_PI, M_PI});
    ok = ok && un.regime() == SteeringRegime::kUnconstrained &&
         un.region_count() == 1 && un.region_of({-1, 0.4, 2.0}) == 0;
    PlannerConfig pcfg;
    const LocalPlanner planner(pcfg, &un);
    bool inadmissible = true;
    const double c = planner.swerve_cost({1, 0, 0}, {-1, 0, 0}, &inadmissible);
    ok = ok && c == 0.0 && !inadmissible;
    gate.check(2, "right-angle and unconstrained special cases", ok);
  }

  // 3: signature classification agrees with the per-wheel range oracle.
  {
    DeterministicRng rng(1001);
    int disagreements = 0;
    int checked = 0;
    while (checked < 100000) {
      const BodyVelocity v{rng.uniform(-1, 1), rng.uniform(-1, 1),
                           rng.uniform(-1, 1)};
      if (v.norm() < 0.06) continue;
      bool near_plane = false;
      for (const auto& row : arr.plane_rows()) {
        near_plane = near_plane || row_distance(row, v) < 1e-6;
      }
      if (near_plane) continue;
      ++checked;

      const WheelStates raw = inverse_kinematics_raw(kSquare, v);
      bool unflipped_ok = true;
      for (const WheelState& w : raw) {
        unflipped_ok = unflipped_ok && within_limits(kLimits, w.steer);
      }
      const bool forward_side =
          (v.vx - 0.2 * v.wz) > 0.0 && (v.vx + 0.2 * v.wz) > 0.0;
      const bool classified_forward =
          arr.region_of(v) == kRegionForward && forward_side;
      if (classified_forward != (unflipped_ok && forward_side)) {
        ++disagreements;
      }
      // Every velocity must be drivable once wheels may flip.
      for (const WheelState& w :
           inverse_kinematics(kSquare, kLimits, v).wheels) {
        if (!within_limits(kLimits, w.steer)) ++disagreements;
      }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d samples, %d disagreements",
                  checked, disagreements);
    gate.check(3, "signature classification vs per-wheel range oracle",
               disagreements == 0, detail);
  }

  // 4: kinematic round trip and flip invariance.
  {
    DeterministicRng rng(1002);
    double worst_rt = 0.0;
    double worst_flip = 0.0;
    for (int n = 0; n < 10000; ++n) {
      const BodyVelocity v{rng.uniform(-1, 1), rng.uniform(-1, 1),
                           rng.uniform(-2, 2)};
      const WheelStates raw = inverse_kinematics_raw(kSquare, v);
      const WheelStates mapped =
          inverse_kinematics(kSquare, kLimits, v).wheels;
      const BodyVelocity back = forward_kinematics(kSquare, mapped);
      worst_rt = std::max({worst_rt, std::abs(back.vx - v.vx),
                           std::abs(back.vy - v.vy), std::abs(back.wz - v.wz)});
      for (int i = 0; i < kNumWheels; ++i) {
        const double dx = raw[i].drive * std::cos(raw[i].steer) -
                          mapped[i].drive * std::cos(mapped[i].steer);
        const double dy = raw[i].drive * std::sin(raw[i].steer) -
                          mapped[i].drive * std::sin(mapped[i].steer);
        worst_flip = std::max({worst_flip, std::abs(dx), std::abs(dy)});
      }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail),
                  "round trip max %.2e, flip max %.2e", worst_rt, worst_flip);
    gate.check(4, "kinematics round trip and flip invariance",
               worst_rt <= 1e-9 && worst_flip <= 1e-12, detail);
  }

  // 5: critic fixed points and monotonicity.
  {
    PlannerConfig cfg;
    const LocalPlanner planner(cfg, &arr);
    // A point on a flip wall of the backward region (distance exactly 0).
    const int rowi = arr.region_bounding_rows(kRegionBackward)[0];
    const auto& row = arr.plane_rows()[rowi];
    const BodyVelocity v{-1, 0, 0};
    const double n2 = row[0] * row[0] + row[1] * row[1] + row[2] * row[2];
    const double a = (row[0] * v.vx + row[1] * v.vy + row[2] * v.wz) / n2;
    const BodyVelocity wall{v.vx - a * row[0], v.vy - a * row[1],
                            v.wz - a * row[2]};
    bool inadmissible = true;
    const double at_wall = planner.swerve_cost(wall, wall, &inadmissible);
    bool ok = !inadmissible && at_wall == 5.0 &&
              arr.distance_to_boundary(wall) == 0.0;

    const double at_step =
        planner.smoothness_cost({0, 0, 0}, {0.2, 0, 0});
    ok = ok && at_step == 2.0;

    DeterministicRng rng(1003);
    std::vector<std::pair<double, double>> samples;
    while (samples.size() < 1000) {
      const BodyVelocity u{rng.uniform(0.1, 2.0), rng.uniform(-1, 1),
                           rng.uniform(-1, 1)};
      if (arr.region_of(u) != kRegionForward) continue;
      bool bad = false;
      const double c = planner.swerve_cost({1, 0, 0}, u, &bad);
      if (bad) continue;
      samples.emplace_back(arr.distance_to_boundary(u), c);
    }
    std::sort(samples.begin(), samples.end());
    for (std::size_t i = 1; i < samples.size(); ++i) {
      ok = ok && samples[i].second <= samples[i - 1].second + 1e-12;
    }
    gate.check(5, "critic values at the stated fixed points", ok);
  }

  // 6 and 7: benchmark orderings on the figure-x course.
  {
    const auto t0 = Clock::now();
    const Scenario fx =
        load_scenario(std::string(SWERVENAV_SCENARIO_DIR) + "/figurex.yaml");
    auto run_config = [&fx](const std::string& id) {
      ExperimentConfig cfg;
      if (!apply_config_id(id, &cfg)) std::abort();
      const ConstraintArrangement carr(cfg.geometry, cfg.limits);
      return run_experiment(fx, cfg, carr);
    };
    const double b1 = median_count(run_config("baseline-1"));
    const double b2 = median_count(run_config("baseline-2"));
    const double aug1 = median_count(run_config("aug-DWA-1"));
    const double aug2 = median_count(run_config("aug-DWA-2"));
    const double secs =
        std::chrono::duration<double>(Clock::now() - t0).count();
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "medians: baseline-1 %.1f, baseline-2 %.1f, aug-DWA-1 %.1f, "
                  "aug-DWA-2 %.1f; %.0f s",
                  b1, b2, aug1, aug2, secs);
    gate.check(6, "median stop counts order as expected on figure-x",
               aug2 < b2 && b2 < b1 && aug2 <= 0.5 * b2 && secs <= 600.0,
               detail);
    gate.check(7, "two-directional planner never stops more than one-way",
               aug2 <= aug1, detail);
  }

  // 8: free transition from rest, priced or barred while moving.
  {
    OccupancyGrid grid(100, 100, 0.1, 0.0, 0.0);
    const DistanceField field(grid);
    PlanningContext ctx;
    ctx.grid = &grid;
    ctx.distance_field = &field;
    ctx.pose = {5, 5, 0};
    ctx.current_velocity = {0, 0, 0};
    ctx.waypoint_path = {{5, 5}, {3, 5}};  // goal straight behind
    ctx.active_waypoint = 1;
    ctx.goal = {3, 5, M_PI};

    PlannerConfig cfg;
    cfg.preferred_set = PreferredSet::kForwardBackward;
    cfg.goal_heading_weight = 0.0;  // reversing, not turning around
    const LocalPlanner planner(cfg, &arr);
    const PlanResult first = planner.select_velocity(ctx);
    bool ok = !first.all_inadmissible &&
              arr.region_of(first.velocity) == kRegionBackward &&
              first.cost.swerve == 0.0;

    bool inadmissible = false;
    const double priced =
        planner.swerve_cost({1, 0, 0}, {-1, 0, 0}, &inadmissible);
    ok = ok && !inadmissible && priced == cfg.alpha_swerve;
    PlannerConfig fwd = cfg;
    fwd.preferred_set = PreferredSet::kForwardOnly;
    const LocalPlanner planner_fwd(fwd, &arr);
    planner_fwd.swerve_cost({1, 0, 0}, {-1, 0, 0}, &inadmissible);
    ok = ok && inadmissible;
    gate.check(8, "stationary exception and backward-motion pricing", ok);
  }

  // 9: the benchmark binary writes identical files for identical calls.
  {
    const std::string cli = SWERVENAV_CLI_PATH;
    bool ok = !cli.empty() && std::filesystem::exists(cli);
    std::string detail = ok ? "" : "benchmark binary not found";
    if (ok) {
      const std::filesystem::path base =
          std::filesystem::temp_directory_path() /
          ("swnav_gate_" + std::to_string(::getpid()));
      std::filesystem::remove_all(base);
      for (const char* sub : {"a", "b"}) {
        const std::string cmd =
            cli + " run --scenario " + SWERVENAV_SCENARIO_DIR +
            "/figure8.yaml --config aug-DWA-2 --repeats 3 --seed 7 --out " +
            (base / sub).string() + " >/dev/null 2>&1";
        ok = ok && std::system(cmd.c_str()) == 0;
      }
      if (ok) {
        const std::string a = read_file(base / "a" / "metrics.csv");
        const std::string b = read_file(base / "b" / "metrics.csv");
        ok = !a.empty() && a == b;
        detail = ok ? "byte-identical metrics"
                    : "metrics files differ or are empty";
      } else {
        detail = "benchmark invocation failed";
      }
      std::filesystem::remove_all(base);
    }
    gate.check(9, "repeated identical benchmark calls match byte for byte",
               ok, detail);
  }

  // 10: controller safety over random command sequences.
  {
    ControllerConfig ccfg;
    MotionController c(ccfg, kSquare, kLimits, &arr);
    c.reset({});
    DeterministicRng rng(1004);
    int stop_entries = 0;
    bool ok = true;
    WheelStates prev = c.wheel_actual();
    bool prev_moving = false;
    BodyVelocity cmd{};
    for (int i = 0; i < 20000 && ok; ++i) {
      if (i % 25 == 0) {
        cmd = {rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6),
               rng.uniform(-1.0, 1.0)};
      }
      for (ControllerEvent e : c.step(cmd)) {
        if (e == ControllerEvent::kStopStarted) ++stop_entries;
      }
      const WheelStates& now = c.wheel_actual();
      bool moving = false;
      for (const WheelState& w : now) {
        moving = moving || std::abs(w.drive) > 1e-12;
      }
      for (int k = 0; k < kNumWheels; ++k) {
        ok = ok && within_limits(kLimits, now[k].steer);
        // While stopping with live drives, steering must hold still.
        if (c.mode() == ControllerMode::kStopAndReposition && prev_moving &&
            moving) {
          ok = ok && std::abs(now[k].steer - prev[k].steer) <
                         ccfg.reposition_tolerance;
        }
      }
      prev = now;
      prev_moving = moving;
    }
    ok = ok && c.discontinuity_count() == stop_entries;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d stops counted", stop_entries);
    gate.check(10, "wheel range, stop ordering and stop accounting", ok,
               detail);
  }

  std::printf("%d of 10 checks passed\n", 10 - gate.failures);
  return gate.failures == 0 ? 0 : 1;
}

}  // namespace swervenav

int main() { return swervenav::run_gate(); }
