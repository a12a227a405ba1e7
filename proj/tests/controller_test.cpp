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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "swervenav/arrangement.hpp"
#include "swervenav/controller.hpp"
#include "swervenav/kinematics.hpp"
#include "swervenav/rng.hpp"

namespace swervenav {
namespace {

const ChassisGeometry kSquare{0.2, 0.2, 0.2, 0.2, 0.08};
const SteeringLimits kLimits{-130.0 * M_PI / 180.0, 130.0 * M_PI / 180.0};

const ConstraintArrangement& benchmark_arrangement() {
  static const ConstraintArrangement arr(kSquare, kLimits);
  return arr;
}

MotionController make_controller(bool shortest = false) {
  ControllerConfig cfg;
  cfg.shortest_transition = shortest;
  return MotionController(cfg, kSquare, kLimits, &benchmark_arrangement());
}

int run_steps(MotionController* c, const BodyVelocity& v, int steps,
              std::vector<ControllerEvent>* log = nullptr) {
  int stops = 0;
  for (int i = 0; i < steps; ++i) {
    for (ControllerEvent e : c->step(v)) {
      if (e == ControllerEvent::kStopStarted) ++stops;
      if (log != nullptr) log->push_back(e);
    }
  }
  return stops;
}

// A velocity outside the forward/backward regions, with nonzero wheel
// targets well away from zero steering.
BodyVelocity side_region_velocity() {
  const ConstraintArrangement& arr = benchmark_arrangement();
  for (double wz = 0.2; wz < 3.0; wz += 0.05) {
    const BodyVelocity v{0.0, 0.5, wz};
    if (arr.region_of(v) >= 2) return v;
  }
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("stationary command holds steering with zero drive") {
  MotionController c = make_controller();
  WheelStates init{};
  for (int i = 0; i < kNumWheels; ++i) init[i] = {0.3 * (i + 1), 2.0};
  c.reset(init);
  const WheelStates t = c.compute_targets({0.01, 0.0, 0.0});
  for (int i = 0; i < kNumWheels; ++i) {
    CHECK(t[i].steer == doctest::Approx(0.3 * (i + 1)));
    CHECK(t[i].drive == 0.0);
  }
}

TEST_CASE("plain targets follow the range-mapped solution") {
  MotionController c = make_controller();
  c.reset({});
  const WheelStates t = c.compute_targets({1, 0, 0});
  for (const WheelState& w : t) {
    CHECK(w.steer == doctest::Approx(0.0));
    CHECK(w.drive == doctest::Approx(12.5));
  }
}

TEST_CASE("nearest-orientation option picks the smaller swing") {
  const double deg = M_PI / 180.0;
  // Raw solution 100 degrees on every wheel (pure translation along that
  // direction); the flipped twin is -80 degrees.
  const BodyVelocity v{std::cos(100.0 * deg), std::sin(100.0 * deg), 0.0};

  MotionController nearest = make_controller(true);
  WheelStates at120{};
  for (WheelState& w : at120) w.steer = 120.0 * deg;
  nearest.reset(at120);
  for (const WheelState& w : nearest.compute_targets(v)) {
    CHECK(w.steer == doctest::Approx(100.0 * deg));
    CHECK(w.drive > 0.0);
  }

  WheelStates atm60{};
  for (WheelState& w : atm60) w.steer = -60.0 * deg;
  nearest.reset(atm60);
  for (const WheelState& w : nearest.compute_targets(v)) {
    CHECK(w.steer == doctest::Approx(-80.0 * deg));
    CHECK(w.drive < 0.0);
  }

  // The plain controller keeps the mapped solution regardless.
  MotionController plain = make_controller(false);
  plain.reset(atm60);
  for (const WheelState& w : plain.compute_targets(v)) {
    CHECK(w.steer == doctest::Approx(100.0 * deg));
    CHECK(w.drive > 0.0);
  }
}

TEST_CASE("constant forward command never stops") {
  MotionController c = make_controller();
  c.reset({});
  const int stops = run_steps(&c, {1, 0, 0}, 500);
  CHECK(stops == 0);
  CHECK(c.discontinuity_count() == 0);
  CHECK(c.mode() == ControllerMode::kTracking);
  for (const WheelState& w : c.wheel_actual()) {
    CHECK(w.drive == doctest::Approx(12.5));
  }
}

TEST_CASE("forward to backward forces exactly one stop for plain control") {
  MotionController c = make_controller();
  c.reset({});
  run_steps(&c, {1, 0, 0}, 200);
  REQUIRE(c.discontinuity_count() == 0);
  std::vector<ControllerEvent> log;
  const int stops = run_steps(&c, {-1, 0, 0}, 400, &log);
  CHECK(stops == 1);
  CHECK(c.discontinuity_count() == 1);
  CHECK(std::count(log.begin(), log.end(), ControllerEvent::kRepositionDone) ==
        1);
  CHECK(c.mode() == ControllerMode::kTracking);
  for (const WheelState& w : c.wheel_actual()) {
    CHECK(w.drive == doctest::Approx(-12.5));
  }
}

TEST_CASE("nearest-orientation control absorbs the drive reversal") {
  MotionController c = make_controller(true);
  c.reset({});
  run_steps(&c, {1, 0, 0}, 200);
  const int stops = run_steps(&c, {-1, 0, 0}, 400);
  CHECK(stops == 0);
  CHECK(c.discontinuity_count() == 0);
  for (const WheelState& w : c.wheel_actual()) {
    CHECK(w.steer == doctest::Approx(0.0));
    CHECK(w.drive == doctest::Approx(-12.5));
  }
}

TEST_CASE("first command from rest repositions without a stop") {
  MotionController c = make_controller();
  c.reset({});
  const BodyVelocity side = side_region_velocity();
  const int stops = run_steps(&c, side, 300);
  CHECK(stops == 0);
  CHECK(c.discontinuity_count() == 0);
  const WheelStates targets = c.compute_targets(side);
  for (int i = 0; i < kNumWheels; ++i) {
    CHECK(c.wheel_actual()[i].steer == doctest::Approx(targets[i].steer));
  }
}

TEST_CASE("region change away from rest is counted once") {
  MotionController c = make_controller();
  c.reset({});
  const BodyVelocity side = side_region_velocity();
  run_steps(&c, side, 300);
  REQUIRE(c.discontinuity_count() == 0);
  std::vector<ControllerEvent> log;
  run_steps(&c, {1, 0, 0}, 600, &log);
  CHECK(c.discontinuity_count() == 1);
  CHECK(std::count(log.begin(), log.end(), ControllerEvent::kRegionChanged) ==
        1);
  CHECK(c.mode() == ControllerMode::kTracking);
}

TEST_CASE("drives reach zero before steering moves during a stop") {
  MotionController c = make_controller();
  c.reset({});
  run_steps(&c, {1, 0, 0}, 200);
  const BodyVelocity side = side_region_velocity();
  WheelStates prev = c.wheel_actual();
  bool seen_stop_phase = false;
  for (int i = 0; i < 600; ++i) {
    c.step(side);
    const WheelStates& now = c.wheel_actual();
    bool any_drive = false;
    for (const WheelState& w : now) {
      any_drive = any_drive || std::abs(w.drive) > 1e-12;
    }
    if (c.mode() == ControllerMode::kStopAndReposition && any_drive) {
      seen_stop_phase = true;
      const double tol = c.config().reposition_tolerance;
      for (int k = 0; k < kNumWheels; ++k) {
        CHECK(std::abs(now[k].steer - prev[k].steer) < tol);
      }
    }
    prev = now;
  }
  CHECK(seen_stop_phase);
  CHECK(c.mode() == ControllerMode::kTracking);
}

TEST_CASE("random command sequences respect rate and range limits") {
  for (const bool shortest : {false, true}) {
    CAPTURE(shortest);
    MotionController c = make_controller(shortest);
    c.reset({});
    DeterministicRng rng(41);
    const double steer_step =
        c.config().steering_rate_max * c.config().control_dt + 1e-12;
    const double drive_step =
        c.config().drive_accel_max * c.config().control_dt + 1e-12;
    BodyVelocity cmd{};
    int stop_events = 0;
    WheelStates prev = c.wheel_actual();
    for (int i = 0; i < 4000; ++i) {
      if (i % 25 == 0) {
        cmd = {rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6),
               rng.uniform(-1.0, 1.0)};
      }
      for (ControllerEvent e : c.step(cmd)) {
        if (e == ControllerEvent::kStopStarted) ++stop_events;
      }
      const WheelStates& now = c.wheel_actual();
      for (int k = 0; k < kNumWheels; ++k) {
        CHECK(std::abs(now[k].steer - prev[k].steer) <= steer_step);
        CHECK(std::abs(now[k].drive - prev[k].drive) <= drive_step);
        CHECK(within_limits(kLimits, now[k].steer));
      }
      prev = now;
    }
    CHECK(c.discontinuity_count() == stop_events);
  }
}

TEST_CASE("counter only moves on tracking-to-stop transitions") {
  MotionController c = make_controller();
  c.reset({});
  run_steps(&c, {1, 0, 0}, 200);
  const BodyVelocity side = side_region_velocity();
  // Holding the same crossing command while already stopping must not
  // increment again.
  int stops = run_steps(&c, side, 5);
  REQUIRE(c.mode() == ControllerMode::kStopAndReposition);
  stops += run_steps(&c, side, 5);
  CHECK(stops == 1);
  CHECK(c.discontinuity_count() == 1);
}

}  // namespace swervenav
