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

// Exercises the shared library through the C surface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "swervenav.h"

TEST_CASE("status names are stable strings") {
  CHECK(std::string(swnav_status_name(SWNAV_OK)) == "ok");
  CHECK(std::string(swnav_status_name(SWNAV_ERROR_UNKNOWN_CONFIG)) ==
        "unknown configuration id");
}

TEST_CASE("kinematics round-trips through the C surface") {
  swnav_geometry geo;
  swnav_limits lim;
  swnav_geometry_init(&geo);
  swnav_limits_init(&lim);
  CHECK(geo.wheel_radius == doctest::Approx(0.08));
  CHECK(lim.max_angle == doctest::Approx(130.0 * M_PI / 180.0));

  swnav_wheel_command cmd;
  int flipped[4] = {};
  REQUIRE(swnav_inverse_kinematics(&geo, &lim, 1.0, 0.0, 0.0, &cmd, flipped) ==
          SWNAV_OK);
  for (int i = 0; i < 4; ++i) {
    CHECK(cmd.steer[i] == doctest::Approx(0.0));
    CHECK(cmd.drive[i] == doctest::Approx(12.5));
    CHECK(flipped[i] == 0);
  }
  double vx = 0.0;
  double vy = 0.0;
  double wz = 0.0;
  REQUIRE(swnav_forward_kinematics(&geo, &cmd, &vx, &vy, &wz) == SWNAV_OK);
  CHECK(vx == doctest::Approx(1.0));
  CHECK(vy == doctest::Approx(0.0));
  CHECK(wz == doctest::Approx(0.0));

  CHECK(swnav_inverse_kinematics(nullptr, &lim, 1, 0, 0, &cmd, nullptr) ==
        SWNAV_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(swnav_last_error()) > 0);
}

TEST_CASE("region queries work through an arrangement handle") {
  swnav_geometry geo;
  swnav_limits lim;
  swnav_geometry_init(&geo);
  swnav_limits_init(&lim);
  swnav_arrangement* arr = nullptr;
  REQUIRE(swnav_arrangement_create(&geo, &lim, &arr) == SWNAV_OK);
  REQUIRE(arr != nullptr);
  CHECK(swnav_arrangement_regime(arr) == SWNAV_REGIME_GENERAL);
  CHECK(swnav_arrangement_signature_count(arr) == 46);
  CHECK(swnav_arrangement_region_count(arr) == 12);
  CHECK(swnav_region_of(arr, 1, 0, 0) == 0);
  CHECK(swnav_region_of(arr, -1, 0, 0) == 1);
  CHECK(swnav_region_of(arr, 0, 0, 0) == SWNAV_REGION_STATIONARY);
  CHECK(swnav_arrangement_region_weight(arr, 0) ==
        doctest::Approx(0.6347).epsilon(0.01));
  CHECK(swnav_distance_to_boundary(arr, 1, 0, 0) ==
        doctest::Approx(1.0043767).epsilon(1e-6));

  char* csv = nullptr;
  REQUIRE(swnav_region_slice_csv(arr, 0.0, 1.0, 11, &csv) == SWNAV_OK);
  REQUIRE(csv != nullptr);
  // 11 rows of 11 ids; the center row contains forward motion on the right.
  int lines = 0;
  for (const char* p = csv; *p != 0; ++p) lines += *p == '\n';
  CHECK(lines == 11);
  swnav_string_free(csv);
  swnav_arrangement_destroy(arr);
}

TEST_CASE("unsupported ranges surface the dedicated status") {
  swnav_geometry geo;
  swnav_geometry_init(&geo);
  swnav_limits lim{-1.0, 2.0};
  swnav_arrangement* arr = nullptr;
  CHECK(swnav_arrangement_create(&geo, &lim, &arr) ==
        SWNAV_ERROR_UNSUPPORTED_LIMITS);
  CHECK(arr == nullptr);
  CHECK(std::strlen(swnav_last_error()) > 0);
}

TEST_CASE("experiments run end to end over the C surface") {
  const char* yaml = R"(name: tiny
grid:
  width: 30
  height: 20
  resolution: 0.1
  origin: [0.0, 0.0]
  rows:
    - "30#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "1#28.1#"
    - "30#"
start: [0.7, 1.0, 0.0]
goal_tolerance:
  position: 0.3
  heading: 0.5
goals:
  - pose: [2.3, 1.0, 0.0]
    tag: forward
)";
  swnav_scenario* scenario = nullptr;
  REQUIRE(swnav_scenario_parse(yaml, &scenario) == SWNAV_OK);
  CHECK(std::string(swnav_scenario_name(scenario)) == "tiny");

  swnav_geometry geo;
  swnav_limits lim;
  swnav_geometry_init(&geo);
  swnav_limits_init(&lim);
  swnav_arrangement* arr = nullptr;
  REQUIRE(swnav_arrangement_create(&geo, &lim, &arr) == SWNAV_OK);

  swnav_run_options opt;
  swnav_run_options_init(&opt);
  opt.repeats = 2;
  opt.seed = 3;

  swnav_run_result* result = nullptr;
  REQUIRE(swnav_run_experiment(scenario, arr, "aug-DWA-2", &opt, &result) ==
          SWNAV_OK);
  REQUIRE(swnav_run_result_count(result) == 2);
  for (int run = 0; run < 2; ++run) {
    int count = -1;
    double time = -1.0;
    int completed = 0;
    REQUIRE(swnav_run_result_get(result, run, &count, &time, &completed) ==
            SWNAV_OK);
    CHECK(count >= 0);
    CHECK(time > 0.0);
    CHECK(completed == 1);
  }

  char* csv = nullptr;
  REQUIRE(swnav_metrics_csv(scenario, "aug-DWA-2", result, &csv) == SWNAV_OK);
  const std::string first(csv);
  swnav_string_free(csv);
  csv = nullptr;

  // Identical invocation, identical bytes.
  swnav_run_result* again = nullptr;
  REQUIRE(swnav_run_experiment(scenario, arr, "aug-DWA-2", &opt, &again) ==
          SWNAV_OK);
  REQUIRE(swnav_metrics_csv(scenario, "aug-DWA-2", again, &csv) == SWNAV_OK);
  CHECK(first == std::string(csv));
  swnav_string_free(csv);

  char* traj = nullptr;
  REQUIRE(swnav_trajectory_csv(result, 0, &traj) == SWNAV_OK);
  CHECK(std::string(traj).rfind("t,x,y,heading,region_id,event", 0) == 0);
  swnav_string_free(traj);

  const char* ids[] = {"aug-DWA-2", "aug-DWA-2"};
  const swnav_run_result* results[] = {result, again};
  char* json = nullptr;
  REQUIRE(swnav_summary_json(scenario, 3, ids, results, 2, &json) == SWNAV_OK);
  CHECK(std::string(json).find("aug-DWA-2") != std::string::npos);
  swnav_string_free(json);

  int winner = -1;
  REQUIRE(swnav_pick_winner(results, 2, 0, &winner) == SWNAV_OK);
  CHECK(winner == 0);  // identical stats tie toward the first entry

  swnav_run_result* bogus = nullptr;
  CHECK(swnav_run_experiment(scenario, arr, "baseline-9", &opt, &bogus) ==
        SWNAV_ERROR_UNKNOWN_CONFIG);
  CHECK(bogus == nullptr);

  swnav_run_result_destroy(result);
  swnav_run_result_destroy(again);
  swnav_arrangement_destroy(arr);
  swnav_scenario_destroy(scenario);
}

TEST_CASE("config id list names all six benchmark entries") {
  const std::string ids = swnav_config_ids();
  CHECK(ids.find("baseline-1") != std::string::npos);
  CHECK(ids.find("baseline-2") != std::string::npos);
  CHECK(ids.find("aug-DWA-1") != std::string::npos);
  CHECK(ids.find("aug-DWA-4") != std::string::npos);
}

TEST_CASE("unreadable scenario paths fail with the io status") {
  swnav_scenario* s = nullptr;
  CHECK(swnav_scenario_load("/nonexistent/path.yaml", &s) == SWNAV_ERROR_IO);
  CHECK(s == nullptr);
}
