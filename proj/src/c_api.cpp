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

#include "swervenav.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include "swervenav/arrangement.hpp"
#include "swervenav/kinematics.hpp"
#include "swervenav/scenario.hpp"
#include "swervenav/simulation.hpp"

namespace {

thread_local std::string g_last_error;

swnav_status fail(swnav_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Wraps a callable, translating C++ exceptions to status codes.
template <typename Fn>
swnav_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const swervenav::UnsupportedLimitsError& e) {
    return fail(SWNAV_ERROR_UNSUPPORTED_LIMITS, e.what());
  } catch (const swervenav::ConstructionError& e) {
    return fail(SWNAV_ERROR_CONSTRUCTION, e.what());
  } catch (const swervenav::ScenarioError& e) {
    return fail(SWNAV_ERROR_UNREACHABLE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SWNAV_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(SWNAV_ERROR_INTERNAL, "unknown error");
  }
}

swervenav::ChassisGeometry to_geometry(const swnav_geometry& g) {
  swervenav::ChassisGeometry out;
  out.front = g.front;
  out.rear = g.rear;
  out.left = g.left;
  out.right = g.right;
  out.wheel_radius = g.wheel_radius;
  return out;
}

swervenav::SteeringLimits to_limits(const swnav_limits& l) {
  return {l.min_angle, l.max_angle};
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct swnav_arrangement {
  swervenav::ChassisGeometry geometry;
  swervenav::SteeringLimits limits;
  swervenav::ConstraintArrangement arrangement;
};

struct swnav_scenario {
  swervenav::Scenario scenario;
};

struct swnav_run_result {
  std::vector<swervenav::RunMetrics> metrics;
  std::string config_id;
};

extern "C" {

const char* swnav_status_name(swnav_status status) {
  switch (status) {
    case SWNAV_OK: return "ok";
    case SWNAV_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case SWNAV_ERROR_UNSUPPORTED_LIMITS: return "unsupported steering limits";
    case SWNAV_ERROR_CONSTRUCTION: return "region construction failure";
    case SWNAV_ERROR_IO: return "input/output error";
    case SWNAV_ERROR_UNREACHABLE: return "goal unreachable";
    case SWNAV_ERROR_UNKNOWN_CONFIG: return "unknown configuration id";
    case SWNAV_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* swnav_last_error(void) { return g_last_error.c_str(); }

void swnav_string_free(char* s) { std::free(s); }

void swnav_geometry_init(swnav_geometry* geo) {
  if (geo == nullptr) return;
  geo->front = 0.2;
  geo->rear = 0.2;
  geo->left = 0.2;
  geo->right = 0.2;
  geo->wheel_radius = 0.08;
}

void swnav_limits_init(swnav_limits* lim) {
  if (lim == nullptr) return;
  lim->max_angle = 130.0 * M_PI / 180.0;
  lim->min_angle = -lim->max_angle;
}

swnav_status swnav_inverse_kinematics(const swnav_geometry* geo,
                                      const swnav_limits* lim, double vx,
                                      double vy, double wz,
                                      swnav_wheel_command* out,
                                      int flipped[4]) {
  if (geo == nullptr || lim == nullptr || out == nullptr) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const swervenav::IkResult r = swervenav::inverse_kinematics(
        to_geometry(*geo), to_limits(*lim), {vx, vy, wz});
    for (int i = 0; i < 4; ++i) {
      out->steer[i] = r.wheels[i].steer;
      out->drive[i] = r.wheels[i].drive;
      if (flipped != nullptr) flipped[i] = r.flipped[i] ? 1 : 0;
    }
    return SWNAV_OK;
  });
}

swnav_status swnav_forward_kinematics(const swnav_geometry* geo,
                                      const swnav_wheel_command* cmd,
                                      double* vx, double* vy, double* wz) {
  if (geo == nullptr || cmd == nullptr || vx == nullptr || vy == nullptr ||
      wz == nullptr) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    swervenav::WheelStates wheels;
    for (int i = 0; i < 4; ++i) {
      wheels[i] = {cmd->steer[i], cmd->drive[i]};
    }
    const swervenav::BodyVelocity v =
        swervenav::forward_kinematics(to_geometry(*geo), wheels);
    *vx = v.vx;
    *vy = v.vy;
    *wz = v.wz;
    return SWNAV_OK;
  });
}

swnav_status swnav_arrangement_create(const swnav_geometry* geo,
                                      const swnav_limits* lim,
                                      swnav_arrangement** out) {
  if (geo == nullptr || lim == nullptr || out == nullptr) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    auto* handle = new swnav_arrangement{
        to_geometry(*geo), to_limits(*lim),
        swervenav::ConstraintArrangement(to_geometry(*geo), to_limits(*lim))};
    *out = handle;
    return SWNAV_OK;
  });
}

void swnav_arrangement_destroy(swnav_arrangement* arr) { delete arr; }

int swnav_arrangement_regime(const swnav_arrangement* arr) {
  if (arr == nullptr) return -1;
  switch (arr->arrangement.regime()) {
    case swervenav::SteeringRegime::kUnconstrained:
      return SWNAV_REGIME_UNCONSTRAINED;
    case swervenav::SteeringRegime::kRightAngle:
      return SWNAV_REGIME_RIGHT_ANGLE;
    case swervenav::SteeringRegime::kGeneral:
      return SWNAV_REGIME_GENERAL;
  }
  return -1;
}

int swnav_arrangement_signature_count(const swnav_arrangement* arr) {
  return arr == nullptr ? -1 : arr->arrangement.signature_count();
}

int swnav_arrangement_region_count(const swnav_arrangement* arr) {
  return arr == nullptr ? -1 : arr->arrangement.region_count();
}

double swnav_arrangement_region_weight(const swnav_arrangement* arr,
                                       int region) {
  if (arr == nullptr || region < 0 ||
      region >= static_cast<int>(arr->arrangement.region_weights().size())) {
    return 0.0;
  }
  return arr->arrangement.region_weights()[region];
}

int swnav_region_of(const swnav_arrangement* arr, double vx, double vy,
                    double wz) {
  if (arr == nullptr) return SWNAV_REGION_STATIONARY;
  return arr->arrangement.region_of({vx, vy, wz});
}

double swnav_distance_to_boundary(const swnav_arrangement* arr, double vx,
                                  double vy, double wz) {
  if (arr == nullptr) return 0.0;
  return arr->arrangement.distance_to_boundary({vx, vy, wz});
}

swnav_status swnav_region_slice_csv(const swnav_arrangement* arr, double wz,
                                    double extent, int cells, char** out) {
  if (arr == nullptr || out == nullptr || cells < 2 || extent <= 0.0) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT,
                "need an arrangement, a positive extent and at least 2 cells");
  }
  return guarded([&] {
    std::string csv;
    for (int row = 0; row < cells; ++row) {
      const double vy = extent - 2.0 * extent * row / (cells - 1);
      for (int col = 0; col < cells; ++col) {
        const double vx = -extent + 2.0 * extent * col / (cells - 1);
        if (col > 0) csv += ',';
        csv += std::to_string(arr->arrangement.region_of({vx, vy, wz}));
      }
      csv += '\n';
    }
    *out = copy_string(csv);
    return *out == nullptr ? fail(SWNAV_ERROR_INTERNAL, "out of memory")
                           : SWNAV_OK;
  });
}

swnav_status swnav_scenario_load(const char* path, swnav_scenario** out) {
  if (path == nullptr || out == nullptr) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  if (std::ifstream probe(path); !probe) {
    return fail(SWNAV_ERROR_IO,
                std::string("cannot open scenario file: ") + path);
  }
  return guarded([&] {
    auto* handle = new swnav_scenario{swervenav::load_scenario(path)};
    *out = handle;
    return SWNAV_OK;
  });
}

swnav_status swnav_scenario_parse(const char* yaml_text,
                                  swnav_scenario** out) {
  if (yaml_text == nullptr || out == nullptr) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    auto* handle = new swnav_scenario{swervenav::parse_scenario(yaml_text)};
    *out = handle;
    return SWNAV_OK;
  });
}

void swnav_scenario_destroy(swnav_scenario* s) { delete s; }

const char* swnav_scenario_name(const swnav_scenario* s) {
  return s == nullptr ? "" : s->scenario.name.c_str();
}

void swnav_run_options_init(swnav_run_options* opt) {
  if (opt == nullptr) return;
  opt->seed = 1;
  opt->repeats = 10;
  opt->noise_pose_sigma = -1.0;
  opt->noise_velocity_sigma = -1.0;
  opt->goal_timeout = 0.0;
}

const char* swnav_config_ids(void) {
  static const std::string joined = [] {
    std::string s;
    for (const std::string& id : swervenav::config_ids()) {
      if (!s.empty()) s += ',';
      s += id;
    }
    return s;
  }();
  return joined.c_str();
}

swnav_status swnav_run_experiment(const swnav_scenario* scenario,
                                  const swnav_arrangement* arr,
                                  const char* config_id,
                                  const swnav_run_options* opt,
                                  swnav_run_result** out) {
  if (scenario == nullptr || arr == nullptr || config_id == nullptr ||
      out == nullptr) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  swervenav::ExperimentConfig cfg;
  cfg.geometry = arr->geometry;
  cfg.limits = arr->limits;
  if (!swervenav::apply_config_id(config_id, &cfg)) {
    return fail(SWNAV_ERROR_UNKNOWN_CONFIG,
                std::string("unknown configuration id '") + config_id +
                    "'; valid ids: " + swnav_config_ids());
  }
  if (opt != nullptr) {
    cfg.seed = opt->seed;
    if (opt->repeats > 0) cfg.repeats = opt->repeats;
    if (opt->noise_pose_sigma >= 0.0) {
      cfg.noise.pose_sigma = opt->noise_pose_sigma;
    }
    if (opt->noise_velocity_sigma >= 0.0) {
      cfg.noise.velocity_sigma = opt->noise_velocity_sigma;
    }
    if (opt->goal_timeout > 0.0) cfg.goal_timeout = opt->goal_timeout;
  }
  return guarded([&] {
    auto* handle = new swnav_run_result{
        swervenav::run_experiment(scenario->scenario, cfg, arr->arrangement),
        config_id};
    *out = handle;
    return SWNAV_OK;
  });
}

void swnav_run_result_destroy(swnav_run_result* r) { delete r; }

int swnav_run_result_count(const swnav_run_result* r) {
  return r == nullptr ? 0 : static_cast<int>(r->metrics.size());
}

swnav_status swnav_run_result_get(const swnav_run_result* r, int run,
                                  int* discontinuity_count,
                                  double* travel_time, int* completed) {
  if (r == nullptr || run < 0 ||
      run >= static_cast<int>(r->metrics.size())) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "run index out of range");
  }
  const swervenav::RunMetrics& m = r->metrics[run];
  if (discontinuity_count != nullptr) {
    *discontinuity_count = m.discontinuity_count;
  }
  if (travel_time != nullptr) *travel_time = m.travel_time;
  if (completed != nullptr) *completed = m.completed ? 1 : 0;
  return SWNAV_OK;
}

swnav_status swnav_metrics_csv(const swnav_scenario* scenario,
                               const char* config_id,
                               const swnav_run_result* r, char** out) {
  if (scenario == nullptr || config_id == nullptr || r == nullptr ||
      out == nullptr) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = copy_string(swervenav::metrics_csv(scenario->scenario.name,
                                              config_id, r->metrics));
    return *out == nullptr ? fail(SWNAV_ERROR_INTERNAL, "out of memory")
                           : SWNAV_OK;
  });
}

swnav_status swnav_trajectory_csv(const swnav_run_result* r, int run,
                                  char** out) {
  if (r == nullptr || out == nullptr || run < 0 ||
      run >= static_cast<int>(r->metrics.size())) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "run index out of range");
  }
  return guarded([&] {
    *out = copy_string(swervenav::trajectory_csv(r->metrics[run]));
    return *out == nullptr ? fail(SWNAV_ERROR_INTERNAL, "out of memory")
                           : SWNAV_OK;
  });
}

swnav_status swnav_summary_json(const swnav_scenario* scenario,
                                uint64_t seed, const char* const* config_ids,
                                const swnav_run_result* const* results,
                                int count, char** out) {
  if (scenario == nullptr || config_ids == nullptr || results == nullptr ||
      out == nullptr || count <= 0) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<swervenav::ConfigSummary> summaries;
    summaries.reserve(count);
    for (int i = 0; i < count; ++i) {
      if (config_ids[i] == nullptr || results[i] == nullptr) {
        return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null entry in arrays");
      }
      summaries.push_back(
          swervenav::summarize(config_ids[i], results[i]->metrics));
    }
    *out = copy_string(
        swervenav::summary_json(scenario->scenario.name, seed, summaries));
    return *out == nullptr ? fail(SWNAV_ERROR_INTERNAL, "out of memory")
                           : SWNAV_OK;
  });
}

swnav_status swnav_pick_winner(const swnav_run_result* const* results,
                               int count, int by_travel_time,
                               int* winner_index) {
  if (results == nullptr || winner_index == nullptr || count <= 0) {
    return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<swervenav::ConfigSummary> summaries;
    summaries.reserve(count);
    for (int i = 0; i < count; ++i) {
      if (results[i] == nullptr) {
        return fail(SWNAV_ERROR_INVALID_ARGUMENT, "null entry in results");
      }
      summaries.push_back(
          swervenav::summarize(results[i]->config_id, results[i]->metrics));
    }
    *winner_index = swervenav::pick_winner(summaries, by_travel_time != 0);
    return SWNAV_OK;
  });
}

}  // extern "C"
