/* Copyright 2026 The swervenav Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the swervenav shared library.
 *
 * swervenav plans and simulates motion for four-wheel independent-steering
 * robots whose steering axes cannot rotate a full turn. The library models
 * the velocity-space regions induced by the steering range, provides an
 * augmented dynamic-window local planner that avoids wheel-flip
 * discontinuities, and ships a deterministic benchmark harness.
 *
 * All functions returning swnav_status set a thread-local error message
 * retrievable with swnav_last_error() on failure. Objects returned through
 * *_create/_load functions must be released with the matching destroy
 * function; strings returned through char** out-parameters must be
 * released with swnav_string_free().
 */

#ifndef SWERVENAV_H_
#define SWERVENAV_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SWNAV_API __declspec(dllexport)
#else
#define SWNAV_API __attribute__((visibility("default")))
#endif

typedef enum swnav_status {
  SWNAV_OK = 0,
  SWNAV_ERROR_INVALID_ARGUMENT = 1,
  SWNAV_ERROR_UNSUPPORTED_LIMITS = 2,
  SWNAV_ERROR_CONSTRUCTION = 3,
  SWNAV_ERROR_IO = 4,
  SWNAV_ERROR_UNREACHABLE = 5,
  SWNAV_ERROR_UNKNOWN_CONFIG = 6,
  SWNAV_ERROR_INTERNAL = 7
} swnav_status;

SWNAV_API const char* swnav_status_name(swnav_status status);

/* Message describing the most recent failure on this thread. */
SWNAV_API const char* swnav_last_error(void);

SWNAV_API void swnav_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Robot model                                                         */

typedef struct swnav_geometry {
  double front;        /* m, body origin to front axle */
  double rear;         /* m, body origin to rear axle */
  double left;         /* m, body origin to left wheel centers */
  double right;        /* m, body origin to right wheel centers */
  double wheel_radius; /* m */
} swnav_geometry;

/* Benchmark robot: 0.2 m square wheel layout, 0.08 m wheels. */
SWNAV_API void swnav_geometry_init(swnav_geometry* geo);

typedef struct swnav_limits {
  double min_angle; /* rad */
  double max_angle; /* rad */
} swnav_limits;

/* Benchmark robot steering range: +/-130 degrees. */
SWNAV_API void swnav_limits_init(swnav_limits* lim);

/* ------------------------------------------------------------------ */
/* Kinematics                                                          */

/* Wheel order: 0 front-left, 1 rear-left, 2 rear-right, 3 front-right. */
typedef struct swnav_wheel_command {
  double steer[4]; /* rad */
  double drive[4]; /* rad/s, negative when a wheel runs flipped */
} swnav_wheel_command;

/* Steering/drive solution for a body velocity (vx, vy m/s, wz rad/s),
 * with out-of-range angles mapped into the range by the half-turn flip.
 * flipped may be NULL; otherwise it receives a 0/1 flag per wheel. */
SWNAV_API swnav_status swnav_inverse_kinematics(const swnav_geometry* geo,
                                                const swnav_limits* lim,
                                                double vx, double vy,
                                                double wz,
                                                swnav_wheel_command* out,
                                                int flipped[4]);

/* Least-squares body velocity realized by four wheel states. */
SWNAV_API swnav_status swnav_forward_kinematics(
    const swnav_geometry* geo, const swnav_wheel_command* cmd, double* vx,
    double* vy, double* wz);

/* ------------------------------------------------------------------ */
/* Velocity-space regions                                              */

typedef struct swnav_arrangement swnav_arrangement;

enum {
  SWNAV_REGIME_UNCONSTRAINED = 0,
  SWNAV_REGIME_RIGHT_ANGLE = 1,
  SWNAV_REGIME_GENERAL = 2
};

/* Region id of velocities below the stationary threshold. */
#define SWNAV_REGION_STATIONARY (-1)

/* Builds the region classifier for a robot model. Fails with
 * SWNAV_ERROR_UNSUPPORTED_LIMITS for asymmetric or too-narrow ranges and
 * SWNAV_ERROR_CONSTRUCTION when region enumeration does not reproduce the
 * expected cell structure. */
SWNAV_API swnav_status swnav_arrangement_create(const swnav_geometry* geo,
                                                const swnav_limits* lim,
                                                swnav_arrangement** out);
SWNAV_API void swnav_arrangement_destroy(swnav_arrangement* arr);

SWNAV_API int swnav_arrangement_regime(const swnav_arrangement* arr);
SWNAV_API int swnav_arrangement_signature_count(const swnav_arrangement* arr);
SWNAV_API int swnav_arrangement_region_count(const swnav_arrangement* arr);

/* Fraction of velocity directions belonging to a region, in [0, 1]. */
SWNAV_API double swnav_arrangement_region_weight(const swnav_arrangement* arr,
                                                 int region);

/* Region id of a velocity, or SWNAV_REGION_STATIONARY. */
SWNAV_API int swnav_region_of(const swnav_arrangement* arr, double vx,
                              double vy, double wz);

/* Distance (velocity units) to the nearest plane patch where a wheel
 * flip actually occurs, given the region the velocity lies in. */
SWNAV_API double swnav_distance_to_boundary(const swnav_arrangement* arr,
                                            double vx, double vy, double wz);

/* CSV grid of region ids over vx, vy in [-extent, extent] at fixed wz;
 * rows run from +vy down to -vy. */
SWNAV_API swnav_status swnav_region_slice_csv(const swnav_arrangement* arr,
                                              double wz, double extent,
                                              int cells, char** out);

/* ------------------------------------------------------------------ */
/* Scenarios and experiments                                           */

typedef struct swnav_scenario swnav_scenario;

SWNAV_API swnav_status swnav_scenario_load(const char* path,
                                           swnav_scenario** out);
SWNAV_API swnav_status swnav_scenario_parse(const char* yaml_text,
                                            swnav_scenario** out);
SWNAV_API void swnav_scenario_destroy(swnav_scenario* s);
SWNAV_API const char* swnav_scenario_name(const swnav_scenario* s);

typedef struct swnav_run_options {
  uint64_t seed;
  int repeats;
  double noise_pose_sigma;     /* negative keeps the default */
  double noise_velocity_sigma; /* negative keeps the default */
  double goal_timeout;         /* seconds; non-positive keeps the default */
} swnav_run_options;

SWNAV_API void swnav_run_options_init(swnav_run_options* opt);

/* Known benchmark configuration ids, comma separated. */
SWNAV_API const char* swnav_config_ids(void);

typedef struct swnav_run_result swnav_run_result;

/* Runs the closed-loop benchmark (controller at 100 Hz, planner at 5 Hz)
 * for one named configuration. The arrangement carries the robot model
 * used for the runs. Fails with SWNAV_ERROR_UNKNOWN_CONFIG for unknown
 * ids and SWNAV_ERROR_UNREACHABLE when a goal cannot be reached on the
 * scenario grid with the robot footprint. */
SWNAV_API swnav_status swnav_run_experiment(const swnav_scenario* scenario,
                                            const swnav_arrangement* arr,
                                            const char* config_id,
                                            const swnav_run_options* opt,
                                            swnav_run_result** out);
SWNAV_API void swnav_run_result_destroy(swnav_run_result* r);

SWNAV_API int swnav_run_result_count(const swnav_run_result* r);
SWNAV_API swnav_status swnav_run_result_get(const swnav_run_result* r,
                                            int run,
                                            int* discontinuity_count,
                                            double* travel_time,
                                            int* completed);

/* Byte-stable serializations of run results. */
SWNAV_API swnav_status swnav_metrics_csv(const swnav_scenario* scenario,
                                         const char* config_id,
                                         const swnav_run_result* r,
                                         char** out);
SWNAV_API swnav_status swnav_trajectory_csv(const swnav_run_result* r,
                                            int run, char** out);
SWNAV_API swnav_status swnav_summary_json(const swnav_scenario* scenario,
                                          uint64_t seed,
                                          const char* const* config_ids,
                                          const swnav_run_result* const* results,
                                          int count, char** out);

/* Index of the best configuration among results (lowest median, then
 * lowest standard deviation, then lowest mean). */
SWNAV_API swnav_status swnav_pick_winner(const swnav_run_result* const* results,
                                         int count, int by_travel_time,
                                         int* winner_index);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SWERVENAV_H_ */
