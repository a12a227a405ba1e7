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

// Benchmark and inspection front end; all planning and simulation work
// goes through the shared library's C API.

#include <CLI11.hpp>
#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "swervenav.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitScenarioFailure = 3;
constexpr int kExitStrictIncomplete = 4;

int exit_code_for(swnav_status status) {
  switch (status) {
    case SWNAV_OK:
      return kExitOk;
    case SWNAV_ERROR_INVALID_ARGUMENT:
    case SWNAV_ERROR_UNSUPPORTED_LIMITS:
    case SWNAV_ERROR_CONSTRUCTION:
    case SWNAV_ERROR_UNKNOWN_CONFIG:
      return kExitBadArguments;
    case SWNAV_ERROR_UNREACHABLE:
      return kExitScenarioFailure;
    default:
      return kExitFailure;
  }
}

int report(swnav_status status) {
  std::fprintf(stderr, "error: %s: %s\n", swnav_status_name(status),
               swnav_last_error());
  return exit_code_for(status);
}

struct StringDeleter {
  void operator()(char* s) const { swnav_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct RunArgs {
  std::string scenario_path;
  std::vector<std::string> configs;
  int repeats = 10;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  double noise_sigma = -1.0;
  double noise_pose_sigma = -1.0;
  double noise_velocity_sigma = -1.0;
  double timeout = 0.0;
  double delta_max_deg = 130.0;
  bool strict = false;
  std::string params_file;
};

// Values from the parameter file fill in whatever was not given on the
// command line.
bool merge_params_file(const CLI::App& app, RunArgs* args) {
  if (args->params_file.empty()) return true;
  YAML::Node root;
  try {
    root = YAML::LoadFile(args->params_file);
  } catch (const YAML::Exception& e) {
    std::fprintf(stderr, "error: cannot read parameter file: %s\n", e.what());
    return false;
  }
  auto unset = [&app](const std::string& flag) {
    const CLI::Option* opt = app.get_option_no_throw(flag);
    return opt != nullptr && opt->count() == 0;
  };
  if (root["scenario"] && unset("--scenario")) {
    args->scenario_path = root["scenario"].as<std::string>();
  }
  if (root["config"] && unset("--config")) {
    args->configs = {root["config"].as<std::string>()};
  }
  if (root["repeats"] && unset("--repeats")) {
    args->repeats = root["repeats"].as<int>();
  }
  if (root["seed"] && unset("--seed")) {
    args->seed = root["seed"].as<std::uint64_t>();
  }
  if (root["out"] && unset("--out")) {
    args->out_dir = root["out"].as<std::string>();
  }
  if (root["noise_sigma"] && unset("--noise-sigma")) {
    args->noise_sigma = root["noise_sigma"].as<double>();
  }
  if (root["noise_pose_sigma"] && unset("--noise-pose-sigma")) {
    args->noise_pose_sigma = root["noise_pose_sigma"].as<double>();
  }
  if (root["noise_velocity_sigma"] && unset("--noise-velocity-sigma")) {
    args->noise_velocity_sigma = root["noise_velocity_sigma"].as<double>();
  }
  if (root["timeout"] && unset("--timeout")) {
    args->timeout = root["timeout"].as<double>();
  }
  if (root["delta_max_deg"] && unset("--delta-max")) {
    args->delta_max_deg = root["delta_max_deg"].as<double>();
  }
  return true;
}

bool write_file(const std::filesystem::path& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

void add_common_run_flags(CLI::App* cmd, RunArgs* args) {
  cmd->add_option("--scenario", args->scenario_path, "Scenario file");
  cmd->add_option("--repeats", args->repeats, "Runs per configuration")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", args->seed, "Base random seed");
  cmd->add_option("--out", args->out_dir, "Output directory");
  cmd->add_option("--noise-sigma", args->noise_sigma,
                  "Sets both pose and velocity noise sigma");
  cmd->add_option("--noise-pose-sigma", args->noise_pose_sigma,
                  "Pose sensing noise sigma (m, rad)");
  cmd->add_option("--noise-velocity-sigma", args->noise_velocity_sigma,
                  "Realized velocity noise sigma");
  cmd->add_option("--timeout", args->timeout, "Per-goal timeout (s)");
  cmd->add_option("--delta-max", args->delta_max_deg,
                  "Steering range half width (degrees)");
  cmd->add_flag("--strict", args->strict,
                "Exit with status 4 when any run is incomplete");
  cmd->add_option("--params", args->params_file,
                  "YAML parameter file; command-line flags win");
}

swnav_run_options make_options(const RunArgs& args) {
  swnav_run_options opt;
  swnav_run_options_init(&opt);
  opt.seed = args.seed;
  opt.repeats = args.repeats;
  opt.noise_pose_sigma =
      args.noise_pose_sigma >= 0.0 ? args.noise_pose_sigma : args.noise_sigma;
  opt.noise_velocity_sigma = args.noise_velocity_sigma >= 0.0
                                 ? args.noise_velocity_sigma
                                 : args.noise_sigma;
  opt.goal_timeout = args.timeout;
  return opt;
}

void print_summary_header() {
  std::printf("%-12s %4s %4s | %8s %8s %8s | %9s %9s %9s\n", "config", "runs",
              "ok", "disc", "median", "std", "time", "median", "std");
}

struct RowStats {
  double disc_mean = 0.0, disc_median = 0.0, disc_std = 0.0;
  double time_mean = 0.0, time_median = 0.0, time_std = 0.0;
  int runs = 0, ok = 0;
};

RowStats stats_for(const swnav_run_result* result) {
  RowStats row;
  row.runs = swnav_run_result_count(result);
  std::vector<double> disc, time;
  for (int i = 0; i < row.runs; ++i) {
    int d = 0, completed = 0;
    double t = 0.0;
    swnav_run_result_get(result, i, &d, &t, &completed);
    disc.push_back(d);
    time.push_back(t);
    if (completed != 0) ++row.ok;
  }
  auto agg = [](std::vector<double> v, double* mean, double* median,
                double* sd) {
    if (v.empty()) return;
    double m = 0.0;
    for (double x : v) m += x;
    m /= v.size();
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    *median = v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    *sd = v.size() > 1 ? std::sqrt(acc / (v.size() - 1)) : 0.0;
    *mean = m;
  };
  agg(disc, &row.disc_mean, &row.disc_median, &row.disc_std);
  agg(time, &row.time_mean, &row.time_median, &row.time_std);
  return row;
}

void print_summary_row(const std::string& config,
                       const swnav_run_result* result) {
  const RowStats r = stats_for(result);
  std::printf("%-12s %4d %4d | %8.2f %8.2f %8.2f | %9.2f %9.2f %9.2f\n",
              config.c_str(), r.runs, r.ok, r.disc_mean, r.disc_median,
              r.disc_std, r.time_mean, r.time_median, r.time_std);
}

std::vector<std::string> split_config_ids(const std::string& joined) {
  std::vector<std::string> out;
  std::stringstream ss(joined);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_benchmark(const RunArgs& args, bool compare_mode) {
  if (args.scenario_path.empty()) {
    std::fprintf(stderr, "error: --scenario is required\n");
    return kExitBadArguments;
  }
  std::vector<std::string> configs = args.configs;
  if (configs.empty()) {
    if (!compare_mode) {
      std::fprintf(stderr, "error: --config is required\n");
      return kExitBadArguments;
    }
    configs = split_config_ids(swnav_config_ids());
  }

  swnav_scenario* scenario = nullptr;
  swnav_status status = swnav_scenario_load(args.scenario_path.c_str(),
                                            &scenario);
  if (status != SWNAV_OK) return report(status);
  std::unique_ptr<swnav_scenario, decltype(&swnav_scenario_destroy)>
      scenario_guard(scenario, swnav_scenario_destroy);

  swnav_geometry geo;
  swnav_geometry_init(&geo);
  swnav_limits lim;
  lim.max_angle = args.delta_max_deg * M_PI / 180.0;
  lim.min_angle = -lim.max_angle;
  swnav_arrangement* arr = nullptr;
  status = swnav_arrangement_create(&geo, &lim, &arr);
  if (status != SWNAV_OK) return report(status);
  std::unique_ptr<swnav_arrangement, decltype(&swnav_arrangement_destroy)>
      arr_guard(arr, swnav_arrangement_destroy);

  const swnav_run_options opt = make_options(args);
  std::vector<swnav_run_result*> results;
  auto cleanup_results = [&results] {
    for (swnav_run_result* r : results) swnav_run_result_destroy(r);
  };

  std::printf("scenario: %s  repeats: %d  seed: %llu\n",
              swnav_scenario_name(scenario), args.repeats,
              static_cast<unsigned long long>(args.seed));
  print_summary_header();
  for (const std::string& config : configs) {
    swnav_run_result* result = nullptr;
    status = swnav_run_experiment(scenario, arr, config.c_str(), &opt,
                                  &result);
    if (status != SWNAV_OK) {
      cleanup_results();
      return report(status);
    }
    results.push_back(result);
    print_summary_row(config, result);
  }

  std::error_code ec;
  std::filesystem::create_directories(args.out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "error: cannot create output directory %s\n",
                 args.out_dir.c_str());
    cleanup_results();
    return kExitFailure;
  }
  const std::filesystem::path out_dir(args.out_dir);

  bool io_ok = true;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    OwnedString csv;
    char* raw = nullptr;
    if (swnav_metrics_csv(scenario, configs[i].c_str(), results[i], &raw) ==
        SWNAV_OK) {
      csv.reset(raw);
      const std::string file_name =
          compare_mode ? "metrics_" + configs[i] + ".csv" : "metrics.csv";
      io_ok = io_ok && write_file(out_dir / file_name, csv.get());
    } else {
      io_ok = false;
    }
  }
  if (!compare_mode) {
    const int runs = swnav_run_result_count(results[0]);
    for (int run = 0; run < runs; ++run) {
      char* raw = nullptr;
      if (swnav_trajectory_csv(results[0], run, &raw) == SWNAV_OK) {
        OwnedString csv(raw);
        io_ok = io_ok &&
                write_file(out_dir / ("trajectory_run" +
                                      std::to_string(run + 1) + ".csv"),
                           csv.get());
      } else {
        io_ok = false;
      }
    }
  }
  {
    std::vector<const char*> id_ptrs;
    for (const std::string& c : configs) id_ptrs.push_back(c.c_str());
    char* raw = nullptr;
    if (swnav_summary_json(scenario, args.seed, id_ptrs.data(),
                           const_cast<const swnav_run_result* const*>(
                               results.data()),
                           static_cast<int>(results.size()),
                           &raw) == SWNAV_OK) {
      OwnedString json(raw);
      io_ok = io_ok && write_file(out_dir / "summary.json", json.get());
    } else {
      io_ok = false;
    }
  }

  if (compare_mode && results.size() > 1) {
    int by_disc = 0, by_time = 0;
    swnav_pick_winner(
        const_cast<const swnav_run_result* const*>(results.data()),
        static_cast<int>(results.size()), 0, &by_disc);
    swnav_pick_winner(
        const_cast<const swnav_run_result* const*>(results.data()),
        static_cast<int>(results.size()), 1, &by_time);
    std::printf("winner (discontinuity_count): %s\n",
                configs[by_disc].c_str());
    std::printf("winner (travel_time): %s\n", configs[by_time].c_str());
  }

  bool all_complete = true;
  for (swnav_run_result* r : results) {
    const int runs = swnav_run_result_count(r);
    for (int i = 0; i < runs; ++i) {
      int completed = 0;
      swnav_run_result_get(r, i, nullptr, nullptr, &completed);
      all_complete = all_complete && completed != 0;
    }
  }
  cleanup_results();

  if (!io_ok) {
    std::fprintf(stderr, "error: failed writing output files\n");
    return kExitFailure;
  }
  if (args.strict && !all_complete) {
    std::fprintf(stderr, "strict mode: some runs did not complete\n");
    return kExitStrictIncomplete;
  }
  return kExitOk;
}

struct RegionArgs {
  double delta_max_deg = 130.0;
  double delta_min_deg = 0.0;  // 0 means mirror of delta_max
  double front = 0.2, rear = 0.2, left = 0.2, right = 0.2;
  double wheel_radius = 0.08;
  double slice_wz = 0.0;
  double extent = 1.0;
  int cells = 41;
  std::string out_file;
};

int run_regions(const RegionArgs& args) {
  swnav_geometry geo;
  swnav_geometry_init(&geo);
  geo.front = args.front;
  geo.rear = args.rear;
  geo.left = args.left;
  geo.right = args.right;
  geo.wheel_radius = args.wheel_radius;
  swnav_limits lim;
  lim.max_angle = args.delta_max_deg * M_PI / 180.0;
  lim.min_angle = args.delta_min_deg == 0.0
                      ? -lim.max_angle
                      : args.delta_min_deg * M_PI / 180.0;
  swnav_arrangement* arr = nullptr;
  const swnav_status status = swnav_arrangement_create(&geo, &lim, &arr);
  if (status != SWNAV_OK) return report(status);
  std::unique_ptr<swnav_arrangement, decltype(&swnav_arrangement_destroy)>
      arr_guard(arr, swnav_arrangement_destroy);

  const int regime = swnav_arrangement_regime(arr);
  const int regions = swnav_arrangement_region_count(arr);
  if (regime == SWNAV_REGIME_UNCONSTRAINED) {
    std::printf("unconstrained: %d region\n", regions);
  } else if (regime == SWNAV_REGIME_RIGHT_ANGLE) {
    std::printf("%d regions\n", regions);
  } else {
    std::printf("%d signatures, %d regions\n",
                swnav_arrangement_signature_count(arr), regions);
    std::printf("region weights:\n");
    for (int r = 0; r < regions; ++r) {
      std::printf("  %2d: %.4f\n", r,
                  swnav_arrangement_region_weight(arr, r));
    }
  }

  if (!args.out_file.empty()) {
    char* raw = nullptr;
    const swnav_status slice_status = swnav_region_slice_csv(
        arr, args.slice_wz, args.extent, args.cells, &raw);
    if (slice_status != SWNAV_OK) return report(slice_status);
    OwnedString csv(raw);
    if (!write_file(args.out_file, csv.get())) {
      std::fprintf(stderr, "error: cannot write %s\n", args.out_file.c_str());
      return kExitFailure;
    }
    std::printf("slice written to %s\n", args.out_file.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motion planning benchmark for four-wheel independent-steering "
               "robots with limited steering ranges"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run_cmd =
      app.add_subcommand("run", "Run one benchmark configuration");
  std::string config_id;
  run_cmd->add_option("--config", config_id,
                      "Configuration id (see 'swervenav run --help-configs')");
  add_common_run_flags(run_cmd, &run_args);

  RunArgs compare_args;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Run and rank several configurations");
  std::string configs_joined;
  compare_cmd->add_option("--configs", configs_joined,
                          "Comma-separated configuration ids (default: all)");
  add_common_run_flags(compare_cmd, &compare_args);

  RegionArgs region_args;
  CLI::App* regions_cmd = app.add_subcommand(
      "regions", "Inspect the velocity-space region structure");
  regions_cmd->add_option("--delta-max", region_args.delta_max_deg,
                          "Steering range half width (degrees)");
  regions_cmd->add_option("--delta-min", region_args.delta_min_deg,
                          "Lower steering limit (degrees, default mirror)");
  regions_cmd->add_option("--front", region_args.front, "Front axle offset");
  regions_cmd->add_option("--rear", region_args.rear, "Rear axle offset");
  regions_cmd->add_option("--left", region_args.left, "Left track offset");
  regions_cmd->add_option("--right", region_args.right, "Right track offset");
  regions_cmd->add_option("--wheel-radius", region_args.wheel_radius,
                          "Wheel radius");
  regions_cmd->add_option("--slice-wz", region_args.slice_wz,
                          "Yaw rate of the exported slice");
  regions_cmd->add_option("--extent", region_args.extent,
                          "Half width of the exported slice");
  regions_cmd->add_option("--cells", region_args.cells,
                          "Cells per slice axis");
  regions_cmd->add_option("--out", region_args.out_file,
                          "Write a region-id CSV slice to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  if (run_cmd->parsed()) {
    if (!config_id.empty()) run_args.configs = {config_id};
    if (!merge_params_file(*run_cmd, &run_args)) return kExitBadArguments;
    return run_benchmark(run_args, false);
  }
  if (compare_cmd->parsed()) {
    if (!configs_joined.empty()) {
      compare_args.configs = split_config_ids(configs_joined);
    }
    if (!merge_params_file(*compare_cmd, &compare_args)) {
      return kExitBadArguments;
    }
    return run_benchmark(compare_args, true);
  }
  return run_regions(region_args);
}
