#pragma once

#include <cstdint>
#include <string>

#include "swarmloc/geometry.hpp"

namespace swarmloc {

enum class EmissionMode { kSynchronized, kAsynchronous };

std::string to_string(EmissionMode m);
EmissionMode emission_mode_from_string(const std::string& s);

/// Everything a run needs to be reproducible. Speeds are meters/second
/// internally; the config file also accepts `v_max_kmh` and converts on
/// ingestion.
struct ScenarioConfig {
  int n_robots = 20;
  double arena_radius = 50.0;       // m
  double v_max = kmh_to_mps(4.0);   // m/s
  double d_min = 3.0;               // m
  double d_max = 50.0;              // m
  int n_steps = 8;
  double dt = 1.0;                  // s per step
  double heading_persistence = 0.7; // 1 = straight lines, 0 = fully random
  double sigma_distance = 0.0;      // m
  double sigma_heading = 0.0;       // rad
  double sigma_depth = 0.0;         // m
  double sigma_velocity = 0.0;      // m/s, per component
  EmissionMode emission_mode = EmissionMode::kSynchronized;
  double jitter_max = 0.1;          // s, asynchronous emission offset bound
  std::uint64_t seed = 1;
  bool speed_meter = true;          // velocities present in observations
  bool uniform_translation = false; // degenerate-motion fixture
  double depth_min = 0.0;           // m
  double depth_max = 10.0;          // m
  double depth_drift = 0.0;         // m/s bound on per-step depth change

  /// Throws ConfigError when an invariant is broken.
  void validate() const;
};

/// Flat JSON document; unknown keys are an error.
ScenarioConfig parse_scenario_config(const std::string& json_text);
std::string serialize_scenario_config(const ScenarioConfig& cfg);

ScenarioConfig load_scenario_config(const std::string& path);

}  // namespace swarmloc
