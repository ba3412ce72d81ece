#include "swarmloc/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "swarmloc/error.hpp"

namespace swarmloc {

using nlohmann::json;

std::string to_string(EmissionMode m) {
  return m == EmissionMode::kSynchronized ? "synchronized" : "asynchronous";
}

EmissionMode emission_mode_from_string(const std::string& s) {
  if (s == "synchronized") return EmissionMode::kSynchronized;
  if (s == "asynchronous") return EmissionMode::kAsynchronous;
  throw ConfigError("emission_mode must be 'synchronized' or 'asynchronous', got '" + s + "'");
}

void ScenarioConfig::validate() const {
  if (n_robots < 3) throw ConfigError("n_robots must be >= 3");
  if (!(d_min > 0.0)) throw ConfigError("d_min must be positive");
  if (!(d_min < d_max)) throw ConfigError("d_min must be < d_max");
  if (!(d_max <= 2.0 * arena_radius)) throw ConfigError("d_max must be <= 2*arena_radius");
  if (!(v_max > 0.0)) throw ConfigError("v_max must be positive");
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
  if (n_steps < 1) throw ConfigError("n_steps must be >= 1");
  if (heading_persistence < 0.0 || heading_persistence > 1.0)
    throw ConfigError("heading_persistence must be in [0, 1]");
  if (sigma_distance < 0 || sigma_heading < 0 || sigma_depth < 0 || sigma_velocity < 0)
    throw ConfigError("noise sigmas must be >= 0");
  if (jitter_max < 0.0) throw ConfigError("jitter_max must be >= 0");
  if (emission_mode == EmissionMode::kAsynchronous && jitter_max > dt)
    throw ConfigError("jitter_max must be <= dt so rounds stay bracketed");
  if (!(depth_min <= depth_max)) throw ConfigError("depth_min must be <= depth_max");
  if (depth_drift < 0.0) throw ConfigError("depth_drift must be >= 0");
}

namespace {

const std::set<std::string> kKnownKeys = {
    "format_version", "n_robots", "arena_radius", "v_max", "v_max_kmh",
    "d_min", "d_max", "n_steps", "dt", "heading_persistence",
    "sigma_distance", "sigma_heading", "sigma_depth", "sigma_velocity",
    "emission_mode", "jitter_max", "seed", "speed_meter",
    "uniform_translation", "depth_min", "depth_max", "depth_drift"};

}  // namespace

ScenarioConfig scenario_config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("scenario config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!kKnownKeys.count(key)) throw ConfigError("unknown scenario config key '" + key + "'");
  }
  if (j.contains("v_max") && j.contains("v_max_kmh"))
    throw ConfigError("give v_max (m/s) or v_max_kmh, not both");

  ScenarioConfig cfg;
  try {
    if (j.contains("n_robots")) cfg.n_robots = j.at("n_robots").get<int>();
    if (j.contains("arena_radius")) cfg.arena_radius = j.at("arena_radius").get<double>();
    if (j.contains("v_max")) cfg.v_max = j.at("v_max").get<double>();
    if (j.contains("v_max_kmh")) cfg.v_max = kmh_to_mps(j.at("v_max_kmh").get<double>());
    if (j.contains("d_min")) cfg.d_min = j.at("d_min").get<double>();
    if (j.contains("d_max")) cfg.d_max = j.at("d_max").get<double>();
    if (j.contains("n_steps")) cfg.n_steps = j.at("n_steps").get<int>();
    if (j.contains("dt")) cfg.dt = j.at("dt").get<double>();
    if (j.contains("heading_persistence"))
      cfg.heading_persistence = j.at("heading_persistence").get<double>();
    if (j.contains("sigma_distance")) cfg.sigma_distance = j.at("sigma_distance").get<double>();
    if (j.contains("sigma_heading")) cfg.sigma_heading = j.at("sigma_heading").get<double>();
    if (j.contains("sigma_depth")) cfg.sigma_depth = j.at("sigma_depth").get<double>();
    if (j.contains("sigma_velocity")) cfg.sigma_velocity = j.at("sigma_velocity").get<double>();
    if (j.contains("emission_mode"))
      cfg.emission_mode = emission_mode_from_string(j.at("emission_mode").get<std::string>());
    if (j.contains("jitter_max")) cfg.jitter_max = j.at("jitter_max").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("speed_meter")) cfg.speed_meter = j.at("speed_meter").get<bool>();
    if (j.contains("uniform_translation"))
      cfg.uniform_translation = j.at("uniform_translation").get<bool>();
    if (j.contains("depth_min")) cfg.depth_min = j.at("depth_min").get<double>();
    if (j.contains("depth_max")) cfg.depth_max = j.at("depth_max").get<double>();
    if (j.contains("depth_drift")) cfg.depth_drift = j.at("depth_drift").get<double>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad scenario config value: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

json scenario_config_to_json(const ScenarioConfig& cfg) {
  json j;
  j["n_robots"] = cfg.n_robots;
  j["arena_radius"] = cfg.arena_radius;
  j["v_max"] = cfg.v_max;
  j["d_min"] = cfg.d_min;
  j["d_max"] = cfg.d_max;
  j["n_steps"] = cfg.n_steps;
  j["dt"] = cfg.dt;
  j["heading_persistence"] = cfg.heading_persistence;
  j["sigma_distance"] = cfg.sigma_distance;
  j["sigma_heading"] = cfg.sigma_heading;
  j["sigma_depth"] = cfg.sigma_depth;
  j["sigma_velocity"] = cfg.sigma_velocity;
  j["emission_mode"] = to_string(cfg.emission_mode);
  j["jitter_max"] = cfg.jitter_max;
  j["seed"] = cfg.seed;
  j["speed_meter"] = cfg.speed_meter;
  j["uniform_translation"] = cfg.uniform_translation;
  j["depth_min"] = cfg.depth_min;
  j["depth_max"] = cfg.depth_max;
  j["depth_drift"] = cfg.depth_drift;
  return j;
}

ScenarioConfig parse_scenario_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scenario config is not valid JSON: ") + e.what());
  }
  return scenario_config_from_json(j);
}

std::string serialize_scenario_config(const ScenarioConfig& cfg) {
  return scenario_config_to_json(cfg).dump(2);
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_config(ss.str());
}

}  // namespace swarmloc
