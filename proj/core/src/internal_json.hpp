#pragma once

// Internal bridge between scenario.cpp and io.cpp; vendor/json.hpp never
// appears in public headers.

#include <nlohmann/json.hpp>

#include "swarmloc/scenario.hpp"

namespace swarmloc {

ScenarioConfig scenario_config_from_json(const nlohmann::json& j);
nlohmann::json scenario_config_to_json(const ScenarioConfig& cfg);

}  // namespace swarmloc
