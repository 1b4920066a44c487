#pragma once

#include "json.hpp"

#include "evoc/engine/config.hpp"

// Internal bridge between the config structs and their JSON form; the public
// headers stay JSON-library-free.
namespace evoc::engine {

nlohmann::ordered_json config_to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::ordered_json& j);

}  // namespace evoc::engine
