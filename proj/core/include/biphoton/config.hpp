#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "biphoton/cavity.hpp"
#include "biphoton/jsa.hpp"
#include "biphoton/schmidt.hpp"

namespace biphoton {

// Everything a run needs, resolved from the layered configuration
// (defaults, config file, --set overrides, dedicated flags).
struct SimulationSetup {
  CavityAssembly signal_cav;
  CavityAssembly idler_cav;
  PumpSpectrum pump;
  FrequencyGrid grid;           // shared by the signal and idler axes
  JsaBuildOptions jsa;
  double truncation = 1e-8;
  int output_modes = 4;
  int csv_max_dim = 512;
  nlohmann::json resolved;      // canonical config with derived values filled
};

// Canonical configuration document with the default device: the 800 nm
// dual-grating KTP microcavity.
nlohmann::json default_config();

// Parse a JSON config file and merge it over the defaults. Unknown keys and
// type mismatches are ConfigError.
nlohmann::json load_config(const std::filesystem::path& file);

// Apply one "dotted.path=value" override. Values may be numbers with an
// optional metric length suffix (m, mm, um, nm, pm), booleans, or strings;
// the target key must exist and keep its JSON type.
void apply_override(nlohmann::json& config, const std::string& assignment);

// Number parser used by apply_override, exposed for the CLI.
double parse_quantity(const std::string& text);

SimulationSetup resolve_setup(const nlohmann::json& config);

} // namespace biphoton
