//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/scenario.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dephasim {

//! A built-in scenario configuration (usable directly with run_scenario).
struct ScenarioTemplate {
  std::string name;
  std::string description;
  std::string config_json;
};

//! The six built-in templates: fig2a, fig2b, fig2c (Ising chain regimes),
//! nonpositive (chirped-Gaussian non-positive map), fig4 (synthetic
//! tabulated spectral density pipeline), ohmic-oracle.
std::vector<ScenarioTemplate> list_scenarios();

//! Render the catalog as plain text or as a machine-readable JSON object
//! mapping template names to configurations.
std::string render_scenario_catalog(bool as_json);

struct ScenarioResult {
  std::filesystem::path output_dir;
  std::filesystem::path manifest_path;
  std::vector<std::filesystem::path> outputs;
};

//! Run a scenario described by a JSON config string. Configs are validated
//! strictly (unknown keys rejected); a run manifest (itself a valid input,
//! under its "scenario" key) is written next to the artifacts. The output
//! directory resolves as: explicit override, then the config's
//! "output_dir", then $DEPHASIM_OUTPUT_DIR, then the current directory.
ScenarioResult run_scenario_json(
    const std::string& config_json,
    const std::optional<std::filesystem::path>& output_dir_override = {});

//! Same, reading the config (or a previous run's manifest) from a file.
ScenarioResult run_scenario(
    const std::filesystem::path& config_path,
    const std::optional<std::filesystem::path>& output_dir_override = {});

}  // namespace dephasim
