// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_CONFIG_HPP
#define DUDE_CONFIG_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dude/scenario.hpp"

namespace dude {

// Configuration text format
// -------------------------
//   # comment until end of line
//   section.key = value
//
// One assignment per line; blank lines are ignored. Keys are fixed (see
// config_keys()); unknown or repeated keys are errors. Values are a number,
// a comma-separated list of numbers, `true`/`false`, or a mode name.
// Distances are given in km and stored in meters; angles in degrees; speeds
// in km/h. Keys that are absent keep their built-in defaults.

struct ConfigEntry
{
    std::string key;
    std::string value;  ///< rendered in the file's units
    std::string source; ///< "config:line N", "cli-override" or the default's provenance
};

/// All accepted keys, in documentation order.
std::vector<std::string> config_keys();

/// Throws ConfigError with the offending line number.
ScenarioConfig parse_config_text(std::string_view text);

/// Throws IoError when unreadable, ConfigError on bad content.
ScenarioConfig parse_config(const std::filesystem::path& path);

/// Sets one key from its textual value; `line` is used for error messages only.
void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value,
                      const std::string& source, std::size_t line = 0);

/// Effective value and provenance of every key.
std::vector<ConfigEntry> config_echo(const ScenarioConfig& cfg);

/// Renders a config file that reproduces `cfg` exactly.
std::string render_config(const ScenarioConfig& cfg);

}  // namespace dude

#endif  // DUDE_CONFIG_HPP
