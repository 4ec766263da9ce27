#pragma once

#include "exosynth/geometry.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace exosynth {

/// Flat `name = value` config text: one key per line, `#` comments, lengths
/// in mm, angles in degrees. Unknown keys are rejected. Key names are listed
/// in docs/config_schema.md.
struct ConfigFile {
    std::map<std::string, double> values;
    bool has(const std::string& key) const { return values.count(key) != 0; }
    double get(const std::string& key) const;                  // throws ConfigError
    double get_or(const std::string& key, double fallback) const;
};

ConfigFile parse_config(const std::string& text);
ConfigFile load_config(const std::filesystem::path& path);

/// Build a Geometry from a config file (validates on exit). Angle-valued
/// keys (q_KN, q_LK, seed_qB...) are degrees in the file, radians in memory.
Geometry geometry_from_config(const ConfigFile& cfg);

/// Anthropometry section of a config file; every key required.
Anthropometry anthropometry_from_config(const ConfigFile& cfg);

/// Serialize a Geometry back to config text (degrees at the boundary).
std::string geometry_to_config(const Geometry& geom);

}  // namespace exosynth
