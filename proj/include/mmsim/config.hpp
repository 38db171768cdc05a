#pragma once

// Run configuration (YAML), parameter serialization and the code version.

#include <mmsim/scenario.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mmsim {

struct RunConfig {
    RemusSourceValues vehicle_source;
    VehicleParams vehicle;        ///< resolved from vehicle_source
    ScenarioSpec scenario;
    Formulation formulation = Formulation::NewtonEuler;
    std::string output_path = "trajectory.csv";
    int decimation = 1;
    std::uint64_t seed = 1;
    bool volume_derived = false;  ///< displaced_volume was omitted and derived from neutral buoyancy
    std::vector<std::string> warnings;
};

/// Parses and validates a YAML run configuration.
///
/// Top-level sections: vehicle, scenario, run. Unknown keys are rejected.
/// Errors carry the 1-based line of the offending node.
/// Throws ParseError (malformed input) or ValidationError (physics invariant).
RunConfig parse_config(std::string_view text);

/// Reads a file and forwards to parse_config(). Throws IoError if unreadable.
RunConfig load_config(const std::string &path);

/// FNV-1a 64-bit digest of the text, as 16 hex digits.
std::string content_hash(std::string_view text);

/// JSON rendering of a parameter set; parse_params() inverts it exactly.
std::string serialize_params(const VehicleParams &params);
VehicleParams parse_params(std::string_view json_text);

std::string_view code_version();

} // namespace mmsim
