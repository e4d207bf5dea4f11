#ifndef NH3POWER_CONFIG_HPP
#define NH3POWER_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "nh3power/explore.hpp"
#include "nh3power/system.hpp"

namespace nh3power::config {

struct ExploreConfig {
    double grid_step_kw = 2.0;
    double wgen_min_kw = 0.0;
    double wgen_max_kw = 0.0;
    double wfc_min_kw = 0.0;
    double wfc_max_kw = 0.0;
    std::vector<double> ghsv_ladder;   // fig6 ladder [1/h]
    std::vector<double> r_values;      // sizing sweep
    double total_rated_kw = 230.0;
    double curve_target_step_kw = 5.0; // optimal-curve target spacing

    explore::AxisSpec gen_axis() const { return {wgen_min_kw, wgen_max_kw, grid_step_kw}; }
    explore::AxisSpec fc_axis() const { return {wfc_min_kw, wfc_max_kw, grid_step_kw}; }
};

struct RunConfig {
    system::SystemConfig sys;
    ExploreConfig explore;

    // FNV-1a hash of the canonical serialized config; stamped into every
    // output manifest.
    std::string fingerprint() const;
    std::string canonical_json() const;
};

// Shipped calibration per topology.
RunConfig preset(system::Topology topology);

// Loads a config file (strict schema: unknown keys rejected, missing keys
// fall back to the preset with a notice on stderr). `path` empty -> pure
// preset. CLI-level topology/measure overrides are applied before the
// file's own defaults are resolved.
RunConfig load(const std::string& path, std::optional<system::Topology> topology_override,
               const std::optional<std::string>& measure_override);

} // namespace nh3power::config

#endif
