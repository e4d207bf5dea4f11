#include "nh3power/config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nh3power::config {

using nlohmann::json;

namespace {

std::vector<double> log_ladder(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
    return v;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& section) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (allowed.find(it.key()) == allowed.end())
            throw ConfigError("unknown key '" + it.key() + "' in config section '" + section + "'");
    }
}

template <typename T>
void assign(const json& j, const char* key, T& target, const std::string& section) {
    if (!j.contains(key)) {
        std::cerr << "[config] " << section << "." << key << " missing, using default\n";
        return;
    }
    try {
        target = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError("bad value for " + section + "." + std::string(key) + ": " + e.what());
    }
}

} // namespace

RunConfig preset(system::Topology topology) {
    RunConfig rc;
    rc.sys.topology = topology;
    rc.sys.measure = recovery::Measure::IV;
    rc.explore.ghsv_ladder = log_ladder(0.5, 64.0, 30);
    rc.explore.r_values.clear();
    for (int i = 0; i <= 16; ++i) rc.explore.r_values.push_back(0.1 + 0.05 * i);

    switch (topology) {
        case system::Topology::IceHybrid:
            rc.sys.bed.area_m2 = 2.0;
            rc.sys.bed.length_m = 10.0;
            rc.explore.wgen_min_kw = rc.sys.engine.power_min_kw;
            rc.explore.wgen_max_kw = rc.sys.engine.power_max_kw;
            break;
        case system::Topology::FcHybrid:
            rc.sys.stack.min_load_kw = 15.0;
            rc.sys.bed.area_m2 = 4.0;
            rc.sys.bed.length_m = 12.0;
            rc.explore.wfc_min_kw = rc.sys.stack.min_load_kw;
            rc.explore.wfc_max_kw = 210.0;
            break;
        case system::Topology::Composite: {
            const double r_ice = 0.65;
            const double total = 230.0;
            rc.sys.engine = rc.sys.engine.rescaled(r_ice * total);
            rc.sys.stack.min_load_kw = 15.0;
            rc.sys.stack = rc.sys.stack.rescaled_cells((1.0 - r_ice) * total / 230.0);
            rc.sys.bed.area_m2 = 3.0;
            rc.sys.bed.length_m = 12.0;
            rc.explore.wgen_min_kw = rc.sys.engine.power_min_kw;
            rc.explore.wgen_max_kw = rc.sys.engine.power_max_kw;
            rc.explore.wfc_min_kw = rc.sys.stack.min_load_kw;
            rc.explore.wfc_max_kw = (1.0 - r_ice) * total;
            break;
        }
    }
    return rc;
}

RunConfig load(const std::string& path, std::optional<system::Topology> topology_override,
               const std::optional<std::string>& measure_override) {
    json j = json::object();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file: " + path);
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ConfigError("config parse error in " + path + ": " + e.what());
        }
        if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    }
    check_keys(j, {"topology", "measure", "thermo", "bed", "engine", "stack", "system", "explore"},
               "<root>");

    system::Topology topo = system::Topology::Composite;
    if (j.contains("topology")) topo = system::topology_from_string(j.at("topology").get<std::string>());
    if (topology_override) topo = *topology_override;

    RunConfig rc = preset(topo);
    if (j.contains("measure"))
        rc.sys.measure = recovery::measure_from_string(j.at("measure").get<std::string>());
    if (measure_override) rc.sys.measure = recovery::measure_from_string(*measure_override);

    if (j.contains("thermo")) {
        const json& t = j.at("thermo");
        check_keys(t, {"latent_nh3_kj_mol", "dec_enthalpy_ref_kj_mol", "lhv_h2_kj_g",
                       "lhv_nh3_kj_g"}, "thermo");
        assign(t, "latent_nh3_kj_mol", rc.sys.thermo_db.latent_nh3_kj_mol, "thermo");
        assign(t, "dec_enthalpy_ref_kj_mol", rc.sys.thermo_db.dec_enthalpy_ref_kj_mol, "thermo");
        assign(t, "lhv_h2_kj_g", rc.sys.thermo_db.lhv_h2_kj_g, "thermo");
        assign(t, "lhv_nh3_kj_g", rc.sys.thermo_db.lhv_nh3_kj_g, "thermo");
    }
    if (j.contains("bed")) {
        const json& b = j.at("bed");
        check_keys(b, {"activation_energy_kj_mol", "pre_exponential", "beta", "area_m2",
                       "length_m", "temperature_k", "pressure_kpa"}, "bed");
        assign(b, "activation_energy_kj_mol", rc.sys.bed.activation_energy_kj_mol, "bed");
        assign(b, "pre_exponential", rc.sys.bed.pre_exponential, "bed");
        assign(b, "beta", rc.sys.bed.beta, "bed");
        assign(b, "area_m2", rc.sys.bed.area_m2, "bed");
        assign(b, "length_m", rc.sys.bed.length_m, "bed");
        assign(b, "temperature_k", rc.sys.bed.temperature_k, "bed");
        assign(b, "pressure_kpa", rc.sys.bed.pressure_kpa, "bed");
    }
    if (j.contains("engine")) {
        const json& e = j.at("engine");
        check_keys(e, {"hydrogen_mole_ratio", "max_thermal_efficiency", "generator_efficiency",
                       "nh3_injection_mpa", "h2_injection_mpa", "power_min_kw", "power_max_kw",
                       "power_knots_kw", "eta_knots", "f_cool_knots", "f_lub_knots"}, "engine");
        assign(e, "hydrogen_mole_ratio", rc.sys.engine.hydrogen_mole_ratio, "engine");
        assign(e, "max_thermal_efficiency", rc.sys.engine.max_thermal_efficiency, "engine");
        assign(e, "generator_efficiency", rc.sys.engine.generator_efficiency, "engine");
        assign(e, "nh3_injection_mpa", rc.sys.engine.nh3_injection_mpa, "engine");
        assign(e, "h2_injection_mpa", rc.sys.engine.h2_injection_mpa, "engine");
        assign(e, "power_min_kw", rc.sys.engine.power_min_kw, "engine");
        assign(e, "power_max_kw", rc.sys.engine.power_max_kw, "engine");
        assign(e, "power_knots_kw", rc.sys.engine.power_knots_kw, "engine");
        assign(e, "eta_knots", rc.sys.engine.eta_knots, "engine");
        assign(e, "f_cool_knots", rc.sys.engine.f_cool_knots, "engine");
        assign(e, "f_lub_knots", rc.sys.engine.f_lub_knots, "engine");
    }
    if (j.contains("stack")) {
        const json& s = j.at("stack");
        check_keys(s, {"n_cell", "a_cell_cm2", "temperature_k", "p_h2_kpa", "p_o2_kpa", "alpha",
                       "i0_a_cm2", "i_lim_a_cm2", "membrane_thickness_cm",
                       "membrane_conductivity", "min_load_kw"}, "stack");
        assign(s, "n_cell", rc.sys.stack.n_cell, "stack");
        assign(s, "a_cell_cm2", rc.sys.stack.a_cell_cm2, "stack");
        assign(s, "temperature_k", rc.sys.stack.temperature_k, "stack");
        assign(s, "p_h2_kpa", rc.sys.stack.p_h2_kpa, "stack");
        assign(s, "p_o2_kpa", rc.sys.stack.p_o2_kpa, "stack");
        assign(s, "alpha", rc.sys.stack.alpha, "stack");
        assign(s, "i0_a_cm2", rc.sys.stack.i0_a_cm2, "stack");
        assign(s, "i_lim_a_cm2", rc.sys.stack.i_lim_a_cm2, "stack");
        assign(s, "membrane_thickness_cm", rc.sys.stack.membrane_thickness_cm, "stack");
        assign(s, "membrane_conductivity", rc.sys.stack.membrane_conductivity, "stack");
        assign(s, "min_load_kw", rc.sys.stack.min_load_kw, "stack");
    }
    if (j.contains("system")) {
        const json& s = j.at("system");
        check_keys(s, {"tank_temperature_k", "t_dec_k", "pump_isentropic_eff",
                       "comp_isentropic_eff", "comp_pressure_ratio", "fc_air_stoich",
                       "excess_air_ratio", "nh3_liquid_density_kg_m3", "tank_pressure_kpa",
                       "delivery_temperature_k", "exhaust_below_dec_to_low_pool"}, "system");
        assign(s, "tank_temperature_k", rc.sys.tank_temperature_k, "system");
        assign(s, "t_dec_k", rc.sys.t_dec_k, "system");
        assign(s, "pump_isentropic_eff", rc.sys.pump_isentropic_eff, "system");
        assign(s, "comp_isentropic_eff", rc.sys.comp_isentropic_eff, "system");
        assign(s, "comp_pressure_ratio", rc.sys.comp_pressure_ratio, "system");
        assign(s, "fc_air_stoich", rc.sys.fc_air_stoich, "system");
        assign(s, "excess_air_ratio", rc.sys.excess_air_ratio, "system");
        assign(s, "nh3_liquid_density_kg_m3", rc.sys.nh3_liquid_density_kg_m3, "system");
        assign(s, "tank_pressure_kpa", rc.sys.tank_pressure_kpa, "system");
        assign(s, "delivery_temperature_k", rc.sys.delivery_temperature_k, "system");
        assign(s, "exhaust_below_dec_to_low_pool", rc.sys.exhaust_below_dec_to_low_pool, "system");
    }
    if (j.contains("explore")) {
        const json& e = j.at("explore");
        check_keys(e, {"grid_step_kw", "wgen_min_kw", "wgen_max_kw", "wfc_min_kw", "wfc_max_kw",
                       "ghsv_ladder", "r_values", "total_rated_kw", "curve_target_step_kw"},
                   "explore");
        assign(e, "grid_step_kw", rc.explore.grid_step_kw, "explore");
        assign(e, "wgen_min_kw", rc.explore.wgen_min_kw, "explore");
        assign(e, "wgen_max_kw", rc.explore.wgen_max_kw, "explore");
        assign(e, "wfc_min_kw", rc.explore.wfc_min_kw, "explore");
        assign(e, "wfc_max_kw", rc.explore.wfc_max_kw, "explore");
        assign(e, "ghsv_ladder", rc.explore.ghsv_ladder, "explore");
        assign(e, "r_values", rc.explore.r_values, "explore");
        assign(e, "total_rated_kw", rc.explore.total_rated_kw, "explore");
        assign(e, "curve_target_step_kw", rc.explore.curve_target_step_kw, "explore");
    }

    try {
        rc.sys.check();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config validation failed: ") + e.what());
    }
    return rc;
}

std::string RunConfig::canonical_json() const {
    json j;
    j["topology"] = system::topology_name(sys.topology);
    j["measure"] = recovery::measure_name(sys.measure);
    j["thermo"] = {{"latent_nh3_kj_mol", sys.thermo_db.latent_nh3_kj_mol},
                   {"dec_enthalpy_ref_kj_mol", sys.thermo_db.dec_enthalpy_ref_kj_mol},
                   {"lhv_h2_kj_g", sys.thermo_db.lhv_h2_kj_g},
                   {"lhv_nh3_kj_g", sys.thermo_db.lhv_nh3_kj_g}};
    j["bed"] = {{"activation_energy_kj_mol", sys.bed.activation_energy_kj_mol},
                {"pre_exponential", sys.bed.pre_exponential},
                {"beta", sys.bed.beta},
                {"area_m2", sys.bed.area_m2},
                {"length_m", sys.bed.length_m},
                {"temperature_k", sys.bed.temperature_k},
                {"pressure_kpa", sys.bed.pressure_kpa}};
    j["engine"] = {{"hydrogen_mole_ratio", sys.engine.hydrogen_mole_ratio},
                   {"max_thermal_efficiency", sys.engine.max_thermal_efficiency},
                   {"generator_efficiency", sys.engine.generator_efficiency},
                   {"power_min_kw", sys.engine.power_min_kw},
                   {"power_max_kw", sys.engine.power_max_kw},
                   {"power_knots_kw", sys.engine.power_knots_kw},
                   {"eta_knots", sys.engine.eta_knots},
                   {"f_cool_knots", sys.engine.f_cool_knots},
                   {"f_lub_knots", sys.engine.f_lub_knots}};
    j["stack"] = {{"n_cell", sys.stack.n_cell},
                  {"a_cell_cm2", sys.stack.a_cell_cm2},
                  {"temperature_k", sys.stack.temperature_k},
                  {"p_h2_kpa", sys.stack.p_h2_kpa},
                  {"p_o2_kpa", sys.stack.p_o2_kpa},
                  {"alpha", sys.stack.alpha},
                  {"i0_a_cm2", sys.stack.i0_a_cm2},
                  {"i_lim_a_cm2", sys.stack.i_lim_a_cm2},
                  {"membrane_thickness_cm", sys.stack.membrane_thickness_cm},
                  {"membrane_conductivity", sys.stack.membrane_conductivity},
                  {"min_load_kw", sys.stack.min_load_kw}};
    j["system"] = {{"tank_temperature_k", sys.tank_temperature_k},
                   {"t_dec_k", sys.t_dec_k},
                   {"pump_isentropic_eff", sys.pump_isentropic_eff},
                   {"comp_isentropic_eff", sys.comp_isentropic_eff},
                   {"comp_pressure_ratio", sys.comp_pressure_ratio},
                   {"fc_air_stoich", sys.fc_air_stoich},
                   {"excess_air_ratio", sys.excess_air_ratio},
                   {"nh3_liquid_density_kg_m3", sys.nh3_liquid_density_kg_m3},
                   {"tank_pressure_kpa", sys.tank_pressure_kpa},
                   {"delivery_temperature_k", sys.delivery_temperature_k},
                   {"exhaust_below_dec_to_low_pool", sys.exhaust_below_dec_to_low_pool}};
    j["explore"] = {{"grid_step_kw", explore.grid_step_kw},
                    {"wgen_min_kw", explore.wgen_min_kw},
                    {"wgen_max_kw", explore.wgen_max_kw},
                    {"wfc_min_kw", explore.wfc_min_kw},
                    {"wfc_max_kw", explore.wfc_max_kw},
                    {"ghsv_ladder", explore.ghsv_ladder},
                    {"r_values", explore.r_values},
                    {"total_rated_kw", explore.total_rated_kw},
                    {"curve_target_step_kw", explore.curve_target_step_kw}};
    return j.dump();
}

std::string RunConfig::fingerprint() const {
    const std::string s = canonical_json();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace nh3power::config
