#include "nh3power/system.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nh3power::system {

Topology topology_from_string(const std::string& name) {
    if (name == "ice" || name == "ice_hybrid" || name == "IceHybrid") return Topology::IceHybrid;
    if (name == "fc" || name == "fc_hybrid" || name == "FcHybrid") return Topology::FcHybrid;
    if (name == "composite" || name == "Composite") return Topology::Composite;
    throw std::invalid_argument("unknown topology '" + name + "' (expected ice|fc|composite)");
}

const char* topology_name(Topology t) {
    switch (t) {
        case Topology::IceHybrid: return "ice";
        case Topology::FcHybrid: return "fc";
        case Topology::Composite: return "composite";
    }
    return "?";
}

void SystemConfig::check() const {
    engine.check();
    stack.check();
    bed.check();
    if (pump_isentropic_eff <= 0.0 || pump_isentropic_eff > 1.0 || comp_isentropic_eff <= 0.0 ||
        comp_isentropic_eff > 1.0)
        throw ConfigError("isentropic efficiencies must lie in (0, 1]");
    if (comp_pressure_ratio < 1.0) throw ConfigError("compressor pressure ratio must be >= 1");
    if (fc_air_stoich < 1.0) throw ConfigError("fc air stoichiometry must be >= 1");
    if (excess_air_ratio < 1.0) throw ConfigError("excess air ratio must be >= 1");
    if (nh3_liquid_density_kg_m3 <= 0.0) throw ConfigError("nh3 liquid density must be > 0");
    if (t_dec_k <= tank_temperature_k) throw ConfigError("t_dec must exceed tank temperature");
    if (delivery_temperature_k < T_REF_K || delivery_temperature_k > t_dec_k)
        throw ConfigError("delivery temperature must lie in [298.15, t_dec]");
    if (std::abs(bed.temperature_k - t_dec_k) > 1e-9)
        throw ConfigError("catalyst bed temperature must equal t_dec");
}

FlowSolution material_balance(const SystemConfig& cfg, double w_gen_kw, double w_fc_kw) {
    if (w_gen_kw < 0.0 || w_fc_kw < 0.0)
        throw std::invalid_argument("material_balance: power targets must be >= 0");
    if (cfg.topology == Topology::IceHybrid && w_fc_kw != 0.0)
        throw std::invalid_argument("material_balance: IceHybrid has no fuel cell");
    if (cfg.topology == Topology::FcHybrid && w_gen_kw != 0.0)
        throw std::invalid_argument("material_balance: FcHybrid has no ICE");

    FlowSolution sol;
    double h2_ice_mol_s = 0.0;
    double nh3_ice_mol_s = 0.0;
    if (w_gen_kw > 0.0) {
        const icegen::FuelFlows fuel = icegen::fuel_for_power(cfg.thermo_db, w_gen_kw, cfg.engine);
        sol.ice_fuel_mol_s = fuel.fuel_mol_s;
        h2_ice_mol_s = cfg.engine.hydrogen_mole_ratio * fuel.fuel_mol_s;
        nh3_ice_mol_s = (1.0 - cfg.engine.hydrogen_mole_ratio) * fuel.fuel_mol_s;
    }
    if (w_fc_kw > 0.0) {
        if (w_fc_kw < cfg.stack.min_load_kw * (1.0 - 1e-12))
            throw InfeasibleError("fc power " + std::to_string(w_fc_kw) +
                                  " kW below stack minimum load " +
                                  std::to_string(cfg.stack.min_load_kw) + " kW");
        const pemfc::FcOperatingPoint pt =
            pemfc::solve_current_for_power(cfg.thermo_db, w_fc_kw, cfg.stack);
        sol.fc_h2_mol_s = pt.h2_flow_g_s / molar_mass(Species::H2);
    }

    const double h2_total = h2_ice_mol_s + sol.fc_h2_mol_s;
    if (h2_total > 0.0) {
        const adu::FeedSolution feed = adu::solve_feed_for_h2(cfg.thermo_db, h2_total, cfg.bed);
        sol.adu_feed_mol_s = feed.nh3_feed_mol_s;
        sol.conversion = feed.conversion;

        sol.adu_outlet.temperature_k = cfg.bed.temperature_k;
        sol.adu_outlet.pressure_kpa = cfg.bed.pressure_kpa;
        const double slip = (1.0 - feed.conversion) * feed.nh3_feed_mol_s;
        const double n2 = 0.5 * feed.conversion * feed.nh3_feed_mol_s;
        sol.adu_outlet.flow(Species::NH3) = slip;
        sol.adu_outlet.flow(Species::H2) = 1.5 * feed.conversion * feed.nh3_feed_mol_s;
        sol.adu_outlet.flow(Species::N2) = n2;

        sol.ice_branch_frac = h2_ice_mol_s / h2_total;
        const double slip_to_ice = sol.ice_branch_frac * slip;
        sol.direct_nh3_mol_s = nh3_ice_mol_s - slip_to_ice;
        if (sol.direct_nh3_mol_s < -1e-12 * std::max(nh3_ice_mol_s, 1.0))
            throw InfeasibleError(
                "material_balance: ADU ammonia slip exceeds the ICE fuel demand "
                "(conversion bottleneck; X = " +
                std::to_string(feed.conversion) + ")");
        sol.direct_nh3_mol_s = std::max(sol.direct_nh3_mol_s, 0.0);

        sol.retentate.temperature_k = cfg.delivery_temperature_k;
        sol.retentate.pressure_kpa = cfg.bed.pressure_kpa;
        sol.retentate.flow(Species::NH3) = (1.0 - sol.ice_branch_frac) * slip;
        sol.retentate.flow(Species::N2) = (1.0 - sol.ice_branch_frac) * n2;
    } else {
        sol.direct_nh3_mol_s = nh3_ice_mol_s;
    }
    sol.total_nh3_mol_s = sol.direct_nh3_mol_s + sol.adu_feed_mol_s;
    return sol;
}

double pump_power(double nh3_mass_flow_g_s, const SystemConfig& cfg) {
    if (nh3_mass_flow_g_s < 0.0) throw std::invalid_argument("pump_power: flow must be >= 0");
    const double dp_pa = std::max(0.0, (cfg.bed.pressure_kpa - cfg.tank_pressure_kpa) * 1000.0);
    const double vol_m3_s = nh3_mass_flow_g_s * 1e-3 / cfg.nh3_liquid_density_kg_m3;
    return vol_m3_s * dp_pa / cfg.pump_isentropic_eff / 1000.0;
}

double compressor_power(const thermo::ThermoDb& db, double air_mass_flow_g_s,
                        const SystemConfig& cfg) {
    if (air_mass_flow_g_s < 0.0) throw std::invalid_argument("compressor_power: flow must be >= 0");
    if (cfg.comp_pressure_ratio < 1.0)
        throw std::invalid_argument("compressor_power: pressure ratio must be >= 1");
    const double t_in = T_REF_K;
    const double cp_mol = thermo::cp_mol(db, Species::AIR, t_in); // J/(mol K)
    const double gamma = cp_mol / (cp_mol - R_GAS);
    const double cp_mass = cp_mol / molar_mass(Species::AIR);     // J/(g K)
    const double head = std::pow(cfg.comp_pressure_ratio, (gamma - 1.0) / gamma) - 1.0;
    return air_mass_flow_g_s * cp_mass * t_in * head / cfg.comp_isentropic_eff / 1e6;
}

SystemResult evaluate(const SystemConfig& cfg, double w_gen_kw, double w_fc_kw) {
    SystemResult res;
    res.w_gen_kw = w_gen_kw;
    res.w_fc_kw = w_fc_kw;
    if (w_gen_kw == 0.0 && w_fc_kw == 0.0) return res;

    const thermo::ThermoDb& db = cfg.thermo_db;
    res.flows = material_balance(cfg, w_gen_kw, w_fc_kw);
    const FlowSolution& fl = res.flows;

    double q_cool_ice = 0.0, q_lub = 0.0, q_exh_total = 0.0, q_high = 0.0, gen_loss = 0.0;
    if (w_gen_kw > 0.0) {
        res.ice = icegen::energy_balance(db, w_gen_kw, cfg.engine, cfg.excess_air_ratio);
        const icegen::IceOperatingPoint& pt = *res.ice;
        q_cool_ice = pt.q_cool_kw;
        q_lub = pt.q_lub_kw;
        q_exh_total = pt.q_exhaust_kw;
        q_high = icegen::high_temp_heat(db, pt, cfg.t_dec_k);
        gen_loss = pt.w_ice_kw - pt.w_gen_kw;
        res.eta_ice_gen = cfg.engine.eta(w_gen_kw);
    }

    double q_fc = 0.0, fc_air_g_s = 0.0;
    if (w_fc_kw > 0.0) {
        res.fc = pemfc::solve_current_for_power(db, w_fc_kw, cfg.stack);
        q_fc = res.fc->heat_rejection_kw;
        res.eta_fc = res.fc->efficiency;
        const double o2_mol_s = 0.5 * fl.fc_h2_mol_s;
        fc_air_g_s = cfg.fc_air_stoich * o2_mol_s / 0.21 * molar_mass(Species::AIR);
    }

    // Hydrogen-production duties (feed-forward: loads on the output, not
    // feedback into the flows).
    res.q_pre_kw = thermo::preheat_duty(db, fl.adu_feed_mol_s, cfg.tank_temperature_k,
                                        cfg.t_dec_k) / 1000.0;
    res.q_dec_kw = fl.adu_feed_mol_s * fl.conversion *
                   thermo::decomposition_enthalpy(db, cfg.t_dec_k);

    // Product-gas sensible heat released cooling the ADU outlet to the
    // delivery temperature feeds the low-temperature pool.
    double q_prod = 0.0;
    double delivery_sensible = 0.0;
    if (fl.adu_feed_mol_s > 0.0) {
        q_prod = thermo::stream_enthalpy_delta(db, fl.adu_outlet, cfg.delivery_temperature_k,
                                               cfg.bed.temperature_k) / 1000.0;
        delivery_sensible = thermo::stream_enthalpy_delta(db, fl.adu_outlet, T_REF_K,
                                                          cfg.delivery_temperature_k) / 1000.0;
    }

    double exhaust_below_dec = std::max(0.0, q_exh_total - q_high);
    double q_low_extra = 0.0;
    if (cfg.exhaust_below_dec_to_low_pool) {
        q_low_extra = exhaust_below_dec;
        exhaust_below_dec = 0.0;
    }
    res.pools = recovery::make_pools(q_high, q_cool_ice + q_low_extra, q_fc, q_prod);
    res.heat = recovery::apply_measure(cfg.measure, res.q_pre_kw, res.q_dec_kw, res.pools);
    res.heater_kw = res.heat.heater_kw;

    res.nh3_total_g_s = fl.total_nh3_mol_s * molar_mass(Species::NH3);
    res.nh3_direct_g_s = fl.direct_nh3_mol_s * molar_mass(Species::NH3);
    res.adu_feed_g_s = fl.adu_feed_mol_s * molar_mass(Species::NH3);
    res.conversion = fl.conversion;
    res.ghsv_per_h = (fl.adu_feed_mol_s > 0.0) ? adu::ghsv_per_h(cfg.bed, fl.adu_feed_mol_s) : 0.0;
    res.pump_kw = pump_power(res.nh3_total_g_s, cfg);
    res.compressor_kw = compressor_power(db, fc_air_g_s, cfg);

    res.w_sys_kw = w_gen_kw + w_fc_kw - res.pump_kw - res.compressor_kw - res.heater_kw;
    const double lhv_nh3_mol = molar_mass(Species::NH3) * thermo::lhv(db, Species::NH3);
    const double fuel_lhv = fl.total_nh3_mol_s * lhv_nh3_mol;
    res.eta_sys = (fuel_lhv > 0.0) ? res.w_sys_kw / fuel_lhv : 0.0;
    res.retentate_nh3_lhv_kw = fl.retentate.flow(Species::NH3) * lhv_nh3_mol;

    // Energy ledger: a partition of the fuel LHV into non-overlapping
    // destinations. The dec-duty/LHV-uplift mismatch and the tank sensible
    // offset land in the chemistry residual.
    EnergyLedger& led = res.ledger;
    led.fuel_lhv_kw = fuel_lhv;
    led.useful_work_kw = res.w_sys_kw;
    led.aux_power_kw = res.pump_kw + res.compressor_kw;
    led.generator_loss_kw = gen_loss;
    led.friction_loss_kw = q_lub;
    led.exhaust_below_dec_kw = exhaust_below_dec;
    led.high_t_unrecovered_kw = res.pools.q_high_kw - res.heat.high_recovered_kw;
    led.low_t_unrecovered_kw = res.pools.q_low_kw - res.heat.low_recovered_kw;
    led.retentate_lhv_kw = res.retentate_nh3_lhv_kw;
    led.vaporization_kw = fl.adu_feed_mol_s * db.latent_nh3_kj_mol;
    led.delivery_sensible_kw = delivery_sensible;
    const double uplift_kj_mol = 1.5 * molar_mass(Species::H2) * thermo::lhv(db, Species::H2) -
                                 lhv_nh3_mol;
    const double tank_sens_kw =
        fl.adu_feed_mol_s *
        thermo::sensible_enthalpy(db, Species::NH3, cfg.tank_temperature_k) / 1000.0;
    led.chemistry_residual_kw =
        fl.adu_feed_mol_s * fl.conversion * (db.dec_enthalpy_ref_kj_mol - uplift_kj_mol) -
        tank_sens_kw;
    return res;
}

} // namespace nh3power::system
