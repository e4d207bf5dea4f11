#ifndef NH3POWER_SYSTEM_HPP
#define NH3POWER_SYSTEM_HPP

#include <optional>
#include <string>

#include "nh3power/adu.hpp"
#include "nh3power/gas_stream.hpp"
#include "nh3power/ice_gen.hpp"
#include "nh3power/pemfc.hpp"
#include "nh3power/recovery.hpp"
#include "nh3power/thermo.hpp"

namespace nh3power::system {

enum class Topology { IceHybrid, FcHybrid, Composite };

Topology topology_from_string(const std::string& name);
const char* topology_name(Topology t);

struct SystemConfig {
    Topology topology = Topology::Composite;
    recovery::Measure measure = recovery::Measure::IV;

    thermo::ThermoDb thermo_db = thermo::ThermoDb::builtin();
    icegen::EngineCurve engine = icegen::EngineCurve::builtin();
    pemfc::FcStack stack = pemfc::FcStack::builtin();
    adu::CatalystBed bed;

    double tank_temperature_k = 298.15;
    double t_dec_k = 723.15;
    double pump_isentropic_eff = 0.80;
    double comp_isentropic_eff = 0.80;
    double comp_pressure_ratio = 1.5;
    double fc_air_stoich = 2.0;
    double excess_air_ratio = 1.0; // ICE combustion
    double nh3_liquid_density_kg_m3 = 600.0;
    double tank_pressure_kpa = 860.0;
    double delivery_temperature_k = 353.15; // product gas cooled to this before the engines
    bool exhaust_below_dec_to_low_pool = false;

    void check() const;
};

// Resolved material-flow network at an operating point.
struct FlowSolution {
    double ice_fuel_mol_s = 0.0;   // (1-a) NH3 + a H2 fuel mixture to the ICE
    double fc_h2_mol_s = 0.0;      // pure H2 to the FC
    double adu_feed_mol_s = 0.0;   // NH3 into the decomposition unit
    double conversion = 0.0;       // ADU dissociation fraction
    double direct_nh3_mol_s = 0.0; // tank NH3 bypassing the ADU
    double ice_branch_frac = 0.0;  // share of the ADU outlet routed to the ICE
    GasStream adu_outlet;          // at bed temperature/pressure
    GasStream retentate;           // HSU reject: N2 + NH3 slip (counted as loss)
    double total_nh3_mol_s = 0.0;
};

// Energy accounting of one operating point. Categories partition the fuel
// LHV input; the acceptance suite checks their sum against it.
struct EnergyLedger {
    double fuel_lhv_kw = 0.0;          // denominator of eta_sys
    double useful_work_kw = 0.0;       // W_sys
    double aux_power_kw = 0.0;         // pump + compressor
    double generator_loss_kw = 0.0;
    double friction_loss_kw = 0.0;
    double exhaust_below_dec_kw = 0.0; // exhaust enthalpy not classified high-T
    double high_t_unrecovered_kw = 0.0;
    double low_t_unrecovered_kw = 0.0;
    double retentate_lhv_kw = 0.0;
    double vaporization_kw = 0.0;       // latent heat, lost from the books
    double delivery_sensible_kw = 0.0;  // product sensible above 298.15 K at delivery
    double chemistry_residual_kw = 0.0; // reference-enthalpy mismatch (46.1 vs LHV uplift)

    double categories_sum_kw() const {
        return useful_work_kw + aux_power_kw + generator_loss_kw + friction_loss_kw +
               exhaust_below_dec_kw + high_t_unrecovered_kw + low_t_unrecovered_kw +
               retentate_lhv_kw + vaporization_kw + delivery_sensible_kw + chemistry_residual_kw;
    }
};

struct SystemResult {
    double w_sys_kw = 0.0;
    double eta_sys = 0.0;
    double w_gen_kw = 0.0;
    double w_fc_kw = 0.0;
    double eta_ice_gen = 0.0; // 0 when the engine is off
    double eta_fc = 0.0;
    double nh3_total_g_s = 0.0;
    double nh3_direct_g_s = 0.0;
    double adu_feed_g_s = 0.0;
    double conversion = 0.0;
    double ghsv_per_h = 0.0;
    double retentate_nh3_lhv_kw = 0.0;
    double pump_kw = 0.0;
    double compressor_kw = 0.0;
    double heater_kw = 0.0;
    double q_pre_kw = 0.0;
    double q_dec_kw = 0.0;
    recovery::HeatPools pools;
    recovery::HeatLedger heat;
    EnergyLedger ledger;
    FlowSolution flows;
    std::optional<icegen::IceOperatingPoint> ice;
    std::optional<pemfc::FcOperatingPoint> fc;
};

// Resolves fuel flows, the ADU feed/conversion coupling and the HSU split
// for the requested engine setpoints (0 = engine off).
FlowSolution material_balance(const SystemConfig& cfg, double w_gen_kw, double w_fc_kw);

// Incompressible liquid pump work [kW].
double pump_power(double nh3_mass_flow_g_s, const SystemConfig& cfg);

// Ideal-gas isentropic compressor work [kW] for the FC cathode air.
double compressor_power(const thermo::ThermoDb& db, double air_mass_flow_g_s,
                        const SystemConfig& cfg);

// Full feed-forward evaluation of one operating point under the config's
// measure: flows -> engine balances -> duties -> recovery -> W_sys.
SystemResult evaluate(const SystemConfig& cfg, double w_gen_kw, double w_fc_kw);

} // namespace nh3power::system

#endif
