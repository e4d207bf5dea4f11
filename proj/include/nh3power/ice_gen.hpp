#ifndef NH3POWER_ICE_GEN_HPP
#define NH3POWER_ICE_GEN_HPP

#include <vector>

#include "nh3power/gas_stream.hpp"
#include "nh3power/numerics.hpp"
#include "nh3power/thermo.hpp"

namespace nh3power::icegen {

// Calibrated ammonia-hydrogen ICE plus generator. The combined electric
// efficiency eta(P_gen) and the coolant/friction heat-split fractions are
// tabulated calibration data with monotone-preserving interpolation; the
// generator efficiency splits mechanical from electric power inside the
// energy balance.
struct EngineCurve {
    double hydrogen_mole_ratio = 0.2; // a, mole fraction of H2 in the fuel
    double max_thermal_efficiency = 0.425;
    double generator_efficiency = 0.926;
    double nh3_injection_mpa = 0.6;
    double h2_injection_mpa = 2.5;
    double power_min_kw = 5.0;
    double power_max_kw = 230.0;

    std::vector<double> power_knots_kw;
    std::vector<double> eta_knots;    // combined ICE-Gen electric efficiency
    std::vector<double> f_cool_knots; // coolant fraction of fuel LHV
    std::vector<double> f_lub_knots;  // friction/lubrication fraction of fuel LHV

    static EngineCurve builtin();
    void check() const;

    double eta(double p_gen_kw) const;
    double f_cool(double p_gen_kw) const;
    double f_lub(double p_gen_kw) const;

    // Rescales the envelope to a new rated power, keeping eta(P/P_max) and
    // the split fractions shape-invariant.
    EngineCurve rescaled(double new_max_kw) const;

  private:
    void build_interpolants() const;
    mutable numerics::Pchip eta_i_, cool_i_, lub_i_;
};

struct IceOperatingPoint {
    double w_gen_kw = 0.0;
    double w_ice_kw = 0.0; // mechanical power
    double fuel_lhv_kw = 0.0;
    double nh3_flow_g_s = 0.0;
    double h2_flow_g_s = 0.0;
    double air_flow_g_s = 0.0;
    double excess_air_ratio = 1.0;
    GasStream exhaust; // combustion products at the solved temperature
    double q_exhaust_kw = 0.0;
    double q_cool_kw = 0.0;
    double q_lub_kw = 0.0;
};

// Complete-combustion products of the (1-a) NH3 + a H2 fuel mixture with
// excess-air ratio lambda >= 1. Oxidizer charge included in the result.
GasStream combustion_products(double a, double lambda, double fuel_flow_mol_s);

struct FuelFlows {
    double nh3_g_s;
    double h2_g_s;
    double fuel_mol_s;
};

// Fuel flows that produce w_gen at the curve's efficiency, split at the
// hydrogen mole ratio.
FuelFlows fuel_for_power(const thermo::ThermoDb& db, double w_gen_kw, const EngineCurve& curve);

// Full energy balance at a generator setpoint: fuel LHV splits into
// mechanical power, coolant, friction and exhaust; the exhaust temperature
// is solved so the exhaust stream carries exactly the balance remainder.
IceOperatingPoint energy_balance(const thermo::ThermoDb& db, double w_gen_kw,
                                 const EngineCurve& curve, double lambda = 1.0);

// Exhaust enthalpy recoverable above the decomposition temperature [kW];
// clamps at zero when the exhaust is no hotter than t_dec.
double high_temp_heat(const thermo::ThermoDb& db, const IceOperatingPoint& point, double t_dec_k);

} // namespace nh3power::icegen

#endif
