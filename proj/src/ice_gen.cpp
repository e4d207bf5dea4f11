#include "nh3power/ice_gen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nh3power/errors.hpp"

namespace nh3power::icegen {

namespace {
constexpr double N2_PER_O2_IN_AIR = 79.0 / 21.0;
}

EngineCurve EngineCurve::builtin() {
    EngineCurve c;
    // Calibration anchored at the 39.34% combined peak at 89.5 kW; the
    // heat-split tables put the exhaust near 860 K across the envelope.
    c.power_knots_kw = {5.0, 20.0, 40.0, 60.0, 75.0, 89.5, 110.0, 130.0, 160.0, 190.0, 210.0, 230.0};
    c.eta_knots = {0.170, 0.300, 0.355, 0.378, 0.388, 0.3934, 0.391, 0.384, 0.366, 0.340, 0.320, 0.2875};
    c.f_lub_knots.assign(c.power_knots_kw.size(), 0.06);
    c.f_cool_knots.resize(c.power_knots_kw.size());
    for (std::size_t i = 0; i < c.power_knots_kw.size(); ++i) {
        c.f_cool_knots[i] = 1.0 - c.eta_knots[i] / c.generator_efficiency - 0.06 - 0.2675;
    }
    c.check();
    return c;
}

void EngineCurve::build_interpolants() const {
    eta_i_ = numerics::Pchip(power_knots_kw, eta_knots);
    cool_i_ = numerics::Pchip(power_knots_kw, f_cool_knots);
    lub_i_ = numerics::Pchip(power_knots_kw, f_lub_knots);
}

void EngineCurve::check() const {
    if (power_knots_kw.size() < 2 || eta_knots.size() != power_knots_kw.size() ||
        f_cool_knots.size() != power_knots_kw.size() ||
        f_lub_knots.size() != power_knots_kw.size())
        throw ConfigError("engine curve tables must share at least two knots");
    if (hydrogen_mole_ratio < 0.0 || hydrogen_mole_ratio > 1.0)
        throw ConfigError("hydrogen mole ratio must lie in [0, 1]");
    if (power_knots_kw.front() > power_min_kw || power_knots_kw.back() < power_max_kw)
        throw ConfigError("engine curve knots must cover the power envelope");
    build_interpolants();
    const double cap = max_thermal_efficiency * generator_efficiency;
    double prev_fuel = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double p = power_min_kw + (power_max_kw - power_min_kw) * i / 400.0;
        const double e = eta_i_(p);
        if (e <= 0.0 || e > cap + 1e-12)
            throw ConfigError("engine efficiency outside (0, max_thermal*eta_gen] at " +
                              std::to_string(p) + " kW");
        if (cool_i_(p) + lub_i_(p) + e / generator_efficiency > 1.0 + 1e-12)
            throw ConfigError("heat splits plus thermal efficiency exceed unity at " +
                              std::to_string(p) + " kW");
        const double fuel = p / e;
        if (fuel <= prev_fuel)
            throw ConfigError("fuel flow must increase with power (violated near " +
                              std::to_string(p) + " kW)");
        prev_fuel = fuel;
    }
}

double EngineCurve::eta(double p_gen_kw) const {
    if (p_gen_kw < power_min_kw || p_gen_kw > power_max_kw)
        throw InfeasibleError("generator power " + std::to_string(p_gen_kw) +
                              " kW outside envelope [" + std::to_string(power_min_kw) + ", " +
                              std::to_string(power_max_kw) + "] kW");
    if (eta_i_.empty()) build_interpolants();
    return eta_i_(p_gen_kw);
}

double EngineCurve::f_cool(double p_gen_kw) const {
    if (cool_i_.empty()) build_interpolants();
    return cool_i_(p_gen_kw);
}

double EngineCurve::f_lub(double p_gen_kw) const {
    if (lub_i_.empty()) build_interpolants();
    return lub_i_(p_gen_kw);
}

EngineCurve EngineCurve::rescaled(double new_max_kw) const {
    if (new_max_kw <= 0.0) throw std::invalid_argument("rescaled: rated power must be > 0");
    EngineCurve c = *this;
    const double s = new_max_kw / power_max_kw;
    for (double& p : c.power_knots_kw) p *= s;
    c.power_min_kw *= s;
    c.power_max_kw = new_max_kw;
    c.build_interpolants();
    return c;
}

GasStream combustion_products(double a, double lambda, double fuel_flow_mol_s) {
    if (a < 0.0 || a > 1.0) throw std::invalid_argument("combustion: a must lie in [0, 1]");
    if (lambda < 1.0)
        throw std::invalid_argument("combustion: rich mixtures (lambda < 1) unsupported");
    if (fuel_flow_mol_s < 0.0) throw std::invalid_argument("combustion: negative fuel flow");

    const double o2_stoich = 0.75 * (1.0 - a) + 0.5 * a; // per mol fuel
    GasStream out;
    out.flow(Species::H2O) = (1.5 * (1.0 - a) + a) * fuel_flow_mol_s;
    out.flow(Species::N2) =
        (0.5 * (1.0 - a) + N2_PER_O2_IN_AIR * lambda * o2_stoich) * fuel_flow_mol_s;
    out.flow(Species::O2) = (lambda - 1.0) * o2_stoich * fuel_flow_mol_s;
    return out;
}

FuelFlows fuel_for_power(const thermo::ThermoDb& db, double w_gen_kw, const EngineCurve& curve) {
    const double eta = curve.eta(w_gen_kw);
    const double lhv_in_kw = w_gen_kw / eta;
    const double a = curve.hydrogen_mole_ratio;
    // kJ per mol of the (1-a) NH3 + a H2 fuel mixture
    const double lhv_mol =
        (1.0 - a) * molar_mass(Species::NH3) * thermo::lhv(db, Species::NH3) +
        a * molar_mass(Species::H2) * thermo::lhv(db, Species::H2);
    const double fuel_mol_s = lhv_in_kw / lhv_mol;
    return {(1.0 - a) * fuel_mol_s * molar_mass(Species::NH3),
            a * fuel_mol_s * molar_mass(Species::H2), fuel_mol_s};
}

IceOperatingPoint energy_balance(const thermo::ThermoDb& db, double w_gen_kw,
                                 const EngineCurve& curve, double lambda) {
    const double eta = curve.eta(w_gen_kw);
    const FuelFlows fuel = fuel_for_power(db, w_gen_kw, curve);

    IceOperatingPoint pt;
    pt.w_gen_kw = w_gen_kw;
    pt.w_ice_kw = w_gen_kw / curve.generator_efficiency;
    pt.fuel_lhv_kw = w_gen_kw / eta;
    pt.nh3_flow_g_s = fuel.nh3_g_s;
    pt.h2_flow_g_s = fuel.h2_g_s;
    pt.excess_air_ratio = lambda;
    pt.q_cool_kw = curve.f_cool(w_gen_kw) * pt.fuel_lhv_kw;
    pt.q_lub_kw = curve.f_lub(w_gen_kw) * pt.fuel_lhv_kw;
    pt.q_exhaust_kw = pt.fuel_lhv_kw - pt.w_ice_kw - pt.q_cool_kw - pt.q_lub_kw;
    if (pt.q_exhaust_kw < 0.0)
        throw ConfigError("energy_balance: heat splits leave negative exhaust duty at " +
                          std::to_string(w_gen_kw) + " kW");

    pt.exhaust = combustion_products(curve.hydrogen_mole_ratio, lambda, fuel.fuel_mol_s);
    const double o2_stoich = 0.75 * (1.0 - curve.hydrogen_mole_ratio) +
                             0.5 * curve.hydrogen_mole_ratio;
    pt.air_flow_g_s = lambda * o2_stoich * fuel.fuel_mol_s * (1.0 + N2_PER_O2_IN_AIR) *
                      molar_mass(Species::AIR);

    // Exhaust temperature carries exactly the balance remainder.
    const double q_w = pt.q_exhaust_kw * 1000.0;
    auto residual = [&](double t) {
        return thermo::stream_enthalpy_delta(db, pt.exhaust, T_REF_K, t) - q_w;
    };
    const double t_hi = 1500.0;
    if (residual(t_hi) < 0.0)
        throw ConfigError("energy_balance: implied exhaust temperature above " +
                          std::to_string(t_hi) + " K; heat-split calibration inconsistent");
    pt.exhaust.temperature_k = numerics::brent(residual, T_REF_K, t_hi, 1e-9, 1e-12);
    return pt;
}

double high_temp_heat(const thermo::ThermoDb& db, const IceOperatingPoint& point, double t_dec_k) {
    if (point.exhaust.temperature_k <= t_dec_k) return 0.0;
    return thermo::stream_enthalpy_delta(db, point.exhaust, t_dec_k,
                                         point.exhaust.temperature_k) / 1000.0;
}

} // namespace nh3power::icegen
