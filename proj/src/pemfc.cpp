#include "nh3power/pemfc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nh3power/errors.hpp"
#include "nh3power/numerics.hpp"

namespace nh3power::pemfc {

namespace {
// Golden-section maximization of stack power over (i0, i_lim).
PowerPeak golden_peak(const FcStack& stack) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = stack.i0_a_cm2;
    double b = stack.i_lim_a_cm2 * (1.0 - 1e-9);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    auto p = [&](double i) { return stack_power_kw(i, stack); };
    double pc = p(c), pd = p(d);
    for (int iter = 0; iter < 200 && (b - a) > 1e-13 * stack.i_lim_a_cm2; ++iter) {
        if (pc > pd) {
            b = d; d = c; pd = pc;
            c = b - gr * (b - a);
            pc = p(c);
        } else {
            a = c; c = d; pc = pd;
            d = a + gr * (b - a);
            pd = p(d);
        }
    }
    const double i = 0.5 * (a + b);
    return {i, p(i)};
}
} // namespace

void FcStack::check() const {
    if (n_cell <= 0 || a_cell_cm2 <= 0.0) throw ConfigError("fc stack geometry must be positive");
    if (alpha <= 0.0 || alpha > 1.0) throw ConfigError("fc alpha must lie in (0, 1]");
    if (i0_a_cm2 <= 0.0 || i_lim_a_cm2 <= 0.0 || i0_a_cm2 >= i_lim_a_cm2)
        throw ConfigError("fc current densities must satisfy 0 < i0 < i_lim");
    if (p_h2_kpa <= 0.0 || p_o2_kpa <= 0.0) throw ConfigError("fc partial pressures must be > 0");
    if (membrane_thickness_cm <= 0.0 || membrane_conductivity <= 0.0)
        throw ConfigError("fc membrane parameters must be positive");
    if (min_load_kw < 0.0) throw ConfigError("fc minimum load must be >= 0");
}

FcStack FcStack::rescaled_cells(double power_scale) const {
    if (power_scale <= 0.0) throw std::invalid_argument("rescaled_cells: scale must be > 0");
    FcStack s = *this;
    s.n_cell = std::max(1, static_cast<int>(std::lround(n_cell * power_scale)));
    s.min_load_kw = min_load_kw * power_scale;
    return s;
}

double standard_voltage(double t_k) {
    return 1.229 - 8.5e-4 * (t_k - T_REF_K);
}

double nernst(const FcStack& stack) {
    if (stack.p_h2_kpa <= 0.0 || stack.p_o2_kpa <= 0.0)
        throw std::invalid_argument("nernst: partial pressures must be > 0");
    const double rt_2f = R_GAS * stack.temperature_k / (2.0 * FARADAY);
    return standard_voltage(stack.temperature_k) +
           rt_2f * std::log(stack.p_h2_kpa / P_REF_KPA *
                            std::sqrt(stack.p_o2_kpa / P_REF_KPA));
}

double cell_voltage(double i_a_cm2, const FcStack& stack) {
    if (i_a_cm2 <= 0.0) throw std::invalid_argument("cell_voltage: current density must be > 0");
    if (i_a_cm2 >= stack.i_lim_a_cm2)
        throw InfeasibleError("cell_voltage: current density " + std::to_string(i_a_cm2) +
                              " A/cm^2 at or above limiting " +
                              std::to_string(stack.i_lim_a_cm2) + " A/cm^2");
    const double rt = R_GAS * stack.temperature_k;
    const double eta_act = (i_a_cm2 > stack.i0_a_cm2)
                               ? rt / (2.0 * stack.alpha * FARADAY) *
                                     std::log(i_a_cm2 / stack.i0_a_cm2)
                               : 0.0;
    const double eta_conc =
        rt / (2.0 * FARADAY) * std::log(stack.i_lim_a_cm2 / (stack.i_lim_a_cm2 - i_a_cm2));
    const double eta_ohm = i_a_cm2 * stack.r_ohm();
    return nernst(stack) - eta_act - eta_conc - eta_ohm;
}

double cell_voltage_slope(double i_a_cm2, const FcStack& stack) {
    const double rt = R_GAS * stack.temperature_k;
    return -rt / (2.0 * stack.alpha * FARADAY) / i_a_cm2 -
           rt / (2.0 * FARADAY) / (stack.i_lim_a_cm2 - i_a_cm2) - stack.r_ohm();
}

double stack_power_kw(double i_a_cm2, const FcStack& stack) {
    return stack.area_total_cm2() * cell_voltage(i_a_cm2, stack) * i_a_cm2 / 1000.0;
}

PowerPeak max_power(const FcStack& stack) {
    return golden_peak(stack);
}

double hydrogen_flow(double i_a_cm2, const FcStack& stack) {
    if (i_a_cm2 < 0.0) throw std::invalid_argument("hydrogen_flow: current must be >= 0");
    return stack.area_total_cm2() * i_a_cm2 * molar_mass(Species::H2) / (2.0 * FARADAY);
}

FcOperatingPoint solve_current_for_power(const thermo::ThermoDb& db, double power_kw,
                                         const FcStack& stack) {
    if (power_kw <= 0.0)
        throw std::invalid_argument("solve_current_for_power: power must be > 0");
    const PowerPeak peak = golden_peak(stack);
    if (power_kw > peak.power_kw * (1.0 + 1e-12))
        throw InfeasibleError("fc power " + std::to_string(power_kw) + " kW above stack maximum " +
                              std::to_string(peak.power_kw) + " kW");

    // Low-current branch: P(i) rises monotonically from 0 toward the peak.
    double i;
    if (power_kw >= peak.power_kw) {
        i = peak.i_a_cm2;
    } else {
        const double i_lo = power_kw * 1000.0 / (stack.area_total_cm2() * nernst(stack));
        i = numerics::brent(
            [&](double ii) { return stack_power_kw(ii, stack) - power_kw; },
            std::min(i_lo, peak.i_a_cm2), peak.i_a_cm2, 0.0, 1e-13, power_kw * 1e-9);
    }

    FcOperatingPoint pt;
    pt.current_density_a_cm2 = i;
    pt.cell_voltage_v = cell_voltage(i, stack);
    pt.power_kw = stack.area_total_cm2() * pt.cell_voltage_v * i / 1000.0;
    pt.h2_flow_g_s = hydrogen_flow(i, stack);
    const double fuel_kw = pt.h2_flow_g_s * thermo::lhv(db, Species::H2);
    pt.efficiency = pt.power_kw / fuel_kw;
    pt.heat_rejection_kw = fuel_kw - pt.power_kw;
    return pt;
}

double efficiency(const thermo::ThermoDb& db, double power_kw, const FcStack& stack) {
    return solve_current_for_power(db, power_kw, stack).efficiency;
}

} // namespace nh3power::pemfc
