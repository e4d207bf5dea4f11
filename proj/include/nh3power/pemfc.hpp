#ifndef NH3POWER_PEMFC_HPP
#define NH3POWER_PEMFC_HPP

#include "nh3power/species.hpp"
#include "nh3power/thermo.hpp"

namespace nh3power::pemfc {

// PEM stack polarization parameters. Every constant is calibration data;
// the shipped set is tuned so the stack efficiency is about 65% at its
// declared minimum load.
struct FcStack {
    int n_cell = 1460;
    double a_cell_cm2 = 280.0;
    double temperature_k = 353.15;
    double p_h2_kpa = 150.0;
    double p_o2_kpa = 30.0;
    double alpha = 0.46;            // charge transfer coefficient
    double i0_a_cm2 = 5e-8;         // exchange current density
    double i_lim_a_cm2 = 1.5;       // limiting current density
    double membrane_thickness_cm = 0.0125;
    double membrane_conductivity = 0.1; // 1/(ohm cm)
    double min_load_kw = 1.0;           // declared turndown floor

    static FcStack builtin() { return FcStack{}; }
    void check() const;

    double area_total_cm2() const { return n_cell * a_cell_cm2; }
    double r_ohm() const { return membrane_thickness_cm / membrane_conductivity; }

    // Stack rescaled by cell count to a new approximate rating; cell
    // physics unchanged.
    FcStack rescaled_cells(double power_scale) const;
};

struct FcOperatingPoint {
    double current_density_a_cm2 = 0.0;
    double cell_voltage_v = 0.0;
    double power_kw = 0.0;
    double h2_flow_g_s = 0.0;
    double heat_rejection_kw = 0.0;
    double efficiency = 0.0;
};

// Standard-pressure Nernst voltage E_T0(T) [V].
double standard_voltage(double t_k);

// Reversible potential including the partial-pressure correction [V].
double nernst(const FcStack& stack);

// Cell voltage at current density i [A/cm^2]; activation term clamps at
// zero below i0. Throws InfeasibleError at or above the limiting current.
double cell_voltage(double i_a_cm2, const FcStack& stack);

// Closed-form dV/di [A/cm^2 -> V per A/cm^2]; valid for i > i0.
double cell_voltage_slope(double i_a_cm2, const FcStack& stack);

// Stack electric power at current density i [kW].
double stack_power_kw(double i_a_cm2, const FcStack& stack);

// Maximum stack power over the feasible current range [kW] and its
// current density.
struct PowerPeak {
    double i_a_cm2;
    double power_kw;
};
PowerPeak max_power(const FcStack& stack);

// Hydrogen consumption by Faraday's law [g/s].
double hydrogen_flow(double i_a_cm2, const FcStack& stack);

// Inverts power to the low-current branch operating point (higher voltage
// root); power reproduced to 1e-6 relative.
FcOperatingPoint solve_current_for_power(const thermo::ThermoDb& db, double power_kw,
                                         const FcStack& stack);

// Stack efficiency W/(m_H2 LHV_H2) at the solved low-branch point.
double efficiency(const thermo::ThermoDb& db, double power_kw, const FcStack& stack);

} // namespace nh3power::pemfc

#endif
