#include "nh3power/adu.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nh3power/numerics.hpp"

namespace nh3power::adu {

namespace {

constexpr double P_FLOOR_BAR = 1e-6; // regularization floor for the rate law

struct RateConstants {
    double k;       // k0 * exp(-E/RT)
    double beta;
    double keq_dec2; // (1/K_synth)^2, bar^2: equilibrium value of p_N2 p_H2^3 / p_NH3^2
};

RateConstants rate_constants(double t_k, const CatalystBed& bed) {
    const double k = bed.pre_exponential *
                     std::exp(-bed.activation_energy_kj_mol * 1000.0 / (R_GAS * t_k));
    const double keq_dec = 1.0 / thermo::equilibrium_constant(t_k);
    return {k, bed.beta, keq_dec * keq_dec};
}

double rate_from_constants(const RateConstants& rc, double p_nh3_bar, double p_h2_bar,
                           double p_n2_bar) {
    const double pa = std::max(p_nh3_bar, P_FLOOR_BAR);
    const double ph = std::max(p_h2_bar, P_FLOOR_BAR);
    const double pn = std::max(p_n2_bar, P_FLOOR_BAR);
    const double fwd = std::pow(pa * pa / (ph * ph * ph), rc.beta);
    // Reverse term rewritten through the reaction quotient; identical to
    // (p_N2/K^2)(p_H2^3/p_NH3^2)^(1-beta) and exactly zero at equilibrium.
    const double quotient = pn * ph * ph * ph / (pa * pa);
    return rc.k * fwd * (1.0 - quotient / rc.keq_dec2);
}

// Composition along the bed parameterized by reaction extent xi [mol/s]:
// n_NH3 = n0 - xi, n_H2 = n0_H2 + 1.5 xi, n_N2 = n0_N2 + 0.5 xi.
struct ExtentState {
    double nh3_0, h2_0, n2_0, inert, total_0;
    double pressure_bar;

    double rate_at(const RateConstants& rc, double xi) const {
        const double total = total_0 + xi;
        const double f = pressure_bar / total;
        return rate_from_constants(rc, (nh3_0 - xi) * f, (h2_0 + 1.5 * xi) * f,
                                   (n2_0 + 0.5 * xi) * f);
    }
};

// Cash-Karp 4(5) pair for the scalar extent ODE dxi/dz = R(xi) * A.
double integrate_extent(const ExtentState& st, const RateConstants& rc, double area_m2,
                        double length_m, double tol_mol_s) {
    // Species tolerance maps to extent through the largest stoichiometric
    // coefficient (1.5 for H2).
    const double tol_xi = tol_mol_s / 1.5;
    const double xi_max = st.nh3_0;

    auto deriv = [&](double xi) {
        if (xi >= xi_max) return 0.0;
        // Negative rates (super-equilibrium inlet) integrate toward synthesis;
        // the pressure floor keeps the rate finite at the composition bounds.
        return st.rate_at(rc, xi) * area_m2;
    };

    double z = 0.0;
    double xi = 0.0;
    double h = length_m / 1000.0;
    const double h_min = length_m * 1e-15;
    int steps = 0;
    const int max_steps = 2000000;

    while (z < length_m) {
        if (++steps > max_steps)
            throw NumericalError("integrate_pfr: step budget exhausted at z = " +
                                 std::to_string(z) + " m (xi = " + std::to_string(xi) + ")");
        if (z + h > length_m) h = length_m - z;

        const double k1 = deriv(xi);
        const double k2 = deriv(xi + h * (k1 / 5.0));
        const double k3 = deriv(xi + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
        const double k4 = deriv(xi + h * (3.0 / 10.0 * k1 - 9.0 / 10.0 * k2 + 6.0 / 5.0 * k3));
        const double k5 = deriv(xi + h * (-11.0 / 54.0 * k1 + 5.0 / 2.0 * k2 -
                                          70.0 / 27.0 * k3 + 35.0 / 27.0 * k4));
        const double k6 =
            deriv(xi + h * (1631.0 / 55296.0 * k1 + 175.0 / 512.0 * k2 + 575.0 / 13824.0 * k3 +
                            44275.0 / 110592.0 * k4 + 253.0 / 4096.0 * k5));

        const double xi5 = xi + h * (37.0 / 378.0 * k1 + 250.0 / 621.0 * k3 +
                                     125.0 / 594.0 * k4 + 512.0 / 1771.0 * k6);
        const double xi4 = xi + h * (2825.0 / 27648.0 * k1 + 18575.0 / 48384.0 * k3 +
                                     13525.0 / 55296.0 * k4 + 277.0 / 14336.0 * k5 +
                                     0.25 * k6);
        const double err = std::abs(xi5 - xi4);

        if (err <= tol_xi || h <= h_min) {
            z += h;
            xi = std::min(xi5, xi_max * (1.0 - 1e-15));
            const double grow = (err > 0.0) ? 0.9 * std::pow(tol_xi / err, 0.2) : 5.0;
            h *= std::clamp(grow, 0.2, 5.0);
        } else {
            h *= std::max(0.9 * std::pow(tol_xi / err, 0.25), 0.1);
            if (h < h_min)
                throw NumericalError("integrate_pfr: step size collapsed at z = " +
                                     std::to_string(z) + " m");
        }
    }
    return xi;
}

} // namespace

void CatalystBed::check() const {
    if (area_m2 <= 0.0 || length_m <= 0.0)
        throw ConfigError("catalyst bed dimensions must be positive");
    if (beta <= 0.0 || beta >= 1.0) throw ConfigError("catalyst beta must lie in (0, 1)");
    if (temperature_k <= 0.0 || pressure_kpa <= 0.0)
        throw ConfigError("catalyst bed temperature and pressure must be positive");
}

double rate(double t_k, double p_nh3_bar, double p_h2_bar, double p_n2_bar,
            const CatalystBed& bed) {
    if (t_k <= 0.0) throw std::invalid_argument("rate: temperature must be > 0");
    if (p_nh3_bar < 0.0 || p_h2_bar < 0.0 || p_n2_bar < 0.0)
        throw std::invalid_argument("rate: partial pressures must be >= 0");
    return rate_from_constants(rate_constants(t_k, bed), p_nh3_bar, p_h2_bar, p_n2_bar);
}

double equilibrium_conversion(double t_k, double pressure_kpa) {
    const double keq_dec = 1.0 / thermo::equilibrium_constant(t_k);
    const double p_bar = pressure_kpa / 100.0;
    // For pure NH3 feed at conversion x: p_N2 p_H2^3/p_NH3^2 =
    // 1.6875 P^2 x^4 / (1 - x^2)^2, so x^2/(1-x^2) = K/(P sqrt(1.6875)).
    const double c = keq_dec / (p_bar * std::sqrt(1.6875));
    return std::sqrt(c / (1.0 + c));
}

double ghsv_per_h(const CatalystBed& bed, double feed_mol_s) {
    const double vol_m3_s = feed_mol_s * R_GAS * bed.temperature_k / (bed.pressure_kpa * 1000.0);
    return vol_m3_s * 3600.0 / bed.volume_m3();
}

double feed_for_ghsv(const CatalystBed& bed, double ghsv) {
    const double vol_m3_s = ghsv * bed.volume_m3() / 3600.0;
    return vol_m3_s * bed.pressure_kpa * 1000.0 / (R_GAS * bed.temperature_k);
}

AduResult integrate_pfr(const thermo::ThermoDb& db, const GasStream& inlet,
                        const CatalystBed& bed, double tol_mol_s) {
    bed.check();
    inlet.check();
    if (inlet.flow(Species::NH3) <= 0.0)
        throw std::invalid_argument("integrate_pfr: inlet must carry NH3");
    if (std::abs(inlet.temperature_k - bed.temperature_k) > 1e-9)
        throw std::invalid_argument("integrate_pfr: inlet temperature must equal bed temperature");
    if (std::abs(inlet.pressure_kpa - bed.pressure_kpa) > 1e-9)
        throw std::invalid_argument("integrate_pfr: inlet pressure must equal bed pressure");

    const ExtentState st{inlet.flow(Species::NH3),
                         inlet.flow(Species::H2),
                         inlet.flow(Species::N2),
                         inlet.total_flow() - inlet.flow(Species::NH3) - inlet.flow(Species::H2) -
                             inlet.flow(Species::N2),
                         inlet.total_flow(),
                         bed.pressure_kpa / 100.0};
    const RateConstants rc = rate_constants(bed.temperature_k, bed);
    const double xi = integrate_extent(st, rc, bed.area_m2, bed.length_m, tol_mol_s);

    AduResult res;
    res.outlet = inlet;
    res.outlet.flow(Species::NH3) = st.nh3_0 - xi;
    res.outlet.flow(Species::H2) = st.h2_0 + 1.5 * xi;
    res.outlet.flow(Species::N2) = st.n2_0 + 0.5 * xi;
    res.conversion = xi / st.nh3_0;
    res.heat_duty_w = xi * thermo::decomposition_enthalpy(db, bed.temperature_k) * 1000.0;
    res.ghsv_per_h = ghsv_per_h(bed, inlet.total_flow());
    return res;
}

std::vector<ConversionPoint> conversion_curve(const thermo::ThermoDb& db, const CatalystBed& bed,
                                              const std::vector<double>& ghsv_list) {
    std::vector<ConversionPoint> out;
    out.reserve(ghsv_list.size());
    for (double g : ghsv_list) {
        if (g <= 0.0) throw std::invalid_argument("conversion_curve: GHSV must be > 0");
        GasStream inlet;
        inlet.flow(Species::NH3) = feed_for_ghsv(bed, g);
        inlet.temperature_k = bed.temperature_k;
        inlet.pressure_kpa = bed.pressure_kpa;
        const AduResult r = integrate_pfr(db, inlet, bed);
        out.push_back({g, r.conversion, 1.5 * r.conversion * inlet.flow(Species::NH3)});
    }
    return out;
}

double size_catalyst(const thermo::ThermoDb& db, double max_h2_demand_mol_s,
                     double min_conversion, const CatalystBed& bed_template) {
    if (max_h2_demand_mol_s <= 0.0)
        throw std::invalid_argument("size_catalyst: demand must be > 0");
    const double x_eq =
        equilibrium_conversion(bed_template.temperature_k, bed_template.pressure_kpa);
    if (min_conversion <= 0.0 || min_conversion >= x_eq)
        throw InfeasibleError("size_catalyst: min conversion " + std::to_string(min_conversion) +
                              " not below equilibrium bound " + std::to_string(x_eq));

    const double feed = max_h2_demand_mol_s / (1.5 * min_conversion);
    auto conversion_at_length = [&](double length_m) {
        CatalystBed bed = bed_template;
        bed.length_m = length_m;
        GasStream inlet;
        inlet.flow(Species::NH3) = feed;
        inlet.temperature_k = bed.temperature_k;
        inlet.pressure_kpa = bed.pressure_kpa;
        return integrate_pfr(db, inlet, bed).conversion;
    };

    double hi = bed_template.length_m;
    int guard = 0;
    while (conversion_at_length(hi) < min_conversion) {
        hi *= 2.0;
        if (++guard > 60)
            throw InfeasibleError("size_catalyst: conversion target unreachable below equilibrium " +
                                  std::to_string(x_eq));
    }
    const double lo_seed = hi * 1e-12;
    const double length = numerics::brent(
        [&](double l) { return conversion_at_length(l) - min_conversion; }, lo_seed, hi,
        hi * 1e-10);
    return bed_template.area_m2 * length;
}

FeedSolution solve_feed_for_h2(const thermo::ThermoDb& db, double h2_demand_mol_s,
                               const CatalystBed& bed) {
    const double x_eq = equilibrium_conversion(bed.temperature_k, bed.pressure_kpa);
    if (h2_demand_mol_s < 0.0)
        throw std::invalid_argument("solve_feed_for_h2: demand must be >= 0");
    if (h2_demand_mol_s == 0.0) return {0.0, x_eq};

    auto h2_out = [&](double feed) {
        GasStream inlet;
        inlet.flow(Species::NH3) = feed;
        inlet.temperature_k = bed.temperature_k;
        inlet.pressure_kpa = bed.pressure_kpa;
        const AduResult r = integrate_pfr(db, inlet, bed);
        return 1.5 * r.conversion * feed;
    };

    double lo = h2_demand_mol_s / (1.5 * x_eq);
    double hi = lo;
    int guard = 0;
    while (h2_out(hi) < h2_demand_mol_s) {
        hi *= 2.0;
        if (++guard > 40)
            throw InfeasibleError("solve_feed_for_h2: demand " + std::to_string(h2_demand_mol_s) +
                                  " mol/s beyond bed capacity " + std::to_string(h2_out(hi / 2.0)) +
                                  " mol/s");
    }
    lo = (guard > 0) ? hi / 2.0 : lo * 0.5; // bracket straddles the root either way

    const double feed = numerics::brent(
        [&](double f) { return h2_out(f) - h2_demand_mol_s; }, lo, hi, lo * 1e-13, 1e-15,
        0.5e-8 * h2_demand_mol_s);
    const double x = h2_out(feed) / (1.5 * feed);
    return {feed, x};
}

} // namespace nh3power::adu
