#include "nh3power/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nh3power::thermo {

namespace {

// NASA-7 coefficient sets from the GRI-Mech 3.0 thermodynamic database
// (low range 200-1000 K, high range 1000-3500 K). Validity is declared
// as 250-1500 K here; queries outside that window are rejected.
constexpr double T_LOW = 250.0;
constexpr double T_MID = 1000.0;
constexpr double T_HIGH = 1500.0;

CpPolynomial gri(Species s, std::array<double, 7> low, std::array<double, 7> high) {
    return CpPolynomial{s, T_LOW, T_MID, T_HIGH, low, high};
}

const std::array<double, 7>* range_coeffs(const CpPolynomial& p, double t_k) {
    if (t_k < p.t_low || t_k > p.t_high) return nullptr;
    return (t_k < p.t_mid) ? &p.low : &p.high;
}

double cp_over_r(const std::array<double, 7>& a, double t) {
    return a[0] + t * (a[1] + t * (a[2] + t * (a[3] + t * a[4])));
}

// H/RT including the integration constant a6.
double h_over_rt(const std::array<double, 7>& a, double t) {
    return a[0] + t * (a[1] / 2.0 + t * (a[2] / 3.0 + t * (a[3] / 4.0 + t * a[4] / 5.0))) +
           a[5] / t;
}

// Absolute molar enthalpy H(T) [J/mol] on the NASA reference scale,
// continuous across the range split.
double h_abs(const CpPolynomial& p, double t_k) {
    const auto* a = range_coeffs(p, t_k);
    if (a == nullptr)
        throw std::out_of_range("temperature " + std::to_string(t_k) + " K outside cp validity [" +
                                std::to_string(p.t_low) + ", " + std::to_string(p.t_high) +
                                "] K for species " + species_name(p.species));
    return h_over_rt(*a, t_k) * R_GAS * t_k;
}

} // namespace

ThermoDb ThermoDb::builtin() {
    ThermoDb db;
    db.cp[static_cast<std::size_t>(Species::NH3)] = gri(
        Species::NH3,
        {4.28602740e+00, -4.66052300e-03, 2.17185130e-05, -2.28088870e-08, 8.26380460e-12,
         -6.74172850e+03, -6.25372770e-01},
        {2.63445210e+00, 5.66625600e-03, -1.72786540e-06, 2.38671610e-10, -1.25787860e-14,
         -6.54469580e+03, 6.56629280e+00});
    db.cp[static_cast<std::size_t>(Species::H2)] = gri(
        Species::H2,
        {2.34433112e+00, 7.98052075e-03, -1.94781510e-05, 2.01572094e-08, -7.37611761e-12,
         -9.17935173e+02, 6.83010238e-01},
        {3.33727920e+00, -4.94024731e-05, 4.99456778e-07, -1.79566394e-10, 2.00255376e-14,
         -9.50158922e+02, -3.20502331e+00});
    db.cp[static_cast<std::size_t>(Species::N2)] = gri(
        Species::N2,
        {3.29867700e+00, 1.40824040e-03, -3.96322200e-06, 5.64151500e-09, -2.44485400e-12,
         -1.02089990e+03, 3.95037200e+00},
        {2.92664000e+00, 1.48797680e-03, -5.68476000e-07, 1.00970380e-10, -6.75335100e-15,
         -9.22797700e+02, 5.98052800e+00});
    db.cp[static_cast<std::size_t>(Species::O2)] = gri(
        Species::O2,
        {3.78245636e+00, -2.99673416e-03, 9.84730201e-06, -9.68129509e-09, 3.24372837e-12,
         -1.06394356e+03, 3.65767573e+00},
        {3.28253784e+00, 1.48308754e-03, -7.57966669e-07, 2.09470555e-10, -2.16717794e-14,
         -1.08845772e+03, 5.45323129e+00});
    db.cp[static_cast<std::size_t>(Species::H2O)] = gri(
        Species::H2O,
        {4.19864056e+00, -2.03643410e-03, 6.52040211e-06, -5.48797062e-09, 1.77197817e-12,
         -3.02937267e+04, -8.49032208e-01},
        {3.03399249e+00, 2.17691804e-03, -1.64072518e-07, -9.70419870e-11, 1.68200992e-14,
         -3.00042971e+04, 4.96677010e+00});
    // AIR is evaluated as the 21/79 O2/N2 blend; the stored record only
    // carries the validity bounds.
    db.cp[static_cast<std::size_t>(Species::AIR)] =
        gri(Species::AIR, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0});
    return db;
}

double cp_mol(const ThermoDb& db, Species s, double t_k) {
    if (s == Species::AIR) {
        return 0.21 * cp_mol(db, Species::O2, t_k) + 0.79 * cp_mol(db, Species::N2, t_k);
    }
    const CpPolynomial& p = db.cp[static_cast<std::size_t>(s)];
    const auto* a = range_coeffs(p, t_k);
    if (a == nullptr)
        throw std::out_of_range("temperature " + std::to_string(t_k) + " K outside cp validity [" +
                                std::to_string(p.t_low) + ", " + std::to_string(p.t_high) +
                                "] K for species " + species_name(s));
    return cp_over_r(*a, t_k) * R_GAS;
}

double sensible_enthalpy(const ThermoDb& db, Species s, double t_k) {
    if (t_k == T_REF_K) return 0.0;
    if (s == Species::AIR) {
        return 0.21 * sensible_enthalpy(db, Species::O2, t_k) +
               0.79 * sensible_enthalpy(db, Species::N2, t_k);
    }
    const CpPolynomial& p = db.cp[static_cast<std::size_t>(s)];
    return h_abs(p, t_k) - h_abs(p, T_REF_K);
}

double stream_enthalpy_delta(const ThermoDb& db, const GasStream& stream, double t_from_k,
                             double t_to_k) {
    double q_w = 0.0;
    for (std::size_t i = 0; i < N_SPECIES; ++i) {
        const double n = stream.flow_mol_s[i];
        if (n == 0.0) continue;
        const Species s = static_cast<Species>(i);
        q_w += n * (sensible_enthalpy(db, s, t_to_k) - sensible_enthalpy(db, s, t_from_k));
    }
    return q_w;
}

double preheat_duty(const ThermoDb& db, double nh3_flow_mol_s, double t_tank_k, double t_out_k) {
    if (nh3_flow_mol_s < 0.0) throw std::invalid_argument("preheat_duty: negative NH3 flow");
    if (t_out_k < t_tank_k) throw std::invalid_argument("preheat_duty: t_out below tank temperature");
    if (nh3_flow_mol_s == 0.0) return 0.0;
    const double superheat_j_mol =
        sensible_enthalpy(db, Species::NH3, t_out_k) - sensible_enthalpy(db, Species::NH3, t_tank_k);
    return nh3_flow_mol_s * (db.latent_nh3_kj_mol * 1000.0 + superheat_j_mol);
}

double decomposition_enthalpy(const ThermoDb& db, double t_k) {
    // Kirchhoff: dh(T) = dh(298.15) + sum_i v_i (h_i(T) - h_i(298.15))
    const double kirchhoff_j =
        1.5 * sensible_enthalpy(db, Species::H2, t_k) +
        0.5 * sensible_enthalpy(db, Species::N2, t_k) - sensible_enthalpy(db, Species::NH3, t_k);
    return db.dec_enthalpy_ref_kj_mol + kirchhoff_j / 1000.0;
}

double equilibrium_constant(double t_k) {
    if (t_k < 400.0 || t_k > 1200.0)
        throw std::out_of_range("equilibrium_constant: T " + std::to_string(t_k) +
                                " K outside correlation validity [400, 1200] K");
    // Gillespie-Beattie correlation for 0.5 N2 + 1.5 H2 <=> NH3, K in 1/atm.
    const double log10_k = -2.691122 * std::log10(t_k) - 5.519265e-5 * t_k +
                           1.848863e-7 * t_k * t_k + 2001.6 / t_k + 2.6899;
    const double k_atm = std::pow(10.0, log10_k);
    return k_atm / 1.01325; // 1/bar
}

double lhv(const ThermoDb& db, Species s) {
    switch (s) {
        case Species::H2: return db.lhv_h2_kj_g;
        case Species::NH3: return db.lhv_nh3_kj_g;
        default:
            throw std::invalid_argument("lhv: no heating value for species " + species_name(s));
    }
}

} // namespace nh3power::thermo
