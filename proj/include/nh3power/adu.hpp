#ifndef NH3POWER_ADU_HPP
#define NH3POWER_ADU_HPP

#include <vector>

#include "nh3power/errors.hpp"
#include "nh3power/gas_stream.hpp"
#include "nh3power/thermo.hpp"

namespace nh3power::adu {

// Temkin-Pyzhev kinetic parameters plus reactor geometry and operating
// state. Shipped defaults carry the reference catalyst data (E = 117
// kJ/mol, k0 = 1.5e7, beta = 0.27). Rate units are mol NH3/(m^3 s) with
// partial pressures in bar; bed volume absorbs the prefactor scale.
struct CatalystBed {
    double activation_energy_kj_mol = 117.0;
    double pre_exponential = 1.5e7;
    double beta = 0.27;
    double area_m2 = 4.0;
    double length_m = 12.0;
    double temperature_k = 723.15;
    double pressure_kpa = 201.325;

    double volume_m3() const { return area_m2 * length_m; }
    void check() const;
};

struct AduResult {
    GasStream outlet;
    double conversion = 0.0;  // X, fraction of inlet NH3 decomposed
    double heat_duty_w = 0.0; // endothermic duty at bed temperature
    double ghsv_per_h = 0.0;
};

struct ConversionPoint {
    double ghsv_per_h;
    double conversion;
    double h2_rate_mol_s;
};

struct FeedSolution {
    double nh3_feed_mol_s;
    double conversion;
};

// Volumetric NH3 consumption rate [mol/(m^3 s)]. Partial pressures in
// bar; each is floored at 1e-6 bar so the inlet singularity of the
// forward term stays finite. Zero exactly at the equilibrium composition.
double rate(double t_k, double p_nh3_bar, double p_h2_bar, double p_n2_bar,
            const CatalystBed& bed);

// Equilibrium conversion of a pure-NH3 feed at (T, p).
double equilibrium_conversion(double t_k, double pressure_kpa);

// Gas hourly space velocity [1/h] of a pure-NH3 molar feed, volumetric
// basis at bed temperature and pressure.
double ghsv_per_h(const CatalystBed& bed, double feed_mol_s);
double feed_for_ghsv(const CatalystBed& bed, double ghsv_per_h);

// Isothermal, isobaric plug-flow integration of the decomposition along
// the bed. The three reacting species are advanced through the reaction
// extent, which conserves atoms identically. Adaptive embedded RK with
// per-step species tolerance tol_mol_s.
AduResult integrate_pfr(const thermo::ThermoDb& db, const GasStream& inlet,
                        const CatalystBed& bed, double tol_mol_s = 1e-10);

// Conversion and hydrogen production vs GHSV for a pure-NH3 feed.
std::vector<ConversionPoint> conversion_curve(const thermo::ThermoDb& db, const CatalystBed& bed,
                                              const std::vector<double>& ghsv_list);

// Smallest bed volume [m^3] (bisection over length at fixed cross-section)
// whose feed at min_conversion achieves at least that conversion.
double size_catalyst(const thermo::ThermoDb& db, double max_h2_demand_mol_s,
                     double min_conversion, const CatalystBed& bed_template);

// Solves the feed <-> conversion fixed point so the bed produces exactly
// h2_demand of hydrogen; residual below 1e-8 relative.
FeedSolution solve_feed_for_h2(const thermo::ThermoDb& db, double h2_demand_mol_s,
                               const CatalystBed& bed);

} // namespace nh3power::adu

#endif
