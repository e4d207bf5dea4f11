#ifndef NH3POWER_THERMO_HPP
#define NH3POWER_THERMO_HPP

#include <array>

#include "nh3power/gas_stream.hpp"
#include "nh3power/species.hpp"

namespace nh3power::thermo {

// NASA-7 heat-capacity polynomial, two temperature ranges split at T_mid.
// cp/R = a1 + a2 T + a3 T^2 + a4 T^3 + a5 T^4; a6 is the enthalpy
// integration constant (H/RT = a1 + a2 T/2 + ... + a6/T).
struct CpPolynomial {
    Species species;
    double t_low;  // K, lower validity bound
    double t_mid;  // K, range split
    double t_high; // K, upper validity bound
    std::array<double, 7> low;
    std::array<double, 7> high;
};

// Property database: cp polynomials for all species plus the handful of
// scalar constants the models need. All fields are data; overrides come
// from the run config.
struct ThermoDb {
    std::array<CpPolynomial, N_SPECIES> cp;
    double latent_nh3_kj_mol = 23.3;    // NH3 heat of vaporization at tank state
    double dec_enthalpy_ref_kj_mol = 46.1; // NH3 -> 1.5 H2 + 0.5 N2 at 298.15 K
    double lhv_h2_kj_g = 120.0;
    double lhv_nh3_kj_g = 18.6;

    // Shipped defaults (NASA/GRI-Mech 3.0 fits, validity narrowed to 250-1500 K).
    static ThermoDb builtin();
};

// Molar heat capacity [J/(mol K)]; throws std::out_of_range outside the
// polynomial validity range.
double cp_mol(const ThermoDb& db, Species s, double t_k);

// Molar enthalpy relative to 298.15 K [J/mol]; exactly 0 at 298.15 K.
double sensible_enthalpy(const ThermoDb& db, Species s, double t_k);

// Heat duty to bring a stream from t_from to t_to [W]; antisymmetric in
// the two temperatures and linear in the flows.
double stream_enthalpy_delta(const ThermoDb& db, const GasStream& stream,
                             double t_from_k, double t_to_k);

// Duty to vaporize liquid NH3 and superheat the vapor to t_out [W].
// Liquid-phase sensible heat is folded into the latent-heat constant.
double preheat_duty(const ThermoDb& db, double nh3_flow_mol_s, double t_tank_k,
                    double t_out_k);

// Reaction enthalpy of NH3 -> 1.5 H2 + 0.5 N2 at T [kJ/mol NH3],
// Kirchhoff-corrected from the 298.15 K reference value.
double decomposition_enthalpy(const ThermoDb& db, double t_k);

// Ammonia synthesis equilibrium constant K = p_NH3/(p_N2^1/2 p_H2^3/2)
// [1/bar], from the Gillespie-Beattie correlation; valid 400-1200 K.
// The decomposition rate law uses its reciprocal, so that the zero-rate
// condition reads (1/K)^2 = p_N2 p_H2^3 / p_NH3^2.
double equilibrium_constant(double t_k);

// Lower heating value [kJ/g]; defined for NH3 and H2 only.
double lhv(const ThermoDb& db, Species s);

} // namespace nh3power::thermo

#endif
