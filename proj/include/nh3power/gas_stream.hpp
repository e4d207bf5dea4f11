#ifndef NH3POWER_GAS_STREAM_HPP
#define NH3POWER_GAS_STREAM_HPP

#include <array>

#include "nh3power/species.hpp"

namespace nh3power {

// Material carrier between units: molar flows per species [mol/s] at a
// bulk temperature [K] and pressure [kPa]. Ideal mixing throughout.
struct GasStream {
    std::array<double, N_SPECIES> flow_mol_s{}; // all zero by default
    double temperature_k = T_REF_K;
    double pressure_kpa = P_REF_KPA;

    double& flow(Species s) { return flow_mol_s[static_cast<std::size_t>(s)]; }
    double flow(Species s) const { return flow_mol_s[static_cast<std::size_t>(s)]; }

    double total_flow() const {
        double n = 0.0;
        for (double f : flow_mol_s) n += f;
        return n;
    }

    // Partial pressure [kPa] of species i: p * n_i / n_total.
    double partial_pressure_kpa(Species s) const {
        const double n = total_flow();
        if (n <= 0.0) return 0.0;
        return pressure_kpa * flow(s) / n;
    }

    double mass_flow_g_s() const {
        double m = 0.0;
        for (std::size_t i = 0; i < N_SPECIES; ++i)
            m += flow_mol_s[i] * molar_mass(static_cast<Species>(i));
        return m;
    }

    // Validates the stream invariants; throws std::invalid_argument on violation.
    void check() const;
};

// Elemental N/H/O flows [mol atoms/s]; used for atom-balance checks.
AtomCount atom_flows(const GasStream& s);

} // namespace nh3power

#endif
