#ifndef NH3POWER_SPECIES_HPP
#define NH3POWER_SPECIES_HPP

#include <array>
#include <cstddef>
#include <string>

namespace nh3power {

// Universal gas constant [J/(mol K)] and Faraday constant [C/mol].
inline constexpr double R_GAS = 8.314462618;
inline constexpr double FARADAY = 96485.0;

inline constexpr double T_REF_K = 298.15;   // reference temperature
inline constexpr double P_REF_KPA = 101.325; // reference pressure

// Gas species handled by the toolkit. AIR is a fixed 21/79 molar O2/N2
// pseudo-species used for intake-air properties.
enum class Species : std::size_t { NH3 = 0, H2, N2, O2, H2O, AIR };

inline constexpr std::size_t N_SPECIES = 6;

inline constexpr std::array<Species, N_SPECIES> all_species = {
    Species::NH3, Species::H2, Species::N2, Species::O2, Species::H2O, Species::AIR};

const std::string& species_name(Species s);
Species species_from_name(const std::string& name);

// Molar mass [g/mol].
double molar_mass(Species s);

// Atom counts per molecule (N, H, O); AIR counts its O2/N2 blend.
struct AtomCount {
    double n;
    double h;
    double o;
};
AtomCount atom_count(Species s);

} // namespace nh3power

#endif
