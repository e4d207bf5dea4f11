#include "nh3power/species.hpp"

#include <array>
#include <stdexcept>

namespace nh3power {

namespace {

const std::array<std::string, N_SPECIES> names = {"NH3", "H2", "N2", "O2", "H2O", "AIR"};

// g/mol; AIR = 0.21 O2 + 0.79 N2
const std::array<double, N_SPECIES> masses = {
    17.03052, 2.01588, 28.01340, 31.99880, 18.01528,
    0.21 * 31.99880 + 0.79 * 28.01340};

} // namespace

const std::string& species_name(Species s) {
    return names[static_cast<std::size_t>(s)];
}

Species species_from_name(const std::string& name) {
    for (std::size_t i = 0; i < N_SPECIES; ++i) {
        if (names[i] == name) return static_cast<Species>(i);
    }
    throw std::out_of_range("unknown species name: " + name);
}

double molar_mass(Species s) {
    return masses[static_cast<std::size_t>(s)];
}

AtomCount atom_count(Species s) {
    switch (s) {
        case Species::NH3: return {1.0, 3.0, 0.0};
        case Species::H2: return {0.0, 2.0, 0.0};
        case Species::N2: return {2.0, 0.0, 0.0};
        case Species::O2: return {0.0, 0.0, 2.0};
        case Species::H2O: return {0.0, 2.0, 1.0};
        case Species::AIR: return {2.0 * 0.79, 0.0, 2.0 * 0.21};
    }
    throw std::out_of_range("invalid species");
}

} // namespace nh3power
