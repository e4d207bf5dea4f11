#include "nh3power/gas_stream.hpp"

#include <stdexcept>
#include <string>

namespace nh3power {

void GasStream::check() const {
    for (std::size_t i = 0; i < N_SPECIES; ++i) {
        if (flow_mol_s[i] < 0.0)
            throw std::invalid_argument("negative flow for species " +
                                        species_name(static_cast<Species>(i)));
    }
    if (pressure_kpa <= 0.0) throw std::invalid_argument("stream pressure must be > 0");
    if (temperature_k <= 0.0) throw std::invalid_argument("stream temperature must be > 0");
}

AtomCount atom_flows(const GasStream& s) {
    AtomCount out{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < N_SPECIES; ++i) {
        const AtomCount ac = atom_count(static_cast<Species>(i));
        out.n += s.flow_mol_s[i] * ac.n;
        out.h += s.flow_mol_s[i] * ac.h;
        out.o += s.flow_mol_s[i] * ac.o;
    }
    return out;
}

} // namespace nh3power
