#ifndef NH3POWER_ERRORS_HPP
#define NH3POWER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nh3power {

// Requested operating point cannot be met (demand beyond capacity,
// unreachable conversion, power outside an engine envelope, ...).
// CLI maps this to exit code 1.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent configuration; CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Integrator or solver breakdown with diagnostics.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nh3power

#endif
