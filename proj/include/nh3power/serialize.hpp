#ifndef NH3POWER_SERIALIZE_HPP
#define NH3POWER_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "nh3power/explore.hpp"
#include "nh3power/system.hpp"

namespace nh3power::serialize {

// JSON object for one operating point; field names are part of the
// external interface (w_sys_kw, eta_sys, ledger{...}, flows{...}).
nlohmann::json result_to_json(const system::SystemResult& r);

// CSV emitters. Column order is fixed and documented in the README.
std::string map_to_csv(const explore::EfficiencyMap& map);
std::string curve_to_csv(const explore::OptimalCurve& curve);

// Formats a double with enough digits for a bit-faithful round trip.
std::string fmt(double v);

} // namespace nh3power::serialize

#endif
