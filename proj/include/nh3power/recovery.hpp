#ifndef NH3POWER_RECOVERY_HPP
#define NH3POWER_RECOVERY_HPP

#include <string>

namespace nh3power::recovery {

// Residual-heat recovery measures: none, low-T to preheating, high-T to
// decomposition, both with high-T priority.
enum class Measure { I, II, III, IV };

Measure measure_from_string(const std::string& name);
const char* measure_name(Measure m);

// Available residual heat, split by usability: only heat above the
// decomposition temperature can drive the decomposition directly.
struct HeatPools {
    double q_high_kw = 0.0; // ICE exhaust enthalpy above T_dec
    double q_low_kw = 0.0;  // coolant + FC rejection + product-gas cooling
};

// Per-point recovery bookkeeping; heat demand is always met, by recovered
// heat first and electric heaters for the remainder.
struct HeatLedger {
    double q_pre_kw = 0.0;
    double q_dec_kw = 0.0;
    double high_recovered_kw = 0.0;
    double low_recovered_kw = 0.0;
    double heater_kw = 0.0;
};

// Inputs in kW; classification itself lives in the system module (it owns
// the streams); this helper only assembles the pools.
HeatPools make_pools(double ice_high_kw, double ice_coolant_kw, double fc_heat_kw,
                     double product_cooling_kw);

// Allocation rules for the four measures. Electric heaters convert
// electricity to heat one-to-one.
HeatLedger apply_measure(Measure m, double q_pre_kw, double q_dec_kw, const HeatPools& pools);

} // namespace nh3power::recovery

#endif
