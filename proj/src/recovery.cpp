#include "nh3power/recovery.hpp"

#include <algorithm>
#include <stdexcept>

namespace nh3power::recovery {

Measure measure_from_string(const std::string& name) {
    if (name == "I") return Measure::I;
    if (name == "II") return Measure::II;
    if (name == "III") return Measure::III;
    if (name == "IV") return Measure::IV;
    throw std::invalid_argument("unknown measure '" + name + "' (expected I|II|III|IV)");
}

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::I: return "I";
        case Measure::II: return "II";
        case Measure::III: return "III";
        case Measure::IV: return "IV";
    }
    return "?";
}

HeatPools make_pools(double ice_high_kw, double ice_coolant_kw, double fc_heat_kw,
                     double product_cooling_kw) {
    if (product_cooling_kw < 0.0)
        throw std::invalid_argument("make_pools: product cooling must be >= 0");
    return {std::max(ice_high_kw, 0.0),
            std::max(ice_coolant_kw, 0.0) + std::max(fc_heat_kw, 0.0) + product_cooling_kw};
}

HeatLedger apply_measure(Measure m, double q_pre_kw, double q_dec_kw, const HeatPools& pools) {
    if (q_pre_kw < 0.0 || q_dec_kw < 0.0 || pools.q_high_kw < 0.0 || pools.q_low_kw < 0.0)
        throw std::invalid_argument("apply_measure: inputs must be >= 0");

    HeatLedger led;
    led.q_pre_kw = q_pre_kw;
    led.q_dec_kw = q_dec_kw;
    switch (m) {
        case Measure::I:
            led.heater_kw = q_pre_kw + q_dec_kw;
            break;
        case Measure::II:
            led.low_recovered_kw = std::min(pools.q_low_kw, q_pre_kw);
            led.heater_kw = q_dec_kw + std::max(0.0, q_pre_kw - pools.q_low_kw);
            break;
        case Measure::III:
            // Low-temperature residual heat is left unrecovered.
            led.high_recovered_kw = std::min(pools.q_high_kw, q_dec_kw);
            led.heater_kw = q_pre_kw + std::max(0.0, q_dec_kw - pools.q_high_kw);
            break;
        case Measure::IV: {
            // High-T heat first to decomposition, surplus to preheating,
            // low-T pool for the remaining preheat demand.
            const double high_to_dec = std::min(pools.q_high_kw, q_dec_kw);
            const double high_surplus = std::max(0.0, pools.q_high_kw - q_dec_kw);
            const double high_to_pre = std::min(high_surplus, q_pre_kw);
            const double low_to_pre = std::min(pools.q_low_kw, q_pre_kw - high_to_pre);
            led.high_recovered_kw = high_to_dec + high_to_pre;
            led.low_recovered_kw = low_to_pre;
            led.heater_kw = std::max(0.0, q_dec_kw - pools.q_high_kw) +
                            std::max(0.0, q_pre_kw - pools.q_low_kw -
                                              std::max(0.0, pools.q_high_kw - q_dec_kw));
            break;
        }
    }
    return led;
}

} // namespace nh3power::recovery
