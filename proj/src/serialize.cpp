#include "nh3power/serialize.hpp"

#include <cstdio>

namespace nh3power::serialize {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json result_to_json(const system::SystemResult& r) {
    json j;
    j["w_sys_kw"] = r.w_sys_kw;
    j["eta_sys"] = r.eta_sys;
    j["w_gen_kw"] = r.w_gen_kw;
    j["w_fc_kw"] = r.w_fc_kw;
    j["eta_ice_gen"] = r.eta_ice_gen;
    j["eta_fc"] = r.eta_fc;
    j["aux"] = {{"pump_kw", r.pump_kw},
                {"compressor_kw", r.compressor_kw},
                {"heater_kw", r.heater_kw}};
    j["heat"] = {{"q_pre_kw", r.q_pre_kw},
                 {"q_dec_kw", r.q_dec_kw},
                 {"q_high_available_kw", r.pools.q_high_kw},
                 {"q_low_available_kw", r.pools.q_low_kw},
                 {"high_recovered_kw", r.heat.high_recovered_kw},
                 {"low_recovered_kw", r.heat.low_recovered_kw}};
    j["flows"] = {{"nh3_total_g_s", r.nh3_total_g_s},
                  {"nh3_direct_g_s", r.nh3_direct_g_s},
                  {"adu_feed_g_s", r.adu_feed_g_s},
                  {"conversion", r.conversion},
                  {"ghsv_per_h", r.ghsv_per_h},
                  {"retentate_nh3_lhv_kw", r.retentate_nh3_lhv_kw}};
    j["ledger"] = {{"fuel_lhv_kw", r.ledger.fuel_lhv_kw},
                   {"useful_work_kw", r.ledger.useful_work_kw},
                   {"aux_power_kw", r.ledger.aux_power_kw},
                   {"generator_loss_kw", r.ledger.generator_loss_kw},
                   {"friction_loss_kw", r.ledger.friction_loss_kw},
                   {"exhaust_below_dec_kw", r.ledger.exhaust_below_dec_kw},
                   {"high_t_unrecovered_kw", r.ledger.high_t_unrecovered_kw},
                   {"low_t_unrecovered_kw", r.ledger.low_t_unrecovered_kw},
                   {"retentate_lhv_kw", r.ledger.retentate_lhv_kw},
                   {"vaporization_kw", r.ledger.vaporization_kw},
                   {"delivery_sensible_kw", r.ledger.delivery_sensible_kw},
                   {"chemistry_residual_kw", r.ledger.chemistry_residual_kw}};
    if (r.ice) {
        j["ice"] = {{"w_ice_kw", r.ice->w_ice_kw},
                    {"fuel_lhv_kw", r.ice->fuel_lhv_kw},
                    {"t_exhaust_k", r.ice->exhaust.temperature_k},
                    {"q_exhaust_kw", r.ice->q_exhaust_kw},
                    {"q_cool_kw", r.ice->q_cool_kw},
                    {"q_lub_kw", r.ice->q_lub_kw}};
    }
    if (r.fc) {
        j["fc"] = {{"current_density_a_cm2", r.fc->current_density_a_cm2},
                   {"cell_voltage_v", r.fc->cell_voltage_v},
                   {"h2_flow_g_s", r.fc->h2_flow_g_s},
                   {"heat_rejection_kw", r.fc->heat_rejection_kw}};
    }
    return j;
}

std::string map_to_csv(const explore::EfficiencyMap& map) {
    std::string out = "w_gen_kw,w_fc_kw,w_sys_kw,eta_sys,mask\n";
    for (std::size_t ig = 0; ig < map.w_gen_axis_kw.size(); ++ig) {
        for (std::size_t jf = 0; jf < map.w_fc_axis_kw.size(); ++jf) {
            const std::size_t k = map.index(ig, jf);
            out += fmt(map.w_gen_axis_kw[ig]) + "," + fmt(map.w_fc_axis_kw[jf]) + ",";
            if (map.mask[k] == explore::PointStatus::Ok) {
                out += fmt(map.w_sys_kw[k]) + "," + fmt(map.eta[k]) + ",0\n";
            } else {
                out += ",," + std::to_string(static_cast<int>(map.mask[k])) + "\n";
            }
        }
    }
    return out;
}

std::string curve_to_csv(const explore::OptimalCurve& curve) {
    std::string out = "w_sys_target_kw,w_sys_kw,w_gen_kw,w_fc_kw,eta_sys\n";
    for (const auto& p : curve.points) {
        out += fmt(p.w_sys_target_kw) + "," + fmt(p.w_sys_kw) + "," + fmt(p.w_gen_kw) + "," +
               fmt(p.w_fc_kw) + "," + fmt(p.eta_sys) + "\n";
    }
    return out;
}

} // namespace nh3power::serialize
