#include "nh3power/explore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nh3power::explore {

namespace {

// Measure-resolved net output at an already-evaluated physical point.
struct PointEconomy {
    double w_gen, w_fc, fuel_lhv_kw, aux_kw;
    double q_pre, q_dec;
    recovery::HeatPools pools;
};

double w_sys_for_measure(const PointEconomy& p, recovery::Measure m) {
    const recovery::HeatLedger led = recovery::apply_measure(m, p.q_pre, p.q_dec, p.pools);
    return p.w_gen + p.w_fc - p.aux_kw - led.heater_kw;
}

void consider(Extreme& ex, double eta, double w_sys, double w_gen, double w_fc) {
    ++ex.feasible_points;
    const bool better_eta =
        (ex.feasible_points == 1) || eta > ex.max_eta ||
        (eta == ex.max_eta && w_fc > ex.w_fc_at_max_eta_kw);
    if (better_eta) {
        ex.max_eta = eta;
        ex.w_sys_at_max_eta_kw = w_sys;
        ex.w_gen_at_max_eta_kw = w_gen;
        ex.w_fc_at_max_eta_kw = w_fc;
    }
    if (ex.feasible_points == 1 || w_sys > ex.max_w_sys_kw) {
        ex.max_w_sys_kw = w_sys;
        ex.eta_at_max_w_sys = eta;
    }
}

} // namespace

std::vector<double> AxisSpec::values() const {
    if (step_kw <= 0.0) throw std::invalid_argument("axis step must be > 0");
    if (hi_kw < lo_kw) throw std::invalid_argument("axis bounds out of order");
    std::vector<double> v;
    const std::size_t n = static_cast<std::size_t>(std::floor((hi_kw - lo_kw) / step_kw + 1e-9));
    v.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) v.push_back(lo_kw + static_cast<double>(i) * step_kw);
    if (v.back() < hi_kw - 1e-9 * std::max(1.0, hi_kw)) v.push_back(hi_kw);
    return v;
}

std::array<MeasurePoint, 4> evaluate_measures(const system::SystemConfig& cfg, double w_gen_kw,
                                              double w_fc_kw) {
    system::SystemConfig base = cfg;
    base.measure = recovery::Measure::I;
    const system::SystemResult r = system::evaluate(base, w_gen_kw, w_fc_kw);
    const PointEconomy p{w_gen_kw, w_fc_kw,   r.ledger.fuel_lhv_kw,
                         r.pump_kw + r.compressor_kw, r.q_pre_kw, r.q_dec_kw, r.pools};
    const std::array<recovery::Measure, 4> measures = {recovery::Measure::I, recovery::Measure::II,
                                                       recovery::Measure::III,
                                                       recovery::Measure::IV};
    std::array<MeasurePoint, 4> out{};
    for (std::size_t mi = 0; mi < 4; ++mi) {
        const double w = w_sys_for_measure(p, measures[mi]);
        out[mi] = {w, (p.fuel_lhv_kw > 0.0) ? w / p.fuel_lhv_kw : 0.0};
    }
    return out;
}

std::array<EfficiencyMap, 4> build_maps_all(const system::SystemConfig& cfg,
                                            const AxisSpec& gen_axis, const AxisSpec& fc_axis) {
    if (cfg.topology != system::Topology::Composite)
        throw std::invalid_argument("build_map: composite topology required");
    std::array<EfficiencyMap, 4> maps;
    const std::array<recovery::Measure, 4> measures = {recovery::Measure::I, recovery::Measure::II,
                                                       recovery::Measure::III,
                                                       recovery::Measure::IV};
    const std::vector<double> gens = gen_axis.values();
    const std::vector<double> fcs = fc_axis.values();
    if (gens.empty() || fcs.empty()) throw std::invalid_argument("build_map: empty grid");
    for (std::size_t mi = 0; mi < 4; ++mi) {
        maps[mi].measure = measures[mi];
        maps[mi].w_gen_axis_kw = gens;
        maps[mi].w_fc_axis_kw = fcs;
        maps[mi].eta.assign(gens.size() * fcs.size(), 0.0);
        maps[mi].w_sys_kw.assign(gens.size() * fcs.size(), 0.0);
        maps[mi].mask.assign(gens.size() * fcs.size(), PointStatus::Ok);
    }
    for (std::size_t ig = 0; ig < gens.size(); ++ig) {
        for (std::size_t jf = 0; jf < fcs.size(); ++jf) {
            const std::size_t k = maps[0].index(ig, jf);
            try {
                const std::array<MeasurePoint, 4> pts = evaluate_measures(cfg, gens[ig], fcs[jf]);
                for (std::size_t mi = 0; mi < 4; ++mi) {
                    maps[mi].eta[k] = pts[mi].eta_sys;
                    maps[mi].w_sys_kw[k] = pts[mi].w_sys_kw;
                }
            } catch (const InfeasibleError&) {
                for (auto& m : maps) m.mask[k] = PointStatus::Infeasible;
            } catch (const NumericalError&) {
                for (auto& m : maps) m.mask[k] = PointStatus::Error;
            }
        }
    }
    return maps;
}

EfficiencyMap build_map(const system::SystemConfig& cfg, const AxisSpec& gen_axis,
                        const AxisSpec& fc_axis) {
    const std::array<EfficiencyMap, 4> maps = build_maps_all(cfg, gen_axis, fc_axis);
    switch (cfg.measure) {
        case recovery::Measure::I: return maps[0];
        case recovery::Measure::II: return maps[1];
        case recovery::Measure::III: return maps[2];
        case recovery::Measure::IV: return maps[3];
    }
    return maps[0];
}

OptimalCurve optimal_split(const EfficiencyMap& map, const std::vector<double>& targets_kw) {
    auto spacing = [](const std::vector<double>& axis) {
        return axis.size() > 1 ? axis[1] - axis[0] : 0.0;
    };
    const double tol =
        0.5 * std::max({spacing(map.w_gen_axis_kw), spacing(map.w_fc_axis_kw), 1e-9});

    double map_max_w = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < map.w_sys_kw.size(); ++k)
        if (map.mask[k] == PointStatus::Ok) map_max_w = std::max(map_max_w, map.w_sys_kw[k]);

    OptimalCurve curve;
    curve.measure = map.measure;
    std::vector<double> sorted = targets_kw;
    std::sort(sorted.begin(), sorted.end());
    for (double target : sorted) {
        bool found = false;
        OptimalPoint best{target, 0.0, 0.0, 0.0, -std::numeric_limits<double>::infinity()};
        for (std::size_t ig = 0; ig < map.w_gen_axis_kw.size(); ++ig) {
            for (std::size_t jf = 0; jf < map.w_fc_axis_kw.size(); ++jf) {
                const std::size_t k = map.index(ig, jf);
                if (map.mask[k] != PointStatus::Ok) continue;
                if (std::abs(map.w_sys_kw[k] - target) > tol) continue;
                const double wfc = map.w_fc_axis_kw[jf];
                if (map.eta[k] > best.eta_sys ||
                    (map.eta[k] == best.eta_sys && wfc > best.w_fc_kw)) {
                    best = {target, map.w_sys_kw[k], map.w_gen_axis_kw[ig], wfc, map.eta[k]};
                    found = true;
                }
            }
        }
        if (!found)
            throw InfeasibleError("optimal_split: no grid point within " + std::to_string(tol) +
                                  " kW of target " + std::to_string(target) +
                                  " kW (map max W_sys = " + std::to_string(map_max_w) + " kW)");
        curve.points.push_back(best);
    }
    return curve;
}

Extreme scan_extreme(const system::SystemConfig& cfg, const AxisSpec& gen_axis,
                     const AxisSpec& fc_axis) {
    const std::array<Extreme, 4> all = measure_extremes(cfg, gen_axis, fc_axis);
    switch (cfg.measure) {
        case recovery::Measure::I: return all[0];
        case recovery::Measure::II: return all[1];
        case recovery::Measure::III: return all[2];
        case recovery::Measure::IV: return all[3];
    }
    return all[0];
}

std::array<Extreme, 4> measure_extremes(const system::SystemConfig& cfg, const AxisSpec& gen_axis,
                                        const AxisSpec& fc_axis) {
    std::vector<double> gens, fcs;
    if (cfg.topology == system::Topology::FcHybrid) gens = {0.0};
    else gens = gen_axis.values();
    if (cfg.topology == system::Topology::IceHybrid) fcs = {0.0};
    else fcs = fc_axis.values();

    // One physical evaluation per point; the four measures only re-run the
    // heat allocation (evaluation is feed-forward).
    std::array<Extreme, 4> out{};
    for (double wg : gens) {
        for (double wf : fcs) {
            if (wg == 0.0 && wf == 0.0) continue;
            try {
                const std::array<MeasurePoint, 4> pts = evaluate_measures(cfg, wg, wf);
                for (std::size_t mi = 0; mi < 4; ++mi)
                    consider(out[mi], pts[mi].eta_sys, pts[mi].w_sys_kw, wg, wf);
            } catch (const InfeasibleError&) {
                continue;
            }
        }
    }
    return out;
}

std::vector<SizingSweepRow> sizing_sweep(const system::SystemConfig& base_cfg,
                                         const std::vector<double>& r_values,
                                         double total_rated_kw, double grid_step_kw) {
    if (total_rated_kw <= 0.0) throw std::invalid_argument("sizing_sweep: total rating must be > 0");
    const double nominal = base_cfg.engine.power_max_kw; // shared nominal rating basis
    std::vector<SizingSweepRow> rows;
    rows.reserve(r_values.size());
    for (double r : r_values) {
        if (r <= 0.0 || r >= 1.0)
            throw std::invalid_argument("sizing_sweep: r_ICE must lie in (0, 1)");
        system::SystemConfig cfg = base_cfg;
        cfg.topology = system::Topology::Composite;
        cfg.measure = recovery::Measure::IV;
        const double ice_scale = r * total_rated_kw / nominal;
        const double fc_scale = (1.0 - r) * total_rated_kw / nominal;
        cfg.engine = base_cfg.engine.rescaled(r * total_rated_kw);
        cfg.stack = base_cfg.stack.rescaled_cells(fc_scale);

        SizingSweepRow row;
        row.r_ice = r;
        row.rescale_warning = ice_scale < 0.05 || ice_scale > 1.0 || fc_scale < 0.05 ||
                              fc_scale > 1.0;
        const AxisSpec gen_axis{cfg.engine.power_min_kw, cfg.engine.power_max_kw, grid_step_kw};
        const AxisSpec fc_axis{cfg.stack.min_load_kw, (1.0 - r) * total_rated_kw, grid_step_kw};
        row.extreme = scan_extreme(cfg, gen_axis, fc_axis);
        row.load_factor = (row.extreme.max_w_sys_kw > 0.0)
                              ? row.extreme.w_sys_at_max_eta_kw / row.extreme.max_w_sys_kw
                              : 0.0;
        rows.push_back(row);
    }
    return rows;
}

TraceResult trace_eval(const OptimalCurve& curve,
                       const std::vector<std::pair<double, double>>& demand_trace) {
    if (curve.points.empty()) throw std::invalid_argument("trace_eval: empty optimal curve");
    if (demand_trace.empty()) throw std::invalid_argument("trace_eval: empty demand trace");
    for (const auto& [t, p] : demand_trace)
        if (p < 0.0) throw std::invalid_argument("trace_eval: negative power demand");

    auto nearest = [&](double demand) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < curve.points.size(); ++i) {
            const double d = std::abs(curve.points[i].w_sys_kw - demand);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        return best;
    };
    const double curve_max =
        std::max_element(curve.points.begin(), curve.points.end(), [](auto& a, auto& b) {
            return a.w_sys_kw < b.w_sys_kw;
        })->w_sys_kw;

    TraceResult res;
    const std::size_t n_steps = std::max<std::size_t>(demand_trace.size() - 1, 1);
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double demand = demand_trace[i].second;
        const double dt = (demand_trace.size() > 1)
                              ? demand_trace[i + 1].first - demand_trace[i].first
                              : 1.0;
        if (dt < 0.0) throw std::invalid_argument("trace_eval: time stamps must be nondecreasing");
        if (demand == 0.0) {
            res.per_step.push_back({0.0, 0.0, 0.0, 0.0, 0.0});
            continue;
        }
        double clipped = demand;
        if (demand > curve_max) {
            clipped = curve_max;
            ++res.clipped_steps;
        }
        const OptimalPoint& pt = curve.points[nearest(clipped)];
        res.per_step.push_back(pt);
        res.energy_out_kj += pt.w_sys_kw * dt;
        if (pt.eta_sys > 0.0) res.fuel_energy_kj += pt.w_sys_kw / pt.eta_sys * dt;
    }
    res.mean_eta = (res.fuel_energy_kj > 0.0) ? res.energy_out_kj / res.fuel_energy_kj : 0.0;
    return res;
}

} // namespace nh3power::explore
