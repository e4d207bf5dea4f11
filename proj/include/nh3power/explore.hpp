#ifndef NH3POWER_EXPLORE_HPP
#define NH3POWER_EXPLORE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nh3power/system.hpp"

namespace nh3power::explore {

// Uniform axis [lo, hi] with the given step; hi is always included.
struct AxisSpec {
    double lo_kw = 0.0;
    double hi_kw = 0.0;
    double step_kw = 2.0;

    std::vector<double> values() const;
};

// Mask reason codes for grid points that did not evaluate.
enum class PointStatus : std::uint8_t { Ok = 0, Infeasible = 1, Error = 2 };

struct EfficiencyMap {
    std::vector<double> w_gen_axis_kw;
    std::vector<double> w_fc_axis_kw;
    // Row-major [i_gen * n_fc + i_fc].
    std::vector<double> eta;
    std::vector<double> w_sys_kw;
    std::vector<PointStatus> mask;
    recovery::Measure measure = recovery::Measure::I;

    std::size_t index(std::size_t ig, std::size_t jf) const {
        return ig * w_fc_axis_kw.size() + jf;
    }
};

struct OptimalPoint {
    double w_sys_target_kw;
    double w_sys_kw;
    double w_gen_kw;
    double w_fc_kw;
    double eta_sys;
};

struct OptimalCurve {
    std::vector<OptimalPoint> points; // sorted by target
    recovery::Measure measure = recovery::Measure::I;
};

struct Extreme {
    double max_eta = 0.0;
    double w_sys_at_max_eta_kw = 0.0;
    double w_gen_at_max_eta_kw = 0.0;
    double w_fc_at_max_eta_kw = 0.0;
    double max_w_sys_kw = 0.0;
    double eta_at_max_w_sys = 0.0;
    std::size_t feasible_points = 0;
};

struct SizingSweepRow {
    double r_ice;
    Extreme extreme;          // measure IV
    double load_factor = 0.0; // W_sys at max eta / max W_sys
    bool rescale_warning = false;
};

struct TraceResult {
    double energy_out_kj = 0.0;
    double fuel_energy_kj = 0.0;
    double mean_eta = 0.0;
    std::size_t clipped_steps = 0;
    std::vector<OptimalPoint> per_step; // curve point used per interval
};

// Net output and efficiency of one physical operating point under each of
// the four measures (the evaluation is feed-forward, so the measures share
// everything upstream of the heat allocation).
struct MeasurePoint {
    double w_sys_kw;
    double eta_sys;
};
std::array<MeasurePoint, 4> evaluate_measures(const system::SystemConfig& cfg, double w_gen_kw,
                                              double w_fc_kw);

// Evaluates every grid point of the composite map; infeasible points are
// masked with a reason code. Deterministic for a fixed config and grid.
EfficiencyMap build_map(const system::SystemConfig& cfg, const AxisSpec& gen_axis,
                        const AxisSpec& fc_axis);

// All four measures over a shared grid in one pass.
std::array<EfficiencyMap, 4> build_maps_all(const system::SystemConfig& cfg,
                                            const AxisSpec& gen_axis, const AxisSpec& fc_axis);

// Best (w_gen, w_fc) split per W_sys target among grid points within half
// a grid cell of the target; ties break toward larger w_fc.
OptimalCurve optimal_split(const EfficiencyMap& map, const std::vector<double>& targets_kw);

// Envelope scan (1-D for single-engine topologies, 2-D for composite)
// under one measure.
Extreme scan_extreme(const system::SystemConfig& cfg, const AxisSpec& gen_axis,
                     const AxisSpec& fc_axis);

// All four measures with a shared grid.
std::array<Extreme, 4> measure_extremes(const system::SystemConfig& cfg, const AxisSpec& gen_axis,
                                        const AxisSpec& fc_axis);

// Engine-sizing sweep at measure IV: the ICE curve rescales by
// power-normalized similarity, the stack by cell count, envelope floors
// proportionally.
std::vector<SizingSweepRow> sizing_sweep(const system::SystemConfig& base_cfg,
                                         const std::vector<double>& r_values,
                                         double total_rated_kw, double grid_step_kw);

// Maps a (time [s], demand [kW]) trace through an optimal curve by nearest
// W_sys; demands above the curve maximum are clipped and counted.
TraceResult trace_eval(const OptimalCurve& curve,
                       const std::vector<std::pair<double, double>>& demand_trace);

} // namespace nh3power::explore

#endif
