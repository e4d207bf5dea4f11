// nh3power command-line front end: single-point evaluations, figure-data
// reproductions, efficiency maps, optimal curves and sizing sweeps.
// Exit codes: 0 ok, 1 infeasible operating point, 2 config/usage error.

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nh3power/config.hpp"
#include "nh3power/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace nh3power;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string topology;
    std::string measure;
    std::string outdir = ".";
};

config::RunConfig load_run_config(const CommonOpts& o) {
    std::optional<system::Topology> topo;
    if (!o.topology.empty()) topo = system::topology_from_string(o.topology);
    std::optional<std::string> measure;
    if (!o.measure.empty()) measure = o.measure;
    return config::load(o.config_path, topo, measure);
}

fs::path resolve_outdir(const CommonOpts& o) {
    const char* env = std::getenv("NH3POWER_OUTDIR");
    fs::path dir = (env != nullptr && *env != '\0') ? fs::path(env) : fs::path(o.outdir);
    fs::create_directories(dir);
    return dir;
}

// Atomic write: temp file in the target directory, then rename.
void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
    const fs::path tmp = dir / (name + ".tmp");
    const fs::path final_path = dir / name;
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, final_path);
}

struct Manifest {
    std::string command;
    std::string fingerprint;
    json files = json::array();

    void add(const std::string& name, const std::vector<std::string>& columns) {
        files.push_back({{"name", name}, {"columns", columns}});
    }
    void write(const fs::path& dir, const std::string& name) const {
        json j{{"command", command}, {"config_fingerprint", fingerprint}, {"files", files}};
        write_file(dir, name, j.dump(2) + "\n");
    }
};

const std::array<recovery::Measure, 4> kMeasures = {recovery::Measure::I, recovery::Measure::II,
                                                    recovery::Measure::III, recovery::Measure::IV};

std::string fmt(double v) { return serialize::fmt(v); }

// Per-measure efficiency/output sweep over a single engine axis (fig8/fig9).
std::string single_engine_sweep_csv(const config::RunConfig& rc, bool ice, const char* unit_note) {
    std::string csv = unit_note;
    csv += ice ? "w_gen_kw" : "w_fc_kw";
    for (auto m : kMeasures) {
        csv += std::string(",eta_sys_") + recovery::measure_name(m);
        csv += std::string(",w_sys_kw_") + recovery::measure_name(m);
    }
    csv += "\n";
    const explore::AxisSpec axis = ice ? rc.explore.gen_axis() : rc.explore.fc_axis();
    for (double p : axis.values()) {
        try {
            const auto pts =
                explore::evaluate_measures(rc.sys, ice ? p : 0.0, ice ? 0.0 : p);
            csv += fmt(p);
            for (const auto& mp : pts) csv += "," + fmt(mp.eta_sys) + "," + fmt(mp.w_sys_kw);
            csv += "\n";
        } catch (const InfeasibleError&) {
            // skip infeasible axis points
        }
    }
    return csv;
}

std::vector<double> curve_targets(const explore::EfficiencyMap& map, double step) {
    double w_max = 0.0;
    for (std::size_t k = 0; k < map.w_sys_kw.size(); ++k)
        if (map.mask[k] == explore::PointStatus::Ok) w_max = std::max(w_max, map.w_sys_kw[k]);
    std::vector<double> targets;
    for (double w = step; w <= w_max; w += step) targets.push_back(w);
    return targets;
}

int cmd_point(const CommonOpts& o, double wgen, double wfc) {
    const config::RunConfig rc = load_run_config(o);
    const system::SystemResult r = system::evaluate(rc.sys, wgen, wfc);
    json j = serialize::result_to_json(r);
    j["config_fingerprint"] = rc.fingerprint();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_map(const CommonOpts& o) {
    CommonOpts opts = o;
    if (opts.topology.empty()) opts.topology = "composite";
    const config::RunConfig rc = load_run_config(opts);
    const explore::EfficiencyMap map =
        explore::build_map(rc.sys, rc.explore.gen_axis(), rc.explore.fc_axis());
    const fs::path dir = resolve_outdir(o);
    const std::string name =
        std::string("map_measure_") + recovery::measure_name(rc.sys.measure) + ".csv";
    write_file(dir, name, serialize::map_to_csv(map));
    Manifest man{"map", rc.fingerprint()};
    man.add(name, {"w_gen_kw", "w_fc_kw", "w_sys_kw", "eta_sys", "mask"});
    man.write(dir, "map_manifest.json");
    return 0;
}

int cmd_curve(const CommonOpts& o) {
    CommonOpts opts = o;
    if (opts.topology.empty()) opts.topology = "composite";
    const config::RunConfig rc = load_run_config(opts);
    const auto maps = explore::build_maps_all(rc.sys, rc.explore.gen_axis(), rc.explore.fc_axis());
    const fs::path dir = resolve_outdir(o);
    Manifest man{"curve", rc.fingerprint()};
    for (const auto& map : maps) {
        const auto curve =
            explore::optimal_split(map, curve_targets(map, rc.explore.curve_target_step_kw));
        const std::string name =
            std::string("curve_measure_") + recovery::measure_name(map.measure) + ".csv";
        write_file(dir, name, serialize::curve_to_csv(curve));
        man.add(name, {"w_sys_target_kw", "w_sys_kw", "w_gen_kw", "w_fc_kw", "eta_sys"});
    }
    man.write(dir, "curve_manifest.json");
    return 0;
}

std::string sweep_csv(const config::RunConfig& rc) {
    const auto rows = explore::sizing_sweep(rc.sys, rc.explore.r_values,
                                            rc.explore.total_rated_kw, rc.explore.grid_step_kw);
    std::string csv =
        "r_ice,max_eta,w_sys_at_max_eta_kw,max_w_sys_kw,eta_at_max_w_sys,load_factor,"
        "rescale_warning\n";
    for (const auto& row : rows) {
        csv += fmt(row.r_ice) + "," + fmt(row.extreme.max_eta) + "," +
               fmt(row.extreme.w_sys_at_max_eta_kw) + "," + fmt(row.extreme.max_w_sys_kw) + "," +
               fmt(row.extreme.eta_at_max_w_sys) + "," + fmt(row.load_factor) + "," +
               (row.rescale_warning ? "1" : "0") + "\n";
    }
    return csv;
}

int cmd_sweep(const CommonOpts& o) {
    CommonOpts opts = o;
    // The sweep rescales from the full-rated single-engine units; the fc
    // preset carries both at their full ratings.
    if (opts.topology.empty()) opts.topology = "fc";
    config::RunConfig rc = load_run_config(opts);
    const fs::path dir = resolve_outdir(o);
    write_file(dir, "sweep_r_ice.csv", sweep_csv(rc));
    Manifest man{"sweep", rc.fingerprint()};
    man.add("sweep_r_ice.csv", {"r_ice", "max_eta", "w_sys_at_max_eta_kw", "max_w_sys_kw",
                                "eta_at_max_w_sys", "load_factor", "rescale_warning"});
    man.write(dir, "sweep_manifest.json");
    return 0;
}

int cmd_fig(const CommonOpts& o, const std::string& fig) {
    const fs::path dir = resolve_outdir(o);
    Manifest man{"fig " + fig, ""};

    if (fig == "fig6") {
        CommonOpts opts = o;
        if (opts.topology.empty()) opts.topology = "fc";
        const config::RunConfig rc = load_run_config(opts);
        man.fingerprint = rc.fingerprint();
        const auto curve =
            adu::conversion_curve(rc.sys.thermo_db, rc.sys.bed, rc.explore.ghsv_ladder);
        std::string csv = "# GHSV [1/h], conversion [-], H2 production [mol/s]\n";
        csv += "ghsv_per_h,conversion,h2_mol_s\n";
        for (const auto& p : curve)
            csv += fmt(p.ghsv_per_h) + "," + fmt(p.conversion) + "," + fmt(p.h2_rate_mol_s) + "\n";
        write_file(dir, "fig6_conversion.csv", csv);
        man.add("fig6_conversion.csv", {"ghsv_per_h", "conversion", "h2_mol_s"});
    } else if (fig == "fig8" || fig == "fig9") {
        const bool ice = (fig == "fig8");
        CommonOpts opts = o;
        if (opts.topology.empty()) opts.topology = ice ? "ice" : "fc";
        const config::RunConfig rc = load_run_config(opts);
        man.fingerprint = rc.fingerprint();
        const char* note = ice ? "# engine output [kW] vs system efficiency/output per measure\n"
                               : "# fc output [kW] vs system efficiency/output per measure\n";
        const std::string name = ice ? "fig8_ice_hybrid.csv" : "fig9_fc_hybrid.csv";
        write_file(dir, name, single_engine_sweep_csv(rc, ice, note));
        man.add(name, {ice ? "w_gen_kw" : "w_fc_kw", "eta/w_sys per measure I..IV"});
    } else if (fig == "fig10" || fig == "fig11") {
        CommonOpts opts = o;
        if (opts.topology.empty()) opts.topology = "composite";
        const config::RunConfig rc = load_run_config(opts);
        man.fingerprint = rc.fingerprint();
        const auto maps =
            explore::build_maps_all(rc.sys, rc.explore.gen_axis(), rc.explore.fc_axis());
        for (const auto& map : maps) {
            if (fig == "fig10") {
                const std::string name = std::string("fig10_map_measure_") +
                                         recovery::measure_name(map.measure) + ".csv";
                write_file(dir, name, serialize::map_to_csv(map));
                man.add(name, {"w_gen_kw", "w_fc_kw", "w_sys_kw", "eta_sys", "mask"});
            } else {
                const auto curve = explore::optimal_split(
                    map, curve_targets(map, rc.explore.curve_target_step_kw));
                const std::string name = std::string("fig11_curve_measure_") +
                                         recovery::measure_name(map.measure) + ".csv";
                write_file(dir, name, serialize::curve_to_csv(curve));
                man.add(name, {"w_sys_target_kw", "w_sys_kw", "w_gen_kw", "w_fc_kw", "eta_sys"});
            }
        }
    } else if (fig == "fig14") {
        CommonOpts opts = o;
        if (opts.topology.empty()) opts.topology = "fc";
        config::RunConfig rc = load_run_config(opts);
        man.fingerprint = rc.fingerprint();
        write_file(dir, "fig14_sizing_sweep.csv", sweep_csv(rc));
        man.add("fig14_sizing_sweep.csv",
                {"r_ice", "max_eta", "w_sys_at_max_eta_kw", "max_w_sys_kw", "eta_at_max_w_sys",
                 "load_factor", "rescale_warning"});
    } else if (fig == "fig15") {
        CommonOpts opts = o;
        if (opts.topology.empty()) opts.topology = "fc";
        config::RunConfig rc = load_run_config(opts);
        man.fingerprint = rc.fingerprint();
        std::string csv = "# measure IV optimal efficiency vs system output per r_ICE\n";
        csv += "r_ice,w_sys_target_kw,w_sys_kw,w_gen_kw,w_fc_kw,eta_sys\n";
        for (double r : {0.25, 0.50, 0.75}) {
            system::SystemConfig cfg = rc.sys;
            cfg.topology = system::Topology::Composite;
            cfg.measure = recovery::Measure::IV;
            cfg.engine = rc.sys.engine.rescaled(r * rc.explore.total_rated_kw);
            cfg.stack = rc.sys.stack.rescaled_cells((1.0 - r) * rc.explore.total_rated_kw /
                                                    rc.sys.engine.power_max_kw);
            const explore::AxisSpec gen_axis{cfg.engine.power_min_kw, cfg.engine.power_max_kw,
                                             rc.explore.grid_step_kw};
            const explore::AxisSpec fc_axis{cfg.stack.min_load_kw,
                                            (1.0 - r) * rc.explore.total_rated_kw,
                                            rc.explore.grid_step_kw};
            const auto map = explore::build_map(cfg, gen_axis, fc_axis);
            const auto curve =
                explore::optimal_split(map, curve_targets(map, rc.explore.curve_target_step_kw));
            for (const auto& p : curve.points)
                csv += fmt(r) + "," + fmt(p.w_sys_target_kw) + "," + fmt(p.w_sys_kw) + "," +
                       fmt(p.w_gen_kw) + "," + fmt(p.w_fc_kw) + "," + fmt(p.eta_sys) + "\n";
        }
        write_file(dir, "fig15_r_ice_curves.csv", csv);
        man.add("fig15_r_ice_curves.csv",
                {"r_ice", "w_sys_target_kw", "w_sys_kw", "w_gen_kw", "w_fc_kw", "eta_sys"});
    } else {
        throw ConfigError("unknown figure id '" + fig +
                          "' (expected fig6|fig8|fig9|fig10|fig11|fig14|fig15)");
    }
    man.write(dir, fig + "_manifest.json");
    return 0;
}

json error_json(const std::string& type, const std::string& message) {
    return json{{"error", {{"type", type}, {"message", message}}}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ammonia-fueled power system simulator"};
    app.require_subcommand(1);

    CommonOpts opts;
    double wgen = 0.0, wfc = 0.0;
    std::string fig_id;

    auto add_common = [&](CLI::App* cmd, bool with_outdir) {
        cmd->add_option("--config", opts.config_path, "config file (JSON)");
        cmd->add_option("--topology", opts.topology, "ice|fc|composite");
        cmd->add_option("--measure", opts.measure, "residual-heat measure I|II|III|IV");
        if (with_outdir) cmd->add_option("--outdir", opts.outdir, "output directory");
    };

    CLI::App* point = app.add_subcommand("point", "evaluate one operating point, JSON to stdout");
    add_common(point, false);
    point->add_option("--wgen", wgen, "generator output [kW]");
    point->add_option("--wfc", wfc, "fuel cell output [kW]");

    CLI::App* fig = app.add_subcommand("fig", "emit the data behind a report figure");
    add_common(fig, true);
    fig->add_option("--id", fig_id, "fig6|fig8|fig9|fig10|fig11|fig14|fig15")->required();

    CLI::App* map = app.add_subcommand("map", "composite efficiency map CSV");
    add_common(map, true);
    CLI::App* curve = app.add_subcommand("curve", "optimal power-split curves per measure");
    add_common(curve, true);
    CLI::App* sweep = app.add_subcommand("sweep", "engine-sizing sweep over r_ICE");
    add_common(sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (point->parsed()) return cmd_point(opts, wgen, wfc);
        if (fig->parsed()) return cmd_fig(opts, fig_id);
        if (map->parsed()) return cmd_map(opts);
        if (curve->parsed()) return cmd_curve(opts);
        if (sweep->parsed()) return cmd_sweep(opts);
    } catch (const InfeasibleError& e) {
        std::cout << error_json("infeasible", e.what()).dump(2) << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cout << error_json("config", e.what()).dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << error_json("error", e.what()).dump(2) << "\n";
        return 2;
    }
    return 2;
}
