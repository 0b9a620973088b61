#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "morphsim/checks.hpp"
#include "morphsim/compare.hpp"
#include "morphsim/config.hpp"
#include "morphsim/log.hpp"
#include "morphsim/plots.hpp"
#include "morphsim/telemetry.hpp"

namespace fs = std::filesystem;
using namespace morphsim;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mode;
    std::optional<double> duration;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON config file");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--seed", [&opts](const std::vector<std::string>& v) {
        opts.seed = std::stoull(v.at(0));
        return true;
    }, "RNG seed override")->type_name("UINT");
    cmd->add_option("--mode", [&opts](const std::vector<std::string>& v) {
        opts.mode = v.at(0);
        return true;
    }, "actuation mode: conventional|sliding|combined")->type_name("MODE");
    cmd->add_option("--duration", [&opts](const std::vector<std::string>& v) {
        opts.duration = std::stod(v.at(0));
        return true;
    }, "simulation duration override (s)")->type_name("SECONDS");
}

FullConfig resolve_config(const CommonOpts& opts) {
    FullConfig cfg = opts.config_path.empty() ? default_config() : load_config(opts.config_path);
    if (opts.seed) cfg.sim.rng_seed = *opts.seed;
    if (opts.mode) cfg.sim.mode = mode_from_string(*opts.mode);
    if (opts.duration) cfg.sim.duration = *opts.duration;
    return cfg;
}

int run_single(const CommonOpts& opts, bool figure8) {
    FullConfig cfg = resolve_config(opts);
    if (figure8) {
        if (!std::holds_alternative<FigureEightMission>(cfg.sim.mission)) {
            cfg.sim.mission = FigureEightMission{};
            // default horizon: two full periods plus the ramp
            if (!opts.duration && opts.config_path.empty())
                cfg.sim.duration =
                    2.0 * 2.0 * M_PI / std::get<FigureEightMission>(cfg.sim.mission).omega + 5.0;
        }
    } else if (!std::holds_alternative<WaypointMission>(cfg.sim.mission)) {
        cfg.sim.mission = default_waypoints();
    }

    const MissionResult result = run_mission(cfg.sim, cfg.vehicle);
    fs::create_directories(opts.out_dir);
    write_telemetry_csv(result.telemetry, fs::path(opts.out_dir) / "telemetry.csv");
    {
        std::ofstream out(fs::path(opts.out_dir) / "summary.json");
        nlohmann::json j = summary_to_json(result.summary);
        j["mode"] = to_string(cfg.sim.mode);
        if (result.aborted) j["abort_reason"] = result.abort_reason;
        out << j.dump(2) << "\n";
    }
    if (!result.telemetry.empty())
        emit_plots(result.telemetry, figure8 ? PlotKind::FigureEight : PlotKind::Waypoint,
                   opts.out_dir, "", cfg.vehicle.mass_model.l_nominal);

    if (result.aborted) {
        std::cerr << result.abort_reason << "\n";
        return 1;
    }
    std::cout << "mission " << (result.summary.completed ? "completed" : "incomplete")
              << "; rms tracking error " << result.summary.rms_tracking_error << " m\n";
    return result.summary.completed ? 0 : 1;
}

int run_validate(const CommonOpts& opts) {
    const FullConfig cfg = resolve_config(opts);
    bool all = true;
    for (const CheckResult& check : run_validation(cfg.vehicle)) {
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << ": "
                  << check.detail << "\n";
        all = all && check.passed;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sliding-arm quadcopter flight simulator"};
    app.require_subcommand(1);

    CommonOpts opts;
    CLI::App* waypoint = app.add_subcommand("waypoint", "waypoint navigation mission");
    CLI::App* figure8 = app.add_subcommand("figure8", "figure-eight tracking mission");
    CLI::App* compare = app.add_subcommand("compare", "run all three actuation modes");
    CLI::App* validate = app.add_subcommand("validate", "run the property suite, no mission");
    for (CLI::App* cmd : {waypoint, figure8, compare, validate}) add_common(cmd, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate)) return run_validate(opts);
        if (app.got_subcommand(compare)) {
            const FullConfig cfg = resolve_config(opts);
            const CompareResult result = run_compare(cfg, opts.out_dir);
            for (const auto& [name, summary] : result.summaries)
                std::cout << name << ": rms lateral error " << summary.rms_lateral_error
                          << " m, waypoints " << summary.waypoints_captured << "\n";
            return result.all_completed ? 0 : 1;
        }
        return run_single(opts, app.got_subcommand(figure8));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
