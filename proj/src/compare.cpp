#include "morphsim/compare.hpp"

#include <fstream>

#include "morphsim/log.hpp"
#include "morphsim/plots.hpp"
#include "morphsim/telemetry.hpp"

namespace morphsim {

CompareResult run_compare(const FullConfig& config, const std::filesystem::path& out_dir,
                          bool emit_svg) {
    std::filesystem::create_directories(out_dir);

    const ActuationMode modes[] = {ActuationMode::Conventional, ActuationMode::SlidingArmOnly,
                                   ActuationMode::Combined};
    const bool figure8 = std::holds_alternative<FigureEightMission>(config.sim.mission);
    const PlotKind kind = figure8 ? PlotKind::FigureEight : PlotKind::Waypoint;

    CompareResult result;
    result.all_completed = true;
    std::vector<std::pair<std::string, std::vector<TelemetryRecord>>> runs;

    for (ActuationMode mode : modes) {
        SimConfig sim = config.sim;  // identical seed and mission per mode
        sim.mode = mode;
        MissionResult run = run_mission(sim, config.vehicle);
        const std::string name = to_string(mode);

        write_telemetry_csv(run.telemetry, out_dir / (name + ".csv"));
        if (emit_svg && !run.telemetry.empty())
            emit_plots(run.telemetry, kind, out_dir, name + "_",
                       config.vehicle.mass_model.l_nominal);

        result.summaries[name] = run.summary;
        if (!run.summary.completed) {
            result.all_completed = false;
            if (run.aborted) log_warn(name + ": " + run.abort_reason);
        }
        runs.emplace_back(name, std::move(run.telemetry));
    }

    if (emit_svg) {
        std::vector<std::pair<std::string, const std::vector<TelemetryRecord>*>> overlay;
        for (const auto& [name, telemetry] : runs) overlay.emplace_back(name, &telemetry);
        emit_overlay_plot(overlay, out_dir, "trajectory_overlay");
    }

    nlohmann::json summary;
    for (const auto& [name, s] : result.summaries) summary[name] = summary_to_json(s);
    std::ofstream out(out_dir / "summary.json");
    out << summary.dump(2) << "\n";

    return result;
}

}  // namespace morphsim
