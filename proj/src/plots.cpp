#include "morphsim/plots.hpp"

#include <stdexcept>

#include "morphsim/svg_plot.hpp"

namespace morphsim {

namespace {

std::vector<double> column(const std::vector<TelemetryRecord>& t,
                           double (*get)(const TelemetryRecord&)) {
    std::vector<double> out;
    out.reserve(t.size());
    for (const auto& r : t) out.push_back(get(r));
    return out;
}

}  // namespace

std::vector<std::filesystem::path> emit_plots(const std::vector<TelemetryRecord>& telemetry,
                                              PlotKind kind,
                                              const std::filesystem::path& out_dir,
                                              const std::string& prefix, double l_nominal) {
    if (telemetry.empty()) throw std::invalid_argument("emit_plots: telemetry is empty");
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    const auto ts = column(telemetry, [](const TelemetryRecord& r) { return r.t; });

    {
        // isometric projection of the 3D path: u = (x - y) cos30, v = z - (x + y) sin30
        SvgPlot plot("Trajectory (isometric projection)", "u (m)", "v (m)");
        std::vector<double> us, vs, ur, vr;
        for (const auto& r : telemetry) {
            us.push_back((r.pos[0] - r.pos[1]) * 0.8660254037844386);
            vs.push_back(r.pos[2] - (r.pos[0] + r.pos[1]) * 0.5);
            ur.push_back((r.target[0] - r.target[1]) * 0.8660254037844386);
            vr.push_back(r.target[2] - (r.target[0] + r.target[1]) * 0.5);
        }
        plot.add_series("vehicle", us, vs);
        plot.add_series("reference", ur, vr);
        auto path = out_dir / (prefix + "trajectory_3d.svg");
        plot.write(path);
        written.push_back(path);
    }
    {
        SvgPlot plot("Euler angles", "t (s)", "angle (rad)");
        plot.add_series("phi", ts, column(telemetry, [](const TelemetryRecord& r) { return r.euler[0]; }));
        plot.add_series("theta", ts, column(telemetry, [](const TelemetryRecord& r) { return r.euler[1]; }));
        plot.add_series("psi", ts, column(telemetry, [](const TelemetryRecord& r) { return r.euler[2]; }));
        auto path = out_dir / (prefix + "euler_angles.svg");
        plot.write(path);
        written.push_back(path);
    }
    {
        SvgPlot plot("Rotor angular speeds", "t (s)", "omega (rad/s)");
        plot.add_series("w1", ts, column(telemetry, [](const TelemetryRecord& r) { return r.omega[0]; }));
        plot.add_series("w2", ts, column(telemetry, [](const TelemetryRecord& r) { return r.omega[1]; }));
        plot.add_series("w3", ts, column(telemetry, [](const TelemetryRecord& r) { return r.omega[2]; }));
        plot.add_series("w4", ts, column(telemetry, [](const TelemetryRecord& r) { return r.omega[3]; }));
        auto path = out_dir / (prefix + "rotor_speeds.svg");
        plot.write(path);
        written.push_back(path);
    }
    {
        SvgPlot plot("Arm lengths", "t (s)", "length (m)");
        std::vector<double> l1, l3, l2, l4;
        for (const auto& r : telemetry) {
            l1.push_back(l_nominal + r.dx);
            l3.push_back(l_nominal - r.dx);
            l2.push_back(l_nominal + r.dy);
            l4.push_back(l_nominal - r.dy);
        }
        plot.add_series("l + dx", ts, l1);
        plot.add_series("l - dx", ts, l3);
        plot.add_series("l + dy", ts, l2);
        plot.add_series("l - dy", ts, l4);
        auto path = out_dir / (prefix + "arm_lengths.svg");
        plot.write(path);
        written.push_back(path);
    }
    if (kind == PlotKind::FigureEight) {
        SvgPlot plot("2D trajectory", "x (m)", "y (m)");
        plot.add_series("vehicle",
                        column(telemetry, [](const TelemetryRecord& r) { return r.pos[0]; }),
                        column(telemetry, [](const TelemetryRecord& r) { return r.pos[1]; }));
        plot.add_series("reference",
                        column(telemetry, [](const TelemetryRecord& r) { return r.target[0]; }),
                        column(telemetry, [](const TelemetryRecord& r) { return r.target[1]; }));
        auto path = out_dir / (prefix + "trajectory_2d.svg");
        plot.write(path);
        written.push_back(path);
    }
    return written;
}

std::filesystem::path emit_overlay_plot(
    const std::vector<std::pair<std::string, const std::vector<TelemetryRecord>*>>& runs,
    const std::filesystem::path& out_dir, const std::string& name) {
    std::filesystem::create_directories(out_dir);
    SvgPlot plot("2D trajectory comparison", "x (m)", "y (m)");
    for (const auto& [label, telemetry] : runs) {
        if (!telemetry || telemetry->empty()) continue;
        plot.add_series(label,
                        column(*telemetry, [](const TelemetryRecord& r) { return r.pos[0]; }),
                        column(*telemetry, [](const TelemetryRecord& r) { return r.pos[1]; }));
    }
    if (!runs.empty() && runs.front().second && !runs.front().second->empty()) {
        plot.add_series("reference",
                        column(*runs.front().second,
                               [](const TelemetryRecord& r) { return r.target[0]; }),
                        column(*runs.front().second,
                               [](const TelemetryRecord& r) { return r.target[1]; }));
    }
    auto path = out_dir / (name + ".svg");
    plot.write(path);
    return path;
}

}  // namespace morphsim
