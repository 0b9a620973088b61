#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "morphsim/simulation.hpp"

namespace morphsim {

enum class PlotKind { Waypoint, FigureEight };

// Writes the figure set for one run: projected 3D trajectory, Euler angles,
// rotor speeds, arm lengths (l +- dx, l +- dy). Figure-eight runs add a 2D
// trajectory overlay against the reference. Returns the paths written.
// Throws std::invalid_argument on empty telemetry.
std::vector<std::filesystem::path> emit_plots(const std::vector<TelemetryRecord>& telemetry,
                                              PlotKind kind,
                                              const std::filesystem::path& out_dir,
                                              const std::string& prefix,
                                              double l_nominal);

// 2D xy overlay of several runs (plus the shared reference trajectory).
std::filesystem::path emit_overlay_plot(
    const std::vector<std::pair<std::string, const std::vector<TelemetryRecord>*>>& runs,
    const std::filesystem::path& out_dir, const std::string& name);

}  // namespace morphsim
