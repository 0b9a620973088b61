#pragma once

#include <variant>
#include <vector>

#include "morphsim/types.hpp"

namespace morphsim {

struct WaypointMission {
    std::vector<Vec3> waypoints;  // m, world frame
    double capture_radius = 0.1;  // m
};

// Lissajous figure-eight x = Ax sin(Wt), y = Ay sin(2Wt), z = h,
// scaled by a smoothstep ramp over the first ramp_time seconds.
struct FigureEightMission {
    double amplitude_x = 2.0;   // m
    double amplitude_y = 1.0;   // m
    double omega = 0.4;         // rad/s
    double altitude = 1.5;      // m
    double ramp_time = 5.0;     // s
};

using Mission = std::variant<WaypointMission, FigureEightMission>;

struct MissionTarget {
    Vec3 position;
    Vec3 velocity;
};

MissionTarget figure_eight_target(const FigureEightMission& mission, double t);

// Reference mission defaults.
WaypointMission default_waypoints();

void validate_mission(const Mission& mission);

}  // namespace morphsim
