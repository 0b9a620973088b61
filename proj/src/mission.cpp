#include "morphsim/mission.hpp"

#include <cmath>
#include <stdexcept>

namespace morphsim {

WaypointMission default_waypoints() {
    return WaypointMission{{Vec3(1, 1, 1), Vec3(1, 2, 2), Vec3(2, 2, 1), Vec3(2, 3, 2)}, 0.1};
}

MissionTarget figure_eight_target(const FigureEightMission& m, double t) {
    // smoothstep ramp s(tau) = 3 tau^2 - 2 tau^3 over [0, ramp_time]
    double s = 1.0, sdot = 0.0;
    if (m.ramp_time > 0.0 && t < m.ramp_time) {
        const double tau = t / m.ramp_time;
        s = tau * tau * (3.0 - 2.0 * tau);
        sdot = 6.0 * tau * (1.0 - tau) / m.ramp_time;
    }
    const double sx = std::sin(m.omega * t);
    const double sy = std::sin(2.0 * m.omega * t);
    const double cx = std::cos(m.omega * t);
    const double cy = std::cos(2.0 * m.omega * t);

    MissionTarget target;
    target.position = Vec3(s * m.amplitude_x * sx, s * m.amplitude_y * sy, s * m.altitude);
    target.velocity = Vec3(sdot * m.amplitude_x * sx + s * m.amplitude_x * m.omega * cx,
                           sdot * m.amplitude_y * sy + s * m.amplitude_y * 2.0 * m.omega * cy,
                           sdot * m.altitude);
    return target;
}

void validate_mission(const Mission& mission) {
    if (const auto* wp = std::get_if<WaypointMission>(&mission)) {
        if (wp->waypoints.empty())
            throw std::domain_error("mission: waypoint list must be nonempty");
        if (!(wp->capture_radius > 0.0))
            throw std::domain_error("mission: capture_radius must be > 0");
    } else {
        const auto& f8 = std::get<FigureEightMission>(mission);
        if (!(f8.amplitude_x > 0.0) || !(f8.amplitude_y > 0.0))
            throw std::domain_error("mission: figure-eight amplitudes must be > 0");
        if (!(f8.omega > 0.0))
            throw std::domain_error("mission: figure-eight angular rate must be > 0");
    }
}

}  // namespace morphsim
