#pragma once

#include <array>
#include <vector>

#include "morphsim/mass_model.hpp"
#include "morphsim/types.hpp"

namespace morphsim {

inline constexpr double kDefaultDMax = 0.15;  // m, arm travel limit

// Sliding-arm displacement state. dx moves the arm carrying motors 1 and 3
// along body x; dy moves the arm carrying motors 2 and 4 along body y.
struct MorphState {
    double dx = 0.0;       // m
    double dy = 0.0;       // m
    double dx_rate = 0.0;  // m/s
    double dy_rate = 0.0;  // m/s
    double dx_cmd = 0.0;   // m
    double dy_cmd = 0.0;   // m
};

// Instantaneous mass properties about the vehicle CoG, body axes.
struct MassProperties {
    Vec3 cog = Vec3::Zero();          // CoG position in body frame (m)
    Mat3 inertia = Mat3::Zero();      // inertia tensor about CoG (kg m^2)
    std::array<Eigen::Vector2d, 4> torque_arms{};  // (r_x, r_y) of rotors 1..4 from CoG (m)
};

// One rigid component: mass, CoG position in body frame, inertia about its own CoG.
struct Component {
    double mass;
    Vec3 position;
    Mat3 inertia_local;
};

// Standard closed-form inertia about the component CoG in principal axes.
// Cuboid dims are extents along (x, y, z); cylinder axis is z.
Mat3 component_inertia_cuboid(double mass, const Vec3& dims);
Mat3 component_inertia_cylinder(double mass, double radius, double height);

// Parallel-axis transform: inertia about a point offset by d from the CoG.
Mat3 parallel_axis(const Mat3& inertia_cog, double mass, const Vec3& d);

// Rotor positions in body frame. Motors 1,3 on the X-arm at x = l +- dx with
// fixed spacing 2l; motors 2,4 on the Y-arm likewise along y.
std::array<Vec3, 4> motor_positions(const MorphState& morph, const MassModel& model,
                                    double d_max = kDefaultDMax);

// All seven components (body, X-arm, Y-arm, motors 1..4) with positions
// for the given displacements.
std::vector<Component> build_components(const MorphState& morph, const MassModel& model,
                                        double d_max = kDefaultDMax);

// Mass-weighted mean of component CoGs.
Vec3 compute_cog(const MorphState& morph, const MassModel& model,
                 double d_max = kDefaultDMax);

// Full mass properties: CoG, inertia about CoG via parallel axis, rotor torque arms.
MassProperties compute_inertia(const MorphState& morph, const MassModel& model,
                               double d_max = kDefaultDMax);

}  // namespace morphsim
