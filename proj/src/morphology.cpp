#include "morphsim/morphology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace morphsim {

namespace {

// Small slack so servo overshoot transients inside an integrator stage
// do not trip the bound check.
constexpr double kTravelTol = 1e-9;

void check_travel(double value, double d_max, const char* axis) {
    if (std::abs(value) > d_max + kTravelTol)
        throw std::domain_error(std::string("arm displacement ") + axis + " = " +
                                std::to_string(value) + " exceeds travel limit " +
                                std::to_string(d_max));
}

}  // namespace

Mat3 component_inertia_cuboid(double mass, const Vec3& dims) {
    if (!(mass > 0.0) || !(dims[0] > 0.0) || !(dims[1] > 0.0) || !(dims[2] > 0.0))
        throw std::domain_error("cuboid inertia: mass and dimensions must be > 0");
    const double x2 = dims[0] * dims[0];
    const double y2 = dims[1] * dims[1];
    const double z2 = dims[2] * dims[2];
    Mat3 j = Mat3::Zero();
    j(0, 0) = mass / 12.0 * (y2 + z2);
    j(1, 1) = mass / 12.0 * (x2 + z2);
    j(2, 2) = mass / 12.0 * (x2 + y2);
    return j;
}

Mat3 component_inertia_cylinder(double mass, double radius, double height) {
    if (!(mass > 0.0) || !(radius > 0.0) || !(height > 0.0))
        throw std::domain_error("cylinder inertia: mass, radius and height must be > 0");
    const double r2 = radius * radius;
    const double h2 = height * height;
    Mat3 j = Mat3::Zero();
    j(0, 0) = mass * (3.0 * r2 + h2) / 12.0;
    j(1, 1) = j(0, 0);
    j(2, 2) = mass * r2 / 2.0;
    return j;
}

Mat3 parallel_axis(const Mat3& inertia_cog, double mass, const Vec3& d) {
    return inertia_cog + mass * (d.squaredNorm() * Mat3::Identity() - d * d.transpose());
}

std::array<Vec3, 4> motor_positions(const MorphState& morph, const MassModel& model,
                                    double d_max) {
    check_travel(morph.dx, d_max, "dx");
    check_travel(morph.dy, d_max, "dy");
    const double l = model.l_nominal;
    const double zx = model.arm_z_offset;
    const double zy = -model.arm_z_offset;
    return {
        Vec3(l + morph.dx, 0.0, zx),   // motor 1
        Vec3(0.0, l + morph.dy, zy),   // motor 2
        Vec3(-l + morph.dx, 0.0, zx),  // motor 3
        Vec3(0.0, -l + morph.dy, zy),  // motor 4
    };
}

std::vector<Component> build_components(const MorphState& morph, const MassModel& model,
                                        double d_max) {
    const auto motors = motor_positions(morph, model, d_max);

    std::vector<Component> parts;
    parts.reserve(7);
    parts.push_back({model.body_mass, Vec3::Zero(),
                     component_inertia_cuboid(model.body_mass, model.body_dims)});

    // X-arm rod: length along x. Y-arm rod: length along y (dims permuted).
    const Vec3& ad = model.arm_dims;
    parts.push_back({model.arm_mass, Vec3(morph.dx, 0.0, model.arm_z_offset),
                     component_inertia_cuboid(model.arm_mass, ad)});
    parts.push_back({model.arm_mass, Vec3(0.0, morph.dy, -model.arm_z_offset),
                     component_inertia_cuboid(model.arm_mass, Vec3(ad[1], ad[0], ad[2]))});

    const Mat3 jm = component_inertia_cylinder(model.motor_mass, model.motor_radius,
                                               model.motor_height);
    for (const Vec3& p : motors) parts.push_back({model.motor_mass, p, jm});
    return parts;
}

Vec3 compute_cog(const MorphState& morph, const MassModel& model, double d_max) {
    Vec3 weighted = Vec3::Zero();
    double total = 0.0;
    for (const Component& c : build_components(morph, model, d_max)) {
        weighted += c.mass * c.position;
        total += c.mass;
    }
    return weighted / total;
}

MassProperties compute_inertia(const MorphState& morph, const MassModel& model,
                               double d_max) {
    MassProperties props;
    const auto parts = build_components(morph, model, d_max);

    Vec3 weighted = Vec3::Zero();
    double total = 0.0;
    for (const Component& c : parts) {
        weighted += c.mass * c.position;
        total += c.mass;
    }
    props.cog = weighted / total;

    Mat3 j = Mat3::Zero();
    for (const Component& c : parts)
        j += parallel_axis(c.inertia_local, c.mass, c.position - props.cog);
    props.inertia = j;

    const auto motors = motor_positions(morph, model, d_max);
    for (int i = 0; i < 4; ++i)
        props.torque_arms[i] = Eigen::Vector2d(motors[i][0] - props.cog[0],
                                               motors[i][1] - props.cog[1]);
    return props;
}

}  // namespace morphsim
