#pragma once

#include "morphsim/types.hpp"

namespace morphsim {

// Component mass model: central body cuboid, two arm-rod cuboids,
// four motor+propeller cylinders. Defaults sum to the 1.56 kg total.
struct MassModel {
    double body_mass = 0.80;                 // kg
    Vec3 body_dims{0.12, 0.12, 0.06};        // width, depth, height (m)

    double arm_mass = 0.20;                  // kg, each of 2 arms
    Vec3 arm_dims{0.50, 0.02, 0.01};         // length, width, height (m); length = 2*l_nominal

    double motor_mass = 0.09;                // kg, each of 4 motor+prop units
    double motor_radius = 0.014;             // m
    double motor_height = 0.03;              // m

    double l_nominal = 0.25;                 // m, rotor distance from center at zero displacement
    double arm_z_offset = 0.01;              // m, +z for the X-arm plane, -z for the Y-arm plane

    double total_mass() const {
        return body_mass + 2.0 * arm_mass + 4.0 * motor_mass;
    }

    // Throws std::domain_error naming every violated invariant.
    // If expected_total > 0 the component sum must match it to 1e-12 relative.
    void validate(double expected_total = -1.0) const;
};

}  // namespace morphsim
