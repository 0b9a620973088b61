#pragma once

#include <string>
#include <vector>

#include "morphsim/actuation.hpp"
#include "morphsim/dynamics.hpp"
#include "morphsim/simulation.hpp"

namespace morphsim {

// Point-mass discretization of the vehicle geometry. Deliberately independent
// of compute_inertia: components are sampled as weighted point masses (midpoint
// grids for cuboids, annulus-weighted rings for cylinders) and the CoG and
// inertia are accumulated directly from the points.
struct DiscretizedInertia {
    Vec3 cog;
    Mat3 inertia;
};
DiscretizedInertia discretize_inertia(const MorphState& morph, const MassModel& model,
                                      int min_samples_per_component = 100000);

// Body torque as a function of (dw_phi, dw_theta, dw_psi) through the mixer at
// nominal geometry; Jacobian by central differences (exact for the quadratic
// thrust law).
Mat3 mixer_torque_jacobian(const MassModel& model, const RotorSet& rotor_params,
                           double omega_h, double h = 1.0);

// Simulated unit-step overshoot fraction of the servo model with the slew
// limit disabled.
double simulate_servo_overshoot(const ServoParams& params, double step, double dt = 1e-4);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// Property suite behind the CLI `validate` subcommand: inertia oracle over a
// morph grid, mixer torque Jacobian, servo step responses.
std::vector<CheckResult> run_validation(const VehicleParams& vehicle);

}  // namespace morphsim
