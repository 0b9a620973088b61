#pragma once

#include "morphsim/command.hpp"
#include "morphsim/types.hpp"

namespace morphsim {

// Second-order servo model for the arm-sliding actuators.
struct ServoParams {
    double omega_n = 15.0;   // rad/s
    double zeta = 0.7;
    double d_max = 0.15;     // m, travel limit
    double rate_max = 0.5;   // m/s, slew limit

    void validate() const;
};

struct ServoDerivative {
    double rate;   // m/s, slew-limited position derivative
    double accel;  // m/s^2
};

// accel = wn^2 (cmd - pos) - 2 zeta wn rate; returned rate clamped to +-rate_max.
ServoDerivative servo_derivative(double position, double rate, double command,
                                 const ServoParams& params);

struct ActuatorLimits {
    double omega_max = 800.0;  // rad/s
    double d_max = 0.15;       // m
};

// Clamps rotor speeds to [0, omega_max] and arm commands to +-d_max,
// reporting which channels hit a limit.
ControlCommand saturate_command(const ControlCommand& raw, const ActuatorLimits& limits,
                                SaturationFlags* flags = nullptr);

}  // namespace morphsim
