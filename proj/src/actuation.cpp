#include "morphsim/actuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace morphsim {

void ServoParams::validate() const {
    if (!(omega_n > 0.0)) throw std::domain_error("servo.omega_n must be > 0");
    if (!(zeta > 0.0 && zeta <= 1.2)) throw std::domain_error("servo.zeta must be in (0, 1.2]");
    if (!(d_max > 0.0)) throw std::domain_error("servo.d_max must be > 0");
    if (!(rate_max > 0.0)) throw std::domain_error("servo.rate_max must be > 0");
}

ServoDerivative servo_derivative(double position, double rate, double command,
                                 const ServoParams& params) {
    ServoDerivative d;
    d.rate = std::clamp(rate, -params.rate_max, params.rate_max);
    d.accel = params.omega_n * params.omega_n * (command - position)
            - 2.0 * params.zeta * params.omega_n * rate;
    return d;
}

ControlCommand saturate_command(const ControlCommand& raw, const ActuatorLimits& limits,
                                SaturationFlags* flags) {
    ControlCommand cmd = raw;
    SaturationFlags f;
    for (int i = 0; i < 4; ++i) {
        const double clamped = std::clamp(raw.omega[i], 0.0, limits.omega_max);
        f.rotor[i] = clamped != raw.omega[i];
        cmd.omega[i] = clamped;
    }
    cmd.dx_cmd = std::clamp(raw.dx_cmd, -limits.d_max, limits.d_max);
    cmd.dy_cmd = std::clamp(raw.dy_cmd, -limits.d_max, limits.d_max);
    f.dx = cmd.dx_cmd != raw.dx_cmd;
    f.dy = cmd.dy_cmd != raw.dy_cmd;
    if (flags) *flags = f;
    return cmd;
}

}  // namespace morphsim
