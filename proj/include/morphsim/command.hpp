#pragma once

#include <array>
#include <string>

#include "morphsim/types.hpp"

namespace morphsim {

// Which attitude effectors are active.
enum class ActuationMode {
    Conventional,    // rotor speed deltas only, arms locked at zero
    SlidingArmOnly,  // arms for roll/pitch; rotors for thrust and yaw only
    Combined,        // both paths simultaneously
};

std::string to_string(ActuationMode mode);
ActuationMode mode_from_string(const std::string& name);

struct ControlCommand {
    Vec4 omega = Vec4::Zero();  // rotor speed commands (rad/s)
    double dx_cmd = 0.0;        // m
    double dy_cmd = 0.0;        // m
    ActuationMode mode = ActuationMode::Combined;
};

struct SaturationFlags {
    std::array<bool, 4> rotor{};
    bool dx = false;
    bool dy = false;

    bool any_rotor() const { return rotor[0] || rotor[1] || rotor[2] || rotor[3]; }
    bool any() const { return any_rotor() || dx || dy; }
};

}  // namespace morphsim
