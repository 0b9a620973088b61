#include "morphsim/command.hpp"

#include <stdexcept>

namespace morphsim {

std::string to_string(ActuationMode mode) {
    switch (mode) {
        case ActuationMode::Conventional: return "conventional";
        case ActuationMode::SlidingArmOnly: return "sliding";
        case ActuationMode::Combined: return "combined";
    }
    return "unknown";
}

ActuationMode mode_from_string(const std::string& name) {
    if (name == "conventional") return ActuationMode::Conventional;
    if (name == "sliding" || name == "sliding_arm_only") return ActuationMode::SlidingArmOnly;
    if (name == "combined") return ActuationMode::Combined;
    throw std::invalid_argument("unknown actuation mode: " + name);
}

}  // namespace morphsim
