#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "morphsim/simulation.hpp"

namespace morphsim {

// Carries every violated invariant, not just the first.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::vector<std::string>& violations);
    std::vector<std::string> violations;
};

struct FullConfig {
    SimConfig sim;
    VehicleParams vehicle;
};

// Absent keys get defaults (reference vehicle: m=1.56, l=0.25,
// k_f=2.2e-4, k_m=5.4e-6). Throws ConfigError listing all violations.
FullConfig config_from_json(const nlohmann::json& j);

// Parse errors carry the byte/line context from the JSON parser.
FullConfig load_config(const std::filesystem::path& path);

FullConfig default_config();

}  // namespace morphsim
