#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "morphsim/config.hpp"
#include "morphsim/simulation.hpp"

namespace morphsim {

struct CompareResult {
    std::map<std::string, MissionSummary> summaries;  // keyed by mode name
    bool all_completed = false;
};

// Runs Conventional, SlidingArmOnly and Combined with identical seed and
// mission; writes per-mode CSVs, a combined summary JSON and overlay plots.
// Partial artifacts are retained if a run aborts.
CompareResult run_compare(const FullConfig& config, const std::filesystem::path& out_dir,
                          bool emit_svg = true);

}  // namespace morphsim
