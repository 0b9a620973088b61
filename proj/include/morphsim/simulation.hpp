#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "morphsim/actuation.hpp"
#include "morphsim/control.hpp"
#include "morphsim/dynamics.hpp"
#include "morphsim/mission.hpp"

namespace morphsim {

struct SimConfig {
    double dt_physics = 1e-3;     // s
    double controller_hz = 250.0;
    double duration = 60.0;       // s
    std::uint64_t rng_seed = 1;
    double noise_deg = 0.0;       // uniform half-width on roll/pitch measurements
    ActuationMode mode = ActuationMode::Combined;
    Mission mission = default_waypoints();

    // Physics substeps per controller step; throws if the controller period
    // is not an integer multiple of dt_physics.
    int substeps() const;
    void validate() const;
};

struct TelemetryRecord {
    double t;
    Vec3 pos;
    Vec3 vel_body;
    Vec3 euler;
    Vec3 rates;
    Vec4 omega;
    double dx, dy;
    double dx_cmd, dy_cmd;
    Vec3 target;
};

// Augmented integration state: rigid body plus the two servo second-order states.
struct VehicleState {
    RigidBodyState body;
    MorphState morph;
};

// Classical RK4 over the 16 augmented states with rotor speeds and servo
// commands held constant. Arm travel is hard-stopped at +-d_max.
VehicleState rk4_step(const VehicleState& state, const RotorSet& rotors,
                      const MassModel& model, const ServoParams& servo, double dt);

// Perturbs roll and pitch by independent Uniform(-noise_deg, +noise_deg) draws
// (degrees, applied in radians); everything else passes through exactly.
// Always consumes two draws so the stream is independent of noise_deg.
RigidBodyState apply_measurement_noise(const RigidBodyState& state, double noise_deg,
                                       std::mt19937_64& rng);

struct MissionSummary {
    bool completed = false;
    int waypoints_captured = 0;
    std::vector<double> arrival_times;   // s, one per captured waypoint
    double rms_tracking_error = 0.0;     // m, 3D
    double rms_lateral_error = 0.0;      // m, xy only
    double max_abs_dx = 0.0;             // m
    double max_abs_dy = 0.0;
    double max_tilt = 0.0;               // rad, max sqrt(phi^2+theta^2) proxy: max(|phi|,|theta|)
    double peak_tilt_sum = 0.0;          // rad, max over time of |phi|+|theta|
};

struct MissionResult {
    std::vector<TelemetryRecord> telemetry;  // one record per controller step
    MissionSummary summary;
    bool aborted = false;
    std::string abort_reason;
};

struct VehicleParams {
    MassModel mass_model;
    RotorSet rotor_params;  // omega field unused; carries k_f, k_m, omega_max
    ServoParams servo;
    ControlGains gains;
};

MissionResult run_mission(const SimConfig& config, const VehicleParams& vehicle);

}  // namespace morphsim
