#include "morphsim/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "morphsim/log.hpp"

namespace morphsim {

int SimConfig::substeps() const {
    const double period = 1.0 / controller_hz;
    const double ratio = period / dt_physics;
    const int n = static_cast<int>(std::lround(ratio));
    if (n < 1 || std::abs(ratio - n) > 1e-9)
        throw std::domain_error("controller period must be an integer multiple of dt_physics");
    return n;
}

void SimConfig::validate() const {
    if (!(dt_physics > 0.0)) throw std::domain_error("dt_physics must be > 0");
    if (!(controller_hz > 0.0)) throw std::domain_error("controller_hz must be > 0");
    if (!(duration > 0.0)) throw std::domain_error("duration must be > 0");
    if (noise_deg < 0.0) throw std::domain_error("noise_deg must be >= 0");
    substeps();
    validate_mission(mission);
}

namespace {

using AugVec = Eigen::Matrix<double, 16, 1>;

AugVec pack(const VehicleState& s) {
    AugVec v;
    v.segment<3>(0) = s.body.pos;
    v.segment<3>(3) = s.body.vel_body;
    v.segment<3>(6) = s.body.euler;
    v.segment<3>(9) = s.body.rates;
    v[12] = s.morph.dx;
    v[13] = s.morph.dx_rate;
    v[14] = s.morph.dy;
    v[15] = s.morph.dy_rate;
    return v;
}

VehicleState unpack(const AugVec& v, const VehicleState& base) {
    VehicleState s = base;  // keeps the latched servo commands
    s.body.pos = v.segment<3>(0);
    s.body.vel_body = v.segment<3>(3);
    s.body.euler = v.segment<3>(6);
    s.body.rates = v.segment<3>(9);
    s.morph.dx = v[12];
    s.morph.dx_rate = v[13];
    s.morph.dy = v[14];
    s.morph.dy_rate = v[15];
    return s;
}

AugVec derivative(const AugVec& v, const VehicleState& base, const RotorSet& rotors,
                  const MassModel& model, const ServoParams& servo) {
    VehicleState s = unpack(v, base);
    // travel hard stop: mass properties never see positions beyond d_max
    s.morph.dx = std::clamp(s.morph.dx, -servo.d_max, servo.d_max);
    s.morph.dy = std::clamp(s.morph.dy, -servo.d_max, servo.d_max);

    const StateDerivative body = state_derivative(s.body, s.morph, rotors, model, servo.d_max);
    const ServoDerivative sx =
        servo_derivative(s.morph.dx, s.morph.dx_rate, s.morph.dx_cmd, servo);
    const ServoDerivative sy =
        servo_derivative(s.morph.dy, s.morph.dy_rate, s.morph.dy_cmd, servo);

    AugVec d;
    d.segment<3>(0) = body.pos_dot;
    d.segment<3>(3) = body.vel_dot;
    d.segment<3>(6) = body.euler_dot;
    d.segment<3>(9) = body.rate_dot;
    d[12] = sx.rate;
    d[13] = sx.accel;
    d[14] = sy.rate;
    d[15] = sy.accel;
    return d;
}

}  // namespace

VehicleState rk4_step(const VehicleState& state, const RotorSet& rotors,
                      const MassModel& model, const ServoParams& servo, double dt) {
    if (!(dt > 0.0)) throw std::domain_error("rk4_step: dt must be > 0");
    const AugVec y = pack(state);
    const AugVec k1 = derivative(y, state, rotors, model, servo);
    const AugVec k2 = derivative(y + 0.5 * dt * k1, state, rotors, model, servo);
    const AugVec k3 = derivative(y + 0.5 * dt * k2, state, rotors, model, servo);
    const AugVec k4 = derivative(y + dt * k3, state, rotors, model, servo);
    AugVec next = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if (!next.allFinite()) throw SimulationAbort("non-finite state after integration step");

    // arm travel hard stop
    for (int i : {12, 14}) {
        if (next[i] > servo.d_max) {
            next[i] = servo.d_max;
            next[i + 1] = std::min(next[i + 1], 0.0);
        } else if (next[i] < -servo.d_max) {
            next[i] = -servo.d_max;
            next[i + 1] = std::max(next[i + 1], 0.0);
        }
    }
    return unpack(next, state);
}

RigidBodyState apply_measurement_noise(const RigidBodyState& state, double noise_deg,
                                       std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    const double half_width = noise_deg * M_PI / 180.0;
    const double droll = uniform(rng) * half_width;
    const double dpitch = uniform(rng) * half_width;
    RigidBodyState measured = state;
    measured.euler[0] += droll;
    measured.euler[1] += dpitch;
    return measured;
}

MissionResult run_mission(const SimConfig& config, const VehicleParams& vehicle) {
    config.validate();
    vehicle.mass_model.validate();
    vehicle.servo.validate();

    const int substeps = config.substeps();
    const double dt_ctrl = 1.0 / config.controller_hz;
    const int n_ctrl_steps = static_cast<int>(std::floor(config.duration / dt_ctrl));

    Controller controller(vehicle.gains, config.mode, vehicle.mass_model.total_mass(),
                          vehicle.rotor_params.k_f);
    const ActuatorLimits limits{vehicle.rotor_params.omega_max, vehicle.servo.d_max};
    std::mt19937_64 rng(config.rng_seed);

    VehicleState state;  // origin, level, at rest, nominal morphology
    RotorSet rotors = vehicle.rotor_params;

    const auto* waypoints = std::get_if<WaypointMission>(&config.mission);
    const auto* figure8 = std::get_if<FigureEightMission>(&config.mission);
    std::size_t wp_index = 0;

    MissionResult result;
    result.telemetry.reserve(static_cast<std::size_t>(n_ctrl_steps));
    MissionSummary& summary = result.summary;

    double sum_sq_3d = 0.0, sum_sq_lat = 0.0;
    std::size_t n_samples = 0;

    log_info("run_mission: mode=" + to_string(config.mode) +
             " duration=" + std::to_string(config.duration) +
             " seed=" + std::to_string(config.rng_seed));

    for (int step = 0; step < n_ctrl_steps; ++step) {
        const double t = step * dt_ctrl;

        MissionTarget target;
        if (waypoints) {
            if (wp_index < waypoints->waypoints.size() &&
                (state.body.pos - waypoints->waypoints[wp_index]).norm() <
                    waypoints->capture_radius) {
                summary.arrival_times.push_back(t);
                ++summary.waypoints_captured;
                ++wp_index;
            }
            const std::size_t active = std::min(wp_index, waypoints->waypoints.size() - 1);
            target.position = waypoints->waypoints[active];
            target.velocity = Vec3::Zero();
        } else {
            target = figure_eight_target(*figure8, t);
        }

        const RigidBodyState measured =
            apply_measurement_noise(state.body, config.noise_deg, rng);

        SaturationFlags flags;
        const ControlCommand cmd = saturate_command(
            controller.step(measured, target.position, target.velocity, dt_ctrl), limits,
            &flags);
        controller.set_saturation_feedback(flags);

        rotors.omega = cmd.omega;
        state.morph.dx_cmd = cmd.dx_cmd;
        state.morph.dy_cmd = cmd.dy_cmd;

        result.telemetry.push_back(TelemetryRecord{
            t, state.body.pos, state.body.vel_body, state.body.euler, state.body.rates,
            cmd.omega, state.morph.dx, state.morph.dy, cmd.dx_cmd, cmd.dy_cmd,
            target.position});

        const Vec3 err = state.body.pos - target.position;
        sum_sq_3d += err.squaredNorm();
        sum_sq_lat += err[0] * err[0] + err[1] * err[1];
        ++n_samples;
        summary.max_abs_dx = std::max(summary.max_abs_dx, std::abs(state.morph.dx));
        summary.max_abs_dy = std::max(summary.max_abs_dy, std::abs(state.morph.dy));
        summary.max_tilt = std::max({summary.max_tilt, std::abs(state.body.euler[0]),
                                     std::abs(state.body.euler[1])});
        summary.peak_tilt_sum = std::max(
            summary.peak_tilt_sum, std::abs(state.body.euler[0]) + std::abs(state.body.euler[1]));

        try {
            for (int sub = 0; sub < substeps; ++sub)
                state = rk4_step(state, rotors, vehicle.mass_model, vehicle.servo,
                                 config.dt_physics);
        } catch (const SimulationAbort& abort) {
            std::ostringstream msg;
            msg << "aborted at t=" << t << ": " << abort.what();
            result.aborted = true;
            result.abort_reason = msg.str();
            log_warn(result.abort_reason);
            break;
        }
    }

    if (n_samples > 0) {
        summary.rms_tracking_error = std::sqrt(sum_sq_3d / static_cast<double>(n_samples));
        summary.rms_lateral_error = std::sqrt(sum_sq_lat / static_cast<double>(n_samples));
    }
    summary.completed =
        !result.aborted &&
        (!waypoints || summary.waypoints_captured == static_cast<int>(waypoints->waypoints.size()));
    return result;
}

}  // namespace morphsim
