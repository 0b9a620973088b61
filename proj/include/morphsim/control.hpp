#pragma once

#include "morphsim/command.hpp"
#include "morphsim/types.hpp"

namespace morphsim {

struct PidChannel {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
};

// Gains are implementer defaults, configurable; acceptance is defined by
// closed-loop behavior rather than these numbers.
struct ControlGains {
    PidChannel pos_x{4.0, 0.05, 4.0};
    PidChannel pos_y{4.0, 0.05, 4.0};
    PidChannel pos_z{8.0, 0.10, 6.0};

    PidChannel att_roll{10.0, 0.15, 4.0};
    PidChannel att_pitch{10.0, 0.15, 4.0};
    PidChannel att_yaw{15.0, 0.2, 4.0};

    PidChannel arm_pitch{0.15, 0.01, 0.05};  // m per rad of pitch error
    PidChannel arm_roll{0.15, 0.01, 0.05};

    double tilt_max = 0.5;             // rad, attitude setpoint saturation
    double pos_integral_limit = 10.0;  // clamp on integrated position error
    double att_integral_limit = 5.0;
    double arm_integral_limit = 2.0;
};

struct AttitudeSetpoint {
    double phi_d = 0.0;    // rad
    double theta_d = 0.0;  // rad
    double psi_d = 0.0;    // rad
    double omega_h = 0.0;  // rad/s, collective hover speed
};

struct AttitudeControlOutput {
    double dw_phi = 0.0;   // rad/s
    double dw_theta = 0.0;
    double dw_psi = 0.0;
    double dx_cmd = 0.0;   // m
    double dy_cmd = 0.0;
};

// Integrated-error states of the cascade, exposed for inspection.
struct IntegratorState {
    Vec3 position = Vec3::Zero();         // x, y, z
    Vec3 attitude = Vec3::Zero();         // phi, theta, psi (rotor channels)
    double arm_pitch = 0.0;               // theta (arm channel)
    double arm_roll = 0.0;                // phi (arm channel)
};

// Speed for all four rotors to balance a vertical acceleration demand.
// Non-positive demand is floored at 0.1 g; *floored reports the clamp.
double hover_speed(double accel_z_des, double mass, double k_f, bool* floored = nullptr);

// Small-angle inversion of the lateral dynamics, saturated to tilt_max.
AttitudeSetpoint attitude_setpoints(const Vec3& accel_des, double psi_d, double tilt_max = 0.5);

// Plus-configuration mixing consistent with the torque sign conventions.
Vec4 motor_mixer(double omega_h, double dw_phi, double dw_theta, double dw_psi);

// Cascaded position -> attitude controller with three actuation modes.
// Deterministic state machine: all mutable state is the integrator set.
class Controller {
public:
    Controller(const ControlGains& gains, ActuationMode mode, double mass, double k_f);

    // Outer loop: desired world-frame accelerations, z includes the +g feed-forward.
    Vec3 position_control(const RigidBodyState& state, const Vec3& target,
                          const Vec3& target_vel, double dt);

    // Inner loop: rotor speed deltas and arm displacement commands per mode.
    AttitudeControlOutput attitude_control(const RigidBodyState& state,
                                           const AttitudeSetpoint& setpoint, double dt);

    // Full cascade at the controller rate.
    ControlCommand step(const RigidBodyState& measured, const Vec3& target,
                        const Vec3& target_vel, double dt);

    // Anti-windup: channels whose actuator saturated last step stop integrating.
    void set_saturation_feedback(const SaturationFlags& flags) { sat_ = flags; }

    ActuationMode mode() const { return mode_; }
    const IntegratorState& integrators() const { return integ_; }
    void set_integrators(const IntegratorState& state) { integ_ = state; }
    void reset();

private:
    ControlGains gains_;
    ActuationMode mode_;
    double mass_;
    double k_f_;
    IntegratorState integ_;
    SaturationFlags sat_{};
    bool tilt_saturated_ = false;
};

}  // namespace morphsim
