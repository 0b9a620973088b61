#include "morphsim/control.hpp"

#include <algorithm>
#include <cmath>

#include "morphsim/dynamics.hpp"

namespace morphsim {

namespace {

double clamp_sym(double v, double limit) { return std::clamp(v, -limit, limit); }

}  // namespace

double hover_speed(double accel_z_des, double mass, double k_f, bool* floored) {
    bool clamped = false;
    if (!(accel_z_des > 0.0)) {
        accel_z_des = 0.1 * kGravity;
        clamped = true;
    }
    if (floored) *floored = clamped;
    return std::sqrt(mass * accel_z_des / (4.0 * k_f));
}

AttitudeSetpoint attitude_setpoints(const Vec3& accel_des, double psi_d, double tilt_max) {
    const double spsi = std::sin(psi_d), cpsi = std::cos(psi_d);
    AttitudeSetpoint sp;
    sp.phi_d = clamp_sym((accel_des[0] * spsi - accel_des[1] * cpsi) / kGravity, tilt_max);
    sp.theta_d = clamp_sym((accel_des[0] * cpsi + accel_des[1] * spsi) / kGravity, tilt_max);
    sp.psi_d = psi_d;
    return sp;
}

Vec4 motor_mixer(double omega_h, double dw_phi, double dw_theta, double dw_psi) {
    return Vec4(omega_h - dw_theta - dw_psi,
                omega_h + dw_phi + dw_psi,
                omega_h + dw_theta - dw_psi,
                omega_h - dw_phi + dw_psi);
}

Controller::Controller(const ControlGains& gains, ActuationMode mode, double mass, double k_f)
    : gains_(gains), mode_(mode), mass_(mass), k_f_(k_f) {}

void Controller::reset() {
    integ_ = IntegratorState{};
    sat_ = SaturationFlags{};
    tilt_saturated_ = false;
}

Vec3 Controller::position_control(const RigidBodyState& state, const Vec3& target,
                                  const Vec3& target_vel, double dt) {
    const Vec3 e = target - state.pos;
    const Vec3 vel_world = rotation_body_to_world(state.euler) * state.vel_body;
    const Vec3 edot = target_vel - vel_world;

    // x,y integrators freeze while the tilt setpoint is saturated; z while
    // any rotor is at its limit.
    if (!tilt_saturated_) {
        integ_.position[0] = clamp_sym(integ_.position[0] + e[0] * dt, gains_.pos_integral_limit);
        integ_.position[1] = clamp_sym(integ_.position[1] + e[1] * dt, gains_.pos_integral_limit);
    }
    if (!sat_.any_rotor())
        integ_.position[2] = clamp_sym(integ_.position[2] + e[2] * dt, gains_.pos_integral_limit);

    const PidChannel* ch[3] = {&gains_.pos_x, &gains_.pos_y, &gains_.pos_z};
    Vec3 accel;
    for (int i = 0; i < 3; ++i)
        accel[i] = ch[i]->kp * e[i] + ch[i]->ki * integ_.position[i] + ch[i]->kd * edot[i];
    accel[2] += kGravity;  // gravity feed-forward on the z channel
    return accel;
}

AttitudeControlOutput Controller::attitude_control(const RigidBodyState& state,
                                                   const AttitudeSetpoint& setpoint, double dt) {
    const double e_phi = setpoint.phi_d - state.euler[0];
    const double e_theta = setpoint.theta_d - state.euler[1];
    const double e_psi = setpoint.psi_d - state.euler[2];
    // derivative terms are body-rate errors (rate setpoints zero)
    const double e_p = -state.rates[0];
    const double e_q = -state.rates[1];
    const double e_r = -state.rates[2];

    const bool rotor_rp_active = mode_ != ActuationMode::SlidingArmOnly;
    const bool arms_active = mode_ != ActuationMode::Conventional;

    if (rotor_rp_active && !sat_.any_rotor()) {
        integ_.attitude[0] = clamp_sym(integ_.attitude[0] + e_phi * dt, gains_.att_integral_limit);
        integ_.attitude[1] = clamp_sym(integ_.attitude[1] + e_theta * dt, gains_.att_integral_limit);
    }
    if (!sat_.any_rotor())
        integ_.attitude[2] = clamp_sym(integ_.attitude[2] + e_psi * dt, gains_.att_integral_limit);
    if (arms_active) {
        if (!sat_.dx)
            integ_.arm_pitch = clamp_sym(integ_.arm_pitch + e_theta * dt, gains_.arm_integral_limit);
        if (!sat_.dy)
            integ_.arm_roll = clamp_sym(integ_.arm_roll + e_phi * dt, gains_.arm_integral_limit);
    }

    AttitudeControlOutput out;
    if (rotor_rp_active) {
        out.dw_phi = gains_.att_roll.kp * e_phi + gains_.att_roll.ki * integ_.attitude[0]
                   + gains_.att_roll.kd * e_p;
        out.dw_theta = gains_.att_pitch.kp * e_theta + gains_.att_pitch.ki * integ_.attitude[1]
                     + gains_.att_pitch.kd * e_q;
    }
    out.dw_psi = gains_.att_yaw.kp * e_psi + gains_.att_yaw.ki * integ_.attitude[2]
               + gains_.att_yaw.kd * e_r;

    if (arms_active) {
        // Positive pitch error must yield positive pitch torque; the pitch
        // torque is -sum(r_x F), so the X-arm command takes a minus sign.
        out.dx_cmd = -(gains_.arm_pitch.kp * e_theta + gains_.arm_pitch.ki * integ_.arm_pitch
                       + gains_.arm_pitch.kd * e_q);
        out.dy_cmd = gains_.arm_roll.kp * e_phi + gains_.arm_roll.ki * integ_.arm_roll
                   + gains_.arm_roll.kd * e_p;
    }
    return out;
}

ControlCommand Controller::step(const RigidBodyState& measured, const Vec3& target,
                                const Vec3& target_vel, double dt) {
    const Vec3 accel_des = position_control(measured, target, target_vel, dt);
    const double omega_h = hover_speed(accel_des[2], mass_, k_f_);

    AttitudeSetpoint sp = attitude_setpoints(accel_des, 0.0, gains_.tilt_max);
    sp.omega_h = omega_h;
    tilt_saturated_ = std::abs(sp.phi_d) >= gains_.tilt_max - 1e-15 ||
                      std::abs(sp.theta_d) >= gains_.tilt_max - 1e-15;

    const AttitudeControlOutput att = attitude_control(measured, sp, dt);

    ControlCommand cmd;
    cmd.omega = motor_mixer(omega_h, att.dw_phi, att.dw_theta, att.dw_psi);
    cmd.dx_cmd = att.dx_cmd;
    cmd.dy_cmd = att.dy_cmd;
    cmd.mode = mode_;
    return cmd;
}

}  // namespace morphsim
