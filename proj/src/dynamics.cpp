#include "morphsim/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace morphsim {

namespace {

void check_pitch_guard(const Vec3& euler) {
    if (std::abs(euler[1]) >= kPitchGuard) {
        std::ostringstream msg;
        msg << "pitch |theta| = " << std::abs(euler[1])
            << " rad at the Euler-rate singularity guard";
        throw SimulationAbort(msg.str());
    }
}

}  // namespace

Mat3 rotation_body_to_world(const Vec3& euler) {
    const double cphi = std::cos(euler[0]), sphi = std::sin(euler[0]);
    const double cth = std::cos(euler[1]), sth = std::sin(euler[1]);
    const double cpsi = std::cos(euler[2]), spsi = std::sin(euler[2]);
    Mat3 r;
    r << cpsi * cth, cpsi * sth * sphi - spsi * cphi, cpsi * sth * cphi + spsi * sphi,
         spsi * cth, spsi * sth * sphi + cpsi * cphi, spsi * sth * cphi - cpsi * sphi,
         -sth,       cth * sphi,                      cth * cphi;
    return r;
}

RotorWrench rotor_wrench(const RotorSet& rotors) {
    RotorWrench w;
    for (int i = 0; i < 4; ++i) {
        const double w2 = rotors.omega[i] * rotors.omega[i];
        w.thrust[i] = rotors.k_f * w2;
        w.drag_moment[i] = rotors.k_m * w2;
    }
    return w;
}

TranslationalDerivative translational_derivative(const RigidBodyState& state,
                                                 double total_thrust, double mass) {
    check_pitch_guard(state.euler);
    const double cphi = std::cos(state.euler[0]), sphi = std::sin(state.euler[0]);
    const double cth = std::cos(state.euler[1]), sth = std::sin(state.euler[1]);
    const double u = state.vel_body[0], v = state.vel_body[1], w = state.vel_body[2];
    const double p = state.rates[0], q = state.rates[1], r = state.rates[2];

    TranslationalDerivative d;
    d.pos_dot = rotation_body_to_world(state.euler) * state.vel_body;
    d.vel_dot = Vec3(0.0, 0.0, total_thrust / mass)
              - Vec3(-kGravity * sth, kGravity * cth * sphi, kGravity * cth * cphi)
              + Vec3(r * v - q * w, p * w - r * u, q * u - p * v);
    return d;
}

Vec3 rotational_derivative(const Vec3& rates, const MassProperties& props,
                           const Vec4& thrusts, const Vec4& drag_moments) {
    Vec3 torque = Vec3::Zero();
    for (int i = 0; i < 4; ++i) {
        torque[0] += props.torque_arms[i][1] * thrusts[i];
        torque[1] -= props.torque_arms[i][0] * thrusts[i];
        // alternating drag signs: rotors 1,3 negative, 2,4 positive
        torque[2] += ((i % 2 == 0) ? -1.0 : 1.0) * drag_moments[i];
    }
    const Mat3& j = props.inertia;
    return j.ldlt().solve(torque - rates.cross(j * rates));
}

Vec3 euler_rate(const Vec3& euler, const Vec3& rates) {
    check_pitch_guard(euler);
    const double cphi = std::cos(euler[0]), sphi = std::sin(euler[0]);
    const double cth = std::cos(euler[1]), tth = std::tan(euler[1]);
    const double p = rates[0], q = rates[1], r = rates[2];
    return Vec3(p + q * sphi * tth + r * cphi * tth,
                q * cphi - r * sphi,
                (q * sphi + r * cphi) / cth);
}

StateDerivative state_derivative(const RigidBodyState& state, const MorphState& morph,
                                 const RotorSet& rotors, const MassModel& model,
                                 double d_max) {
    const MassProperties props = compute_inertia(morph, model, d_max);
    const RotorWrench wrench = rotor_wrench(rotors);
    const double total_thrust = wrench.thrust.sum();

    const TranslationalDerivative trans =
        translational_derivative(state, total_thrust, model.total_mass());

    StateDerivative d;
    d.pos_dot = trans.pos_dot;
    d.vel_dot = trans.vel_dot;
    d.euler_dot = euler_rate(state.euler, state.rates);
    d.rate_dot = rotational_derivative(state.rates, props, wrench.thrust, wrench.drag_moment);
    return d;
}

}  // namespace morphsim
