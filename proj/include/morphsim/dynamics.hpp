#pragma once

#include "morphsim/morphology.hpp"
#include "morphsim/types.hpp"

namespace morphsim {

// Four rotors with quadratic thrust/drag-moment laws F = k_f w^2, M = k_m w^2.
struct RotorSet {
    Vec4 omega = Vec4::Zero();  // rad/s
    double k_f = 2.2e-4;        // N s^2 / rad^2
    double k_m = 5.4e-6;        // N m s^2 / rad^2
    double omega_max = 800.0;   // rad/s
};

struct RotorWrench {
    Vec4 thrust;       // N
    Vec4 drag_moment;  // N m
};

RotorWrench rotor_wrench(const RotorSet& rotors);

struct TranslationalDerivative {
    Vec3 pos_dot;  // m/s, world frame
    Vec3 vel_dot;  // m/s^2, body frame
};

// Translational kinematics and dynamics. Independent of the CoG position.
TranslationalDerivative translational_derivative(const RigidBodyState& state,
                                                 double total_thrust, double mass);

// Angular acceleration about the CoG: J^-1 (tau - w x J w) with thrust torques
// from the per-rotor torque arms and drag moments with alternating signs
// (rotors 1,3 negative; 2,4 positive).
Vec3 rotational_derivative(const Vec3& rates, const MassProperties& props,
                           const Vec4& thrusts, const Vec4& drag_moments);

// ZYX Euler angle kinematics.
Vec3 euler_rate(const Vec3& euler, const Vec3& rates);

struct StateDerivative {
    Vec3 pos_dot;
    Vec3 vel_dot;
    Vec3 euler_dot;
    Vec3 rate_dot;
};

// Full 12-state derivative; mass properties recomputed from the morph state
// on every call.
StateDerivative state_derivative(const RigidBodyState& state, const MorphState& morph,
                                 const RotorSet& rotors, const MassModel& model,
                                 double d_max = kDefaultDMax);

}  // namespace morphsim
