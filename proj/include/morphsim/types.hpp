#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace morphsim {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kGravity = 9.81;  // m/s^2

// Euler-rate equations blow up at |theta| = pi/2; abort slightly before.
inline constexpr double kPitchGuard = 1.5707963267948966 - 1e-3;

// 12-state rigid body: world position, body-frame velocity,
// ZYX Euler angles (roll, pitch, yaw), body rates (p, q, r).
struct RigidBodyState {
    Vec3 pos = Vec3::Zero();       // x, y, z in world frame E (m)
    Vec3 vel_body = Vec3::Zero();  // u, v, w in body frame B (m/s)
    Vec3 euler = Vec3::Zero();     // phi, theta, psi (rad)
    Vec3 rates = Vec3::Zero();     // p, q, r (rad/s)
};

// Thrown when the pitch singularity guard trips or a state goes non-finite.
struct SimulationAbort : std::runtime_error {
    explicit SimulationAbort(const std::string& what) : std::runtime_error(what) {}
};

// Body-to-world rotation for ZYX Euler angles (phi, theta, psi).
Mat3 rotation_body_to_world(const Vec3& euler);

}  // namespace morphsim
