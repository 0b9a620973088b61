#include "morphsim/checks.hpp"

#include <cmath>
#include <sstream>

#include "morphsim/control.hpp"
#include "morphsim/morphology.hpp"

namespace morphsim {

namespace {

struct PointMass {
    double mass;
    Vec3 pos;
};

void sample_cuboid(std::vector<PointMass>& points, double mass, const Vec3& dims,
                   const Vec3& center, int min_samples) {
    const int n = static_cast<int>(std::ceil(std::cbrt(static_cast<double>(min_samples))));
    const double dm = mass / (static_cast<double>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec3 local(((i + 0.5) / n - 0.5) * dims[0],
                                 ((j + 0.5) / n - 0.5) * dims[1],
                                 ((k + 0.5) / n - 0.5) * dims[2]);
                points.push_back({dm, center + local});
            }
}

void sample_cylinder(std::vector<PointMass>& points, double mass, double radius,
                     double height, const Vec3& center, int min_samples) {
    // annulus-weighted radial rings; exact in the angular direction
    const int nr = 50, nz = 20;
    const int nt = std::max(8, min_samples / (nr * nz) + 1);
    double weight_sum = 0.0;
    for (int ir = 0; ir < nr; ++ir) weight_sum += 2.0 * ir + 1.0;
    for (int ir = 0; ir < nr; ++ir) {
        const double r = (ir + 0.5) * radius / nr;
        const double ring_mass = mass * (2.0 * ir + 1.0) / weight_sum / (nz * nt);
        for (int iz = 0; iz < nz; ++iz) {
            const double z = ((iz + 0.5) / nz - 0.5) * height;
            for (int it = 0; it < nt; ++it) {
                const double a = 2.0 * M_PI * (it + 0.5) / nt;
                points.push_back({ring_mass, center + Vec3(r * std::cos(a), r * std::sin(a), z)});
            }
        }
    }
}

}  // namespace

DiscretizedInertia discretize_inertia(const MorphState& morph, const MassModel& model,
                                      int min_samples_per_component) {
    std::vector<PointMass> points;
    points.reserve(static_cast<std::size_t>(min_samples_per_component) * 8);

    sample_cuboid(points, model.body_mass, model.body_dims, Vec3::Zero(),
                  min_samples_per_component);
    sample_cuboid(points, model.arm_mass, model.arm_dims,
                  Vec3(morph.dx, 0.0, model.arm_z_offset), min_samples_per_component);
    sample_cuboid(points, model.arm_mass,
                  Vec3(model.arm_dims[1], model.arm_dims[0], model.arm_dims[2]),
                  Vec3(0.0, morph.dy, -model.arm_z_offset), min_samples_per_component);

    const double l = model.l_nominal;
    const Vec3 motor_centers[4] = {
        Vec3(l + morph.dx, 0.0, model.arm_z_offset),
        Vec3(0.0, l + morph.dy, -model.arm_z_offset),
        Vec3(-l + morph.dx, 0.0, model.arm_z_offset),
        Vec3(0.0, -l + morph.dy, -model.arm_z_offset),
    };
    for (const Vec3& c : motor_centers)
        sample_cylinder(points, model.motor_mass, model.motor_radius, model.motor_height, c,
                        min_samples_per_component);

    double total = 0.0;
    Vec3 weighted = Vec3::Zero();
    for (const PointMass& p : points) {
        total += p.mass;
        weighted += p.mass * p.pos;
    }

    DiscretizedInertia out;
    out.cog = weighted / total;
    Mat3 j = Mat3::Zero();
    for (const PointMass& p : points) {
        const Vec3 d = p.pos - out.cog;
        j += p.mass * (d.squaredNorm() * Mat3::Identity() - d * d.transpose());
    }
    out.inertia = j;
    return out;
}

Mat3 mixer_torque_jacobian(const MassModel& model, const RotorSet& rotor_params,
                           double omega_h, double h) {
    const MassProperties props = compute_inertia(MorphState{}, model);

    auto torque = [&](double dw_phi, double dw_theta, double dw_psi) -> Vec3 {
        RotorSet rotors = rotor_params;
        rotors.omega = motor_mixer(omega_h, dw_phi, dw_theta, dw_psi);
        const RotorWrench w = rotor_wrench(rotors);
        Vec3 tau = Vec3::Zero();
        for (int i = 0; i < 4; ++i) {
            tau[0] += props.torque_arms[i][1] * w.thrust[i];
            tau[1] -= props.torque_arms[i][0] * w.thrust[i];
            tau[2] += ((i % 2 == 0) ? -1.0 : 1.0) * w.drag_moment[i];
        }
        return tau;
    };

    Mat3 jac;
    jac.col(0) = (torque(h, 0, 0) - torque(-h, 0, 0)) / (2.0 * h);
    jac.col(1) = (torque(0, h, 0) - torque(0, -h, 0)) / (2.0 * h);
    jac.col(2) = (torque(0, 0, h) - torque(0, 0, -h)) / (2.0 * h);
    return jac;
}

double simulate_servo_overshoot(const ServoParams& params, double step, double dt) {
    ServoParams p = params;
    p.rate_max = 1e12;  // slew limit disabled for the linear-response check
    double pos = 0.0, rate = 0.0, peak = 0.0;
    const double t_end = 20.0 / (p.zeta * p.omega_n);
    const int n = static_cast<int>(t_end / dt);
    for (int i = 0; i < n; ++i) {
        auto f = [&](double x, double v) { return servo_derivative(x, v, step, p); };
        const ServoDerivative k1 = f(pos, rate);
        const ServoDerivative k2 = f(pos + 0.5 * dt * k1.rate, rate + 0.5 * dt * k1.accel);
        const ServoDerivative k3 = f(pos + 0.5 * dt * k2.rate, rate + 0.5 * dt * k2.accel);
        const ServoDerivative k4 = f(pos + dt * k3.rate, rate + dt * k3.accel);
        pos += dt / 6.0 * (k1.rate + 2.0 * k2.rate + 2.0 * k3.rate + k4.rate);
        rate += dt / 6.0 * (k1.accel + 2.0 * k2.accel + 2.0 * k3.accel + k4.accel);
        peak = std::max(peak, pos);
    }
    return (peak - step) / step;
}

std::vector<CheckResult> run_validation(const VehicleParams& vehicle) {
    std::vector<CheckResult> results;

    {
        double worst_rel = 0.0;
        bool shape_ok = true;
        std::ostringstream detail;
        const double d_max = vehicle.servo.d_max;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                MorphState morph;
                morph.dx = -d_max + 2.0 * d_max * i / 4.0;
                morph.dy = -d_max + 2.0 * d_max * j / 4.0;
                const MassProperties props =
                    compute_inertia(morph, vehicle.mass_model, d_max);
                const DiscretizedInertia oracle =
                    discretize_inertia(morph, vehicle.mass_model);
                const double rel = (props.inertia - oracle.inertia).norm() /
                                   oracle.inertia.norm();
                worst_rel = std::max(worst_rel, rel);
                if ((props.inertia - props.inertia.transpose()).norm() >= 1e-12)
                    shape_ok = false;
                const Vec3 eig =
                    Eigen::SelfAdjointEigenSolver<Mat3>(props.inertia).eigenvalues();
                if (!(eig.minCoeff() > 0.0)) shape_ok = false;
            }
        }
        detail << "max relative Frobenius error " << worst_rel << " over 5x5 morph grid";
        results.push_back({"inertia_pointmass_oracle", worst_rel < 1e-3 && shape_ok,
                           detail.str()});
    }

    {
        const double omega_h = hover_speed(kGravity, vehicle.mass_model.total_mass(),
                                           vehicle.rotor_params.k_f);
        const Mat3 jac =
            mixer_torque_jacobian(vehicle.mass_model, vehicle.rotor_params, omega_h);
        bool ok = true;
        double worst_off = 0.0;
        for (int r = 0; r < 3; ++r) {
            if (!(jac(r, r) > 0.0)) ok = false;
            for (int c = 0; c < 3; ++c)
                if (r != c) worst_off = std::max(worst_off, std::abs(jac(r, c)) / jac(r, r));
        }
        if (worst_off >= 1e-9) ok = false;
        std::ostringstream detail;
        detail << "diag (" << jac(0, 0) << ", " << jac(1, 1) << ", " << jac(2, 2)
               << "), worst off-diagonal ratio " << worst_off;
        results.push_back({"mixer_torque_jacobian", ok, detail.str()});
    }

    {
        bool ok = true;
        std::ostringstream detail;
        for (double zeta : {0.5, 0.7, 1.0}) {
            ServoParams p = vehicle.servo;
            p.zeta = zeta;
            const double measured = simulate_servo_overshoot(p, 0.1);
            const double expected =
                zeta < 1.0 ? std::exp(-M_PI * zeta / std::sqrt(1.0 - zeta * zeta)) : 0.0;
            const bool pass = expected > 0.0 ? std::abs(measured - expected) <= 0.01 * expected
                                             : measured <= 0.01;
            if (!pass) ok = false;
            detail << "zeta=" << zeta << ": measured " << measured << " expected " << expected
                   << "; ";
        }
        results.push_back({"servo_step_overshoot", ok, detail.str()});
    }

    return results;
}

}  // namespace morphsim
