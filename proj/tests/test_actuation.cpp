#include <doctest.h>

#include <cmath>
#include <random>

#include "morphsim/actuation.hpp"
#include "morphsim/checks.hpp"

using namespace morphsim;

TEST_CASE("servo equilibrium and stiff-servo limit") {
    ServoParams params;

    const ServoDerivative eq = servo_derivative(0.05, 0.0, 0.05, params);
    CHECK(eq.rate == 0.0);
    CHECK(eq.accel == 0.0);

    // stiff critically damped servo tracks a constant command closely
    ServoParams stiff;
    stiff.omega_n = 200.0;
    stiff.zeta = 1.0;
    stiff.rate_max = 1e9;
    double pos = 0.0, rate = 0.0;
    const double dt = 1e-5;
    for (int i = 0; i < 100000; ++i) {
        const ServoDerivative d = servo_derivative(pos, rate, 0.1, stiff);
        pos += d.rate * dt;
        rate += d.accel * dt;
    }
    CHECK(pos == doctest::Approx(0.1).epsilon(1e-6));
}

TEST_CASE("step overshoot and peak time match the second-order closed form") {
    ServoParams params;  // zeta = 0.7, omega_n = 15
    const double measured = simulate_servo_overshoot(params, 0.1);
    const double expected = std::exp(-M_PI * 0.7 / std::sqrt(1.0 - 0.49));
    CHECK(expected == doctest::Approx(0.0460).epsilon(2e-3));
    CHECK(measured == doctest::Approx(expected).epsilon(0.01));

    // peak time pi / (wn sqrt(1 - zeta^2)) ~ 0.293 s
    ServoParams p = params;
    p.rate_max = 1e12;
    double pos = 0.0, rate = 0.0, peak = 0.0, t_peak = 0.0;
    const double dt = 1e-4;
    for (int i = 0; i < 20000; ++i) {
        const ServoDerivative d = servo_derivative(pos, rate, 0.1, p);
        pos += d.rate * dt;
        rate += d.accel * dt;
        if (pos > peak) {
            peak = pos;
            t_peak = (i + 1) * dt;
        }
    }
    CHECK(t_peak == doctest::Approx(M_PI / (15.0 * std::sqrt(1.0 - 0.49))).epsilon(0.01));
}

TEST_CASE("DC gain is 1") {
    ServoParams params;
    double pos = 0.0, rate = 0.0;
    const double dt = 1e-3;
    const double settle = 25.0 / (params.zeta * params.omega_n);
    for (double t = 0.0; t < settle; t += dt) {
        const ServoDerivative d = servo_derivative(pos, rate, 0.08, params);
        pos += d.rate * dt;
        rate += d.accel * dt;
    }
    CHECK(pos == doctest::Approx(0.08).epsilon(1e-6));
}

TEST_CASE("BIBO: random saturated command sequences keep position near the travel range") {
    ServoParams params;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> cmd_dist(-params.d_max, params.d_max);
    const double overshoot = std::exp(-M_PI * params.zeta / std::sqrt(1 - params.zeta * params.zeta));
    const double bound = params.d_max * (1.0 + 2.0 * overshoot) + 1e-9;

    double pos = 0.0, rate = 0.0;
    const double dt = 1e-3;
    for (int segment = 0; segment < 200; ++segment) {
        const double cmd = cmd_dist(rng);
        for (int i = 0; i < 100; ++i) {
            const ServoDerivative d = servo_derivative(pos, rate, cmd, params);
            pos += d.rate * dt;
            rate += d.accel * dt;
            CHECK(std::abs(pos) < bound);
        }
    }
}

TEST_CASE("command saturation clamps and flags each channel") {
    const ActuatorLimits limits;
    ControlCommand cmd;
    cmd.omega = Vec4(100, 200, 300, 400);
    cmd.dx_cmd = 0.1;
    cmd.dy_cmd = -0.05;

    SaturationFlags flags;
    const ControlCommand same = saturate_command(cmd, limits, &flags);
    CHECK((same.omega.array() == cmd.omega.array()).all());
    CHECK(same.dx_cmd == cmd.dx_cmd);
    CHECK_FALSE(flags.any());

    cmd.omega[2] = 900.0;
    cmd.dy_cmd = -0.2;
    const ControlCommand clamped = saturate_command(cmd, limits, &flags);
    CHECK(clamped.omega[2] == 800.0);
    CHECK(clamped.dy_cmd == -0.15);
    CHECK(flags.rotor[2]);
    CHECK(flags.dy);
    CHECK_FALSE(flags.dx);

    cmd.omega[0] = -50.0;
    const ControlCommand floored = saturate_command(cmd, limits, &flags);
    CHECK(floored.omega[0] == 0.0);
    CHECK(flags.rotor[0]);
}

TEST_CASE("servo params validation") {
    ServoParams bad;
    bad.zeta = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.zeta = 0.7;
    bad.omega_n = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}
