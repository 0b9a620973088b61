#include <doctest.h>

#include <cmath>
#include <random>

#include "morphsim/simulation.hpp"
#include "morphsim/telemetry.hpp"

using namespace morphsim;

namespace {

VehicleParams default_vehicle() { return VehicleParams{}; }

RotorSet hover_rotors() {
    RotorSet rotors;
    rotors.omega.setConstant(std::sqrt(1.56 * kGravity / (4.0 * rotors.k_f)));
    return rotors;
}

}  // namespace

TEST_CASE("rk4 free fall matches the analytic solution") {
    const MassModel model;
    const ServoParams servo;
    RotorSet rotors;  // all off
    VehicleState state;
    for (int i = 0; i < 1000; ++i) state = rk4_step(state, rotors, model, servo, 1e-3);
    CHECK(state.body.pos[2] == doctest::Approx(-0.5 * kGravity).epsilon(1e-9));
    CHECK(state.body.vel_body[2] == doctest::Approx(-kGravity).epsilon(1e-9));
}

TEST_CASE("torque-free spin conserves rotational kinetic energy") {
    const MassModel model;
    const ServoParams servo;
    RotorSet rotors;  // zero thrust, zero drag moments
    VehicleState state;
    state.morph.dx = 0.1;  // frozen at a morphed shape: products of inertia active
    state.morph.dx_cmd = 0.1;
    state.body.rates = Vec3(0.02, -0.01, 2.0);

    const Mat3 j = compute_inertia(state.morph, model).inertia;
    const double e0 = state.body.rates.dot(j * state.body.rates);
    for (int i = 0; i < 10000; ++i) state = rk4_step(state, rotors, model, servo, 1e-3);
    const double e1 = state.body.rates.dot(j * state.body.rates);
    CHECK(std::abs(e1 - e0) / e0 < 1e-10);
}

TEST_CASE("rk4 shows fourth-order convergence on a perturbed-hover trajectory") {
    const MassModel model;
    const ServoParams servo;
    RotorSet rotors = hover_rotors();
    rotors.omega[1] += 0.5;  // slight asymmetry so the trajectory is nontrivial

    auto simulate = [&](double dt) {
        VehicleState state;
        state.body.euler = Vec3(0.02, -0.03, 0.0);
        state.body.rates = Vec3(0.05, 0.04, -0.03);
        state.morph.dx_cmd = 0.02;
        const int n = static_cast<int>(std::lround(2.0 / dt));
        for (int i = 0; i < n; ++i) state = rk4_step(state, rotors, model, servo, dt);
        Eigen::VectorXd v(12);
        v << state.body.pos, state.body.vel_body, state.body.euler, state.body.rates;
        return v;
    };

    const Eigen::VectorXd reference = simulate(1e-5);
    const double e1 = (simulate(2e-3) - reference).norm();
    const double e2 = (simulate(1e-3) - reference).norm();
    const double order = std::log2(e1 / e2);
    CHECK(order > 3.8);
    CHECK(order < 4.5);
}

TEST_CASE("measurement noise contract") {
    RigidBodyState state;
    state.euler = Vec3(0.1, 0.2, 0.3);
    state.pos = Vec3(1, 2, 3);

    SUBCASE("zero noise is the identity") {
        std::mt19937_64 rng(1);
        const RigidBodyState out = apply_measurement_noise(state, 0.0, rng);
        CHECK((out.euler.array() == state.euler.array()).all());
        CHECK((out.pos.array() == state.pos.array()).all());
    }
    SUBCASE("draws stay within the +-2 degree band with near-zero mean") {
        std::mt19937_64 rng(1);
        const double half_width = 2.0 * M_PI / 180.0;
        double sum = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i) {
            const RigidBodyState out = apply_measurement_noise(state, 2.0, rng);
            const double droll = out.euler[0] - state.euler[0];
            const double dpitch = out.euler[1] - state.euler[1];
            CHECK(std::abs(droll) <= half_width);
            CHECK(std::abs(dpitch) <= half_width);
            CHECK(out.euler[2] == state.euler[2]);
            sum += droll + dpitch;
        }
        // 3 sigma of the mean of 2n uniform draws
        const double sigma = half_width / std::sqrt(3.0) / std::sqrt(2.0 * n);
        CHECK(std::abs(sum / (2.0 * n)) < 3.0 * sigma);
    }
    SUBCASE("same seed gives a bit-identical sequence") {
        std::mt19937_64 a(99), b(99);
        for (int i = 0; i < 100; ++i) {
            const RigidBodyState ra = apply_measurement_noise(state, 2.0, a);
            const RigidBodyState rb = apply_measurement_noise(state, 2.0, b);
            CHECK(ra.euler[0] == rb.euler[0]);
            CHECK(ra.euler[1] == rb.euler[1]);
        }
    }
}

TEST_CASE("sim config validation") {
    SimConfig config;
    config.controller_hz = 300.0;  // period not a multiple of 1 ms
    CHECK_THROWS_AS(config.validate(), std::domain_error);
    config.controller_hz = 250.0;
    CHECK_NOTHROW(config.validate());
    CHECK(config.substeps() == 4);
}

TEST_CASE("hover hold: negligible drift from trim in every mode") {
    for (ActuationMode mode :
         {ActuationMode::Conventional, ActuationMode::SlidingArmOnly, ActuationMode::Combined}) {
        SimConfig config;
        config.mode = mode;
        config.duration = 30.0;
        config.mission = WaypointMission{{Vec3::Zero()}, 1e-6};
        const MissionResult result = run_mission(config, default_vehicle());
        REQUIRE_FALSE(result.aborted);
        double max_drift = 0.0;
        for (const auto& r : result.telemetry)
            max_drift = std::max(max_drift, r.pos.norm());
        INFO("mode ", to_string(mode));
        CHECK(max_drift < 1e-3);
    }
}

TEST_CASE("waypoint mission captures all four default waypoints") {
    SimConfig config;  // default waypoint mission, Combined
    const MissionResult result = run_mission(config, default_vehicle());
    CHECK(result.summary.completed);
    CHECK(result.summary.waypoints_captured == 4);
    CHECK(result.summary.arrival_times.back() < 60.0);
}

TEST_CASE("sliding-arm-only keeps opposite rotors at identical speeds") {
    SimConfig config;
    config.mode = ActuationMode::SlidingArmOnly;
    config.duration = 20.0;
    const MissionResult result = run_mission(config, default_vehicle());
    for (const auto& r : result.telemetry) {
        CHECK(r.omega[0] == r.omega[2]);  // roll/pitch deltas exactly zero
        CHECK(r.omega[1] == r.omega[3]);
    }
}

TEST_CASE("arm travel never exceeds the limit in telemetry") {
    SimConfig config;
    config.mode = ActuationMode::SlidingArmOnly;
    const MissionResult result = run_mission(config, default_vehicle());
    const double d_max = default_vehicle().servo.d_max;
    for (const auto& r : result.telemetry) {
        CHECK(std::abs(r.dx) <= d_max + 1e-12);
        CHECK(std::abs(r.dy) <= d_max + 1e-12);
    }
}

TEST_CASE("identical config and seed give byte-identical telemetry") {
    SimConfig config;
    config.duration = 5.0;
    config.noise_deg = 2.0;
    config.rng_seed = 1234;
    const MissionResult a = run_mission(config, default_vehicle());
    const MissionResult b = run_mission(config, default_vehicle());
    CHECK(telemetry_csv_string(a.telemetry) == telemetry_csv_string(b.telemetry));
}

TEST_CASE("halving the physics step changes arrival times by well under 1%") {
    SimConfig coarse;
    SimConfig fine;
    fine.dt_physics = 5e-4;
    const MissionResult a = run_mission(coarse, default_vehicle());
    const MissionResult b = run_mission(fine, default_vehicle());
    REQUIRE(a.summary.arrival_times.size() == b.summary.arrival_times.size());
    for (std::size_t i = 0; i < a.summary.arrival_times.size(); ++i)
        CHECK(std::abs(a.summary.arrival_times[i] - b.summary.arrival_times[i]) <
              0.01 * b.summary.arrival_times[i]);
}

TEST_CASE("figure-eight target parameterization and ramp") {
    FigureEightMission f8;
    const MissionTarget start = figure_eight_target(f8, 0.0);
    CHECK(start.position.norm() == 0.0);
    CHECK(start.velocity.norm() == 0.0);

    const MissionTarget late = figure_eight_target(f8, 20.0);
    CHECK(late.position[0] == doctest::Approx(2.0 * std::sin(0.4 * 20.0)).epsilon(1e-12));
    CHECK(late.position[1] == doctest::Approx(1.0 * std::sin(0.8 * 20.0)).epsilon(1e-12));
    CHECK(late.position[2] == 1.5);

    // velocity consistent with position by finite differences
    const double h = 1e-6;
    const MissionTarget p = figure_eight_target(f8, 3.0 + h);
    const MissionTarget m = figure_eight_target(f8, 3.0 - h);
    const Vec3 v_fd = (p.position - m.position) / (2 * h);
    CHECK((figure_eight_target(f8, 3.0).velocity - v_fd).norm() < 1e-6);
}

TEST_CASE("figure-eight tracking with noise: sliding modes beat conventional") {
    auto rms = [&](ActuationMode mode) {
        SimConfig config;
        config.mission = FigureEightMission{};
        config.mode = mode;
        config.noise_deg = 2.0;
        config.rng_seed = 7;
        config.duration = 2.0 * 2.0 * M_PI / 0.4 + 5.0;
        return run_mission(config, default_vehicle()).summary.rms_lateral_error;
    };
    const double conventional = rms(ActuationMode::Conventional);
    const double sliding = rms(ActuationMode::SlidingArmOnly);
    const double combined = rms(ActuationMode::Combined);
    CHECK(conventional > sliding);
    CHECK(conventional > combined);
}
