#include <doctest.h>

#include <cmath>

#include "morphsim/checks.hpp"
#include "morphsim/morphology.hpp"

using namespace morphsim;

namespace {
MorphState morph_at(double dx, double dy) {
    MorphState m;
    m.dx = dx;
    m.dy = dy;
    return m;
}
}  // namespace

TEST_CASE("default mass model sums to the 1.56 kg total") {
    MassModel model;
    CHECK(model.total_mass() == doctest::Approx(1.56).epsilon(1e-12));
    CHECK_NOTHROW(model.validate(1.56));
}

TEST_CASE("mass model validation rejects bad inputs") {
    MassModel model;
    model.body_mass = -1.0;
    CHECK_THROWS_AS(model.validate(), std::domain_error);

    MassModel wrong_total;
    CHECK_THROWS_AS(wrong_total.validate(1.60), std::domain_error);

    MassModel bad_arm;
    bad_arm.arm_dims[0] = 0.4;  // != 2*l_nominal
    CHECK_THROWS_AS(bad_arm.validate(), std::domain_error);
}

TEST_CASE("motor positions at nominal and displaced configurations") {
    MassModel model;

    auto nominal = motor_positions(MorphState{}, model);
    CHECK((nominal[0] - Vec3(0.25, 0.0, 0.01)).norm() == 0.0);
    CHECK((nominal[1] - Vec3(0.0, 0.25, -0.01)).norm() == 0.0);
    CHECK((nominal[2] - Vec3(-0.25, 0.0, 0.01)).norm() == 0.0);
    CHECK((nominal[3] - Vec3(0.0, -0.25, -0.01)).norm() == 0.0);

    // constant-total-length rule: one rotor in, the opposite out
    auto shifted = motor_positions(morph_at(0.05, 0.0), model);
    CHECK(shifted[0][0] == doctest::Approx(0.30));
    CHECK(shifted[2][0] == doctest::Approx(-0.20));
    CHECK((shifted[0] - shifted[2]).norm() == doctest::Approx(0.50));
}

TEST_CASE("motor positions reject out-of-travel displacements, naming the axis") {
    MassModel model;
    CHECK_THROWS_WITH_AS(motor_positions(morph_at(0.2, 0.0), model),
                         doctest::Contains("dx"), std::domain_error);
    CHECK_THROWS_WITH_AS(motor_positions(morph_at(0.0, -0.2), model),
                         doctest::Contains("dy"), std::domain_error);
}

TEST_CASE("cog at nominal is on the z axis; displaced cog matches hand evaluation") {
    MassModel model;

    const Vec3 nominal = compute_cog(MorphState{}, model);
    CHECK(nominal[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(nominal[1] == doctest::Approx(0.0).epsilon(1e-15));

    // dx = 0.05: cog_x = (arm + 2 motors) * 0.05 / total = 0.38*0.05/1.56
    const Vec3 displaced = compute_cog(morph_at(0.05, 0.0), model);
    CHECK(displaced[0] == doctest::Approx(0.38 * 0.05 / 1.56).epsilon(1e-12));
    CHECK(displaced[1] == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("cog axis-swap symmetry and linearity in displacements") {
    MassModel model;

    const Vec3 equal = compute_cog(morph_at(0.07, 0.07), model);
    CHECK(equal[0] == doctest::Approx(equal[1]).epsilon(1e-14));

    const Vec3 base = compute_cog(MorphState{}, model);
    const Vec3 full = compute_cog(morph_at(0.1, -0.06), model);
    const Vec3 half = compute_cog(morph_at(0.05, -0.03), model);
    CHECK(((half - base) - 0.5 * (full - base)).norm() < 1e-12);
}

TEST_CASE("cuboid and cylinder closed forms") {
    const Mat3 cube = component_inertia_cuboid(1.0, Vec3(1, 1, 1));
    CHECK((cube - Mat3::Identity() / 6.0).norm() < 1e-15);

    const Mat3 cyl = component_inertia_cylinder(0.09, 0.014, 0.03);
    CHECK(cyl(2, 2) == doctest::Approx(0.5 * 0.09 * 0.014 * 0.014).epsilon(1e-12));
    CHECK(cyl(0, 0) == doctest::Approx(0.09 * (3 * 0.014 * 0.014 + 0.03 * 0.03) / 12).epsilon(1e-12));
    CHECK(cyl(0, 0) == cyl(1, 1));

    CHECK_THROWS_AS(component_inertia_cuboid(-1.0, Vec3(1, 1, 1)), std::domain_error);
    CHECK_THROWS_AS(component_inertia_cylinder(1.0, 0.0, 0.1), std::domain_error);
}

TEST_CASE("nominal inertia is diagonal with Jxx = Jyy < Jzz") {
    MassModel model;
    const MassProperties props = compute_inertia(MorphState{}, model);
    CHECK(std::abs(props.inertia(0, 1)) < 1e-15);
    CHECK(std::abs(props.inertia(0, 2)) < 1e-15);
    CHECK(std::abs(props.inertia(1, 2)) < 1e-15);
    CHECK(props.inertia(0, 0) == doctest::Approx(props.inertia(1, 1)).epsilon(1e-14));
    CHECK(props.inertia(2, 2) > props.inertia(0, 0));
}

TEST_CASE("inertia matches the point-mass discretization oracle across the grid") {
    MassModel model;
    for (double dx : {-0.15, 0.0, 0.08}) {
        for (double dy : {-0.05, 0.15}) {
            const MassProperties props = compute_inertia(morph_at(dx, dy), model);
            const DiscretizedInertia oracle = discretize_inertia(morph_at(dx, dy), model);
            CHECK((props.inertia - oracle.inertia).norm() / oracle.inertia.norm() < 1e-3);
            CHECK((compute_cog(morph_at(dx, dy), model) - oracle.cog).norm() < 1e-6);
        }
    }
}

TEST_CASE("Jyy grows when the X-arm slides (net mass moves off the y axis)") {
    MassModel model;
    const double jyy0 = compute_inertia(MorphState{}, model).inertia(1, 1);
    const double jyy1 = compute_inertia(morph_at(0.05, 0.0), model).inertia(1, 1);
    CHECK(jyy1 > jyy0);
}

TEST_CASE("grid sweep: symmetry, positive definiteness, triangle inequalities") {
    MassModel model;
    for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
            MorphState morph = morph_at(-0.15 + 0.05 * i, -0.15 + 0.05 * j);
            const MassProperties props = compute_inertia(morph, model);
            CHECK((props.inertia - props.inertia.transpose()).norm() < 1e-12);
            const Vec3 eig = Eigen::SelfAdjointEigenSolver<Mat3>(props.inertia).eigenvalues();
            CHECK(eig.minCoeff() > 0.0);
            CHECK(eig[0] + eig[1] >= eig[2] - 1e-15);
        }
    }
}

TEST_CASE("mass-weighted component offsets from the CoG sum to zero") {
    MassModel model;
    const MorphState morph = morph_at(0.11, -0.09);
    const Vec3 cog = compute_cog(morph, model);
    Vec3 sum = Vec3::Zero();
    for (const Component& c : build_components(morph, model))
        sum += c.mass * (c.position - cog);
    CHECK(sum.norm() < 1e-12);
}

TEST_CASE("axis swap maps (cog_x, Jxx) to (cog_y, Jyy)") {
    MassModel model;
    const MassProperties a = compute_inertia(morph_at(0.12, 0.04), model);
    const MassProperties b = compute_inertia(morph_at(0.04, 0.12), model);
    CHECK(a.cog[0] == doctest::Approx(b.cog[1]).epsilon(1e-12));
    CHECK(a.cog[1] == doctest::Approx(b.cog[0]).epsilon(1e-12));
    CHECK(a.inertia(0, 0) == doctest::Approx(b.inertia(1, 1)).epsilon(1e-10));
    CHECK(a.inertia(1, 1) == doctest::Approx(b.inertia(0, 0)).epsilon(1e-10));
    // torque arms permute: rotor 1 (x-arm) maps onto rotor 2 (y-arm)
    CHECK(a.torque_arms[0][0] == doctest::Approx(b.torque_arms[1][1]).epsilon(1e-12));
    CHECK(a.torque_arms[2][0] == doctest::Approx(b.torque_arms[3][1]).epsilon(1e-12));
}
