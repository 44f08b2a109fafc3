#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "circumnav/controller.hpp"
#include "circumnav/diffdrive.hpp"
#include "circumnav/params.hpp"

using namespace circumnav;

TEST_CASE("wheel_speeds basics") {
    const DriveGeometry geom{};
    auto cmd = wheel_speeds(0.6, 0.0, geom);
    CHECK(cmd.v_right == doctest::Approx(0.6));
    CHECK(cmd.v_left == doctest::Approx(0.6));
    CHECK_FALSE(cmd.saturated);

    cmd = wheel_speeds(0.6, -0.6, geom);
    CHECK(cmd.v_right == doctest::Approx(0.56838).epsilon(1e-12));
    CHECK(cmd.v_left == doctest::Approx(0.63162).epsilon(1e-12));
    CHECK_FALSE(cmd.saturated);

    cmd = wheel_speeds(0.6, 4.5, geom);
    CHECK(cmd.v_right == doctest::Approx(0.83715).epsilon(1e-12));
    CHECK(cmd.saturated);
    // values are reported unclipped even when saturated
    CHECK(cmd.v_right > geom.v_wheel_max);
}

TEST_CASE("wheel_speeds round-trips the unicycle command") {
    const DriveGeometry geom{};
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> uv(0.0, 0.8);
    std::uniform_real_distribution<double> uo(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const double v = uv(rng);
        const double om = uo(rng);
        const auto cmd = wheel_speeds(v, om, geom);
        CHECK(std::abs((cmd.v_right + cmd.v_left) / 2.0 - v) < 1e-12);
        CHECK(std::abs((cmd.v_right - cmd.v_left) / geom.d_w - om) < 1e-12);
    }
}

TEST_CASE("wheel_speeds is linear in (V, omega)") {
    const DriveGeometry geom{};
    const auto a = wheel_speeds(0.3, 1.0, geom);
    const auto b = wheel_speeds(0.2, -2.0, geom);
    const auto sum = wheel_speeds(0.5, -1.0, geom);
    CHECK(sum.v_right == doctest::Approx(a.v_right + b.v_right).epsilon(1e-13));
    CHECK(sum.v_left == doctest::Approx(a.v_left + b.v_left).epsilon(1e-13));
}

TEST_CASE("max_feasible_omega") {
    const DriveGeometry geom{};
    CHECK(max_feasible_omega(0.6, geom) == doctest::Approx(4.0607210626185958).epsilon(1e-13));
    CHECK_THROWS_AS(max_feasible_omega(0.814, geom), DomainError);
    CHECK_THROWS_AS(max_feasible_omega(0.9, geom), DomainError);
}

TEST_CASE("the reference experiment fits the drive's turn authority") {
    const DesignParams params = make_design_params(validate_radii(1.0, 0.7, 0.4), 0.6, 0.5, 0.05);
    const double eta0 = eta(std::sqrt(1.64), 38.0 * std::numbers::pi / 180.0, params);
    const double w0 = blf_value(eta0, params.delta);
    const double bound = omega_bound(params, w0);
    CHECK(bound == doctest::Approx(2.667).epsilon(5e-4));
    CHECK(bound < max_feasible_omega(0.6, DriveGeometry{}));
}
