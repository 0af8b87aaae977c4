#include <cmath>

#include "adiasweep/schedules.hpp"
#include "doctest.h"

using namespace adiasweep;

namespace {
const LZParams kLZ{10.0, 1.0};
const Aqc1Params kAqc{18.0, 30.0};
}  // namespace

TEST_CASE("linear_lz endpoints and sample value") {
    CHECK(linear_lz(0.0, kLZ, 10.0) == doctest::Approx(-10.0));
    CHECK(linear_lz(5.0, kLZ, 10.0) == doctest::Approx(0.0));
    CHECK(linear_lz(10.0, kLZ, 10.0) == doctest::Approx(10.0));
    CHECK(linear_lz(2.5, kLZ, 10.0) == doctest::Approx(-5.0));
    CHECK_THROWS_AS(linear_lz(-0.1, kLZ, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(linear_lz(10.1, kLZ, 10.0), std::invalid_argument);
}

TEST_CASE("quadratic_lz endpoints, vertex and sample value") {
    CHECK(quadratic_lz(0.0, kLZ, 10.0) == doctest::Approx(-10.0));
    CHECK(quadratic_lz(10.0, kLZ, 10.0) == doctest::Approx(10.0));
    CHECK(quadratic_lz(5.0, kLZ, 10.0) == doctest::Approx(0.0));
    CHECK(quadratic_lz(2.5, kLZ, 10.0) == doctest::Approx(-2.5));
}

TEST_CASE("sweep_velocity is the exact derivative of the quadratic sweep") {
    const double T = 10.0, tc = 5.0;
    CHECK(sweep_velocity(tc, kLZ, T) == doctest::Approx(0.0));
    CHECK(sweep_velocity(0.0, kLZ, T) == doctest::Approx(4.0 * kLZ.omega0 / T));
    // central finite difference oracle away from t_c
    const double h = 1e-6;
    for (double t : {1.0, 2.5, 3.9, 6.1, 8.0}) {
        const double fd = (quadratic_lz(t + h, kLZ, T) - quadratic_lz(t - h, kLZ, T)) / (2.0 * h);
        CHECK(std::abs(sweep_velocity(t, kLZ, T) - std::abs(fd)) <= 1e-6);
    }
}

TEST_CASE("linear_s and quadratic_s") {
    CHECK(linear_s(0.0, 4.0) == 0.0);
    CHECK(linear_s(4.0, 4.0) == 1.0);
    CHECK(linear_s(1.2, 4.0) == doctest::Approx(0.3));
    CHECK(quadratic_s(0.0, 4.0) == 0.0);
    CHECK(quadratic_s(4.0, 4.0) == 1.0);
    CHECK(quadratic_s(2.0, 4.0) == doctest::Approx(0.25));
}

TEST_CASE("exp_like_s continuity and endpoint values") {
    const double s_c = 0.2647;
    const Schedule sched = make_exp_like(1.0, 1.0, s_c);
    const double tc = sched.t_c();
    CHECK(tc == s_c * 1.0);
    CHECK(exp_like_s(0.0, sched) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(exp_like_s(1.0, sched) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(exp_like_s(tc, sched) == doctest::Approx(s_c).epsilon(1e-14));
    // both branches agree at the knee
    const double left = exp_like_s(std::nextafter(tc, 0.0), sched);
    const double right = exp_like_s(std::nextafter(tc, 1.0), sched);
    CHECK(std::abs(left - right) < 1e-12);
}

TEST_CASE("exp_like_s sample value on the first branch") {
    const double s_c = 0.2647;
    const Schedule sched = make_exp_like(1.0, 1.0, s_c);
    const double expect = s_c * (1.0 - std::exp(-0.5)) / (1.0 - std::exp(-1.0));
    CHECK(expect == doctest::Approx(0.164766).epsilon(1e-4));
    CHECK(exp_like_s(sched.t_c() / 2.0, sched) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("exp_like_s approaches the linear schedule as alpha -> 0") {
    // the closed form deviates from t/T by about 0.26 alpha, so the bound
    // scales linearly with alpha
    const Schedule sched = make_exp_like(1.0, 1e-4, 0.2647);
    double sup = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        sup = std::max(sup, std::abs(exp_like_s(t, sched) - t));
    }
    CHECK(sup <= 3e-5);
    // empirical bound: sup distance <= 10 alpha for alpha <= 1e-3
    for (double alpha : {1e-3, 3e-4, 1e-4}) {
        const Schedule s2 = make_exp_like(1.0, alpha, 0.2647);
        double d = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = i / 1000.0;
            d = std::max(d, std::abs(exp_like_s(t, s2) - t));
        }
        CHECK(d <= 10.0 * alpha);
    }
}

TEST_CASE("exp_like_s is strictly increasing") {
    // past alpha ~ 10 the schedule is flat to double precision around the
    // knee (true slope ~ exp(alpha - alpha/s_c)), so strict inequality is
    // only verifiable below that; larger alpha stays non-decreasing
    for (double alpha : {0.01, 0.5, 1.0, 5.0, 20.0}) {
        const bool strict = alpha <= 5.0;
        const Schedule sched = make_exp_like(2.0, alpha, 0.2647);
        double prev = exp_like_s(0.0, sched);
        for (int i = 1; i <= 10000; ++i) {
            const double t = 2.0 * i / 10000.0;
            const double s = exp_like_s(t, sched);
            if (strict)
                REQUIRE(s > prev);
            else
                REQUIRE(s >= prev - 1e-15);
            prev = s;
        }
    }
}

TEST_CASE("exp_like overflow guard reports the admissible alpha") {
    CHECK_THROWS_WITH_AS(static_cast<void>(make_exp_like(1.0, 200.0, 0.25)),
                         doctest::Contains("maximum admissible alpha"), std::invalid_argument);
    CHECK_NOTHROW(static_cast<void>(make_exp_like(1.0, 174.0, 0.25)));
}

TEST_CASE("schedule boundary values for every kind") {
    const ModelSpec lz = ModelSpec::make_lz(10.0, 1.0);
    const ModelSpec aqc = ModelSpec::make_aqc1(18.0, 30.0);
    const double T = 3.0;
    CHECK(schedule_value(make_linear_lz(T), lz, 0.0) == doctest::Approx(-10.0));
    CHECK(schedule_value(make_linear_lz(T), lz, T) == doctest::Approx(10.0));
    CHECK(schedule_value(make_quadratic_lz(T), lz, 0.0) == doctest::Approx(-10.0));
    CHECK(schedule_value(make_quadratic_lz(T), lz, T) == doctest::Approx(10.0));
    CHECK(schedule_value(make_linear_s(T), aqc, 0.0) == 0.0);
    CHECK(schedule_value(make_linear_s(T), aqc, T) == 1.0);
    CHECK(schedule_value(make_quadratic_s(T), aqc, 0.0) == 0.0);
    CHECK(schedule_value(make_quadratic_s(T), aqc, T) == 1.0);
    const Schedule el = make_exp_like(T, 1.0, 0.3);
    CHECK(schedule_value(el, aqc, 0.0) == doctest::Approx(0.0));
    CHECK(schedule_value(el, aqc, T) == doctest::Approx(1.0));
}

TEST_CASE("sc_analytic") {
    CHECK(sc_analytic(Aqc1Params{7.0, 7.0}) == doctest::Approx(0.5));
    CHECK(sc_analytic(kAqc) == doctest::Approx(324.0 / 1224.0).epsilon(1e-12));
    // consistency with the rotated frame zero
    const RotatedFrame f = rotated_frame(kAqc);
    CHECK(std::abs(rotated_omega_n(f, sc_analytic(kAqc))) < 1e-12);
}

TEST_CASE("gap_analytic boundaries, minimum and eigensolver agreement") {
    CHECK(gap_analytic(kAqc, 0.0) == doctest::Approx(36.0));
    CHECK(gap_analytic(kAqc, 1.0) == doctest::Approx(60.0));
    const double s_c = sc_analytic(kAqc);
    const double expect_min = 2.0 * 18.0 * 30.0 / std::sqrt(18.0 * 18.0 + 30.0 * 30.0);
    CHECK(expect_min == doctest::Approx(30.8698).epsilon(1e-5));
    CHECK(gap_analytic(kAqc, s_c) == doctest::Approx(expect_min).epsilon(1e-12));
    // eigensolver oracle on a 1001-point grid
    const ModelSpec m = ModelSpec::make_aqc1(18.0, 30.0);
    for (int i = 0; i <= 1000; ++i) {
        const double s = i / 1000.0;
        const EigenSystem es = eig_hermitian(m.hamiltonian(s));
        REQUIRE(std::abs((es.values[1] - es.values[0]) - gap_analytic(kAqc, s)) < 1e-10);
    }
}

TEST_CASE("sc_numeric on a constructed parabola") {
    const GapMinimum gm = sc_numeric([](double s) { return (s - 0.5) * (s - 0.5) + 1.0; });
    CHECK_FALSE(gm.boundary);
    CHECK(gm.s_c == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(gm.gap_min == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sc_numeric agrees with sc_analytic") {
    const GapMinimum gm = sc_numeric([&](double s) { return gap_analytic(kAqc, s); });
    CHECK_FALSE(gm.boundary);
    CHECK(std::abs(gm.s_c - sc_analytic(kAqc)) < 1e-5);
}

TEST_CASE("sc_numeric flags a boundary minimum") {
    const GapMinimum gm = sc_numeric([](double s) { return 1.0 + s; });
    CHECK(gm.boundary);
    CHECK(gm.s_c == 0.0);
}

TEST_CASE("sc_numeric finds the factor21 minimal gap near 0.74") {
    const ModelSpec m = ModelSpec::make_factor21(30.0);
    const GapMinimum gm = sc_numeric([&](double s) {
        const EigenSystem es = eig_hermitian(m.hamiltonian(s));
        return es.values[1] - es.values[0];
    });
    CHECK_FALSE(gm.boundary);
    CHECK(gm.s_c > 0.72);
    CHECK(gm.s_c < 0.76);
}
