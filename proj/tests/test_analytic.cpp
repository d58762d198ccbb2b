#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../src/core/analytic.hpp"
#include "../src/core/conserved.hpp"
#include "../src/core/ince.hpp"
#include "../src/core/model.hpp"

#include <cmath>
#include <numbers>

using namespace riccati;
using analytic::Branch;
using model::AxisSpec;
using model::SystemSpec;

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

// closed-form acceleration of the bounded/unbounded cubic orbits
double cubic_accel(double k, double E, double t) {
    double den = k * t * t - E;
    return 4.0 * k * t * (k * t * t + 3.0 * E) / (den * den * den);
}
} // namespace

TEST_CASE("cubic closed form hits its pinned values") {
    CHECK(analytic::cubic_solution(1.0, -1.0, 0.0).x == 0.0);
    CHECK(analytic::cubic_solution(1.0, -1.0, 1.0).x ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(analytic::cubic_solution(1.0, -1.0, 0.0).v ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(analytic::cubic_solution(1.0, 1.0, 1.0), Error);
    try {
        analytic::cubic_solution(1.0, 1.0, 1.0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularTime);
    }
}

TEST_CASE("cubic closed form satisfies its equation of motion exactly") {
    const double pairs[][2] = {{1.0, -1.0}, {-1.0, 1.0}, {2.0, -3.0}};
    for (auto [k, E] : pairs) {
        for (int i = 0; i <= 100; ++i) {
            double t = -5.0 + 0.1 * i;
            if (std::abs(k * t * t - E) < 0.3)
                continue; // stay away from blow-up times
            auto pv = analytic::cubic_solution(k, E, t);
            double residual = cubic_accel(k, E, t) + 3.0 * k * pv.x * pv.v +
                              k * k * pv.x * pv.x * pv.x;
            CHECK(std::abs(residual) <= 1e-10);
        }
    }
}

TEST_CASE("cubic closed form conserves the energy functional") {
    SystemSpec spec = SystemSpec::cubic(1.0);
    for (int i = 0; i <= 40; ++i) {
        double t = 0.25 * i;
        auto pv = analytic::cubic_solution(1.0, -1.0, t);
        CHECK(conserved::energy(spec, State::one_dof(t, pv.x, pv.v)) ==
              doctest::Approx(-1.0).epsilon(1e-10));
    }
}

TEST_CASE("bounded cubic orbits decay toward the origin") {
    CHECK(std::abs(analytic::cubic_solution(1.0, -1.0, 100.0).x) < 0.05);
    CHECK(std::abs(analytic::cubic_solution(1.0, -1.0, -100.0).x) < 0.05);
}

TEST_CASE("position inversion returns both time preimages") {
    // x(0.5) = 0.8 is also visited at t = 2 on the other side of the maximum
    double x = analytic::cubic_solution(1.0, -1.0, 0.5).x;
    CHECK(x == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(analytic::cubic_time_of_position(1.0, -1.0, x, Branch::Minus) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(analytic::cubic_time_of_position(1.0, -1.0, x, Branch::Plus) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(analytic::cubic_time_of_position(1.0, -1.0, 0.0, Branch::Minus) ==
          0.0);
    CHECK_THROWS_AS(analytic::cubic_time_of_position(1.0, -1.0, 3.0,
                                                     Branch::Minus),
                    Error);
}

TEST_CASE("oscillator closed form: pinned values, energy, and period") {
    auto p0 = analytic::oscillator_solution(1.0, 1.0, 0.25, 0.0, 0.0);
    CHECK(p0.x == doctest::Approx(0.0));
    CHECK(p0.v == doctest::Approx(1.0).epsilon(1e-14));

    auto pq = analytic::oscillator_solution(1.0, 1.0, 0.25, 0.0,
                                            std::numbers::pi / 2.0);
    CHECK(pq.x == doctest::Approx(0.5).epsilon(1e-14));

    for (int i = 0; i <= 20; ++i) {
        double t = kTau * i / 20.0;
        auto pv = analytic::oscillator_solution(1.0, 1.0, 0.25, 0.3, t);
        CHECK(conserved::ixw(1.0, 1.0, pv.x, pv.v) ==
              doctest::Approx(0.25).epsilon(1e-12));
        auto shifted =
            analytic::oscillator_solution(1.0, 1.0, 0.25, 0.3, t + kTau);
        CHECK(std::abs(shifted.x - pv.x) <= 1e-12);
        CHECK(std::abs(shifted.v - pv.v) <= 1e-12);
    }

    CHECK_THROWS_AS(analytic::oscillator_solution(1.0, 1.0, -0.5, 0.0, 0.0),
                    Error);
    // k^2 E >= 1 makes the denominator vanish somewhere: here at t = 0
    CHECK_THROWS_AS(analytic::oscillator_solution(1.0, 1.0, 1.0, 0.0, 0.0),
                    Error);
}

TEST_CASE("oscillator closed form satisfies its equation of motion") {
    const double k = 1.0, w = 1.0, E = 0.8;
    const double root = std::sqrt(E);
    for (int i = 1; i <= 24; ++i) {
        double t = 0.25 * i;
        auto pv = analytic::oscillator_solution(k, w, E, 0.0, t);
        double s = std::sin(w * t), c = std::cos(w * t);
        double d = 1.0 - k * root * c;
        double accel = -w * w * w * root * s *
                       (1.0 + k * root * c - 2.0 * k * k * E) / (d * d * d);
        double residual = accel + 3.0 * k * pv.x * pv.v +
                          k * k * pv.x * pv.x * pv.x + w * w * pv.x;
        CHECK(std::abs(residual) <= 1e-10);
    }
}

TEST_CASE("velocity branches reproduce the energy and degenerate correctly") {
    SystemSpec cubic = SystemSpec::cubic(1.0);
    auto [vp, vm] = analytic::velocity_branches(cubic.axis(0), 0.0, 1.0);
    CHECK(vp == doctest::Approx(0.0));
    CHECK(vm == doctest::Approx(-2.0).epsilon(1e-14));

    const double xs[] = {0.2, 0.5, 0.9};
    for (double x : xs) {
        auto [bp, bm] = analytic::velocity_branches(cubic.axis(0), x, -1.0);
        CHECK(conserved::energy(cubic, State::one_dof(0.0, x, bp)) ==
              doctest::Approx(-1.0).epsilon(1e-10));
        CHECK(conserved::energy(cubic, State::one_dof(0.0, x, bm)) ==
              doctest::Approx(-1.0).epsilon(1e-10));
        // distinct speeds whenever the root argument is strictly positive
        CHECK(std::abs(std::abs(bp) - std::abs(bm)) > 1e-12);
    }

    // turning point: root argument zero, the two branches coincide
    auto [tp, tm] = analytic::velocity_branches(cubic.axis(0), 1.0, -1.0);
    CHECK(tp == doctest::Approx(tm).epsilon(1e-12));

    CHECK_THROWS_AS(analytic::velocity_branches(cubic.axis(0), 0.0, 0.0), Error);
    CHECK_THROWS_AS(analytic::velocity_branches(cubic.axis(0), 3.0, -1.0),
                    Error);
    try {
        analytic::velocity_branches(cubic.axis(0), 3.0, -1.0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutsideAllowedRegion);
    }
}

TEST_CASE("quadrature travel time matches the closed-form inversion") {
    SystemSpec cubic = SystemSpec::cubic(1.0);
    CHECK(analytic::quadrature_time(cubic.axis(0), -1.0, 0.4, 0.4,
                                    Branch::Minus) == 0.0);

    double x_start = analytic::cubic_solution(1.0, -1.0, 0.1).x;
    double x_stop = analytic::cubic_solution(1.0, -1.0, 1.0).x;
    double dt = analytic::quadrature_time(cubic.axis(0), -1.0, x_start, x_stop,
                                          Branch::Minus);
    CHECK(dt == doctest::Approx(0.9).epsilon(1e-8));
}

TEST_CASE("oscillator lobes add up to the isochronous period") {
    SystemSpec osc = SystemSpec::oscillator(1.0, 1.0);
    const double E = 0.25;
    const double xm = std::sqrt(E / (1.0 - E)); // turning point of the orbit
    double rise = analytic::quadrature_time(osc.axis(0), E, 0.0, xm, Branch::Plus);
    double fall = analytic::quadrature_time(osc.axis(0), E, xm, 0.0, Branch::Minus);
    double sink = analytic::quadrature_time(osc.axis(0), E, 0.0, -xm, Branch::Minus);
    double lift = analytic::quadrature_time(osc.axis(0), E, -xm, 0.0, Branch::Plus);
    CHECK(rise + fall + sink + lift == doctest::Approx(kTau).epsilon(1e-6));
}

TEST_CASE("quadrature rejects non-integrable interior singularities") {
    SystemSpec cubic = SystemSpec::cubic(1.0);
    // the plus branch velocity vanishes where the potential does (x = 0)
    CHECK_THROWS_AS(analytic::quadrature_time(cubic.axis(0), -1.0, -0.5, 0.5,
                                              Branch::Plus),
                    Error);
    try {
        analytic::quadrature_time(cubic.axis(0), -1.0, -0.5, 0.5, Branch::Plus);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularIntegrand);
    }
}

TEST_CASE("linearization oracle: constant coefficients") {
    auto rep0 = ince::ince_linearization_oracle([](double) { return 0.0; },
                                                {1.0, 0.0, 0.0}, 0.0, 2.0);
    CHECK(rep0.zeros.empty());
    CHECK(rep0.windows.size() == 1);
    CHECK(rep0.max_cascade <= 1e-12);
    CHECK(rep0.max_fd <= 1e-12);

    auto rep1 = ince::ince_linearization_oracle([](double) { return 1.0; },
                                                {1.0, 1.0, 1.0}, 0.0, 2.0);
    CHECK(rep1.max_cascade <= 1e-9);
    CHECK(rep1.max_fd <= 1e-6);
}

TEST_CASE("linearization oracle: oscillatory coefficient") {
    auto rep = ince::ince_linearization_oracle(
        [](double t) { return std::cos(t); }, {1.0, 0.0, 0.0}, 0.0, 2.0);
    CHECK(rep.zeros.empty());
    CHECK(rep.max_cascade <= 1e-9);
    CHECK(rep.max_fd <= 1e-6);
}

TEST_CASE("linearization oracle splits windows around zero crossings") {
    // u = 1 - t vanishes at t = 1 inside the span
    auto rep = ince::ince_linearization_oracle([](double) { return 0.0; },
                                               {1.0, -1.0, 0.0}, 0.0, 2.0);
    REQUIRE(rep.zeros.size() == 1);
    CHECK(rep.zeros[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.windows.size() == 2);
    CHECK(rep.max_cascade <= 1e-9);

    // the same line restarted just before its zero: a span living entirely
    // inside the exclusion radius has nothing left
    CHECK_THROWS_AS(ince::ince_linearization_oracle(
                        [](double) { return 0.0; }, {0.001, -1.0, 0.0}, 0.999,
                        1.001),
                    Error);
    try {
        ince::ince_linearization_oracle([](double) { return 0.0; },
                                        {0.001, -1.0, 0.0}, 0.999, 1.001);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroCrossing);
    }
}
