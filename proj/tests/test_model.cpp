#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../src/core/model.hpp"

#include <cmath>
#include <random>

using namespace riccati;
using model::QuadraticU;
using model::SystemSpec;

namespace {

QuadraticU make_u(double c0, double c1, double c2) {
    QuadraticU u;
    u.c0 = c0;
    u.c1 = c1;
    u.c2 = c2;
    return u;
}

} // namespace

TEST_CASE("lagrangian value on the three system kinds") {
    SystemSpec cubic = SystemSpec::cubic(1.0);
    CHECK(model::lagrangian_value(cubic, State::one_dof(0.0, 0.0, 1.0)) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(model::lagrangian_value(cubic, State::one_dof(0.0, 1.0, 0.0)) ==
          doctest::Approx(1.0).epsilon(1e-15));

    SystemSpec osc = SystemSpec::oscillator(1.0, 1.0);
    CHECK(model::lagrangian_value(osc, State::one_dof(0.0, 0.0, 1.0)) ==
          doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("lagrangian undefined on the zero denominator") {
    SystemSpec cubic = SystemSpec::cubic(1.0);
    CHECK_THROWS_AS(model::lagrangian_value(cubic, State::one_dof(0.0, 0.0, 0.0)),
                    Error);
    try {
        model::lagrangian_value(cubic, State::one_dof(0.0, 1.0, -1.0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularDenominator);
    }
}

TEST_CASE("force on cubic and oscillator states") {
    SystemSpec cubic = SystemSpec::cubic(1.0);
    CHECK(model::force(cubic, State::one_dof(0.0, 0.0, 5.0))[0] == 0.0);
    CHECK(model::force(cubic, State::one_dof(0.0, 1.0, 0.0))[0] ==
          doctest::Approx(-1.0).epsilon(1e-15));

    SystemSpec osc = SystemSpec::oscillator(1.0, 2.0);
    CHECK(model::force(osc, State::one_dof(0.0, 1.0, 1.0))[0] ==
          doctest::Approx(-8.0).epsilon(1e-15));
}

TEST_CASE("phase velocity stacks all positions before all accelerations") {
    SystemSpec cubic = SystemSpec::cubic(1.0);
    auto r1 = model::rhs(cubic, State::one_dof(0.0, 0.0, 5.0));
    CHECK(r1[0] == 5.0);
    CHECK(r1[1] == 0.0);
    auto r2 = model::rhs(cubic, State::one_dof(0.0, 1.0, 0.0));
    CHECK(r2[0] == 0.0);
    CHECK(r2[1] == doctest::Approx(-1.0).epsilon(1e-15));

    SystemSpec prod = SystemSpec::product(model::AxisSpec::cubic(1.0),
                                          model::AxisSpec::cubic(1.0));
    auto r3 = model::rhs(prod, State::two_dof(0.0, 1.0, 0.0, 0.0, 1.0));
    CHECK(r3[0] == 0.0); // dq/dt block first ...
    CHECK(r3[1] == 1.0);
    CHECK(r3[2] == doctest::Approx(-1.0).epsilon(1e-15)); // ... then dv/dt
    CHECK(r3[3] == 0.0);
}

TEST_CASE("coefficient map of the quadratic potential") {
    auto pure = model::riccati_coefficients(make_u(0.0, 0.0, 1.0));
    CHECK(pure.a0 == 0.0);
    CHECK(pure.a1 == 0.0);
    CHECK(pure.a2 == 0.0);
    CHECK(pure.a3 == 1.0);
    CHECK(pure.b0 == 0.0);
    CHECK(pure.b1 == 3.0);

    auto zero = model::riccati_coefficients(make_u(0.0, 0.0, 0.0));
    CHECK(zero.a0 == 0.0);
    CHECK(zero.a1 == 0.0);
    CHECK(zero.a2 == 0.0);
    CHECK(zero.a3 == 0.0);
    CHECK(zero.b0 == 0.0);
    CHECK(zero.b1 == 0.0);

    auto full = model::riccati_coefficients(make_u(1.0, 2.0, 3.0));
    CHECK(full.a0 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(full.a1 == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(full.a2 == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(full.a3 == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(full.b0 == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(full.b1 == doctest::Approx(9.0).epsilon(1e-15));
}

TEST_CASE("both damping-coefficient forms coincide for static coefficients") {
    QuadraticU u = make_u(1.0, 2.0, 3.0);
    CHECK(model::riccati_b0_alternative(u) ==
          doctest::Approx(model::riccati_coefficients(u).b0).epsilon(1e-14));
    CHECK(model::b0_form_difference(u) == doctest::Approx(0.0).epsilon(1e-14));

    // the drift contributions a2 -> a2 + c2' and a3'/(2 a3) cancel exactly,
    // so the two printed forms agree even with moving coefficients
    u.dc2 = 0.5;
    CHECK(std::abs(model::b0_form_difference(u)) <= 1e-12);
    u.dc1 = -0.3;
    CHECK(std::abs(model::b0_form_difference(u)) <= 1e-12);

    CHECK_THROWS_AS(model::riccati_b0_alternative(make_u(1.0, 1.0, 0.0)), Error);
}

TEST_CASE("expanded equation of motion matches the coefficient polynomial") {
    QuadraticU u = make_u(0.7, -1.3, 2.1);
    SystemSpec spec = SystemSpec::general_u(1.0, u);
    auto co = model::riccati_coefficients(u);

    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        double x = dist(rng), v = dist(rng);
        double a = model::force(spec, State::one_dof(0.0, x, v))[0];
        double poly = -((co.b0 + co.b1 * x) * v +
                        co.a0 + x * (co.a1 + x * (co.a2 + x * co.a3)));
        CHECK(a == doctest::Approx(poly).epsilon(1e-12));
    }
}

TEST_CASE("cubic kind is the general form with a pure square potential") {
    SystemSpec cubic = SystemSpec::cubic(1.7);
    SystemSpec general = SystemSpec::general_u(1.7, make_u(0.0, 0.0, 1.0));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        State s = State::one_dof(0.0, dist(rng), dist(rng));
        CHECK(model::force(cubic, s)[0] ==
              doctest::Approx(model::force(general, s)[0]).epsilon(1e-14));
    }
}

TEST_CASE("oscillator at zero frequency reduces to the cubic force") {
    SystemSpec osc = SystemSpec::oscillator(0.8, 0.0);
    SystemSpec cubic = SystemSpec::cubic(0.8);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        State s = State::one_dof(0.0, dist(rng), dist(rng));
        CHECK(model::force(osc, s)[0] ==
              doctest::Approx(model::force(cubic, s)[0]).epsilon(1e-14));
    }
}

TEST_CASE("coefficient drift shifts the potential linearly in time") {
    QuadraticU u = make_u(1.0, 0.0, 2.0);
    u.dc0 = 2.0;
    u.dc2 = -0.5;
    CHECK(u.value_at(0.0, 1.0) == doctest::Approx(3.0));
    CHECK(u.value_at(3.0, 1.0) == doctest::Approx(1.0 + 6.0 + (2.0 - 1.5)));
    CHECK(u.slope_at(3.0, 1.0) == doctest::Approx(2.0 * (2.0 - 1.5)));
    CHECK(u.time_derivative(1.0) == doctest::Approx(2.0 - 0.5));

    // freezing the coefficients at t=2 drops exactly the k*U_t force term
    SystemSpec drifting = SystemSpec::general_u(1.0, u);
    QuadraticU frozen_u = make_u(1.0 + 2.0 * 2.0, 0.0, 2.0 - 0.5 * 2.0);
    SystemSpec frozen = SystemSpec::general_u(1.0, frozen_u);
    State s = State::one_dof(2.0, 0.7, 1.1);
    double diff = model::force(drifting, s)[0] - model::force(frozen, s)[0];
    CHECK(diff == doctest::Approx(-u.time_derivative(0.7)).epsilon(1e-12));
}

TEST_CASE("euler-lagrange residual certifies correct accelerations") {
    SystemSpec cubic = SystemSpec::cubic(1.0);
    auto main_l = [&](double x, double v) {
        return model::lagrangian_value(cubic, State::one_dof(0.0, x, v));
    };
    State s = State::one_dof(0.0, 1.0, 0.0);
    double accel = model::force(cubic, s)[0];
    CHECK(accel == doctest::Approx(-1.0));
    CHECK(std::abs(model::euler_lagrange_residual(main_l, s, accel, 1e-5)) <=
          1e-6);

    auto alt_l = [](double x, double v) {
        return std::sqrt(2.0 * v + x * x);
    };
    CHECK(std::abs(model::euler_lagrange_residual(alt_l, s, accel, 1e-5)) <=
          1e-6);

    // wrong acceleration must be flagged loudly
    CHECK(std::abs(model::euler_lagrange_residual(main_l, s, 0.0, 1e-5)) >=
          1e-2);
}

TEST_CASE("alternative lagrangian yields the same dynamics as the main one") {
    model::AxisSpec axis = model::AxisSpec::cubic(1.0);
    SystemSpec spec = SystemSpec::one_dof(axis);
    auto alt = [&](double x, double v) {
        return model::alt_lagrangian(axis, 0.0, x, v);
    };
    // states along the bounded closed-form orbit
    for (int i = 1; i <= 8; ++i) {
        double t = 0.25 * i;
        double den = t * t + 1.0;
        double x = 2.0 * t / den;
        double v = -2.0 * (t * t - 1.0) / (den * den);
        State s = State::one_dof(0.0, x, v);
        double accel = model::force(spec, s)[0];
        CHECK(std::abs(model::euler_lagrange_residual(alt, s, accel, 1e-5)) <=
              1e-6);
    }
}

TEST_CASE("state arity must match the system") {
    SystemSpec cubic = SystemSpec::cubic(1.0);
    CHECK_THROWS_AS(model::force(cubic, State::two_dof(0.0, 1.0, 0.0, 0.0, 1.0)),
                    Error);
    SystemSpec prod = SystemSpec::product(model::AxisSpec::cubic(1.0),
                                          model::AxisSpec::cubic(1.0));
    CHECK_THROWS_AS(model::force(prod, State::one_dof(0.0, 1.0, 0.0)), Error);
}
