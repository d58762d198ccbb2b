#include "hamiltonian.hpp"
#include "fd.hpp"

#include <cmath>

namespace riccati::hamiltonian {

namespace {

constexpr double kDenomEps = 1e-14;

double require_root_arg(double k, double p) {
    double arg = -k * p;
    if (!(arg > 0.0))
        fail(ErrorCode::RootDomain, "-k p must be positive for the oscillator map");
    return std::sqrt(arg);
}

} // namespace

double momentum(const model::SystemSpec& spec, const State& state) {
    if (spec.dim != 1 || state.dim != 1)
        fail(ErrorCode::InvalidArgument, "momentum expects a one-degree system");
    const auto& ax = spec.axis(0);
    double d = ax.denominator(state.t, state.q[0], state.v[0]);
    if (std::abs(d) < kDenomEps)
        fail(ErrorCode::SingularDenominator, "Legendre map denominator vanishes", 0);
    if (ax.kind == model::AxisSpec::Kind::Oscillator)
        return -(ax.w * ax.w) / (ax.k * d * d);
    return -1.0 / (d * d);
}

double hamiltonian_u(const model::QuadraticU& u, double k, double x, double p) {
    if (!(p < 0.0))
        fail(ErrorCode::PositiveMomentum, "momentum must be negative");
    return -2.0 * std::sqrt(-p) - k * u.value(x) * p;
}

double hamiltonian_osc(double k, double w, double x, double p) {
    double root = require_root_arg(k, p);
    return -((2.0 * w / (k * k)) * root + (k * x * x + w * w / k) * p) +
           1.0 / (k * k);
}

std::pair<double, double> canonical_qp(double k, double w, double x, double p) {
    double root = require_root_arg(k, p);
    double q = (std::sqrt(2.0) / w) * x * root;
    double pp = (std::sqrt(2.0) / k) * (1.0 - w * root);
    return {q, pp};
}

double poisson_bracket_check(double k, double w, double x, double p,
                             double fd_step) {
    if (!(fd_step > 0.0))
        fail(ErrorCode::InvalidArgument, "fd_step must be positive");
    double hx = fd_step * std::max(1.0, std::abs(x));
    double hp = fd_step * std::max(1.0, std::abs(p));
    auto qfun = [&](double xx, double pp) { return canonical_qp(k, w, xx, pp).first; };
    auto pfun = [&](double xx, double pp) { return canonical_qp(k, w, xx, pp).second; };
    double dq_dx = fd::deriv1([&](double s) { return qfun(s, p); }, x, hx);
    double dq_dp = fd::deriv1([&](double s) { return qfun(x, s); }, p, hp);
    double dp_dx = fd::deriv1([&](double s) { return pfun(s, p); }, x, hx);
    double dp_dp = fd::deriv1([&](double s) { return pfun(x, s); }, p, hp);
    return dq_dx * dp_dp - dq_dp * dp_dx;
}

double hamiltonian_at(const model::SystemSpec& spec, const State& state) {
    if (spec.dim != 1 || state.dim != 1)
        fail(ErrorCode::InvalidArgument, "hamiltonian_at expects a one-degree system");
    const auto& ax = spec.axis(0);
    double d = ax.denominator(state.t, state.q[0], state.v[0]);
    if (std::abs(d) < kDenomEps)
        fail(ErrorCode::SingularDenominator, "Legendre map denominator vanishes", 0);
    if (d < 0.0)
        fail(ErrorCode::WrongBranch,
             "state lies on the D < 0 branch; the Hamiltonian picture covers D > 0");
    double p = momentum(spec, state);
    switch (ax.kind) {
    case model::AxisSpec::Kind::Cubic: {
        model::QuadraticU u;
        u.c2 = 1.0;
        return hamiltonian_u(u, ax.k, state.q[0], p);
    }
    case model::AxisSpec::Kind::GeneralU:
        return hamiltonian_u(ax.u, ax.k, state.q[0], p);
    case model::AxisSpec::Kind::Oscillator:
        return hamiltonian_osc(ax.k, ax.w, state.q[0], p);
    }
    fail(ErrorCode::InvalidArgument, "unhandled axis kind");
}

std::pair<double, double> oscillator_flow_rhs(double k, double w, double x,
                                              double p) {
    double root = require_root_arg(k, p);
    double dx_dt = (w / k) / root - k * x * x - w * w / k;
    double dp_dt = 2.0 * k * x * p;
    return {dx_dt, dp_dt};
}

} // namespace riccati::hamiltonian
