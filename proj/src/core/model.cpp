#include "model.hpp"

#include <cmath>

#include "fd.hpp"

namespace riccati {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SingularDenominator: return "SingularDenominator";
        case ErrorCode::SingularTime: return "SingularTime";
        case ErrorCode::OutsideAllowedRegion: return "OutsideAllowedRegion";
        case ErrorCode::ZeroEnergy: return "ZeroEnergy";
        case ErrorCode::SingularIntegrand: return "SingularIntegrand";
        case ErrorCode::ZeroCrossing: return "ZeroCrossing";
        case ErrorCode::PositiveMomentum: return "PositiveMomentum";
        case ErrorCode::RootDomain: return "RootDomain";
        case ErrorCode::WrongBranch: return "WrongBranch";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NonFiniteStage: return "NonFiniteStage";
    }
    return "Unknown";
}

} // namespace riccati

namespace riccati::model {

AxisSpec AxisSpec::cubic(double k) {
    AxisSpec a;
    a.kind = Kind::Cubic;
    a.k = k;
    return a;
}

AxisSpec AxisSpec::oscillator(double k, double w) {
    AxisSpec a;
    a.kind = Kind::Oscillator;
    a.k = k;
    a.w = w;
    return a;
}

AxisSpec AxisSpec::general_u(double k, const QuadraticU& u) {
    AxisSpec a;
    a.kind = Kind::GeneralU;
    a.k = k;
    a.u = u;
    return a;
}

double AxisSpec::denominator(double t, double x, double v) const {
    switch (kind) {
        case Kind::GeneralU: return v + k * u.value_at(t, x);
        case Kind::Cubic: return v + k * x * x;
        case Kind::Oscillator: return k * v + k * k * x * x + w * w;
    }
    return 0.0;
}

double AxisSpec::lagrangian(double t, double x, double v) const {
    return 1.0 / denominator(t, x, v);
}

double AxisSpec::force(double t, double x, double v) const {
    switch (kind) {
        case Kind::GeneralU: {
            double uval = u.value_at(t, x);
            double ux = u.slope_at(t, x);
            double ut = u.time_derivative(x);
            return -(1.5 * k * ux * v + 0.5 * k * k * uval * ux + k * ut);
        }
        case Kind::Cubic:
            return -(3.0 * k * x * v + k * k * x * x * x);
        case Kind::Oscillator:
            return -(3.0 * k * x * v + k * k * x * x * x + w * w * x);
    }
    return 0.0;
}

double AxisSpec::energy(double t, double x, double v) const {
    double d = denominator(t, x, v);
    if (d == 0.0)
        fail(ErrorCode::SingularDenominator, "energy: Lagrangian denominator vanishes");
    switch (kind) {
        case Kind::GeneralU: return -(2.0 * v + k * u.value_at(t, x)) / (d * d);
        case Kind::Cubic: return -(2.0 * v + k * x * x) / (d * d);
        case Kind::Oscillator: return -(2.0 * k * v + k * k * x * x + w * w) / (d * d);
    }
    return 0.0;
}

SystemSpec SystemSpec::one_dof(const AxisSpec& a) {
    SystemSpec s;
    s.axes[0] = a;
    s.dim = 1;
    return s;
}

SystemSpec SystemSpec::product(const AxisSpec& x_axis, const AxisSpec& y_axis) {
    SystemSpec s;
    s.axes = {x_axis, y_axis};
    s.dim = 2;
    return s;
}

const AxisSpec& SystemSpec::axis(int i) const {
    if (i < 0 || i >= dim)
        fail(ErrorCode::InvalidArgument, "axis index out of range");
    return axes[static_cast<size_t>(i)];
}

namespace {

void check_arity(const SystemSpec& spec, const State& state, const char* who) {
    if (state.dim != spec.dim)
        fail(ErrorCode::InvalidArgument, std::string(who) + ": state/spec arity mismatch");
}

} // namespace

double lagrangian_value(const SystemSpec& spec, const State& state, double eps) {
    check_arity(spec, state, "lagrangian_value");
    if (spec.dim != 1)
        fail(ErrorCode::InvalidArgument, "lagrangian_value: one-dof specs only");
    double d = spec.axes[0].denominator(state.t, state.q[0], state.v[0]);
    if (std::abs(d) < eps)
        fail(ErrorCode::SingularDenominator, "lagrangian_value: denominator below eps");
    return 1.0 / d;
}

std::array<double, 2> force(const SystemSpec& spec, const State& state) {
    check_arity(spec, state, "force");
    std::array<double, 2> out{{0.0, 0.0}};
    for (int i = 0; i < spec.dim; ++i) {
        auto j = static_cast<size_t>(i);
        out[j] = spec.axes[j].force(state.t, state.q[j], state.v[j]);
    }
    return out;
}

std::array<double, 4> rhs(const SystemSpec& spec, const State& state) {
    auto a = force(spec, state);
    std::array<double, 4> out{{0.0, 0.0, 0.0, 0.0}};
    for (int i = 0; i < spec.dim; ++i) {
        auto j = static_cast<size_t>(i);
        out[j] = state.v[j];
        out[static_cast<size_t>(spec.dim) + j] = a[j];
    }
    return out;
}

RiccatiCoefficients riccati_coefficients(const QuadraticU& u) {
    RiccatiCoefficients c;
    c.a0 = 0.5 * u.c0 * u.c1 + u.dc0;
    c.a1 = u.c0 * u.c2 + 0.5 * u.c1 * u.c1 + u.dc1;
    c.a2 = 1.5 * u.c1 * u.c2 + u.dc2;
    c.a3 = u.c2 * u.c2;
    c.b0 = 1.5 * u.c1;
    c.b1 = 3.0 * u.c2;
    return c;
}

double riccati_b0_alternative(const QuadraticU& u) {
    if (u.c2 == 0.0)
        fail(ErrorCode::InvalidArgument, "b0 alternative form needs a3 > 0 (c2 != 0)");
    RiccatiCoefficients c = riccati_coefficients(u);
    double a3_dot = 2.0 * u.c2 * u.dc2;
    return c.a2 / std::sqrt(c.a3) - a3_dot / (2.0 * c.a3);
}

double b0_form_difference(const QuadraticU& u) {
    return riccati_b0_alternative(u) - riccati_coefficients(u).b0;
}

double alt_lagrangian(const AxisSpec& axis, double t, double x, double v) {
    double uval = 0.0;
    switch (axis.kind) {
        case AxisSpec::Kind::GeneralU: uval = axis.u.value_at(t, x); break;
        case AxisSpec::Kind::Cubic: uval = x * x; break;
        case AxisSpec::Kind::Oscillator:
            fail(ErrorCode::InvalidArgument, "alt_lagrangian: general/cubic axes only");
    }
    double radicand = 2.0 * v + axis.k * uval;
    if (radicand <= 0.0)
        fail(ErrorCode::RootDomain, "alt_lagrangian: 2v + kU must be positive");
    return std::sqrt(radicand);
}

double euler_lagrange_residual(const std::function<double(double, double)>& lagrangian,
                               const State& state, double accel, double fd_step) {
    if (state.dim != 1)
        fail(ErrorCode::InvalidArgument, "euler_lagrange_residual: one-dof states only");
    if (!(fd_step > 0.0))
        fail(ErrorCode::InvalidArgument, "euler_lagrange_residual: fd_step must be positive");

    double x = state.q[0];
    double v = state.v[0];

    double hx = fd_step * std::max(1.0, std::abs(x));
    double lx = fd::deriv1([&](double xx) { return lagrangian(xx, v); }, x, hx);

    // dp/dt along the curve with the supplied acceleration, p = ∂L/∂v. The
    // inner v-stencil uses fd_step; the outer path stencil uses sqrt(fd_step)
    // to keep the nested difference out of the roundoff floor.
    auto p_along = [&](double s) {
        double xs = x + v * s + 0.5 * accel * s * s;
        double vs = v + accel * s;
        double hv = fd_step * std::max(1.0, std::abs(vs));
        return fd::deriv1([&](double vv) { return lagrangian(xs, vv); }, vs, hv);
    };
    double hs = std::sqrt(fd_step);
    double dp_dt = fd::deriv1(p_along, 0.0, hs);

    if (!std::isfinite(dp_dt) || !std::isfinite(lx))
        fail(ErrorCode::SingularDenominator, "euler_lagrange_residual: stencil hit a singular point");
    return dp_dt - lx;
}

} // namespace riccati::model
