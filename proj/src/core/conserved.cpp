#include "conserved.hpp"

#include <cmath>

namespace riccati::conserved {

namespace {

constexpr double kDenomEps = 1e-14;

double checked_div(double num, double den, int axis) {
    if (std::abs(den) < kDenomEps)
        fail(ErrorCode::SingularDenominator, "conserved-quantity denominator vanishes",
             axis);
    return num / den;
}

void require_dim(const State& state, int dim) {
    if (state.dim != dim)
        fail(ErrorCode::InvalidArgument, "state arity does not match the operation");
}

void require_kind(const model::AxisSpec& axis, model::AxisSpec::Kind kind,
                  const char* what) {
    if (axis.kind != kind)
        fail(ErrorCode::InvalidArgument, what);
}

Complex ipow(Complex z, int n) {
    Complex out{1.0, 0.0};
    for (int i = 0; i < n; ++i)
        out *= z;
    return out;
}

double osc_denom(double k, double w, double x, double v) {
    return k * v + k * k * x * x + w * w;
}

} // namespace

double energy(const model::SystemSpec& spec, const State& state) {
    require_dim(state, 1);
    if (spec.dim != 1)
        fail(ErrorCode::InvalidArgument, "energy expects a one-degree system");
    const auto& ax = spec.axis(0);
    double d = ax.denominator(state.t, state.q[0], state.v[0]);
    if (std::abs(d) < kDenomEps)
        fail(ErrorCode::SingularDenominator, "energy denominator vanishes", 0);
    return ax.energy(state.t, state.q[0], state.v[0]);
}

Energy2D energy_2d(const model::SystemSpec& spec, const State& state) {
    require_dim(state, 2);
    if (spec.dim != 2)
        fail(ErrorCode::InvalidArgument, "energy_2d expects a product system");
    Energy2D out;
    double parts[2];
    for (int i = 0; i < 2; ++i) {
        const auto& ax = spec.axis(i);
        double d = ax.denominator(state.t, state.q[i], state.v[i]);
        if (std::abs(d) < kDenomEps)
            fail(ErrorCode::SingularDenominator, "component energy denominator vanishes",
                 i);
        parts[i] = ax.energy(state.t, state.q[i], state.v[i]);
    }
    out.i1 = parts[0];
    out.i2 = parts[1];
    out.total = out.i1 + out.i2;
    return out;
}

std::pair<double, double> t_generators(double k, double x, double v) {
    double d = v + k * x * x;
    return {checked_div(1.0, d, 0), checked_div(x, d, 0)};
}

std::pair<double, double> j_integrals(double k, double x, double v, double t) {
    auto [t1, t2] = t_generators(k, x, v);
    return {t2 - t, t1 - k * t * t2 + 0.5 * k * t * t};
}

std::pair<double, double> i3_i4_dissipative(double k1, double k2,
                                            const State& state) {
    require_dim(state, 2);
    double dx = state.v[0] + k1 * state.q[0] * state.q[0];
    double dy = state.v[1] + k2 * state.q[1] * state.q[1];
    double tx1 = checked_div(1.0, dx, 0), tx2 = checked_div(state.q[0], dx, 0);
    double ty1 = checked_div(1.0, dy, 1), ty2 = checked_div(state.q[1], dy, 1);
    double i3 = tx2 - ty2;
    double i4 = k2 * tx1 + k1 * ty1 - k1 * k2 * tx2 * ty2;
    return {i3, i4};
}

std::pair<double, double> xw_pair(double k, double w, double x, double v) {
    double d = osc_denom(k, w, x, v);
    return {checked_div(x, d, 0), checked_div(v + k * x * x, d, 0)};
}

double ixw(double k, double w, double x, double v) {
    auto [X, W] = xw_pair(k, w, x, v);
    return W * W + w * w * X * X;
}

std::pair<Complex, Complex> k_functions(double k1, double k2, double w0,
                                        int n1, int n2, const State& state) {
    require_dim(state, 2);
    if (n1 < 1 || n2 < 1)
        fail(ErrorCode::InvalidArgument, "resonance numbers must be positive");
    double w1 = n1 * w0, w2 = n2 * w0;
    double d1 = osc_denom(k1, w1, state.q[0], state.v[0]);
    double d2 = osc_denom(k2, w2, state.q[1], state.v[1]);
    double x1 = checked_div(state.q[0], d1, 0);
    double w_1 = checked_div(state.v[0] + k1 * state.q[0] * state.q[0], d1, 0);
    double x2 = checked_div(state.q[1], d2, 1);
    double w_2 = checked_div(state.v[1] + k2 * state.q[1] * state.q[1], d2, 1);
    return {Complex{w_1, n1 * w0 * x1}, Complex{w_2, n2 * w0 * x2}};
}

Complex kij_constant(Complex k1, Complex k2, int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        fail(ErrorCode::InvalidArgument, "resonance numbers must be positive");
    return ipow(k1, n2) * ipow(std::conj(k2), n1);
}

double i3_isotropic_printed(double k1, double k2, double w0,
                            const State& state) {
    require_dim(state, 2);
    double x = state.q[0], y = state.q[1], vx = state.v[0], vy = state.v[1];
    double d1 = osc_denom(k1, w0, x, vx);
    double d2 = osc_denom(k2, w0, y, vy);
    double num = (x * vy - y * vx) + (k2 * y - k1 * x) * x * y;
    return checked_div(num, d1 * d2, 0);
}

double i4_isotropic_printed(double k1, double k2, double w0,
                            const State& state) {
    require_dim(state, 2);
    double x = state.q[0], y = state.q[1], vx = state.v[0], vy = state.v[1];
    double d1 = osc_denom(k1, w0, x, vx);
    double d2 = osc_denom(k2, w0, y, vy);
    double num = (vx + k1 * x * x) * (vy + k2 * y * y) + w0 * w0 * x * y;
    return checked_div(num, d1 * d2, 0);
}

double i3_anisotropic12_printed(double k1, double k2, double w0,
                                const State& state) {
    require_dim(state, 2);
    double x = state.q[0], y = state.q[1], vx = state.v[0], vy = state.v[1];
    double d1 = osc_denom(k1, w0, x, vx);
    double d2 = osc_denom(k2, 2.0 * w0, y, vy);
    double px = vx + k1 * x * x;
    double num = px * ((x * vy - y * vx) + (k2 * y - k1 * x) * x * y) +
                 w0 * w0 * x * x * y;
    return checked_div(num, d1 * d1 * d2, 0);
}

double i4_anisotropic12_printed(double k1, double k2, double w0,
                                const State& state) {
    require_dim(state, 2);
    double x = state.q[0], y = state.q[1], vx = state.v[0], vy = state.v[1];
    double d1 = osc_denom(k1, w0, x, vx);
    double d2 = osc_denom(k2, 2.0 * w0, y, vy);
    double px = vx + k1 * x * x;
    double num = px * px * (vy + k2 * y * y) +
                 w0 * w0 * (4.0 * y * vx - x * vy + (4.0 * k1 * x - k2 * y) * x * y) * x;
    return checked_div(num, d1 * d1 * d2, 0);
}

double i3_limit_k0(double w0, const State& state) {
    require_dim(state, 2);
    double w4 = w0 * w0 * w0 * w0;
    return checked_div(state.q[0] * state.v[1] - state.q[1] * state.v[0], w4, 0);
}

double i4_limit_k0(double w0, const State& state) {
    require_dim(state, 2);
    double w4 = w0 * w0 * w0 * w0;
    return checked_div(state.v[0] * state.v[1] + w0 * w0 * state.q[0] * state.q[1],
                       w4, 0);
}

namespace {
double rel_dev(double full, double limit) {
    double scale = std::max(std::abs(limit), 1e-30);
    return std::abs(full - limit) / scale;
}
} // namespace

LimitReport limit_check_k_to_zero(double k, double w0, const State& state) {
    LimitReport r;
    r.deviation_i3 = rel_dev(i3_isotropic_printed(k, k, w0, state),
                             i3_limit_k0(w0, state));
    r.deviation_i4 = rel_dev(i4_isotropic_printed(k, k, w0, state),
                             i4_limit_k0(w0, state));
    return r;
}

LimitReport limit_check_w_to_zero(double w0, double k1, double k2,
                                  const State& state) {
    LimitReport r;
    auto [i3d, i4d] = i3_i4_dissipative(k1, k2, state);
    (void)i4d;
    double i3full = k1 * k2 * i3_isotropic_printed(k1, k2, w0, state);
    double i4full = i4_isotropic_printed(k1, k2, w0, state);
    r.deviation_i3 = rel_dev(i3full, i3d);
    r.deviation_i4 = rel_dev(i4full, 1.0 / (k1 * k2));
    return r;
}

const char* integral_kind_name(IntegralId::Kind kind) {
    using K = IntegralId::Kind;
    switch (kind) {
    case K::EnergyEL: return "EnergyEL";
    case K::EnergyI1: return "EnergyI1";
    case K::EnergyI2: return "EnergyI2";
    case K::Tx1: return "Tx1";
    case K::Tx2: return "Tx2";
    case K::Ty1: return "Ty1";
    case K::Ty2: return "Ty2";
    case K::Jx1t: return "Jx1t";
    case K::Jx2t: return "Jx2t";
    case K::Jy1t: return "Jy1t";
    case K::Jy2t: return "Jy2t";
    case K::I3Dissipative: return "I3Dissipative";
    case K::I4Dissipative: return "I4Dissipative";
    case K::Ixw: return "Ixw";
    case K::X: return "X";
    case K::W: return "W";
    case K::K1: return "K1";
    case K::K2: return "K2";
    case K::Kij: return "Kij";
    case K::I3Osc: return "I3Osc";
    case K::I4Osc: return "I4Osc";
    }
    return "Unknown";
}

namespace {

/// Resonance base frequency of an oscillator pair, cross-checked against
/// both axis frequencies.
double resolve_w0(const model::SystemSpec& spec, int n1, int n2) {
    require_kind(spec.axis(0), model::AxisSpec::Kind::Oscillator,
                 "integral needs oscillator axes");
    require_kind(spec.axis(1), model::AxisSpec::Kind::Oscillator,
                 "integral needs oscillator axes");
    double w0 = spec.axis(0).w / n1;
    if (std::abs(spec.axis(1).w - n2 * w0) > 1e-12 * std::max(1.0, spec.axis(1).w))
        fail(ErrorCode::InvalidArgument,
             "axis frequencies are not in the requested resonance");
    return w0;
}

} // namespace

Complex evaluate_integral(const model::SystemSpec& spec, const IntegralId& id,
                          const State& state) {
    using K = IntegralId::Kind;
    auto cubic_k = [&](int axis) {
        require_kind(spec.axis(axis), model::AxisSpec::Kind::Cubic,
                     "integral needs a cubic axis");
        return spec.axis(axis).k;
    };
    auto osc_axis = [&](int axis) -> const model::AxisSpec& {
        require_kind(spec.axis(axis), model::AxisSpec::Kind::Oscillator,
                     "integral needs an oscillator axis");
        return spec.axis(axis);
    };

    switch (id.kind) {
    case K::EnergyEL:
        if (spec.dim == 1)
            return energy(spec, state);
        return energy_2d(spec, state).total;
    case K::EnergyI1:
        return energy_2d(spec, state).i1;
    case K::EnergyI2:
        return energy_2d(spec, state).i2;
    case K::Tx1:
        return t_generators(cubic_k(0), state.q[0], state.v[0]).first;
    case K::Tx2:
        return t_generators(cubic_k(0), state.q[0], state.v[0]).second;
    case K::Ty1:
        require_dim(state, 2);
        return t_generators(cubic_k(1), state.q[1], state.v[1]).first;
    case K::Ty2:
        require_dim(state, 2);
        return t_generators(cubic_k(1), state.q[1], state.v[1]).second;
    case K::Jx1t:
        return j_integrals(cubic_k(0), state.q[0], state.v[0], state.t).first;
    case K::Jx2t:
        return j_integrals(cubic_k(0), state.q[0], state.v[0], state.t).second;
    case K::Jy1t:
        require_dim(state, 2);
        return j_integrals(cubic_k(1), state.q[1], state.v[1], state.t).first;
    case K::Jy2t:
        require_dim(state, 2);
        return j_integrals(cubic_k(1), state.q[1], state.v[1], state.t).second;
    case K::I3Dissipative:
        return i3_i4_dissipative(cubic_k(0), cubic_k(1), state).first;
    case K::I4Dissipative:
        return i3_i4_dissipative(cubic_k(0), cubic_k(1), state).second;
    case K::Ixw: {
        const auto& ax = osc_axis(0);
        return ixw(ax.k, ax.w, state.q[0], state.v[0]);
    }
    case K::X: {
        const auto& ax = osc_axis(0);
        return xw_pair(ax.k, ax.w, state.q[0], state.v[0]).first;
    }
    case K::W: {
        const auto& ax = osc_axis(0);
        return xw_pair(ax.k, ax.w, state.q[0], state.v[0]).second;
    }
    case K::K1:
    case K::K2: {
        double w0 = resolve_w0(spec, id.n1, id.n2);
        auto [kf1, kf2] = k_functions(spec.axis(0).k, spec.axis(1).k, w0, id.n1,
                                      id.n2, state);
        return id.kind == K::K1 ? kf1 : kf2;
    }
    case K::Kij:
    case K::I3Osc:
    case K::I4Osc: {
        double w0 = resolve_w0(spec, id.n1, id.n2);
        auto [kf1, kf2] = k_functions(spec.axis(0).k, spec.axis(1).k, w0, id.n1,
                                      id.n2, state);
        Complex kij = kij_constant(kf1, kf2, id.n1, id.n2);
        if (id.kind == K::Kij)
            return kij;
        return id.kind == K::I4Osc ? Complex{kij.real(), 0.0}
                                   : Complex{kij.imag(), 0.0};
    }
    }
    fail(ErrorCode::InvalidArgument, "unhandled integral tag");
}

ConservedReport drift_report(const IntegralId& id, const Trajectory& trajectory,
                             double tolerance) {
    if (trajectory.size() == 0)
        fail(ErrorCode::InvalidArgument, "trajectory holds no samples");
    ConservedReport report;
    report.integral = id;
    report.tolerance = tolerance;

    bool have_ref = false;
    Complex ref{};
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        State s = trajectory.state_at(i);
        ConservedSample sample;
        sample.t = s.t;
        try {
            sample.value = evaluate_integral(trajectory.spec(), id, s);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SingularDenominator)
                throw;
            sample.singular = true;
            report.has_gaps = true;
        }
        if (!sample.singular) {
            if (!have_ref) {
                ref = sample.value;
                have_ref = true;
            }
            report.drift = std::max(report.drift, std::abs(sample.value - ref));
        }
        report.samples.push_back(sample);
    }
    report.pass = have_ref && !report.has_gaps && report.drift <= tolerance;
    return report;
}

} // namespace riccati::conserved
