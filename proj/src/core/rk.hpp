#pragma once

#include <array>
#include <cmath>
#include <limits>

namespace riccati::ode {

// Dormand-Prince 5(4) coefficients. The 5th-order solution is propagated;
// the e-row is the difference against the embedded 4th-order solution.
namespace dp {
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// dense-output row (locally 5th-order continuous extension)
constexpr double d1 = -12715105075.0 / 11282082432.0,
                 d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0,
                 d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;
} // namespace dp

template <int N>
using Vec = std::array<double, N>;

template <int N>
struct StepOut {
    Vec<N> y{};       // 5th-order end state
    Vec<N> f_end{};   // derivative at the end state (FSAL stage)
    double err = 0.0; // scaled error norm; accept when <= 1
    // continuous-extension coefficients; with th = (s - t) / h the dense
    // value is y0 + th*(r2 + (1-th)*(r3 + th*(r4 + (1-th)*r5)))
    Vec<N> r2{}, r3{}, r4{}, r5{};
};

/// One embedded step from (t, y) with derivative f0 = rhs(t, y) already in
/// hand. Non-finite arithmetic surfaces as err = +inf, never as an exception.
template <int N, typename Rhs>
StepOut<N> dopri5_step(Rhs&& rhs, double t, const Vec<N>& y, const Vec<N>& f0,
                       double h, double atol, double rtol) {
    using namespace dp;
    Vec<N> k2, k3, k4, k5, k6, k7, tmp;
    StepOut<N> out;

    for (int i = 0; i < N; ++i)
        tmp[i] = y[i] + h * a21 * f0[i];
    rhs(t + c2 * h, tmp, k2);
    for (int i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a31 * f0[i] + a32 * k2[i]);
    rhs(t + c3 * h, tmp, k3);
    for (int i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a41 * f0[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, tmp, k4);
    for (int i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a51 * f0[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, tmp, k5);
    for (int i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a61 * f0[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, tmp, k6);
    for (int i = 0; i < N; ++i)
        out.y[i] = y[i] + h * (a71 * f0[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    rhs(t + h, out.y, k7);
    out.f_end = k7;

    for (int i = 0; i < N; ++i) {
        double ydiff = out.y[i] - y[i];
        double bspl = h * f0[i] - ydiff;
        out.r2[i] = ydiff;
        out.r3[i] = bspl;
        out.r4[i] = ydiff - h * k7[i] - bspl;
        out.r5[i] = h * (d1 * f0[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                         d6 * k6[i] + d7 * k7[i]);
    }

    double sum = 0.0;
    for (int i = 0; i < N; ++i) {
        double e = h * (e1 * f0[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                        e6 * k6[i] + e7 * k7[i]);
        double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(out.y[i]));
        double q = e / sc;
        sum += q * q;
    }
    out.err = std::sqrt(sum / N);

    bool finite = std::isfinite(out.err);
    for (int i = 0; i < N && finite; ++i)
        finite = std::isfinite(out.y[i]) && std::isfinite(out.f_end[i]);
    if (!finite)
        out.err = std::numeric_limits<double>::infinity();
    return out;
}

/// Hairer-style PI step controller state.
struct StepController {
    double facold = 1e-4;
    static constexpr double safe = 0.9, beta = 0.04;
    static constexpr double expo1 = 0.2 - beta * 0.75;
    static constexpr double facc1 = 5.0;  // max shrink factor per step
    static constexpr double facc2 = 0.1;  // max growth is 1/facc2

    double next_h_accepted(double h, double err) {
        double fac11 = std::pow(std::max(err, 1e-16), expo1);
        double fac = fac11 / std::pow(facold, beta);
        fac = std::max(facc2, std::min(facc1, fac / safe));
        facold = std::max(err, 1e-4);
        return h / fac;
    }

    double next_h_rejected(double h, double err) const {
        double fac11 = std::pow(err, expo1);
        return h / std::min(facc1, fac11 / safe);
    }
};

} // namespace riccati::ode
