#include "ince.hpp"
#include "rk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace riccati::ince {

namespace {

struct Sample {
    double t;
    std::array<double, 3> u; // u, u', u''
};

/// Advance the linear system to exactly t_target, reusing the caller's
/// running step width and FSAL derivative.
void advance(const std::function<double(double)>& q, double& t,
             ode::Vec<3>& y, ode::Vec<3>& f, double& h, double t_target,
             const LinearizationOptions& opt) {
    auto rhs = [&q](double tt, const ode::Vec<3>& yy, ode::Vec<3>& dy) {
        dy[0] = yy[1];
        dy[1] = yy[2];
        dy[2] = q(tt) * yy[0];
    };
    ode::StepController ctl;
    while (t < t_target) {
        if (t + 1.01 * h >= t_target)
            h = t_target - t;
        double floor = 16.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(t));
        if (h < floor)
            fail(ErrorCode::NonFiniteStage, "step width collapsed in the linear solve");
        auto st = ode::dopri5_step<3>(rhs, t, y, f, h, opt.atol, opt.rtol);
        if (!std::isfinite(st.err)) {
            h *= 0.5;
            continue;
        }
        if (st.err > 1.0) {
            h = ctl.next_h_rejected(h, st.err);
            continue;
        }
        double h_next = ctl.next_h_accepted(h, st.err);
        t = (h == t_target - t) ? t_target : t + h;
        y = st.y;
        f = st.f_end;
        h = h_next;
    }
    t = t_target;
}

/// Bisect a sign change of u between two bracketing samples by re-solving
/// from the left bracket each probe; u is smooth so ordinary bisection on
/// the dense march is enough at this tolerance.
double refine_zero(const std::function<double(double)>& q, const Sample& a,
                   const Sample& b, const LinearizationOptions& opt) {
    double lo = a.t, hi = b.t;
    double ulo = a.u[0];
    for (int iter = 0; iter < 80 && hi - lo > 1e-12 * std::max(1.0, std::abs(hi));
         ++iter) {
        double mid = 0.5 * (lo + hi);
        double t = a.t;
        ode::Vec<3> y{a.u[0], a.u[1], a.u[2]};
        ode::Vec<3> f{y[1], y[2], q(t) * y[0]};
        double h = std::max((b.t - a.t) * 0.25, 1e-6);
        advance(q, t, y, f, h, mid, opt);
        if ((y[0] < 0.0) == (ulo < 0.0) && y[0] != 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double stencil_d1(const std::vector<double>& w, std::size_t i, double h) {
    return (8.0 * (w[i + 1] - w[i - 1]) - (w[i + 2] - w[i - 2])) / (12.0 * h);
}

double stencil_d2(const std::vector<double>& w, std::size_t i, double h) {
    return (-w[i + 2] + 16.0 * w[i + 1] - 30.0 * w[i] + 16.0 * w[i - 1] -
            w[i - 2]) /
           (12.0 * h * h);
}

} // namespace

LinearizationReport
ince_linearization_oracle(const std::function<double(double)>& q,
                          const std::array<double, 3>& u0, double t0, double t1,
                          const LinearizationOptions& options) {
    if (!(t1 > t0))
        fail(ErrorCode::InvalidArgument, "the span must run forward");
    if (options.grid_points < 5)
        fail(ErrorCode::InvalidArgument, "need at least five grid samples");

    const int n = options.grid_points;
    const double dt = (t1 - t0) / (n - 1);

    std::vector<Sample> samples;
    samples.reserve(n);
    {
        double t = t0;
        ode::Vec<3> y{u0[0], u0[1], u0[2]};
        ode::Vec<3> f{y[1], y[2], q(t) * y[0]};
        double h = std::min(dt, 1e-2 * (t1 - t0));
        samples.push_back({t, {y[0], y[1], y[2]}});
        for (int g = 1; g < n; ++g) {
            advance(q, t, y, f, h, t0 + g * dt, options);
            samples.push_back({t, {y[0], y[1], y[2]}});
        }
    }

    LinearizationReport report;
    for (int i = 0; i + 1 < n; ++i) {
        double ua = samples[i].u[0], ub = samples[i + 1].u[0];
        if (ua == 0.0) {
            if (report.zeros.empty() ||
                std::abs(report.zeros.back() - samples[i].t) > 1e-9)
                report.zeros.push_back(samples[i].t);
        } else if (ub != 0.0 && (ua < 0.0) != (ub < 0.0)) {
            report.zeros.push_back(
                refine_zero(q, samples[i], samples[i + 1], options));
        }
    }
    if (samples.back().u[0] == 0.0)
        report.zeros.push_back(samples.back().t);

    std::vector<bool> keep(n, true);
    for (int i = 0; i < n; ++i)
        for (double z : report.zeros)
            if (std::abs(samples[i].t - z) < options.exclusion_radius)
                keep[i] = false;

    // w samples are only meaningful where u is clear of its zeros.
    std::vector<double> w(n, 0.0);
    for (int i = 0; i < n; ++i)
        if (keep[i])
            w[i] = samples[i].u[1] / samples[i].u[0];

    int i = 0;
    while (i < n) {
        if (!keep[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < n && keep[j + 1])
            ++j;
        if (j - i + 1 >= 5) {
            LinearizationWindow win;
            win.t0 = samples[i].t;
            win.t1 = samples[j].t;
            win.points = j - i + 1;
            for (int p = i; p <= j; ++p) {
                double u = samples[p].u[0];
                double wp = w[p];
                double w1 = samples[p].u[2] / u - wp * wp;
                double u3 = q(samples[p].t) * u;
                double w2 = u3 / u - 3.0 * wp * w1 - wp * wp * wp;
                double res = w2 + 3.0 * wp * w1 + wp * wp * wp - q(samples[p].t);
                win.max_cascade = std::max(win.max_cascade, std::abs(res));
            }
            for (int p = i + 2; p <= j - 2; ++p) {
                double w1 = stencil_d1(w, p, dt);
                double w2 = stencil_d2(w, p, dt);
                double res =
                    w2 + 3.0 * w[p] * w1 + w[p] * w[p] * w[p] - q(samples[p].t);
                win.max_fd = std::max(win.max_fd, std::abs(res));
            }
            report.windows.push_back(win);
            report.max_cascade = std::max(report.max_cascade, win.max_cascade);
            report.max_fd = std::max(report.max_fd, win.max_fd);
        }
        i = j + 1;
    }

    if (report.windows.empty())
        fail(ErrorCode::ZeroCrossing,
             "u vanishes through the window; nothing evaluable remains");
    return report;
}

} // namespace riccati::ince
