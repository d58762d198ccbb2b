#include "analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace riccati::analytic {

PointVel cubic_solution(double k, double energy, double t) {
    double den = k * t * t - energy;
    double scale = std::max(1.0, std::abs(k * t * t) + std::abs(energy));
    if (std::abs(den) < 1e-14 * scale)
        fail(ErrorCode::SingularTime, "cubic_solution: kt^2 - E vanishes");
    PointVel p;
    p.x = 2.0 * t / den;
    p.v = -2.0 * (k * t * t + energy) / (den * den);
    return p;
}

double cubic_time_of_position(double k, double energy, double x, Branch branch) {
    if (x == 0.0)
        return 0.0;
    double radicand = 1.0 + k * energy * x * x;
    if (radicand < 0.0)
        fail(ErrorCode::OutsideAllowedRegion, "cubic_time_of_position: 1 + kEx^2 < 0");
    double root = std::sqrt(radicand);
    double sign = (branch == Branch::Plus) ? 1.0 : -1.0;
    return (1.0 + sign * root) / (k * x);
}

PointVel oscillator_solution(double k, double w, double energy, double phi, double t) {
    if (energy < 0.0)
        fail(ErrorCode::OutsideAllowedRegion, "oscillator_solution: E must be nonnegative");
    double a = std::sqrt(energy);
    double s = std::sin(w * t + phi);
    double c = std::cos(w * t + phi);
    double den = 1.0 - k * a * c;
    if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(k) * a))
        fail(ErrorCode::SingularTime, "oscillator_solution: denominator vanishes");
    PointVel p;
    p.x = w * a * s / den;
    p.v = w * w * a * (c - k * a) / (den * den);
    return p;
}

namespace {

// Tiny negative radicands at turning points are roundoff, not domain exits.
double clamp_radicand(double r, double scale, const char* what) {
    if (r >= 0.0)
        return r;
    if (r > -64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale))
        return 0.0;
    fail(ErrorCode::OutsideAllowedRegion, what);
}

std::pair<double, double> branches_general(double k, double u, double energy) {
    if (energy == 0.0)
        fail(ErrorCode::ZeroEnergy, "velocity_branches: branch formula degenerates at E = 0");
    double r = clamp_radicand(1.0 + k * energy * u, 1.0 + std::abs(k * energy * u),
                              "velocity_branches: 1 + kEU < 0");
    double s = std::sqrt(r);
    return {(-r + s) / energy, (-r - s) / energy};
}

std::pair<double, double> branches_oscillator(double k, double w, double x, double energy) {
    if (energy == 0.0)
        fail(ErrorCode::ZeroEnergy, "velocity_branches: level set degenerates at E = 0");
    if (energy < 0.0)
        fail(ErrorCode::OutsideAllowedRegion, "velocity_branches: oscillator energy is nonnegative");
    double one_minus = 1.0 - energy * k * k;
    if (one_minus == 0.0)
        fail(ErrorCode::OutsideAllowedRegion, "velocity_branches: E = 1/k^2 boundary");
    double disc = clamp_radicand(energy * w * w - one_minus * x * x,
                                 std::abs(energy * w * w) + std::abs(one_minus * x * x),
                                 "velocity_branches: position beyond turning point");
    double root = w * std::sqrt(disc);
    double m_plus = (energy * k * w * w + root) / one_minus;
    double m_minus = (energy * k * w * w - root) / one_minus;
    return {m_plus - k * x * x, m_minus - k * x * x};
}

} // namespace

std::pair<double, double> velocity_branches(const AxisSpec& axis, double x, double energy) {
    switch (axis.kind) {
        case AxisSpec::Kind::GeneralU:
            return branches_general(axis.k, axis.u.value(x), energy);
        case AxisSpec::Kind::Cubic:
            return branches_general(axis.k, x * x, energy);
        case AxisSpec::Kind::Oscillator:
            return branches_oscillator(axis.k, axis.w, x, energy);
    }
    fail(ErrorCode::InvalidArgument, "velocity_branches: unknown axis kind");
}

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1] (symmetric half listed).
constexpr double kGkNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    double integral;
    double error;
};

template <typename F>
PanelResult gk15(F&& f, double a, double b) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double kron = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(mid);
        } else {
            fsum = f(mid - half * kGkNodes[i]) + f(mid + half * kGkNodes[i]);
        }
        kron += kKronrodW[i] * fsum;
        if (i % 2 == 1)
            gauss += kGaussW[i / 2] * fsum;
    }
    return {kron * half, std::abs(kron - gauss) * std::abs(half)};
}

template <typename F>
double adaptive_gk(F&& f, double a, double b, double tol, double tol_floor,
                   int depth) {
    PanelResult r = gk15(f, a, b);
    if (!std::isfinite(r.integral))
        fail(ErrorCode::SingularIntegrand, "quadrature_time: non-finite integrand");
    if (r.error <= tol || depth >= 64)
        return r.integral;
    // Halve the budget for the children, but never below the roundoff floor:
    // a panel whose estimate sits at machine precision must be acceptable,
    // or smooth panels near an integrable endpoint split all the way to the
    // depth cap and the tree grows exponentially.
    double child = std::max(0.5 * tol, tol_floor);
    double mid = 0.5 * (a + b);
    return adaptive_gk(f, a, mid, child, tol_floor, depth + 1) +
           adaptive_gk(f, mid, b, child, tol_floor, depth + 1);
}

} // namespace

double quadrature_time(const AxisSpec& axis, double energy, double x0, double x1,
                       Branch branch, double rel_tol) {
    if (x0 == x1)
        return 0.0;

    auto velocity = [&](double x) {
        auto [vp, vm] = velocity_branches(axis, x, energy);
        return branch == Branch::Plus ? vp : vm;
    };

    // The plus branch vanishes where U does (second-order pole of 1/v, not
    // integrable), so reject intervals containing a zero of U outright.
    if (branch == Branch::Plus && axis.kind != AxisSpec::Kind::Oscillator) {
        double lo = std::min(x0, x1), hi = std::max(x0, x1);
        auto reject_if_inside = [&](double root) {
            if (root >= lo && root <= hi)
                fail(ErrorCode::SingularIntegrand,
                     "quadrature_time: plus-branch velocity vanishes on the interval");
        };
        if (axis.kind == AxisSpec::Kind::Cubic) {
            reject_if_inside(0.0);
        } else {
            const QuadraticU& u = axis.u;
            if (u.c2 != 0.0) {
                double disc = u.c1 * u.c1 - 4.0 * u.c2 * u.c0;
                if (disc >= 0.0) {
                    double s = std::sqrt(disc);
                    reject_if_inside((-u.c1 + s) / (2.0 * u.c2));
                    reject_if_inside((-u.c1 - s) / (2.0 * u.c2));
                }
            } else if (u.c1 != 0.0) {
                reject_if_inside(-u.c0 / u.c1);
            }
        }
    }

    // Backstop scan: region exits and sign changes of the branch velocity
    // strictly inside the interval are non-integrable as well. Turning points
    // at the ends (1/sqrt behavior) are fine and handled by panel refinement.
    const int scan = 257;
    double v_prev = 0.0;
    for (int i = 0; i < scan; ++i) {
        double x = x0 + (x1 - x0) * static_cast<double>(i) / (scan - 1);
        double v = velocity(x);
        bool interior = i > 0 && i < scan - 1;
        if (interior && v == 0.0)
            fail(ErrorCode::SingularIntegrand, "quadrature_time: velocity vanishes inside interval");
        if (i > 0 && interior && v_prev * v < 0.0)
            fail(ErrorCode::SingularIntegrand, "quadrature_time: velocity changes sign inside interval");
        v_prev = v;
    }

    auto adaptive = [&](auto&& g, double a, double b) {
        PanelResult first = gk15(g, a, b);
        double scale = std::max(std::abs(first.integral), 1e-30);
        return adaptive_gk(g, a, b, rel_tol * scale, 1e-16 * scale, 0);
    };

    // A turning point at an end makes 1/v blow up like 1/sqrt there. The
    // substitution x = base + (other - base) u^2 cancels the root against
    // the Jacobian, leaving a smooth integrand on u in (0, 1]; the signed
    // result runs from base to other.
    auto subbed = [&](double base, double other) {
        double d = other - base;
        return adaptive(
            [&](double u) { return 2.0 * d * u / velocity(base + d * u * u); },
            0.0, 1.0);
    };

    bool turn0 = velocity(x0) == 0.0;
    bool turn1 = velocity(x1) == 0.0;
    if (turn0 && turn1) {
        double mid = 0.5 * (x0 + x1);
        return subbed(x0, mid) - subbed(x1, mid);
    }
    if (turn0)
        return subbed(x0, x1);
    if (turn1)
        return -subbed(x1, x0);
    return adaptive([&](double x) { return 1.0 / velocity(x); }, x0, x1);
}

} // namespace riccati::analytic
