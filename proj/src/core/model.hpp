#pragma once

#include <array>
#include <functional>
#include <optional>

#include "types.hpp"

namespace riccati::model {

/// Quadratic potential U(x,t) = c0(t) + c1(t) x + c2(t) x² whose coefficients
/// drift linearly: c_i(t) = c_i + dc_i t (all dc_i zero for autonomous
/// systems; c_i are the values at t = 0).
struct QuadraticU {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double dc0 = 0.0, dc1 = 0.0, dc2 = 0.0;

    double value(double x) const { return c0 + x * (c1 + x * c2); }
    double slope(double x) const { return c1 + 2.0 * c2 * x; }
    double value_at(double t, double x) const {
        return (c0 + dc0 * t) + x * ((c1 + dc1 * t) + x * (c2 + dc2 * t));
    }
    double slope_at(double t, double x) const {
        return (c1 + dc1 * t) + 2.0 * (c2 + dc2 * t) * x;
    }
    double time_derivative(double x) const { return dc0 + x * (dc1 + x * dc2); }
};

/// One degree of freedom. Three kinds share the evaluation surface:
///   GeneralU     L = 1/(v + k U(x,t))
///   Cubic        L = 1/(v + k x²)            (U = x²)
///   Oscillator   L = 1/(k v + k² x² + w²)
struct AxisSpec {
    enum class Kind { GeneralU, Cubic, Oscillator };

    Kind kind = Kind::Cubic;
    double k = 1.0;
    double w = 0.0;    // oscillator frequency
    QuadraticU u;      // general-U coefficients

    static AxisSpec cubic(double k);
    static AxisSpec oscillator(double k, double w);
    static AxisSpec general_u(double k, const QuadraticU& u);

    /// Lagrangian denominator: v + kU (general/cubic) or kv + k²x² + w².
    double denominator(double t, double x, double v) const;
    double lagrangian(double t, double x, double v) const;
    double force(double t, double x, double v) const;
    double energy(double t, double x, double v) const;
};

/// A 1-dof system or an uncoupled product of two of them.
struct SystemSpec {
    std::array<AxisSpec, 2> axes;
    int dim = 1;

    static SystemSpec cubic(double k) { return one_dof(AxisSpec::cubic(k)); }
    static SystemSpec oscillator(double k, double w) { return one_dof(AxisSpec::oscillator(k, w)); }
    static SystemSpec general_u(double k, const QuadraticU& u) { return one_dof(AxisSpec::general_u(k, u)); }
    static SystemSpec one_dof(const AxisSpec& a);
    static SystemSpec product(const AxisSpec& x_axis, const AxisSpec& y_axis);

    const AxisSpec& axis(int i) const;
};

/// Coefficients of y″ + (b0 + b1 y) y′ + a0 + a1 y + a2 y² + a3 y³ = 0.
struct RiccatiCoefficients {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    double b0 = 0.0, b1 = 0.0;
};

/// Lagrangian value; 1-dof specs only. Throws SingularDenominator when the
/// denominator magnitude falls below eps.
double lagrangian_value(const SystemSpec& spec, const State& state, double eps = 1e-14);

/// Acceleration per axis. Out-size equals spec dimension.
std::array<double, 2> force(const SystemSpec& spec, const State& state);

/// First-order form: d/dt (q, v) = (v, force).
std::array<double, 4> rhs(const SystemSpec& spec, const State& state);

/// Coefficient map for the k = 1 normalization of the general-U equation.
RiccatiCoefficients riccati_coefficients(const QuadraticU& u);

/// Alternative b0 convention, a2/sqrt(a3) − a3′/(2 a3); requires c2 ≠ 0.
/// Coincides with (3/2)c1 identically when c2 > 0.
double riccati_b0_alternative(const QuadraticU& u);

/// Difference between the alternative and coefficient-map b0 forms.
double b0_form_difference(const QuadraticU& u);

/// Alternative Lagrangian sqrt(2v + kU) for general/cubic axes; throws
/// RootDomain when 2v + kU ≤ 0.
double alt_lagrangian(const AxisSpec& axis, double t, double x, double v);

/// d/dt(∂L/∂v) − ∂L/∂x at the given state and acceleration, all derivatives
/// by 4th-order central differences. `fd_step` sizes first-order stencils;
/// the outer (total-time-derivative) stencil widens to sqrt(fd_step).
double euler_lagrange_residual(const std::function<double(double, double)>& lagrangian,
                               const State& state, double accel, double fd_step = 1e-5);

} // namespace riccati::model
