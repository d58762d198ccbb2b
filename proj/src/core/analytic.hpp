#pragma once

#include <utility>

#include "model.hpp"
#include "types.hpp"

namespace riccati::analytic {

using model::AxisSpec;
using model::QuadraticU;

/// Velocity-branch selector: Plus/Minus pick the sign in front of the square
/// root of the branch formula.
enum class Branch { Plus, Minus };

struct PointVel {
    double x = 0.0;
    double v = 0.0;
};

/// Cubic closed form x = 2t/(kt² − E) in the (t0=0, x0=0) normalization,
/// with its derivative. Throws SingularTime when kt² − E vanishes.
PointVel cubic_solution(double k, double energy, double t);

/// Inverts the cubic closed form: the time at which the canonical orbit
/// passes through x, t = (1 ± sqrt(1 + kEx²))/(kx). x = 0 maps to t = 0.
double cubic_time_of_position(double k, double energy, double x, Branch branch);

/// Oscillator closed form x = w√E sin(wt+φ)/(1 − k√E cos(wt+φ)) and its
/// derivative. E is the rescaled-energy constant (regular for 0 < E < 1/k²).
PointVel oscillator_solution(double k, double w, double energy, double phi, double t);

/// Both velocity branches on the energy level set at position x.
/// General/cubic axes use v = [−(1+kEU) ± sqrt(1+kEU)]/E; oscillator axes
/// solve the rescaled-energy level set for v + kx².
std::pair<double, double> velocity_branches(const AxisSpec& axis, double x, double energy);

/// Travel time from x0 to x1 on one velocity branch, ∫ dx / v_branch, by
/// adaptive Gauss–Kronrod quadrature (relative tolerance rel_tol).
double quadrature_time(const AxisSpec& axis, double energy, double x0, double x1,
                       Branch branch, double rel_tol = 1e-10);

} // namespace riccati::analytic
