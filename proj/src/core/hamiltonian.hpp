#pragma once

#include "model.hpp"

#include <utility>

namespace riccati::hamiltonian {

/// Legendre momentum of a one-degree system:
///   general/cubic  p = -1/(v + kU)^2
///   oscillator     p = -w^2 / (k (kv + k^2 x^2 + w^2)^2)
/// The oscillator convention comes from the rescaled Lagrangian
/// (w/k)^2 L - 1/k^2, the one whose energy is I_XW; with it -k p > 0 on
/// every nonsingular state.
double momentum(const model::SystemSpec& spec, const State& state);

/// H(x, p) = -2 sqrt(-p) - k U(x) p for the general-U family (autonomous
/// coefficients). On the D > 0 branch H composed with the Legendre map
/// returns the Lagrangian energy.
double hamiltonian_u(const model::QuadraticU& u, double k, double x, double p);

/// H(x, p) = -[(2w/k^2) sqrt(-kp) + (k x^2 + w^2/k) p] + 1/k^2; composed
/// with the Legendre map it returns I_XW.
double hamiltonian_osc(double k, double w, double x, double p);

/// Canonical pair Q = (sqrt2/w) x sqrt(-kp), P = (sqrt2/k)(1 - w sqrt(-kp));
/// (P^2 + w^2 Q^2)/2 equals hamiltonian_osc exactly.
std::pair<double, double> canonical_qp(double k, double w, double x, double p);

/// {Q, P} evaluated by 4th-order central differences; exact value is 1.
double poisson_bracket_check(double k, double w, double x, double p,
                             double fd_step = 1e-6);

/// Hamiltonian value at a state through the Legendre map. States on the
/// D < 0 branch are rejected with WrongBranch: only the D > 0 branch
/// reproduces the conserved quantities.
double hamiltonian_at(const model::SystemSpec& spec, const State& state);

/// Hamilton's equations (dx/dt, dp/dt) for the oscillator Hamiltonian,
/// with the derivatives taken analytically.
std::pair<double, double> oscillator_flow_rhs(double k, double w, double x,
                                              double p);

} // namespace riccati::hamiltonian
