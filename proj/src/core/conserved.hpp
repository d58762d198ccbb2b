#pragma once

#include "integrate.hpp"
#include "model.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace riccati::conserved {

using Complex = std::complex<double>;

/// Lagrangian energy of a one-degree-of-freedom system.
double energy(const model::SystemSpec& spec, const State& state);

struct Energy2D {
    double total = 0.0; // always i1 + i2
    double i1 = 0.0;
    double i2 = 0.0;
};

/// Componentwise energies of a two-degree-of-freedom product system.
Energy2D energy_2d(const model::SystemSpec& spec, const State& state);

/// Generator pair T1 = 1/(v + k x^2), T2 = x/(v + k x^2) of one axis.
std::pair<double, double> t_generators(double k, double x, double v);

/// Time-dependent constants J1 = T2 - t, J2 = T1 - k t T2 + k t^2 / 2.
std::pair<double, double> j_integrals(double k, double x, double v, double t);

/// The two first integrals of the uncoupled dissipative pair:
/// I3 = T_x2 - T_y2 and I4 = k2 T_x1 + k1 T_y1 - k1 k2 T_x2 T_y2.
std::pair<double, double> i3_i4_dissipative(double k1, double k2,
                                            const State& state);

/// Oscillator pair X = x/(k v + k^2 x^2 + w^2), W = (v + k x^2)/(same).
std::pair<double, double> xw_pair(double k, double w, double x, double v);

/// First integral I_XW = W^2 + w^2 X^2 of one oscillator axis.
double ixw(double k, double w, double x, double v);

/// Complex pair K_j = W_j + i n_j w0 X_j for a resonant oscillator product
/// with frequencies w_j = n_j w0.
std::pair<Complex, Complex> k_functions(double k1, double k2, double w0,
                                        int n1, int n2, const State& state);

/// Constant of motion K_ij = K1^{n2} (K2*)^{n1}; Re is I4, Im carries I3.
Complex kij_constant(Complex k1, Complex k2, int n1, int n2);

/// Printed closed forms for the resonant first integrals (isotropic n=(1,1)
/// and anisotropic n=(1,2)); these are the oracles the K-route must match.
double i3_isotropic_printed(double k1, double k2, double w0, const State& state);
double i4_isotropic_printed(double k1, double k2, double w0, const State& state);
double i3_anisotropic12_printed(double k1, double k2, double w0,
                                const State& state);
double i4_anisotropic12_printed(double k1, double k2, double w0,
                                const State& state);

/// Limit expressions the printed isotropic integrals collapse to.
double i3_limit_k0(double w0, const State& state); // (x vy - y vx)/w0^4
double i4_limit_k0(double w0, const State& state); // (vx vy + w0^2 x y)/w0^4

struct LimitReport {
    double deviation_i3 = 0.0;
    double deviation_i4 = 0.0;
};

/// Relative deviation of the full isotropic integrals from their k -> 0
/// limit expressions, both evaluated at the small k supplied.
LimitReport limit_check_k_to_zero(double k, double w0, const State& state);

/// Relative deviation from the w -> 0 limits: I4 -> 1/(k1 k2) and
/// k1 k2 I3 -> the dissipative I3.
LimitReport limit_check_w_to_zero(double w0, double k1, double k2,
                                  const State& state);

struct IntegralId {
    enum class Kind {
        EnergyEL,
        EnergyI1,
        EnergyI2,
        Tx1,
        Tx2,
        Ty1,
        Ty2,
        Jx1t,
        Jx2t,
        Jy1t,
        Jy2t,
        I3Dissipative,
        I4Dissipative,
        Ixw,
        X,
        W,
        K1,
        K2,
        Kij,
        I3Osc,
        I4Osc,
    };
    Kind kind = Kind::EnergyEL;
    int n1 = 1, n2 = 1; // resonance numbers for the oscillator-pair tags

    static IntegralId of(Kind k) { return {k, 1, 1}; }
    static IntegralId resonant(Kind k, int n1, int n2) { return {k, n1, n2}; }
};

const char* integral_kind_name(IntegralId::Kind kind);

/// Evaluate any tagged integral at a state of the given system.
Complex evaluate_integral(const model::SystemSpec& spec, const IntegralId& id,
                          const State& state);

struct ConservedSample {
    double t = 0.0;
    Complex value{};
    bool singular = false; // flagged gap: the integral was not evaluable here
};

struct ConservedReport {
    IntegralId integral;
    std::vector<ConservedSample> samples;
    double drift = 0.0; ///< max |value(t) - value(t_first_valid)|
    double tolerance = 0.0;
    bool has_gaps = false;
    bool pass = false; ///< drift <= tolerance and no flagged gaps
};

/// Sample the integral at every stored trajectory node and measure drift.
ConservedReport drift_report(const IntegralId& id, const Trajectory& trajectory,
                             double tolerance);

} // namespace riccati::conserved
