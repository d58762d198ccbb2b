#include "riccati/riccati.h"

#include "../core/analytic.hpp"
#include "../core/conserved.hpp"
#include "../core/hamiltonian.hpp"
#include "../core/ince.hpp"
#include "../core/integrate.hpp"
#include "../core/model.hpp"
#include "../core/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using riccati::Error;
using riccati::ErrorCode;
using riccati::State;

struct rcc_system {
    riccati::model::SystemSpec spec;
};

struct rcc_trajectory {
    riccati::Trajectory traj;
};

namespace {

thread_local std::string g_last_error;

rcc_status map_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return RCC_EINVAL;
    case ErrorCode::SingularDenominator: return RCC_ESINGULAR_DENOMINATOR;
    case ErrorCode::SingularTime: return RCC_ESINGULAR_TIME;
    case ErrorCode::OutsideAllowedRegion: return RCC_EOUTSIDE_REGION;
    case ErrorCode::ZeroEnergy: return RCC_EZERO_ENERGY;
    case ErrorCode::SingularIntegrand: return RCC_ESINGULAR_INTEGRAND;
    case ErrorCode::ZeroCrossing: return RCC_EZERO_CROSSING;
    case ErrorCode::PositiveMomentum: return RCC_EPOSITIVE_MOMENTUM;
    case ErrorCode::RootDomain: return RCC_EROOT_DOMAIN;
    case ErrorCode::WrongBranch: return RCC_EWRONG_BRANCH;
    case ErrorCode::OutOfRange: return RCC_EOUT_OF_RANGE;
    case ErrorCode::NonFiniteStage: return RCC_ENONFINITE;
    }
    return RCC_EINTERNAL;
}

rcc_status fail_invalid(const char* message) {
    g_last_error = message;
    return RCC_EINVAL;
}

/// Run `body` (returning rcc_status) under the exception-to-status bridge.
template <typename F>
rcc_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RCC_EINTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return RCC_EINTERNAL;
    }
}

State make_state(const rcc_system* system, double t, const double q[2],
                 const double v[2]) {
    State s;
    s.t = t;
    s.dim = system->spec.dim;
    for (int i = 0; i < s.dim; ++i) {
        s.q[static_cast<size_t>(i)] = q[i];
        s.v[static_cast<size_t>(i)] = v[i];
    }
    return s;
}

riccati::model::QuadraticU make_u(const double c[3], const double dc[3]) {
    riccati::model::QuadraticU u;
    u.c0 = c[0];
    u.c1 = c[1];
    u.c2 = c[2];
    if (dc) {
        u.dc0 = dc[0];
        u.dc1 = dc[1];
        u.dc2 = dc[2];
    }
    return u;
}

} // namespace

extern "C" {

const char* rcc_status_name(rcc_status status) {
    switch (status) {
    case RCC_OK: return "RCC_OK";
    case RCC_EINVAL: return "RCC_EINVAL";
    case RCC_ESINGULAR_DENOMINATOR: return "RCC_ESINGULAR_DENOMINATOR";
    case RCC_ESINGULAR_TIME: return "RCC_ESINGULAR_TIME";
    case RCC_EOUTSIDE_REGION: return "RCC_EOUTSIDE_REGION";
    case RCC_EZERO_ENERGY: return "RCC_EZERO_ENERGY";
    case RCC_ESINGULAR_INTEGRAND: return "RCC_ESINGULAR_INTEGRAND";
    case RCC_EZERO_CROSSING: return "RCC_EZERO_CROSSING";
    case RCC_EPOSITIVE_MOMENTUM: return "RCC_EPOSITIVE_MOMENTUM";
    case RCC_EROOT_DOMAIN: return "RCC_EROOT_DOMAIN";
    case RCC_EWRONG_BRANCH: return "RCC_EWRONG_BRANCH";
    case RCC_EOUT_OF_RANGE: return "RCC_EOUT_OF_RANGE";
    case RCC_ENONFINITE: return "RCC_ENONFINITE";
    case RCC_EINTERNAL: return "RCC_EINTERNAL";
    }
    return "RCC_UNKNOWN";
}

const char* rcc_traj_status_name(rcc_traj_status status) {
    switch (status) {
    case RCC_TRAJ_COMPLETED: return "Completed";
    case RCC_TRAJ_SINGULAR: return "Singular";
    case RCC_TRAJ_BLOWUP: return "BlowUp";
    case RCC_TRAJ_MAXSTEPS: return "MaxSteps";
    }
    return "Unknown";
}

const char* rcc_last_error(void) { return g_last_error.c_str(); }

rcc_status rcc_system_cubic(double k, rcc_system** out) {
    if (!out)
        return fail_invalid("out must not be NULL");
    return guarded([&] {
        *out = new rcc_system{riccati::model::SystemSpec::cubic(k)};
        return RCC_OK;
    });
}

rcc_status rcc_system_oscillator(double k, double w, rcc_system** out) {
    if (!out)
        return fail_invalid("out must not be NULL");
    return guarded([&] {
        *out = new rcc_system{riccati::model::SystemSpec::oscillator(k, w)};
        return RCC_OK;
    });
}

rcc_status rcc_system_general_u(double k, const double c[3], const double dc[3],
                                rcc_system** out) {
    if (!out || !c)
        return fail_invalid("out and c must not be NULL");
    return guarded([&] {
        *out = new rcc_system{
            riccati::model::SystemSpec::general_u(k, make_u(c, dc))};
        return RCC_OK;
    });
}

rcc_status rcc_system_product(const rcc_system* x_axis, const rcc_system* y_axis,
                              rcc_system** out) {
    if (!out || !x_axis || !y_axis)
        return fail_invalid("arguments must not be NULL");
    if (x_axis->spec.dim != 1 || y_axis->spec.dim != 1)
        return fail_invalid("product factors must be one-degree systems");
    return guarded([&] {
        *out = new rcc_system{riccati::model::SystemSpec::product(
            x_axis->spec.axis(0), y_axis->spec.axis(0))};
        return RCC_OK;
    });
}

void rcc_system_free(rcc_system* system) { delete system; }

rcc_status rcc_system_dim(const rcc_system* system, int* out) {
    if (!system || !out)
        return fail_invalid("arguments must not be NULL");
    *out = system->spec.dim;
    return RCC_OK;
}

rcc_status rcc_force(const rcc_system* system, double t, const double q[2],
                     const double v[2], double out[2]) {
    if (!system || !q || !v || !out)
        return fail_invalid("arguments must not be NULL");
    return guarded([&] {
        auto a = riccati::model::force(system->spec, make_state(system, t, q, v));
        for (int i = 0; i < system->spec.dim; ++i)
            out[i] = a[static_cast<size_t>(i)];
        return RCC_OK;
    });
}

rcc_status rcc_rhs(const rcc_system* system, double t, const double q[2],
                   const double v[2], double out[4]) {
    if (!system || !q || !v || !out)
        return fail_invalid("arguments must not be NULL");
    return guarded([&] {
        auto r = riccati::model::rhs(system->spec, make_state(system, t, q, v));
        for (int i = 0; i < 2 * system->spec.dim; ++i)
            out[i] = r[static_cast<size_t>(i)];
        return RCC_OK;
    });
}

rcc_status rcc_lagrangian(const rcc_system* system, double t, double x, double v,
                          double* out) {
    if (!system || !out)
        return fail_invalid("arguments must not be NULL");
    return guarded([&] {
        *out = riccati::model::lagrangian_value(system->spec,
                                                State::one_dof(t, x, v));
        return RCC_OK;
    });
}

rcc_status rcc_alt_lagrangian(const rcc_system* system, double t, double x,
                              double v, double* out) {
    if (!system || !out)
        return fail_invalid("arguments must not be NULL");
    if (system->spec.dim != 1)
        return fail_invalid("alt Lagrangian needs a one-degree system");
    return guarded([&] {
        *out = riccati::model::alt_lagrangian(system->spec.axis(0), t, x, v);
        return RCC_OK;
    });
}

rcc_status rcc_riccati_coefficients(const double c[3], const double dc[3],
                                    double out[6]) {
    if (!c || !out)
        return fail_invalid("c and out must not be NULL");
    return guarded([&] {
        auto r = riccati::model::riccati_coefficients(make_u(c, dc));
        out[0] = r.a0;
        out[1] = r.a1;
        out[2] = r.a2;
        out[3] = r.a3;
        out[4] = r.b0;
        out[5] = r.b1;
        return RCC_OK;
    });
}

rcc_status rcc_riccati_b0_alternative(const double c[3], const double dc[3],
                                      double* out) {
    if (!c || !out)
        return fail_invalid("c and out must not be NULL");
    return guarded([&] {
        *out = riccati::model::riccati_b0_alternative(make_u(c, dc));
        return RCC_OK;
    });
}

rcc_status rcc_euler_lagrange_residual(rcc_lagrangian_fn lagrangian, void* user,
                                       double x, double v, double accel,
                                       double fd_step, double* out) {
    if (!lagrangian || !out)
        return fail_invalid("lagrangian and out must not be NULL");
    return guarded([&] {
        auto wrapped = [lagrangian, user](double xx, double vv) {
            return lagrangian(xx, vv, user);
        };
        *out = riccati::model::euler_lagrange_residual(
            wrapped, State::one_dof(0.0, x, v), accel,
            fd_step > 0.0 ? fd_step : 1e-5);
        return RCC_OK;
    });
}

rcc_status rcc_energy(const rcc_system* system, double t, double x, double v,
                      double* out) {
    if (!system || !out)
        return fail_invalid("arguments must not be NULL");
    return guarded([&] {
        *out = riccati::conserved::energy(system->spec, State::one_dof(t, x, v));
        return RCC_OK;
    });
}

rcc_status rcc_energy_components(const rcc_system* system, double t,
                                 const double q[2], const double v[2],
                                 double* total, double* i1, double* i2) {
    if (!system || !q || !v)
        return fail_invalid("arguments must not be NULL");
    return guarded([&] {
        auto e = riccati::conserved::energy_2d(system->spec,
                                               make_state(system, t, q, v));
        if (total)
            *total = e.total;
        if (i1)
            *i1 = e.i1;
        if (i2)
            *i2 = e.i2;
        return RCC_OK;
    });
}

rcc_status rcc_t_generators(double k, double x, double v, double* t1,
                            double* t2) {
    return guarded([&] {
        auto [a, b] = riccati::conserved::t_generators(k, x, v);
        if (t1)
            *t1 = a;
        if (t2)
            *t2 = b;
        return RCC_OK;
    });
}

rcc_status rcc_j_integrals(double k, double x, double v, double t, double* j1,
                           double* j2) {
    return guarded([&] {
        auto [a, b] = riccati::conserved::j_integrals(k, x, v, t);
        if (j1)
            *j1 = a;
        if (j2)
            *j2 = b;
        return RCC_OK;
    });
}

rcc_status rcc_i3_i4_dissipative(double k1, double k2, const double q[2],
                                 const double v[2], double* i3, double* i4) {
    if (!q || !v)
        return fail_invalid("q and v must not be NULL");
    return guarded([&] {
        auto [a, b] = riccati::conserved::i3_i4_dissipative(
            k1, k2, State::two_dof(0.0, q[0], v[0], q[1], v[1]));
        if (i3)
            *i3 = a;
        if (i4)
            *i4 = b;
        return RCC_OK;
    });
}

rcc_status rcc_xw_pair(double k, double w, double x, double v, double* x_out,
                       double* w_out) {
    return guarded([&] {
        auto [X, W] = riccati::conserved::xw_pair(k, w, x, v);
        if (x_out)
            *x_out = X;
        if (w_out)
            *w_out = W;
        return RCC_OK;
    });
}

rcc_status rcc_ixw(double k, double w, double x, double v, double* out) {
    if (!out)
        return fail_invalid("out must not be NULL");
    return guarded([&] {
        *out = riccati::conserved::ixw(k, w, x, v);
        return RCC_OK;
    });
}

rcc_status rcc_k_functions(double k1, double k2, double w0, int n1, int n2,
                           const double q[2], const double v[2],
                           double k1_out[2], double k2_out[2]) {
    if (!q || !v)
        return fail_invalid("q and v must not be NULL");
    return guarded([&] {
        auto [a, b] = riccati::conserved::k_functions(
            k1, k2, w0, n1, n2, State::two_dof(0.0, q[0], v[0], q[1], v[1]));
        if (k1_out) {
            k1_out[0] = a.real();
            k1_out[1] = a.imag();
        }
        if (k2_out) {
            k2_out[0] = b.real();
            k2_out[1] = b.imag();
        }
        return RCC_OK;
    });
}

rcc_status rcc_kij_constant(const double k1[2], const double k2[2], int n1,
                            int n2, double out[2]) {
    if (!k1 || !k2 || !out)
        return fail_invalid("arguments must not be NULL");
    return guarded([&] {
        auto z = riccati::conserved::kij_constant({k1[0], k1[1]}, {k2[0], k2[1]},
                                                  n1, n2);
        out[0] = z.real();
        out[1] = z.imag();
        return RCC_OK;
    });
}

rcc_status rcc_cubic_solution(double k, double energy, double t, double* x,
                              double* v) {
    return guarded([&] {
        auto p = riccati::analytic::cubic_solution(k, energy, t);
        if (x)
            *x = p.x;
        if (v)
            *v = p.v;
        return RCC_OK;
    });
}

rcc_status rcc_cubic_time_of_position(double k, double energy, double x,
                                      int plus_branch, double* t) {
    if (!t)
        return fail_invalid("t must not be NULL");
    return guarded([&] {
        *t = riccati::analytic::cubic_time_of_position(
            k, energy, x,
            plus_branch ? riccati::analytic::Branch::Plus
                        : riccati::analytic::Branch::Minus);
        return RCC_OK;
    });
}

rcc_status rcc_oscillator_solution(double k, double w, double energy, double phi,
                                   double t, double* x, double* v) {
    return guarded([&] {
        auto p = riccati::analytic::oscillator_solution(k, w, energy, phi, t);
        if (x)
            *x = p.x;
        if (v)
            *v = p.v;
        return RCC_OK;
    });
}

rcc_status rcc_velocity_branches(const rcc_system* system, double x,
                                 double energy, double* v_plus,
                                 double* v_minus) {
    if (!system)
        return fail_invalid("system must not be NULL");
    if (system->spec.dim != 1)
        return fail_invalid("velocity branches need a one-degree system");
    return guarded([&] {
        auto [vp, vm] =
            riccati::analytic::velocity_branches(system->spec.axis(0), x, energy);
        if (v_plus)
            *v_plus = vp;
        if (v_minus)
            *v_minus = vm;
        return RCC_OK;
    });
}

rcc_status rcc_quadrature_time(const rcc_system* system, double energy,
                               double x0, double x1, int plus_branch,
                               double rel_tol, double* out) {
    if (!system || !out)
        return fail_invalid("arguments must not be NULL");
    if (system->spec.dim != 1)
        return fail_invalid("quadrature needs a one-degree system");
    return guarded([&] {
        *out = riccati::analytic::quadrature_time(
            system->spec.axis(0), energy, x0, x1,
            plus_branch ? riccati::analytic::Branch::Plus
                        : riccati::analytic::Branch::Minus,
            rel_tol > 0.0 ? rel_tol : 1e-10);
        return RCC_OK;
    });
}

rcc_status rcc_ince_linearization(rcc_time_fn q, void* user, const double u0[3],
                                  double t0, double t1, double* max_cascade,
                                  double* max_fd, int* n_windows,
                                  int* n_zeros) {
    if (!q || !u0)
        return fail_invalid("q and u0 must not be NULL");
    return guarded([&] {
        auto wrapped = [q, user](double t) { return q(t, user); };
        auto rep = riccati::ince::ince_linearization_oracle(
            wrapped, {u0[0], u0[1], u0[2]}, t0, t1);
        if (max_cascade)
            *max_cascade = rep.max_cascade;
        if (max_fd)
            *max_fd = rep.max_fd;
        if (n_windows)
            *n_windows = static_cast<int>(rep.windows.size());
        if (n_zeros)
            *n_zeros = static_cast<int>(rep.zeros.size());
        return RCC_OK;
    });
}

void rcc_integrator_config_init(rcc_integrator_config* config) {
    if (!config)
        return;
    riccati::IntegratorConfig defaults;
    config->rtol = defaults.rtol;
    config->atol = defaults.atol;
    config->h_init = defaults.h_init;
    config->h_max = defaults.h_max;
    config->max_steps = defaults.max_steps;
    config->blowup_bound = defaults.blowup_bound;
    config->denom_epsilon = defaults.denom_epsilon;
}

rcc_status rcc_integrate(const rcc_system* system, double t0, const double q[2],
                         const double v[2], double t_end,
                         const rcc_integrator_config* config,
                         rcc_trajectory** out) {
    if (!system || !q || !v || !out)
        return fail_invalid("arguments must not be NULL");
    return guarded([&] {
        riccati::IntegratorConfig cfg;
        if (config) {
            cfg.rtol = config->rtol;
            cfg.atol = config->atol;
            cfg.h_init = config->h_init;
            cfg.h_max = config->h_max;
            cfg.max_steps = config->max_steps;
            cfg.blowup_bound = config->blowup_bound;
            cfg.denom_epsilon = config->denom_epsilon;
        }
        auto traj =
            riccati::integrate(system->spec, make_state(system, t0, q, v), t_end, cfg);
        *out = new rcc_trajectory{std::move(traj)};
        return RCC_OK;
    });
}

void rcc_trajectory_free(rcc_trajectory* trajectory) { delete trajectory; }

rcc_status rcc_trajectory_size(const rcc_trajectory* trajectory, size_t* out) {
    if (!trajectory || !out)
        return fail_invalid("arguments must not be NULL");
    *out = trajectory->traj.size();
    return RCC_OK;
}

rcc_status rcc_trajectory_status(const rcc_trajectory* trajectory,
                                 rcc_traj_status* out) {
    if (!trajectory || !out)
        return fail_invalid("arguments must not be NULL");
    switch (trajectory->traj.status()) {
    case riccati::TrajStatus::Completed: *out = RCC_TRAJ_COMPLETED; break;
    case riccati::TrajStatus::Singular: *out = RCC_TRAJ_SINGULAR; break;
    case riccati::TrajStatus::BlowUp: *out = RCC_TRAJ_BLOWUP; break;
    case riccati::TrajStatus::MaxSteps: *out = RCC_TRAJ_MAXSTEPS; break;
    }
    return RCC_OK;
}

rcc_status rcc_trajectory_event_time(const rcc_trajectory* trajectory,
                                     double* out) {
    if (!trajectory || !out)
        return fail_invalid("arguments must not be NULL");
    *out = trajectory->traj.event_time();
    return RCC_OK;
}

rcc_status rcc_trajectory_node(const rcc_trajectory* trajectory, size_t i,
                               double* t, double q[2], double v[2]) {
    if (!trajectory)
        return fail_invalid("trajectory must not be NULL");
    return guarded([&] {
        State s = trajectory->traj.state_at(i);
        if (t)
            *t = s.t;
        for (int a = 0; a < s.dim; ++a) {
            if (q)
                q[a] = s.q[static_cast<size_t>(a)];
            if (v)
                v[a] = s.v[static_cast<size_t>(a)];
        }
        return RCC_OK;
    });
}

rcc_status rcc_trajectory_eval(const rcc_trajectory* trajectory, double t,
                               double q[2], double v[2]) {
    if (!trajectory)
        return fail_invalid("trajectory must not be NULL");
    return guarded([&] {
        State s = trajectory->traj.eval(t);
        for (int a = 0; a < s.dim; ++a) {
            if (q)
                q[a] = s.q[static_cast<size_t>(a)];
            if (v)
                v[a] = s.v[static_cast<size_t>(a)];
        }
        return RCC_OK;
    });
}

rcc_status rcc_drift(const rcc_trajectory* trajectory, const char* integral,
                     int n1, int n2, double tolerance, double* drift, int* pass,
                     int* has_gaps) {
    if (!trajectory || !integral)
        return fail_invalid("trajectory and integral must not be NULL");
    return guarded([&] {
        using K = riccati::conserved::IntegralId::Kind;
        const std::pair<const char*, K> table[] = {
            {"EnergyEL", K::EnergyEL},  {"EnergyI1", K::EnergyI1},
            {"EnergyI2", K::EnergyI2},  {"Tx1", K::Tx1},
            {"Tx2", K::Tx2},            {"Ty1", K::Ty1},
            {"Ty2", K::Ty2},            {"Jx1t", K::Jx1t},
            {"Jx2t", K::Jx2t},          {"Jy1t", K::Jy1t},
            {"Jy2t", K::Jy2t},          {"I3Dissipative", K::I3Dissipative},
            {"I4Dissipative", K::I4Dissipative}, {"Ixw", K::Ixw},
            {"X", K::X},                {"W", K::W},
            {"K1", K::K1},              {"K2", K::K2},
            {"Kij", K::Kij},            {"I3Osc", K::I3Osc},
            {"I4Osc", K::I4Osc},
        };
        const K* kind = nullptr;
        for (const auto& [name, k] : table)
            if (std::strcmp(name, integral) == 0)
                kind = &k;
        if (!kind)
            riccati::fail(ErrorCode::InvalidArgument,
                          std::string("unknown integral name: ") + integral);
        auto rep = riccati::conserved::drift_report(
            riccati::conserved::IntegralId::resonant(*kind, n1, n2),
            trajectory->traj, tolerance);
        if (drift)
            *drift = rep.drift;
        if (pass)
            *pass = rep.pass ? 1 : 0;
        if (has_gaps)
            *has_gaps = rep.has_gaps ? 1 : 0;
        return RCC_OK;
    });
}

rcc_status rcc_momentum(const rcc_system* system, double t, double x, double v,
                        double* out) {
    if (!system || !out)
        return fail_invalid("arguments must not be NULL");
    return guarded([&] {
        *out = riccati::hamiltonian::momentum(system->spec,
                                              State::one_dof(t, x, v));
        return RCC_OK;
    });
}

rcc_status rcc_hamiltonian(const rcc_system* system, double t, double x,
                           double v, double* out) {
    if (!system || !out)
        return fail_invalid("arguments must not be NULL");
    return guarded([&] {
        *out = riccati::hamiltonian::hamiltonian_at(system->spec,
                                                    State::one_dof(t, x, v));
        return RCC_OK;
    });
}

rcc_status rcc_canonical_qp(double k, double w, double x, double p,
                            double* q_out, double* p_out) {
    return guarded([&] {
        auto [Q, P] = riccati::hamiltonian::canonical_qp(k, w, x, p);
        if (q_out)
            *q_out = Q;
        if (p_out)
            *p_out = P;
        return RCC_OK;
    });
}

rcc_status rcc_poisson_bracket(double k, double w, double x, double p,
                               double fd_step, double* out) {
    if (!out)
        return fail_invalid("out must not be NULL");
    return guarded([&] {
        *out = riccati::hamiltonian::poisson_bracket_check(
            k, w, x, p, fd_step > 0.0 ? fd_step : 1e-6);
        return RCC_OK;
    });
}

void rcc_verify_options_init(rcc_verify_options* options) {
    if (!options)
        return;
    riccati::verify::Options defaults;
    options->seed = defaults.seed;
    options->n1 = defaults.n1;
    options->n2 = defaults.n2;
}

rcc_status rcc_verify_run(const char* suite, const rcc_verify_options* options,
                          char** json_out, int* all_pass) {
    if (!suite)
        return fail_invalid("suite must not be NULL");
    return guarded([&] {
        riccati::verify::Options opts;
        if (options) {
            opts.seed = options->seed;
            opts.n1 = options->n1;
            opts.n2 = options->n2;
        }
        auto report = riccati::verify::run_suite(suite, opts);
        if (json_out) {
            std::string json = riccati::verify::to_json(report);
            char* buf = static_cast<char*>(std::malloc(json.size() + 1));
            if (!buf)
                riccati::fail(ErrorCode::InvalidArgument, "allocation failed");
            std::memcpy(buf, json.c_str(), json.size() + 1);
            *json_out = buf;
        }
        if (all_pass)
            *all_pass = report.all_pass ? 1 : 0;
        return RCC_OK;
    });
}

void rcc_string_free(char* str) { std::free(str); }

} // extern "C"
