/* Riccati dynamics library: C interface.
 *
 * Simulation and verification toolkit for one- and two-degree-of-freedom
 * systems whose equations of motion carry quadratic dissipation-like terms
 * generated by inverse-denominator Lagrangians, together with their
 * conserved quantities, closed-form solutions, and Hamiltonian pictures.
 *
 * Conventions:
 *  - Every function returns an rcc_status; outputs go through pointers.
 *  - Two-degree systems pass positions as q[2] and velocities as v[2];
 *    one-degree systems read only the first entry.
 *  - Handles are created and destroyed by this library; never free them
 *    with anything but the matching rcc_*_free call.
 *  - On failure the outputs are untouched and rcc_last_error() returns a
 *    human-readable message for the calling thread.
 */
#ifndef RICCATI_RICCATI_H
#define RICCATI_RICCATI_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__) || defined(__clang__)
#define RICCATI_API __attribute__((visibility("default")))
#else
#define RICCATI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcc_status {
    RCC_OK = 0,
    RCC_EINVAL = 1,
    RCC_ESINGULAR_DENOMINATOR = 2,
    RCC_ESINGULAR_TIME = 3,
    RCC_EOUTSIDE_REGION = 4,
    RCC_EZERO_ENERGY = 5,
    RCC_ESINGULAR_INTEGRAND = 6,
    RCC_EZERO_CROSSING = 7,
    RCC_EPOSITIVE_MOMENTUM = 8,
    RCC_EROOT_DOMAIN = 9,
    RCC_EWRONG_BRANCH = 10,
    RCC_EOUT_OF_RANGE = 11,
    RCC_ENONFINITE = 12,
    RCC_EINTERNAL = 13
} rcc_status;

typedef enum rcc_traj_status {
    RCC_TRAJ_COMPLETED = 0,
    RCC_TRAJ_SINGULAR = 1,
    RCC_TRAJ_BLOWUP = 2,
    RCC_TRAJ_MAXSTEPS = 3
} rcc_traj_status;

typedef struct rcc_system rcc_system;
typedef struct rcc_trajectory rcc_trajectory;

/* Name of a status code; never NULL. */
RICCATI_API const char* rcc_status_name(rcc_status status);
RICCATI_API const char* rcc_traj_status_name(rcc_traj_status status);

/* Message of the calling thread's most recent failure ("" when none). */
RICCATI_API const char* rcc_last_error(void);

/* ------------------------------------------------------------- systems -- */

/* x'' + 3 k x x' + k^2 x^3 = 0, the Lagrangian being 1/(x' + k x^2). */
RICCATI_API rcc_status rcc_system_cubic(double k, rcc_system** out);

/* x'' + 3 k x x' + k^2 x^3 + w^2 x = 0 (nonlinear oscillator family). */
RICCATI_API rcc_status rcc_system_oscillator(double k, double w,
                                             rcc_system** out);

/* General quadratic potential U(x,t) with coefficients c[i] + dc[i] t:
 * x'' + (3/2) k U_x x' + (1/2) k^2 U U_x + k U_t = 0.
 * dc may be NULL for autonomous coefficients. */
RICCATI_API rcc_status rcc_system_general_u(double k, const double c[3],
                                            const double dc[3],
                                            rcc_system** out);

/* Uncoupled product of two one-degree systems (x-axis, y-axis). */
RICCATI_API rcc_status rcc_system_product(const rcc_system* x_axis,
                                          const rcc_system* y_axis,
                                          rcc_system** out);

RICCATI_API void rcc_system_free(rcc_system* system);
RICCATI_API rcc_status rcc_system_dim(const rcc_system* system, int* out);

/* --------------------------------------------------------------- model -- */

/* Acceleration per axis; out needs room for the system dimension. */
RICCATI_API rcc_status rcc_force(const rcc_system* system, double t,
                                 const double q[2], const double v[2],
                                 double out[2]);

/* First-order reduction d/dt (q, v); out order is q0..q(d-1), v0..v(d-1). */
RICCATI_API rcc_status rcc_rhs(const rcc_system* system, double t,
                               const double q[2], const double v[2],
                               double out[4]);

/* Lagrangian value of a one-degree system. */
RICCATI_API rcc_status rcc_lagrangian(const rcc_system* system, double t,
                                      double x, double v, double* out);

/* Alternative Lagrangian sqrt(2v + kU) of a general/cubic system. */
RICCATI_API rcc_status rcc_alt_lagrangian(const rcc_system* system, double t,
                                          double x, double v, double* out);

/* Coefficient map from U(x,t) = (c0 + dc0 t) + ... to the scalar equation
 * y'' + (b0 + b1 y) y' + a0 + a1 y + a2 y^2 + a3 y^3 = 0 (k = 1 scale).
 * out = {a0, a1, a2, a3, b0, b1}; dc may be NULL. */
RICCATI_API rcc_status rcc_riccati_coefficients(const double c[3],
                                                const double dc[3],
                                                double out[6]);

/* b0 through the a2/sqrt(a3) - a3'/(2 a3) convention (needs c2 != 0). */
RICCATI_API rcc_status rcc_riccati_b0_alternative(const double c[3],
                                                  const double dc[3],
                                                  double* out);

/* Euler-Lagrange residual d/dt(dL/dv) - dL/dx at one state, all
 * derivatives by finite differences; `lagrangian` is called as
 * lagrangian(x, v, user). Pass fd_step <= 0 for the default 1e-5. */
typedef double (*rcc_lagrangian_fn)(double x, double v, void* user);
RICCATI_API rcc_status rcc_euler_lagrange_residual(rcc_lagrangian_fn lagrangian,
                                                   void* user, double x,
                                                   double v, double accel,
                                                   double fd_step, double* out);

/* ----------------------------------------------------------- conserved -- */

/* Lagrangian energy (one-degree system). */
RICCATI_API rcc_status rcc_energy(const rcc_system* system, double t, double x,
                                  double v, double* out);

/* Componentwise energies of a product system; total = i1 + i2. */
RICCATI_API rcc_status rcc_energy_components(const rcc_system* system, double t,
                                             const double q[2],
                                             const double v[2], double* total,
                                             double* i1, double* i2);

/* T1 = 1/(v + k x^2), T2 = x/(v + k x^2). */
RICCATI_API rcc_status rcc_t_generators(double k, double x, double v,
                                        double* t1, double* t2);

/* J1 = T2 - t, J2 = T1 - k t T2 + k t^2/2. */
RICCATI_API rcc_status rcc_j_integrals(double k, double x, double v, double t,
                                       double* j1, double* j2);

/* I3 = T_x2 - T_y2, I4 = k2 T_x1 + k1 T_y1 - k1 k2 T_x2 T_y2. */
RICCATI_API rcc_status rcc_i3_i4_dissipative(double k1, double k2,
                                             const double q[2],
                                             const double v[2], double* i3,
                                             double* i4);

/* X = x/(k v + k^2 x^2 + w^2), W = (v + k x^2)/(k v + k^2 x^2 + w^2). */
RICCATI_API rcc_status rcc_xw_pair(double k, double w, double x, double v,
                                   double* x_out, double* w_out);

/* I_XW = W^2 + w^2 X^2. */
RICCATI_API rcc_status rcc_ixw(double k, double w, double x, double v,
                               double* out);

/* K_j = W_j + i n_j w0 X_j; complex numbers as {re, im}. */
RICCATI_API rcc_status rcc_k_functions(double k1, double k2, double w0, int n1,
                                       int n2, const double q[2],
                                       const double v[2], double k1_out[2],
                                       double k2_out[2]);

/* K_ij = K1^{n2} (K2*)^{n1}; Re is I4, Im carries I3. */
RICCATI_API rcc_status rcc_kij_constant(const double k1[2], const double k2[2],
                                        int n1, int n2, double out[2]);

/* ------------------------------------------------------------ analytic -- */

/* Cubic closed form x = 2t/(k t^2 - E) and its derivative. */
RICCATI_API rcc_status rcc_cubic_solution(double k, double energy, double t,
                                          double* x, double* v);

/* Inversion t = (1 +- sqrt(1 + k E x^2))/(k x); plus_branch selects +. */
RICCATI_API rcc_status rcc_cubic_time_of_position(double k, double energy,
                                                  double x, int plus_branch,
                                                  double* t);

/* Oscillator closed form (regular for 0 < E < 1/k^2). */
RICCATI_API rcc_status rcc_oscillator_solution(double k, double w,
                                               double energy, double phi,
                                               double t, double* x, double* v);

/* Both velocity branches on the energy level set at position x. */
RICCATI_API rcc_status rcc_velocity_branches(const rcc_system* system, double x,
                                             double energy, double* v_plus,
                                             double* v_minus);

/* Travel time from x0 to x1 along one branch, by adaptive quadrature.
 * Pass rel_tol <= 0 for the default 1e-10. */
RICCATI_API rcc_status rcc_quadrature_time(const rcc_system* system,
                                           double energy, double x0, double x1,
                                           int plus_branch, double rel_tol,
                                           double* out);

/* Residuals of w = u'/u against w'' + 3 w w' + w^3 = q with u''' = q u
 * integrated numerically; q is called as q(t, user). Windows are split
 * around zeros of u. Any output pointer may be NULL. */
typedef double (*rcc_time_fn)(double t, void* user);
RICCATI_API rcc_status rcc_ince_linearization(rcc_time_fn q, void* user,
                                              const double u0[3], double t0,
                                              double t1, double* max_cascade,
                                              double* max_fd, int* n_windows,
                                              int* n_zeros);

/* ----------------------------------------------------------- integrate -- */

typedef struct rcc_integrator_config {
    double rtol;          /* relative tolerance (default 1e-10) */
    double atol;          /* absolute tolerance (default 1e-12) */
    double h_init;        /* 0 selects 1e-4 * |t_end - t0| */
    double h_max;         /* 0 selects |t_end - t0| */
    long max_steps;       /* attempted steps before MaxSteps (default 200000) */
    double blowup_bound;  /* |component| beyond this escapes (default 1e8) */
    double denom_epsilon; /* denominator singularity threshold (default 1e-12) */
} rcc_integrator_config;

RICCATI_API void rcc_integrator_config_init(rcc_integrator_config* config);

/* March from (t0, q, v) to t_end (either direction). The trajectory handle
 * is produced even when the run ends Singular/BlowUp/MaxSteps. */
RICCATI_API rcc_status rcc_integrate(const rcc_system* system, double t0,
                                     const double q[2], const double v[2],
                                     double t_end,
                                     const rcc_integrator_config* config,
                                     rcc_trajectory** out);

RICCATI_API void rcc_trajectory_free(rcc_trajectory* trajectory);
RICCATI_API rcc_status rcc_trajectory_size(const rcc_trajectory* trajectory,
                                           size_t* out);
RICCATI_API rcc_status rcc_trajectory_status(const rcc_trajectory* trajectory,
                                             rcc_traj_status* out);

/* Estimated event time for Singular/BlowUp runs; NaN otherwise. */
RICCATI_API rcc_status rcc_trajectory_event_time(const rcc_trajectory* trajectory,
                                                 double* out);

/* Stored node i (march order). Any output pointer may be NULL. */
RICCATI_API rcc_status rcc_trajectory_node(const rcc_trajectory* trajectory,
                                           size_t i, double* t, double q[2],
                                           double v[2]);

/* Dense evaluation anywhere inside the covered span. */
RICCATI_API rcc_status rcc_trajectory_eval(const rcc_trajectory* trajectory,
                                           double t, double q[2], double v[2]);

/* Drift of a named integral over the trajectory nodes. Names follow the
 * verification reports: EnergyEL, EnergyI1, EnergyI2, Tx1, Tx2, Ty1, Ty2,
 * Jx1t, Jx2t, Jy1t, Jy2t, I3Dissipative, I4Dissipative, Ixw, X, W,
 * I3Osc, I4Osc (the last two honor n1, n2). Outputs may be NULL. */
RICCATI_API rcc_status rcc_drift(const rcc_trajectory* trajectory,
                                 const char* integral, int n1, int n2,
                                 double tolerance, double* drift, int* pass,
                                 int* has_gaps);

/* --------------------------------------------------------- hamiltonian -- */

/* Legendre momentum: -1/(v + kU)^2, or -w^2/(k (kv + k^2x^2 + w^2)^2) for
 * oscillator systems. */
RICCATI_API rcc_status rcc_momentum(const rcc_system* system, double t,
                                    double x, double v, double* out);

/* Hamiltonian through the Legendre map (D > 0 branch only). */
RICCATI_API rcc_status rcc_hamiltonian(const rcc_system* system, double t,
                                       double x, double v, double* out);

/* Canonical oscillator coordinates Q = (sqrt2/w) x sqrt(-kp),
 * P = (sqrt2/k)(1 - w sqrt(-kp)). */
RICCATI_API rcc_status rcc_canonical_qp(double k, double w, double x, double p,
                                        double* q_out, double* p_out);

/* {Q, P} by central differences (exact value 1). fd_step <= 0 -> 1e-6. */
RICCATI_API rcc_status rcc_poisson_bracket(double k, double w, double x,
                                           double p, double fd_step,
                                           double* out);

/* ---------------------------------------------------------- verification -- */

typedef struct rcc_verify_options {
    uint64_t seed; /* RNG seed for random sweeps */
    int n1, n2;    /* resonance numbers for superint-oscillator */
} rcc_verify_options;

RICCATI_API void rcc_verify_options_init(rcc_verify_options* options);

/* Run a named verification suite: energy, generators, superint-dissipative,
 * superint-oscillator, hamiltonian, linearization, alt-lagrangian.
 * On success *json_out is a malloc'd JSON report (free with
 * rcc_string_free) and *all_pass is 1 iff every check passed. */
RICCATI_API rcc_status rcc_verify_run(const char* suite,
                                      const rcc_verify_options* options,
                                      char** json_out, int* all_pass);

RICCATI_API void rcc_string_free(char* str);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RICCATI_RICCATI_H */
