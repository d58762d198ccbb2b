#include "verify.hpp"

#include "analytic.hpp"
#include "conserved.hpp"
#include "fd.hpp"
#include "hamiltonian.hpp"
#include "ince.hpp"
#include "integrate.hpp"
#include "model.hpp"
#include "rk.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

namespace riccati::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFailSentinel = 1e300; // a check value that can never pass

void add_check(Report& r, const std::string& name, double value, double tol) {
    r.checks.push_back({name, value, tol, std::abs(value) <= tol});
}

/// Lower-bound check: the measured value must stay at or above the floor.
void add_floor_check(Report& r, const std::string& name, double value,
                     double floor) {
    r.checks.push_back({name, value, floor, value >= floor});
}

double drift_value(const conserved::ConservedReport& rep) {
    return rep.has_gaps ? kFailSentinel : rep.drift;
}

using model::AxisSpec;
using model::QuadraticU;
using model::SystemSpec;

/// Start state on the minus velocity branch at position x0.
State branch_start(const AxisSpec& axis, double x0, double energy) {
    auto [vp, vm] = analytic::velocity_branches(axis, x0, energy);
    (void)vp;
    return State::one_dof(0.0, x0, vm);
}

double osc_v0(double k, double w, double energy) {
    return analytic::oscillator_solution(k, w, energy, 0.0, 0.0).v;
}

// ---------------------------------------------------------------- energy --

struct EnergyCase {
    std::string name;
    SystemSpec spec;
    State start;
    double t_end;
};

std::vector<EnergyCase> energy_cases() {
    std::vector<EnergyCase> cases;
    auto cubic_case = [&](const char* name, double k, double E, double t_end) {
        cases.push_back({name, SystemSpec::cubic(k),
                         State::one_dof(0.0, 0.0, -2.0 / E), t_end});
    };
    cubic_case("cubic-k1-E-1.0", 1.0, -1.0, 6.0);
    cubic_case("cubic-k1-E-0.5", 1.0, -0.5, 6.0);
    cubic_case("cubic-k1-E-1.5", 1.0, -1.5, 6.0);
    cubic_case("cubic-k-1-E+1.0", -1.0, 1.0, 6.0);
    cubic_case("cubic-k2-E-3.0", 2.0, -3.0, 5.0);

    auto gen_case = [&](const char* name, double k, QuadraticU u, double E,
                        double x0, double t_end) {
        AxisSpec ax = AxisSpec::general_u(k, u);
        cases.push_back({name, SystemSpec::one_dof(ax), branch_start(ax, x0, E),
                         t_end});
    };
    gen_case("generalu-c0c2", 1.0, {1.0, 0.0, 1.0}, -0.5, 0.0, 4.0);
    gen_case("generalu-c1c2", 1.0, {0.0, 1.0, 1.0}, -0.5, 0.5, 4.0);
    gen_case("generalu-khalf", 0.5, {2.0, 0.0, 1.0}, -0.4, 0.0, 4.0);
    gen_case("generalu-k2-full", 2.0, {1.0, 1.0, 1.0}, -0.3, 0.0, 3.0);

    auto osc_case = [&](const char* name, double k, double w, double E,
                        double t_end) {
        cases.push_back({name, SystemSpec::oscillator(k, w),
                         State::one_dof(0.0, 0.0, osc_v0(k, w, E)), t_end});
    };
    osc_case("osc-k1-w1-E0.2", 1.0, 1.0, 0.2, 4.0 * kPi);
    osc_case("osc-k1-w1-E0.5", 1.0, 1.0, 0.5, 4.0 * kPi);
    osc_case("osc-k1-w1-E0.8", 1.0, 1.0, 0.8, 4.0 * kPi);
    osc_case("osc-khalf-w2-E1", 0.5, 2.0, 1.0, 2.0 * kPi);
    osc_case("osc-k-1-w1-E0.5", -1.0, 1.0, 0.5, 4.0 * kPi);
    osc_case("osc-k1-w3-E0.05", 1.0, 3.0, 0.05, 2.0 * kPi);

    cases.push_back({"2d-cubic-figure8",
                     SystemSpec::product(AxisSpec::cubic(1.0), AxisSpec::cubic(1.0)),
                     State::two_dof(0.0, 0.0, 2.0, 0.0, 0.4), 10.0});
    cases.push_back({"2d-cubic-k12",
                     SystemSpec::product(AxisSpec::cubic(1.0), AxisSpec::cubic(2.0)),
                     State::two_dof(0.0, 0.0, 2.0, 0.0, 1.0), 8.0});
    cases.push_back({"2d-osc-iso",
                     SystemSpec::product(AxisSpec::oscillator(1.0, 1.0),
                                         AxisSpec::oscillator(1.0, 1.0)),
                     State::two_dof(0.0, 0.0, osc_v0(1.0, 1.0, 0.2), 0.0,
                                    osc_v0(1.0, 1.0, 0.3)),
                     2.0 * kPi});
    cases.push_back({"2d-osc-12",
                     SystemSpec::product(AxisSpec::oscillator(1.0, 1.0),
                                         AxisSpec::oscillator(1.0, 2.0)),
                     State::two_dof(0.0, 0.0, osc_v0(1.0, 1.0, 0.2), 0.0,
                                    osc_v0(1.0, 2.0, 0.3)),
                     2.0 * kPi});
    cases.push_back({"2d-mixed",
                     SystemSpec::product(AxisSpec::cubic(1.0),
                                         AxisSpec::oscillator(1.0, 1.0)),
                     State::two_dof(0.0, 0.0, 2.0, 0.0, osc_v0(1.0, 1.0, 0.5)),
                     6.0});
    return cases;
}

Report suite_energy(const Options&) {
    Report report;
    report.suite = "energy";
    for (const auto& c : energy_cases()) {
        Trajectory traj = integrate(c.spec, c.start, c.t_end);
        double value = kFailSentinel;
        if (traj.status() == TrajStatus::Completed) {
            auto rep = conserved::drift_report(
                conserved::IntegralId::of(conserved::IntegralId::Kind::EnergyEL),
                traj, 1e-8);
            value = drift_value(rep);
        }
        add_check(report, "energy-drift-" + c.name, value, 1e-8);
    }
    return report;
}

// ------------------------------------------------------------ generators --

Report suite_generators(const Options&) {
    Report report;
    report.suite = "generators";

    struct Case {
        const char* name;
        double k;
        State start;
        double t_end;
    };
    const Case cases[] = {
        {"k1", 1.0, State::one_dof(0.0, 0.0, 2.0), 6.0},
        {"k2", 2.0, State::one_dof(0.0, 0.3, 1.0), 4.0},
    };

    for (const auto& c : cases) {
        SystemSpec spec = SystemSpec::cubic(c.k);
        IntegratorConfig cfg;
        cfg.h_max = 0.02; // keep dense output tight for the stacked stencils
        Trajectory traj = integrate(spec, c.start, c.t_end, cfg);
        std::string tag = std::string("-") + c.name;
        if (traj.status() != TrajStatus::Completed) {
            add_check(report, "generators-completed" + tag, kFailSentinel, 1.0);
            continue;
        }

        auto t1_of = [&](double t) {
            State s = traj.eval(t);
            return conserved::t_generators(c.k, s.q[0], s.v[0]).first;
        };
        auto t2_of = [&](double t) {
            State s = traj.eval(t);
            return conserved::t_generators(c.k, s.q[0], s.v[0]).second;
        };

        const double delta = 0.02;
        // T1 is exactly quadratic in t and T2 exactly linear, so the wider
        // step for the high-order stencils costs no truncation error while
        // dividing the dense-output noise by delta^2 resp. delta^3.
        const double delta_hi = 0.08;
        double worst_d1_t2 = 0.0, worst_d1_t1 = 0.0, worst_d2_t1 = 0.0,
               worst_d3_t1 = 0.0;
        const int probes = 25;
        for (int i = 0; i < probes; ++i) {
            double margin = 4.0 * delta_hi;
            double t = margin + (c.t_end - 2.0 * margin) * i / (probes - 1.0);
            worst_d1_t2 = std::max(worst_d1_t2,
                                   std::abs(fd::deriv1(t2_of, t, delta) - 1.0));
            worst_d1_t1 = std::max(
                worst_d1_t1,
                std::abs(fd::deriv1(t1_of, t, delta) - c.k * t2_of(t)));
            worst_d2_t1 = std::max(
                worst_d2_t1, std::abs(fd::deriv2(t1_of, t, delta_hi) - c.k));
            worst_d3_t1 = std::max(worst_d3_t1,
                                   std::abs(fd::deriv3(t1_of, t, delta_hi)));
        }
        add_check(report, "fd-dT2-minus-1" + tag, worst_d1_t2, 1e-6);
        add_check(report, "fd-dT1-minus-kT2" + tag, worst_d1_t1, 1e-6);
        add_check(report, "fd-d2T1-minus-k" + tag, worst_d2_t1, 1e-4);
        add_check(report, "fd-d3T1" + tag, worst_d3_t1, 1e-3);

        using K = conserved::IntegralId::Kind;
        add_check(report, "drift-Jx1t" + tag,
                  drift_value(conserved::drift_report(
                      conserved::IntegralId::of(K::Jx1t), traj, 1e-7)),
                  1e-7);
        add_check(report, "drift-Jx2t" + tag,
                  drift_value(conserved::drift_report(
                      conserved::IntegralId::of(K::Jx2t), traj, 1e-7)),
                  1e-7);
    }
    return report;
}

// -------------------------------------------------- superint-dissipative --

Report suite_superint_dissipative(const Options&) {
    Report report;
    report.suite = "superint-dissipative";

    SystemSpec spec =
        SystemSpec::product(AxisSpec::cubic(1.0), AxisSpec::cubic(1.0));
    State start = State::two_dof(0.0, 0.0, 2.0, 0.0, 0.4); // E1=-1, E2=-5
    IntegratorConfig cfg;
    cfg.rtol = 1e-12;
    cfg.atol = 1e-14;

    Trajectory fwd = integrate(spec, start, 50.0, cfg);
    Trajectory bwd = integrate(spec, start, -50.0, cfg);
    if (fwd.status() != TrajStatus::Completed ||
        bwd.status() != TrajStatus::Completed) {
        add_check(report, "figure8-completed", kFailSentinel, 1.0);
        report.all_pass = false;
        return report;
    }

    using K = conserved::IntegralId::Kind;
    for (auto kind : {K::I3Dissipative, K::I4Dissipative}) {
        auto idf = conserved::IntegralId::of(kind);
        double drift = std::max(
            drift_value(conserved::drift_report(idf, fwd, 1e-7)),
            drift_value(conserved::drift_report(idf, bwd, 1e-7)));
        add_check(report,
                  std::string("drift-") + conserved::integral_kind_name(kind),
                  drift, 1e-7);
    }

    State end_f = fwd.state_at(fwd.size() - 1);
    State end_b = bwd.state_at(bwd.size() - 1);
    double worst_pos = std::max(
        std::max(std::abs(end_f.q[0]), std::abs(end_f.q[1])),
        std::max(std::abs(end_b.q[0]), std::abs(end_b.q[1])));
    add_check(report, "window-end-position", worst_pos, 0.05);
    return report;
}

// --------------------------------------------------- superint-oscillator --

Report suite_superint_oscillator(const Options& options) {
    Report report;
    report.suite = "superint-oscillator";
    int n1 = options.n1, n2 = options.n2;
    if (n1 < 1 || n2 < 1)
        fail(ErrorCode::InvalidArgument, "resonance numbers must be positive");

    const double w0 = 1.0, k1 = 1.0, k2 = 1.0;
    SystemSpec spec = SystemSpec::product(AxisSpec::oscillator(k1, n1 * w0),
                                          AxisSpec::oscillator(k2, n2 * w0));
    State start = State::two_dof(0.0, 0.0, osc_v0(k1, n1 * w0, 0.2), 0.0,
                                 osc_v0(k2, n2 * w0, 0.3));
    Trajectory traj = integrate(spec, start, 2.0 * kPi / w0);
    if (traj.status() != TrajStatus::Completed) {
        add_check(report, "resonant-completed", kFailSentinel, 1.0);
        report.all_pass = false;
        return report;
    }

    using K = conserved::IntegralId::Kind;
    auto i3 = conserved::IntegralId::resonant(K::I3Osc, n1, n2);
    auto i4 = conserved::IntegralId::resonant(K::I4Osc, n1, n2);
    add_check(report, "drift-Im-Kij",
              drift_value(conserved::drift_report(i3, traj, 1e-7)), 1e-7);
    add_check(report, "drift-Re-Kij",
              drift_value(conserved::drift_report(i4, traj, 1e-7)), 1e-7);

    double drift_k1 = 0.0, drift_k2 = 0.0;
    double ref1 = 0.0, ref2 = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        State s = traj.state_at(i);
        auto [kf1, kf2] = conserved::k_functions(k1, k2, w0, n1, n2, s);
        double m1 = std::norm(kf1), m2 = std::norm(kf2);
        if (i == 0) {
            ref1 = m1;
            ref2 = m2;
        }
        drift_k1 = std::max(drift_k1, std::abs(m1 - ref1));
        drift_k2 = std::max(drift_k2, std::abs(m2 - ref2));
    }
    add_check(report, "drift-mod2-K1", drift_k1, 1e-7);
    add_check(report, "drift-mod2-K2", drift_k2, 1e-7);

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> pos(-0.5, 0.5);
    std::uniform_real_distribution<double> vel(0.2, 1.0);

    if (n1 == 1 && n2 == 1) {
        double worst_i3 = 0.0, worst_i4 = 0.0;
        for (int i = 0; i < 100; ++i) {
            State s = State::two_dof(0.0, pos(rng), vel(rng), pos(rng), vel(rng));
            auto [kf1, kf2] = conserved::k_functions(k1, k2, w0, 1, 1, s);
            auto kij = conserved::kij_constant(kf1, kf2, 1, 1);
            worst_i4 = std::max(
                worst_i4,
                std::abs(kij.real() - conserved::i4_isotropic_printed(k1, k2, w0, s)));
            worst_i3 = std::max(
                worst_i3,
                std::abs(kij.imag() -
                         w0 * conserved::i3_isotropic_printed(k1, k2, w0, s)));
        }
        add_check(report, "printed-I3-agreement", worst_i3, 1e-12);
        add_check(report, "printed-I4-agreement", worst_i4, 1e-12);

        double worst_k0_i3 = 0.0, worst_k0_i4 = 0.0, worst_w0_i3 = 0.0,
               worst_w0_i4 = 0.0;
        for (int i = 0; i < 20; ++i) {
            State s = State::two_dof(0.0, pos(rng), vel(rng), pos(rng), vel(rng));
            auto lk = conserved::limit_check_k_to_zero(1e-6, 1.0, s);
            worst_k0_i3 = std::max(worst_k0_i3, lk.deviation_i3);
            worst_k0_i4 = std::max(worst_k0_i4, lk.deviation_i4);
            auto lw = conserved::limit_check_w_to_zero(1e-6, 1.0, 1.0, s);
            worst_w0_i3 = std::max(worst_w0_i3, lw.deviation_i3);
            worst_w0_i4 = std::max(worst_w0_i4, lw.deviation_i4);
        }
        add_check(report, "limit-k0-I3", worst_k0_i3, 1e-3);
        add_check(report, "limit-k0-I4", worst_k0_i4, 1e-3);
        add_check(report, "limit-w0-I3", worst_w0_i3, 1e-3);
        add_check(report, "limit-w0-I4", worst_w0_i4, 1e-3);
    }

    if (n1 == 1 && n2 == 2) {
        double worst_i3 = 0.0, worst_i4 = 0.0;
        for (int i = 0; i < 100; ++i) {
            State s = State::two_dof(0.0, pos(rng), vel(rng), pos(rng), vel(rng));
            auto [kf1, kf2] = conserved::k_functions(k1, k2, w0, 1, 2, s);
            auto kij = conserved::kij_constant(kf1, kf2, 1, 2);
            worst_i4 = std::max(
                worst_i4, std::abs(kij.real() - conserved::i4_anisotropic12_printed(
                                                    k1, k2, w0, s)));
            worst_i3 = std::max(
                worst_i3,
                std::abs(kij.imag() - 2.0 * w0 * conserved::i3_anisotropic12_printed(
                                                     k1, k2, w0, s)));
        }
        add_check(report, "printed-I3-agreement-12", worst_i3, 1e-12);
        add_check(report, "printed-I4-agreement-12", worst_i4, 1e-12);
    }
    return report;
}

// ------------------------------------------------------------ hamiltonian --

/// March a planar Hamiltonian flow to t_target with the embedded pair.
std::array<double, 2> flow_to(const std::function<void(double, const ode::Vec<2>&,
                                                       ode::Vec<2>&)>& rhs,
                              std::array<double, 2> y0, double t_target) {
    ode::Vec<2> y{y0[0], y0[1]};
    ode::Vec<2> f{};
    rhs(0.0, y, f);
    double t = 0.0;
    double h = 1e-4 * std::max(1.0, std::abs(t_target));
    ode::StepController ctl;
    while (t < t_target) {
        if (t + 1.01 * h >= t_target)
            h = t_target - t;
        auto st = ode::dopri5_step<2>(rhs, t, y, f, h, 1e-13, 1e-11);
        if (!std::isfinite(st.err)) {
            h *= 0.5;
            continue;
        }
        if (st.err > 1.0) {
            h = ctl.next_h_rejected(h, st.err);
            continue;
        }
        t = (h == t_target - t) ? t_target : t + h;
        y = st.y;
        f = st.f_end;
        h = ctl.next_h_accepted(h, st.err);
    }
    return {y[0], y[1]};
}

Report suite_hamiltonian(const Options& options) {
    Report report;
    report.suite = "hamiltonian";
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> pos(-1.0, 1.0);
    std::uniform_real_distribution<double> vel_pos(0.3, 2.0);
    std::uniform_real_distribution<double> vel_osc(0.0, 1.0);
    std::uniform_real_distribution<double> kdist(0.5, 1.5);
    std::uniform_real_distribution<double> wdist(0.5, 2.0);

    QuadraticU u{1.0, 0.0, 1.0};
    SystemSpec cubic = SystemSpec::cubic(1.0);
    SystemSpec genu = SystemSpec::general_u(1.0, u);

    double worst_energy = 0.0;
    for (int i = 0; i < 200; ++i) {
        const SystemSpec& spec = (i % 2 == 0) ? cubic : genu;
        State s = State::one_dof(0.0, pos(rng), vel_pos(rng));
        double h = hamiltonian::hamiltonian_at(spec, s);
        double e = conserved::energy(spec, s);
        worst_energy = std::max(worst_energy, std::abs(h - e));
    }
    add_check(report, "legendre-energy-identity", worst_energy, 1e-12);

    double worst_ixw = 0.0, worst_qp = 0.0, worst_bracket = 0.0;
    for (int i = 0; i < 200; ++i) {
        double k = kdist(rng), w = wdist(rng);
        State s = State::one_dof(0.0, pos(rng), vel_osc(rng));
        SystemSpec spec = SystemSpec::oscillator(k, w);
        double h = hamiltonian::hamiltonian_at(spec, s);
        double ix = conserved::ixw(k, w, s.q[0], s.v[0]);
        worst_ixw = std::max(worst_ixw, std::abs(h - ix));

        double p = hamiltonian::momentum(spec, s);
        auto [Q, P] = hamiltonian::canonical_qp(k, w, s.q[0], p);
        double hval = hamiltonian::hamiltonian_osc(k, w, s.q[0], p);
        worst_qp = std::max(worst_qp,
                            std::abs(0.5 * (P * P + w * w * Q * Q) - hval));
        if (i < 100)
            worst_bracket = std::max(
                worst_bracket,
                std::abs(hamiltonian::poisson_bracket_check(k, w, s.q[0], p) - 1.0));
    }
    add_check(report, "legendre-ixw-identity", worst_ixw, 1e-12);
    add_check(report, "canonical-energy-identity", worst_qp, 1e-12);
    add_check(report, "poisson-bracket", worst_bracket, 1e-6);

    // Hamilton's equations reproduce the Lagrangian x(t) over one period.
    {
        const double k = 1.0, w = 1.0;
        SystemSpec spec = SystemSpec::oscillator(k, w);
        State s0 = State::one_dof(0.0, 0.0, 1.0);
        IntegratorConfig cfg;
        cfg.rtol = 1e-11;
        cfg.atol = 1e-13;
        Trajectory lag = integrate(spec, s0, 2.0 * kPi, cfg);
        double p0 = hamiltonian::momentum(spec, s0);
        auto rhs = [k, w](double, const ode::Vec<2>& y, ode::Vec<2>& dy) {
            auto [dx, dp] = hamiltonian::oscillator_flow_rhs(k, w, y[0], y[1]);
            dy[0] = dx;
            dy[1] = dp;
        };
        double worst_track = kFailSentinel;
        if (lag.status() == TrajStatus::Completed) {
            worst_track = 0.0;
            for (int i = 1; i <= 16; ++i) {
                double t = 2.0 * kPi * i / 16.0;
                auto ham = flow_to(rhs, {s0.q[0], p0}, t);
                State sl = lag.eval(t);
                worst_track = std::max(worst_track, std::abs(ham[0] - sl.q[0]));
            }
        }
        add_check(report, "hamilton-flow-tracking", worst_track, 1e-6);
    }
    return report;
}

// ---------------------------------------------------------- linearization --

Report suite_linearization(const Options&) {
    Report report;
    report.suite = "linearization";

    auto run = [&](const char* tag, const std::function<double(double)>& q,
                   std::array<double, 3> u0, double cascade_tol, double fd_tol) {
        auto rep = ince::ince_linearization_oracle(q, u0, 0.0, 2.0);
        add_check(report, std::string("cascade-") + tag, rep.max_cascade,
                  cascade_tol);
        add_check(report, std::string("fd-") + tag, rep.max_fd, fd_tol);
    };
    run("q0", [](double) { return 0.0; }, {1.0, 0.0, 0.0}, 1e-12, 1e-12);
    run("q1", [](double) { return 1.0; }, {1.0, 1.0, 1.0}, 1e-9, 1e-6);
    run("qcos", [](double t) { return std::cos(t); }, {1.0, 0.0, 0.0}, 1e-9,
        1e-6);
    return report;
}

// --------------------------------------------------------- alt-lagrangian --

Report suite_alt_lagrangian(const Options&) {
    Report report;
    report.suite = "alt-lagrangian";

    const double k = 1.0, E = -1.0;
    SystemSpec spec = SystemSpec::cubic(k);
    const AxisSpec& ax = spec.axis(0);

    double worst_main = 0.0, worst_alt = 0.0;
    for (int i = 0; i <= 8; ++i) {
        double t = 0.25 * i;
        auto pv = analytic::cubic_solution(k, E, t);
        State s = State::one_dof(t, pv.x, pv.v);
        double accel = model::force(spec, s)[0];
        auto lag_main = [&](double x, double v) { return ax.lagrangian(t, x, v); };
        auto lag_alt = [&](double x, double v) {
            return model::alt_lagrangian(ax, t, x, v);
        };
        worst_main = std::max(
            worst_main, std::abs(model::euler_lagrange_residual(lag_main, s, accel)));
        worst_alt = std::max(
            worst_alt, std::abs(model::euler_lagrange_residual(lag_alt, s, accel)));
    }
    add_check(report, "el-residual-main", worst_main, 1e-6);
    add_check(report, "el-residual-alt", worst_alt, 1e-6);

    // A wrong acceleration must be loudly rejected by the same residual.
    {
        State s = State::one_dof(0.0, 1.0, 0.0);
        auto lag_main = [&](double x, double v) { return ax.lagrangian(0.0, x, v); };
        double res = std::abs(model::euler_lagrange_residual(lag_main, s, 0.0));
        add_floor_check(report, "wrong-accel-floor", res, 1e-2);
    }
    return report;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"energy",      "generators",          "superint-dissipative",
            "superint-oscillator", "hamiltonian", "linearization",
            "alt-lagrangian"};
}

Report run_suite(const std::string& name, const Options& options) {
    Report report;
    if (name == "energy")
        report = suite_energy(options);
    else if (name == "generators")
        report = suite_generators(options);
    else if (name == "superint-dissipative")
        report = suite_superint_dissipative(options);
    else if (name == "superint-oscillator")
        report = suite_superint_oscillator(options);
    else if (name == "hamiltonian")
        report = suite_hamiltonian(options);
    else if (name == "linearization")
        report = suite_linearization(options);
    else if (name == "alt-lagrangian")
        report = suite_alt_lagrangian(options);
    else
        fail(ErrorCode::InvalidArgument, "unknown verification suite: " + name);

    report.all_pass = true;
    for (const auto& c : report.checks)
        report.all_pass = report.all_pass && c.pass;
    return report;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string to_json(const Report& report) {
    std::string out = "{\"suite\":\"" + json_escape(report.suite) + "\",\"checks\":[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const auto& c = report.checks[i];
        if (i)
            out += ",";
        out += "{\"name\":\"" + json_escape(c.name) + "\",\"value\":" +
               fmt_double(c.value) + ",\"tolerance\":" + fmt_double(c.tolerance) +
               ",\"pass\":" + (c.pass ? "true" : "false") + "}";
    }
    out += "],\"all_pass\":";
    out += report.all_pass ? "true" : "false";
    out += "}";
    return out;
}

} // namespace riccati::verify
