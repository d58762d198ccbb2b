#include "integrate.hpp"
#include "rk.hpp"

#include <algorithm>
#include <cmath>

namespace riccati {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

template <int N>
ode::Vec<N> pack_state(const State& s, int dim) {
    ode::Vec<N> y{};
    for (int i = 0; i < dim; ++i) {
        y[i] = s.q[i];
        y[dim + i] = s.v[i];
    }
    return y;
}

template <int N>
State unpack_state(double t, const ode::Vec<N>& y, int dim) {
    State s;
    s.t = t;
    s.dim = dim;
    for (int i = 0; i < dim; ++i) {
        s.q[i] = y[i];
        s.v[i] = y[dim + i];
    }
    return s;
}

template <int N>
void fill_node(TrajNode& n, double t, const ode::Vec<N>& y, const ode::Vec<N>& f) {
    n.t = t;
    n.y.fill(0.0);
    n.f.fill(0.0);
    for (int i = 0; i < N; ++i) {
        n.y[i] = y[i];
        n.f[i] = f[i];
    }
}

// Cubic Hermite interpolation of one component between two nodes.
double hermite(double t, double t0, double t1, double y0, double y1, double f0,
               double f1) {
    double h = t1 - t0;
    double th = (t - t0) / h;
    double u = 1.0 - th;
    return u * u * (1.0 + 2.0 * th) * y0 + th * th * (3.0 - 2.0 * th) * y1 +
           th * u * u * h * f0 - th * th * u * h * f1;
}

State eval_between(const TrajNode& a, const TrajNode& b, double t, int dim) {
    State s;
    s.t = t;
    s.dim = dim;
    for (int i = 0; i < dim; ++i) {
        s.q[i] = hermite(t, a.t, b.t, a.y[i], b.y[i], a.f[i], b.f[i]);
        s.v[i] = hermite(t, a.t, b.t, a.y[dim + i], b.y[dim + i], a.f[dim + i],
                         b.f[dim + i]);
    }
    return s;
}

// Continuous extension of the accepted step starting at node a.
State seg_eval(const TrajNode& a, const DenseSeg& g, double t, double h, int dim) {
    double th = (t - a.t) / h;
    double u = 1.0 - th;
    auto comp = [&](int j) {
        return a.y[j] + th * (g.r2[j] + u * (g.r3[j] + th * (g.r4[j] + u * g.r5[j])));
    };
    State s;
    s.t = t;
    s.dim = dim;
    for (int i = 0; i < dim; ++i) {
        s.q[i] = comp(i);
        s.v[i] = comp(dim + i);
    }
    return s;
}

template <int N>
DenseSeg make_seg(const ode::StepOut<N>& st) {
    DenseSeg g;
    for (int i = 0; i < N; ++i) {
        g.r2[i] = st.r2[i];
        g.r3[i] = st.r3[i];
        g.r4[i] = st.r4[i];
        g.r5[i] = st.r5[i];
    }
    return g;
}

/// Remaining time to a movable singularity, inferred from the local pole
/// model x ~ C (t* - t)^(-m): then v/x = m/(t*-t) and a/v = (m+1)/(t*-t),
/// so 1/(a/v - v/x) = t* - t exactly, for any pole order m.
double pole_time_estimate(double x, double v, double a) {
    if (x == 0.0 || v == 0.0)
        return kNan;
    double rate = a / v - v / x;
    if (!std::isfinite(rate) || rate == 0.0)
        return kNan;
    return 1.0 / rate;
}

template <int N>
struct March {
    const model::SystemSpec& spec;
    const IntegratorConfig& cfg;
    int dim;

    void rhs(double t, const ode::Vec<N>& y, ode::Vec<N>& dy) const {
        State s = unpack_state<N>(t, y, dim);
        auto r = model::rhs(spec, s);
        for (int i = 0; i < N; ++i)
            dy[i] = r[i];
    }

    double min_abs_denominator(double t, const ode::Vec<N>& y) const {
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < dim; ++i)
            m = std::min(m, std::abs(spec.axis(i).denominator(t, y[i], y[dim + i])));
        return m;
    }

    /// Classify an escaping solution from the freshest finite data.
    void classify_escape(Trajectory& out, double t, const ode::Vec<N>& y,
                         const ode::Vec<N>& f, double dir) const {
        int worst = 0;
        double worst_mag = -1.0;
        for (int i = 0; i < dim; ++i) {
            double mag = std::max(std::abs(y[i]), std::abs(y[dim + i]));
            if (mag > worst_mag) {
                worst_mag = mag;
                worst = i;
            }
        }
        double tau = pole_time_estimate(y[worst], y[dim + worst], f[dim + worst]);
        bool ahead = std::isfinite(tau) && tau * dir > 0.0;
        if (ahead && std::abs(tau) < 1e-3 * std::max(1.0, std::abs(t))) {
            out.finish(TrajStatus::Singular, t + tau);
        } else {
            out.finish(TrajStatus::BlowUp, t);
        }
    }

    /// Bisect the Hermite interpolant on [a, b] for the first time the
    /// smallest denominator drops to denom_epsilon; bracket to 1e-10 in t.
    double locate_denominator_event(const TrajNode& a, const TrajNode& b) const {
        auto small = [&](double t) {
            State s = eval_between(a, b, t, dim);
            double m = std::numeric_limits<double>::infinity();
            for (int i = 0; i < dim; ++i)
                m = std::min(m, std::abs(spec.axis(i).denominator(t, s.q[i], s.v[i])));
            return m <= cfg.denom_epsilon;
        };
        if (!small(b.t))
            return b.t; // shrinking but not yet through the threshold
        double lo = a.t, hi = b.t;
        double tol = 1e-10 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
        while (std::abs(hi - lo) > tol) {
            double mid = 0.5 * (lo + hi);
            if (small(mid))
                hi = mid;
            else
                lo = mid;
        }
        return hi;
    }

    Trajectory run(const State& start, double t_end) const {
        double t0 = start.t;
        if (!(t_end != t0))
            fail(ErrorCode::InvalidArgument, "integration span is empty");
        double span = std::abs(t_end - t0);
        double dir = t_end > t0 ? 1.0 : -1.0;
        double h_max = cfg.h_max > 0.0 ? cfg.h_max : span;
        double h = dir * std::min(h_max, cfg.h_init > 0.0 ? cfg.h_init : 1e-4 * span);

        Trajectory out(spec, dir > 0.0);
        ode::Vec<N> y = pack_state<N>(start, dim);
        ode::Vec<N> f{};
        rhs(t0, y, f);

        TrajNode node;
        fill_node<N>(node, t0, y, f);
        out.push(node);

        for (int i = 0; i < N; ++i)
            if (!std::isfinite(y[i]) || !std::isfinite(f[i]))
                fail(ErrorCode::InvalidArgument, "non-finite initial state");
        if (min_abs_denominator(t0, y) < cfg.denom_epsilon) {
            out.finish(TrajStatus::Singular, t0);
            return out;
        }

        ode::StepController ctl;
        double t = t0;
        long steps = 0;
        bool rejected = false;

        while (true) {
            if (++steps > cfg.max_steps) {
                out.finish(TrajStatus::MaxSteps, kNan);
                return out;
            }
            if (std::abs(h) > h_max)
                h = dir * h_max;
            bool last = false;
            if ((t + 1.01 * h - t_end) * dir >= 0.0) {
                h = t_end - t;
                last = true;
            }
            double h_floor = 16.0 * std::numeric_limits<double>::epsilon() *
                             std::max(1.0, std::abs(t));
            if (std::abs(h) < h_floor) {
                // Step width collapsed: the solution is escaping faster than
                // the mesh can follow. Classify from the last good state.
                classify_escape(out, t, y, f, dir);
                return out;
            }

            auto st = ode::dopri5_step<N>([this](double tt, const ode::Vec<N>& yy,
                                                 ode::Vec<N>& dd) { rhs(tt, yy, dd); },
                                          t, y, f, h, cfg.atol, cfg.rtol);
            if (!std::isfinite(st.err)) {
                h *= 0.5;
                rejected = true;
                continue;
            }
            if (st.err > 1.0) {
                h = ctl.next_h_rejected(h, st.err);
                rejected = true;
                continue;
            }

            double t_new = last ? t_end : t + h;
            double h_next = ctl.next_h_accepted(h, st.err);
            if (rejected)
                h_next = dir * std::min(std::abs(h_next), std::abs(h));
            rejected = false;

            bool escaped = false;
            for (int i = 0; i < N; ++i)
                if (std::abs(st.y[i]) > cfg.blowup_bound)
                    escaped = true;
            if (escaped) {
                TrajNode n;
                fill_node<N>(n, t_new, st.y, st.f_end);
                out.push(n);
                out.push_seg(make_seg<N>(st));
                classify_escape(out, t_new, st.y, st.f_end, dir);
                return out;
            }

            TrajNode n;
            fill_node<N>(n, t_new, st.y, st.f_end);
            out.push(n);
            out.push_seg(make_seg<N>(st));

            if (min_abs_denominator(t_new, st.y) < 1e3 * cfg.denom_epsilon) {
                const TrajNode& prev = out.node(out.size() - 2);
                double t_star = locate_denominator_event(prev, n);
                out.finish(TrajStatus::Singular, t_star);
                return out;
            }

            if (last) {
                out.finish(TrajStatus::Completed, kNan);
                return out;
            }
            t = t_new;
            y = st.y;
            f = st.f_end;
            h = h_next;
        }
    }
};

} // namespace

const char* traj_status_name(TrajStatus s) {
    switch (s) {
    case TrajStatus::Completed: return "Completed";
    case TrajStatus::Singular: return "Singular";
    case TrajStatus::BlowUp: return "BlowUp";
    case TrajStatus::MaxSteps: return "MaxSteps";
    }
    return "Unknown";
}

const TrajNode& Trajectory::node(std::size_t i) const {
    if (i >= nodes_.size())
        fail(ErrorCode::OutOfRange, "node index past the last stored node");
    return nodes_[i];
}

State Trajectory::state_at(std::size_t i) const {
    const TrajNode& n = node(i);
    State s;
    s.t = n.t;
    s.dim = dim();
    for (int a = 0; a < dim(); ++a) {
        s.q[a] = n.y[a];
        s.v[a] = n.y[dim() + a];
    }
    return s;
}

double Trajectory::t_begin() const { return node(0).t; }
double Trajectory::t_final() const { return node(nodes_.size() - 1).t; }

State Trajectory::eval(double t) const {
    if (nodes_.empty())
        fail(ErrorCode::OutOfRange, "trajectory holds no nodes");
    double dir = forward_ ? 1.0 : -1.0;
    double lo = t_begin(), hi = t_final();
    double slack = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    if ((t - lo) * dir < -slack || (t - hi) * dir > slack)
        fail(ErrorCode::OutOfRange, "time outside the integrated span");
    t = std::clamp(t, std::min(lo, hi), std::max(lo, hi));
    if (nodes_.size() == 1)
        return state_at(0);

    // Binary search for the step interval containing t (nodes are monotone
    // in the march direction).
    std::size_t left = 0, right = nodes_.size() - 1;
    while (right - left > 1) {
        std::size_t mid = left + (right - left) / 2;
        if ((nodes_[mid].t - t) * dir <= 0.0)
            left = mid;
        else
            right = mid;
    }
    if (t == nodes_[left].t)
        return state_at(left);
    if (t == nodes_[right].t)
        return state_at(right);
    if (segs_.size() == nodes_.size() - 1)
        return seg_eval(nodes_[left], segs_[left], t,
                        nodes_[right].t - nodes_[left].t, dim());
    // Hand-assembled trajectories carry no segment data; fall back to the
    // node-level Hermite interpolant.
    return eval_between(nodes_[left], nodes_[right], t, dim());
}

Trajectory integrate(const model::SystemSpec& spec, const State& start,
                     double t_end, const IntegratorConfig& config) {
    if (start.dim != spec.dim)
        fail(ErrorCode::InvalidArgument, "state arity does not match the system");
    if (spec.dim == 1) {
        March<2> m{spec, config, 1};
        return m.run(start, t_end);
    }
    March<4> m{spec, config, 2};
    return m.run(start, t_end);
}

namespace {

template <int N>
std::pair<State, double> step_once(const model::SystemSpec& spec,
                                   const State& state, double h,
                                   const IntegratorConfig& cfg) {
    March<N> m{spec, cfg, spec.dim};
    ode::Vec<N> y = pack_state<N>(state, spec.dim);
    ode::Vec<N> f{};
    m.rhs(state.t, y, f);
    auto st = ode::dopri5_step<N>([&m](double tt, const ode::Vec<N>& yy,
                                       ode::Vec<N>& dd) { m.rhs(tt, yy, dd); },
                                  state.t, y, f, h, cfg.atol, cfg.rtol);
    if (!std::isfinite(st.err))
        fail(ErrorCode::NonFiniteStage, "non-finite value inside an embedded step");
    return {unpack_state<N>(state.t + h, st.y, spec.dim), st.err};
}

} // namespace

std::pair<State, double> step_embedded(const model::SystemSpec& spec,
                                       const State& state, double h,
                                       const IntegratorConfig& config) {
    if (state.dim != spec.dim)
        fail(ErrorCode::InvalidArgument, "state arity does not match the system");
    if (!(h != 0.0) || !std::isfinite(h))
        fail(ErrorCode::InvalidArgument, "step width must be finite and nonzero");
    return spec.dim == 1 ? step_once<2>(spec, state, h, config)
                         : step_once<4>(spec, state, h, config);
}

} // namespace riccati
