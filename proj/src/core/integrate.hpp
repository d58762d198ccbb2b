#pragma once

#include "model.hpp"

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace riccati {

struct IntegratorConfig {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h_init = 0.0; ///< 0 selects 1e-4 * |t_end - t0|
    double h_max = 0.0;  ///< 0 selects |t_end - t0|
    long max_steps = 200000;
    double blowup_bound = 1e8;
    double denom_epsilon = 1e-12;
};

enum class TrajStatus { Completed, Singular, BlowUp, MaxSteps };

const char* traj_status_name(TrajStatus s);

/// One accepted integrator node: state and its time derivative, which
/// together feed the dense output between nodes.
struct TrajNode {
    double t = 0.0;
    std::array<double, 4> y{}; // q0..q(dim-1), v0..v(dim-1)
    std::array<double, 4> f{};
};

/// Continuous-extension coefficients of one accepted step, stored against the
/// interval's left node (r1 = left y, r2 = right y - left y).
struct DenseSeg {
    std::array<double, 4> r2{}, r3{}, r4{}, r5{};
};

class Trajectory {
  public:
    Trajectory(model::SystemSpec spec, bool forward)
        : spec_(std::move(spec)), forward_(forward) {}

    const model::SystemSpec& spec() const { return spec_; }
    int dim() const { return spec_.dim; }
    bool forward() const { return forward_; }

    TrajStatus status() const { return status_; }
    /// Estimated event time t* for Singular and BlowUp outcomes; NaN otherwise.
    double event_time() const { return event_time_; }

    std::size_t size() const { return nodes_.size(); }
    const TrajNode& node(std::size_t i) const;
    State state_at(std::size_t i) const;

    double t_begin() const;
    double t_final() const;

    /// Dense evaluation between stored nodes: the stepper's continuous
    /// extension where segment coefficients are stored, cubic Hermite on the
    /// node data otherwise. Times outside the covered span raise OutOfRange.
    State eval(double t) const;

    void push(const TrajNode& n) { nodes_.push_back(n); }
    /// Attach the continuous extension for the interval ending at the node
    /// just pushed. A trajectory evaluates through its segments only when
    /// every interval has one.
    void push_seg(const DenseSeg& s) { segs_.push_back(s); }
    void finish(TrajStatus s, double event_time) {
        status_ = s;
        event_time_ = event_time;
    }

  private:
    model::SystemSpec spec_;
    bool forward_;
    std::vector<TrajNode> nodes_;
    std::vector<DenseSeg> segs_;
    TrajStatus status_ = TrajStatus::Completed;
    double event_time_ = std::numeric_limits<double>::quiet_NaN();
};

/// March the system from `start` to t_end (either direction). Finite-time
/// escapes are classified: a matching pole model yields Singular with the
/// estimated pole time, otherwise BlowUp at the last reliable time.
Trajectory integrate(const model::SystemSpec& spec, const State& start,
                     double t_end, const IntegratorConfig& config = {});

/// Single embedded step of width h from `state`; returns the advanced state
/// and the scaled error-norm estimate for that step.
std::pair<State, double> step_embedded(const model::SystemSpec& spec,
                                       const State& state, double h,
                                       const IntegratorConfig& config = {});

} // namespace riccati
