#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace riccati {

enum class ErrorCode {
    InvalidArgument,
    SingularDenominator,
    SingularTime,
    OutsideAllowedRegion,
    ZeroEnergy,
    SingularIntegrand,
    ZeroCrossing,
    PositiveMomentum,
    RootDomain,
    WrongBranch,
    OutOfRange,
    NonFiniteStage,
};

const char* error_code_name(ErrorCode code);

/// Domain error carrying a machine-checkable code; `axis` is set (0 or 1)
/// when the failure is attributable to one axis of a two-dof system.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what, int axis = -1)
        : std::runtime_error(what), code_(code), axis_(axis) {}

    ErrorCode code() const { return code_; }
    int axis() const { return axis_; }

  private:
    ErrorCode code_;
    int axis_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what, int axis = -1) {
    throw Error(code, what, axis);
}

/// Phase-space point of a one- or two-dof system at time t.
/// Only the first `dim` entries of q and v are meaningful.
struct State {
    double t = 0.0;
    std::array<double, 2> q{{0.0, 0.0}};
    std::array<double, 2> v{{0.0, 0.0}};
    int dim = 1;

    static State one_dof(double t, double x, double vx) {
        State s;
        s.t = t;
        s.q[0] = x;
        s.v[0] = vx;
        s.dim = 1;
        return s;
    }

    static State two_dof(double t, double x, double vx, double y, double vy) {
        State s;
        s.t = t;
        s.q = {x, y};
        s.v = {vx, vy};
        s.dim = 2;
        return s;
    }
};

} // namespace riccati
