#pragma once

#include "types.hpp"

#include <array>
#include <functional>
#include <vector>

namespace riccati::ince {

struct LinearizationOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    int grid_points = 201;          ///< uniform samples across the span
    double exclusion_radius = 1e-3; ///< half-width cut around each zero of u
};

struct LinearizationWindow {
    double t0 = 0.0, t1 = 0.0;
    int points = 0;
    double max_cascade = 0.0; ///< residual with derivatives from the cascade
    double max_fd = 0.0;      ///< residual with derivatives from sample stencils
};

struct LinearizationReport {
    std::vector<double> zeros; ///< located zeros of u inside (t0, t1)
    std::vector<LinearizationWindow> windows;
    double max_cascade = 0.0;
    double max_fd = 0.0;
};

/// Integrate the linear third-order problem u''' = q(t) u from the triple
/// u0 = (u, u', u'') and check that w = u'/u satisfies the nonlinear
/// equation w'' + 3 w w' + w^3 = q on every window clear of zeros of u.
/// Two residual channels are reported: one rebuilds w'' through the exact
/// derivative cascade, the other differentiates the w samples with
/// five-point stencils. Raises ZeroCrossing when the exclusion cuts leave
/// no usable window.
LinearizationReport
ince_linearization_oracle(const std::function<double(double)>& q,
                          const std::array<double, 3>& u0, double t0, double t1,
                          const LinearizationOptions& options = {});

} // namespace riccati::ince
