#pragma once

#include <cmath>

namespace riccati::fd {

/// 4th-order central first derivative.
template <typename F>
double deriv1(F&& f, double x, double h) {
    double d1 = f(x + h) - f(x - h);
    double d2 = f(x + 2.0 * h) - f(x - 2.0 * h);
    return (8.0 * d1 - d2) / (12.0 * h);
}

/// 4th-order central second derivative.
template <typename F>
double deriv2(F&& f, double x, double h) {
    double f0 = f(x);
    double p1 = f(x + h), m1 = f(x - h);
    double p2 = f(x + 2.0 * h), m2 = f(x - 2.0 * h);
    return (-p2 + 16.0 * p1 - 30.0 * f0 + 16.0 * m1 - m2) / (12.0 * h * h);
}

/// 4th-order central third derivative (7-point stencil).
template <typename F>
double deriv3(F&& f, double x, double h) {
    double p1 = f(x + h), m1 = f(x - h);
    double p2 = f(x + 2.0 * h), m2 = f(x - 2.0 * h);
    double p3 = f(x + 3.0 * h), m3 = f(x - 3.0 * h);
    return (m3 - p3 + 8.0 * (p2 - m2) + 13.0 * (m1 - p1)) / (8.0 * h * h * h);
}

} // namespace riccati::fd
