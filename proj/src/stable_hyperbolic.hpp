#pragma once

#include <algorithm>
#include <cmath>
#include <span>

// Overflow-safe hyperbolic helpers shared by the spectral and analysis
// translation units. Arguments named y are the full tanh/cosh arguments
// (typically 2*J or J), not the couplings themselves.

namespace glauber::detail {

inline constexpr double kLn2 = 0.6931471805599453094;

// log cosh(y), exact for all y >= 0 including y where cosh overflows.
inline double log_cosh(double y) {
    y = std::abs(y);
    if (y < 20.0) return std::log(std::cosh(y));
    return y - kLn2 + std::log1p(std::exp(-2.0 * y));
}

// log sinh(y) for y > 0.
inline double log_sinh(double y) {
    if (y < 20.0) return std::log(std::sinh(y));
    return y - kLn2 + std::log1p(-std::exp(-2.0 * y));
}

// coth(y) - 1 = 2 e^{-2y} / (1 - e^{-2y}) for y > 0; underflows to 0
// gracefully instead of cancelling.
inline double coth_minus_one(double y) {
    const double q = std::exp(-2.0 * y);
    return 2.0 * q / (1.0 - q);
}

// 1 - tanh(y) = 2 e^{-2y} / (1 + e^{-2y}).
inline double one_minus_tanh(double y) {
    const double q = std::exp(-2.0 * y);
    return 2.0 * q / (1.0 + q);
}

inline double log_sum_exp(std::span<const double> logs) {
    double m = -HUGE_VAL;
    for (double v : logs) m = std::max(m, v);
    if (!std::isfinite(m)) return m;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - m);
    return m + std::log(acc);
}

inline double log_sum_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    if (!std::isfinite(a)) return a;
    return a + std::log1p(std::exp(b - a));
}

} // namespace glauber::detail
