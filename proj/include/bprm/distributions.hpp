#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <span>

#include "bprm/errors.hpp"

namespace bprm {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();
inline const double log_sqrt_2pi = 0.5 * std::log(2.0 * std::numbers::pi);

inline double log_beta_fn(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

inline double normal_log_pdf(double x, double mean, double sd) {
    const double z = (x - mean) / sd;
    return -0.5 * z * z - std::log(sd) - log_sqrt_2pi;
}

inline double lognormal_log_pdf(double x, double mu, double sigma) {
    if (x <= 0.0) return neg_inf;
    const double lx = std::log(x);
    return -lx + normal_log_pdf(lx, mu, sigma);
}

// Rate parameterization.
inline double gamma_log_pdf(double x, double shape, double rate) {
    if (x <= 0.0) return neg_inf;
    return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) - rate * x;
}

inline double beta_log_pdf(double x, double a, double b) {
    if (x <= 0.0 || x >= 1.0) return neg_inf;
    return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta_fn(a, b);
}

struct PertShapes {
    double a1 = 0.0;
    double a2 = 0.0;
};

// Classical PERT shapes: a1 = 1 + 4(mode-min)/(max-min), a2 = 1 + 4(max-mode)/(max-min).
inline PertShapes beta_pert_shapes(double min, double mode, double max) {
    if (max <= min) throw DomainError("DegenerateRange: beta-PERT requires max > min");
    const double range = max - min;
    return {1.0 + 4.0 * (mode - min) / range, 1.0 + 4.0 * (max - mode) / range};
}

// Log density of the PERT distribution on [min,max]; -inf outside the support.
inline double beta_pert_log_density(double b, double min, double mode, double max) {
    const PertShapes s = beta_pert_shapes(min, mode, max);
    if (b < min || b > max) return neg_inf;
    const double range = max - min;
    const double z = (b - min) / range;
    if (z <= 0.0 || z >= 1.0)
        return (s.a1 > 1.0 && s.a2 > 1.0) ? neg_inf
                                          : beta_log_pdf(z, s.a1, s.a2) - std::log(range);
    return (s.a1 - 1.0) * std::log(z) + (s.a2 - 1.0) * std::log1p(-z) - log_beta_fn(s.a1, s.a2) -
           std::log(range);
}

inline double log_sum_exp(std::span<const double> x) {
    double hi = neg_inf;
    for (double v : x) hi = std::max(hi, v);
    if (!std::isfinite(hi)) return hi;
    double acc = 0.0;
    for (double v : x) acc += std::exp(v - hi);
    return hi + std::log(acc);
}

}  // namespace bprm
