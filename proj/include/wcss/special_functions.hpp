#pragma once

#include <cmath>
#include <limits>

#include "wcss/errors.hpp"

namespace wcss {
namespace detail {

// log of x^s e^-x / Gamma(s), the prefactor shared by both gamma branches.
inline double log_gamma_prefactor(double s, double x) {
    return s * std::log(x) - x - std::lgamma(s);
}

// Lower-tail series: P(s,x) = pref * sum_k x^k / (s (s+1) ... (s+k)).
// Converges fast for x < s + 1.  Returns log(P).
inline double log_reg_lower_gamma_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int k = 1; k < 1000000; ++k) {
        term *= x / (s + k);
        sum += term;
        if (term < sum * 1e-17)
            return std::log(sum) + log_gamma_prefactor(s, x);
    }
    throw convergence_error("incomplete gamma series did not converge", term);
}

// Upper-tail continued fraction (modified Lentz), for x >= s + 1.
// Returns Q(s,x) = 1 - P(s,x) directly.
inline double reg_upper_gamma_cf(double s, double x) {
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16)
            return std::exp(log_gamma_prefactor(s, x)) * h;
    }
    throw convergence_error("incomplete gamma continued fraction did not converge", h);
}

} // namespace detail

// log of the regularized lower incomplete gamma P(s,x).  Computing the log
// directly keeps deep-tail values (P below DBL_MIN) meaningful for the
// determinant evaluations downstream.
inline double log_reg_lower_gamma(double s, double x) {
    if (!(s > 0.0) || !(x >= 0.0) || !std::isfinite(s) || !std::isfinite(x))
        throw domain_error("reg_lower_gamma: need s > 0 and x >= 0");
    if (x == 0.0)
        return -std::numeric_limits<double>::infinity();
    if (x < s + 1.0)
        return detail::log_reg_lower_gamma_series(s, x);
    const double q = detail::reg_upper_gamma_cf(s, x);
    // x >= s + 1 puts P well away from 0, so 1 - q is safe here.
    return std::log1p(-q);
}

// Regularized lower incomplete gamma P(s,x) = gamma(s,x) / Gamma(s).
inline double reg_lower_gamma(double s, double x) {
    if (!(s > 0.0) || !(x >= 0.0) || !std::isfinite(s) || !std::isfinite(x))
        throw domain_error("reg_lower_gamma: need s > 0 and x >= 0");
    if (x == 0.0)
        return 0.0;
    double p;
    if (x < s + 1.0)
        p = std::exp(detail::log_reg_lower_gamma_series(s, x));
    else
        p = 1.0 - detail::reg_upper_gamma_cf(s, x);
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

} // namespace wcss
