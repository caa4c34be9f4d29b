#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wcss/bigfloat.hpp"
#include "wcss/linalg.hpp"
#include "wcss/special_functions.hpp"

namespace wcss {

// Covariance spectrum of a complex Wishart matrix with K degrees of freedom,
// sorted descending as the closed-form CDF requires.  The formula needs
// distinct scales; near-ties are spread by a tiny documented perturbation
// (`perturbed` records that the result is an approximation).
struct WishartSpec {
    int m = 0;
    int k = 0;
    std::vector<double> scales;
    bool perturbed = false;
};

inline WishartSpec make_wishart_spec(std::vector<double> scales, int k) {
    if (scales.empty())
        throw domain_error("wishart spec: no scales given");
    for (double s : scales)
        if (!(s > 0.0) || !std::isfinite(s))
            throw domain_error("wishart spec: scales must be positive and finite");
    const int m = static_cast<int>(scales.size());
    if (k < m)
        throw domain_error("wishart spec: need K >= M degrees of freedom");

    std::sort(scales.begin(), scales.end(), std::greater<>());
    WishartSpec spec{m, k, std::move(scales), false};

    // Spread clusters whose members are closer than 1e-9 in relative terms.
    int i = 0;
    while (i < m) {
        int j = i;
        while (j + 1 < m &&
               (spec.scales[j] - spec.scales[j + 1]) < 1e-9 * spec.scales[j])
            ++j;
        const int n = j - i + 1;
        if (n > 1) {
            for (int t = 0; t < n; ++t)
                spec.scales[i + t] *= 1.0 + 1e-7 * (0.5 * (n - 1) - t);
            spec.perturbed = true;
        }
        i = j + 1;
    }
    if (spec.perturbed)
        std::sort(spec.scales.begin(), spec.scales.end(), std::greater<>());
    for (int t = 0; t + 1 < m; ++t)
        if (!((spec.scales[t] - spec.scales[t + 1]) >= 1e-10 * spec.scales[t]))
            throw degeneracy_error("wishart spec: scales indistinguishable even after perturbation");
    return spec;
}

namespace detail {

// Double-precision evaluation.  Entries and normalization are carried in log
// space and every column is rescaled by its largest entry so the LU works on
// O(1) numbers.  Returns the CDF plus the rescaled determinant magnitude,
// which measures how much cancellation the determinant suffered.
struct lmax_cdf_result {
    double cdf;
    double det_mag; // |det| of the column-rescaled matrix, in [0, ~1]
};

inline lmax_cdf_result wishart_lmax_cdf_double(const WishartSpec& spec, double x) {
    const int m = spec.m;
    const int k = spec.k;
    std::vector<double> loga(static_cast<std::size_t>(m) * m);
    std::vector<double> colmax(m, -std::numeric_limits<double>::infinity());
    for (int j = 0; j < m; ++j) {
        const double y = x / spec.scales[j];
        const double ls = std::log(spec.scales[j]);
        for (int i = 0; i < m; ++i) {
            const double s = static_cast<double>(k - i); // shape K - i + 1, rows 1-based
            const double v = (s)*ls + std::lgamma(s) + log_reg_lower_gamma(s, y);
            loga[static_cast<std::size_t>(i) * m + j] = v;
            colmax[j] = std::max(colmax[j], v);
        }
    }
    for (double c : colmax)
        if (!std::isfinite(c))
            return {0.0, 1.0};

    std::vector<double> b(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            b[static_cast<std::size_t>(i) * m + j] =
                std::exp(loga[static_cast<std::size_t>(i) * m + j] - colmax[j]);

    const logdet_result det = logdet_lu(b, m);
    if (det.sign == 0)
        return {0.0, 0.0};

    double logdenom = 0.0;
    for (int i = 0; i < m; ++i) {
        logdenom += (k - m + 1) * std::log(spec.scales[i]);
        logdenom += std::lgamma(static_cast<double>(k - i));
        for (int j = i + 1; j < m; ++j)
            logdenom += std::log(spec.scales[i] - spec.scales[j]);
    }
    double logsum = det.log_abs;
    for (double c : colmax) logsum += c;
    const double cdf = det.sign * std::exp(logsum - logdenom);
    return {cdf, std::exp(det.log_abs)};
}

// Extended-precision re-evaluation for determinants double precision cannot
// resolve.  `bits` should cover the expected cancellation plus headroom.
inline double wishart_lmax_cdf_mp(const WishartSpec& spec, double x, mpfr_prec_t bits) {
    const int m = spec.m;
    const int k = spec.k;
    std::vector<bigfloat> a;
    a.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const bigfloat scale(spec.scales[j], bits);
            const bigfloat y = bigfloat(x, bits) / scale;
            const unsigned long s = static_cast<unsigned long>(k - i);
            a.push_back(bigfloat::pow_ui(scale, s) * bigfloat::lower_gamma(s, y));
        }
    }
    auto at = [&](int i, int j) -> bigfloat& { return a[static_cast<std::size_t>(i) * m + j]; };

    bigfloat det(1.0, bits);
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int i = col + 1; i < m; ++i)
            if (abs_less(at(piv, col), at(i, col)))
                piv = i;
        if (at(piv, col).is_zero())
            return 0.0;
        if (piv != col) {
            for (int j = 0; j < m; ++j)
                std::swap(at(piv, j), at(col, j));
            det = bigfloat(0.0, bits) - det;
        }
        det = det * at(col, col);
        for (int i = col + 1; i < m; ++i) {
            const bigfloat f = at(i, col) / at(col, col);
            for (int j = col + 1; j < m; ++j)
                at(i, j) = at(i, j) - f * at(col, j);
        }
    }

    bigfloat denom(1.0, bits);
    for (int i = 0; i < m; ++i) {
        denom = denom * bigfloat::pow_ui(bigfloat(spec.scales[i], bits),
                                         static_cast<unsigned long>(k - m + 1));
        denom = denom * bigfloat::factorial(static_cast<unsigned long>(k - i - 1), bits);
        for (int j = i + 1; j < m; ++j)
            denom = denom * (bigfloat(spec.scales[i], bits) - bigfloat(spec.scales[j], bits));
    }
    return (det / denom).to_double();
}

inline mpfr_prec_t wishart_mp_bits(const WishartSpec& spec) {
    double lost = 0.0;
    for (int i = 0; i < spec.m; ++i)
        for (int j = i + 1; j < spec.m; ++j)
            lost += std::max(0.0, std::log2(spec.scales[i] / (spec.scales[i] - spec.scales[j])));
    const double bits = 128.0 + lost;
    if (bits > 32768.0)
        throw degeneracy_error("wishart cdf: scales too clustered to resolve");
    return static_cast<mpfr_prec_t>(bits);
}

} // namespace detail

// P(lmax(R) <= x) for R ~ complex Wishart with the given spectrum (threshold
// on the unnormalized matrix).  Uses fast double evaluation when the
// determinant survives cancellation, extended precision otherwise.
inline double wishart_lmax_cdf(const WishartSpec& spec, double x, bool allow_extended = true) {
    if (!(x > 0.0))
        return 0.0;
    if (!std::isfinite(x))
        return 1.0;
    const detail::lmax_cdf_result fast = detail::wishart_lmax_cdf_double(spec, x);
    double cdf = fast.cdf;
    if (fast.det_mag < 1e-9 || !(cdf >= -1e-6) || !(cdf <= 1.0 + 1e-6)) {
        if (!allow_extended)
            throw numerical_error("wishart cdf: determinant lost to cancellation "
                                  "(rescaled |det| = " + std::to_string(fast.det_mag) + ")");
        cdf = detail::wishart_lmax_cdf_mp(spec, x, detail::wishart_mp_bits(spec));
        if (!(cdf >= -1e-6) || !(cdf <= 1.0 + 1e-6))
            throw numerical_error("wishart cdf: extended-precision result out of range");
    }
    return std::clamp(cdf, 0.0, 1.0);
}

} // namespace wcss
