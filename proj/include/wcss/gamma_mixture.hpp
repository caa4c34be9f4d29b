#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "wcss/errors.hpp"
#include "wcss/special_functions.hpp"

namespace wcss {

struct SeriesControl {
    double tail_tol = 1e-10; // unassigned mixture mass allowed at truncation
    int max_terms = 20000;   // series cap before a convergence error
};

// Sum of independent equal-shape gamma variables, expanded as a countable
// gamma mixture on the smallest scale.  Built once per parameter set; the
// expansion coefficients do not depend on the evaluation point, so CDF
// queries are cheap afterwards.
//
// delta_j can overflow double when the prefactor underflows, so the stored
// coefficients carry a shared log-shift: delta_j = d[j] * exp(log_shift).
struct GammaMixture {
    double base_scale = 0.0;    // smallest scale parameter
    double shape_base = 0.0;    // total shape of the leading term
    double log_prefactor = 0.0; // log prod_q (base/scale_q)^shape
    std::vector<double> d;
    double log_shift = 0.0;
    double residual = 0.0; // certified mass not covered by the kept terms

    double delta(std::size_t j) const { return d[j] * std::exp(log_shift); }

    // P(T <= x) where T is the represented sum (unnormalized threshold).
    double cdf(double x) const {
        if (!(x > 0.0))
            return 0.0;
        const double y = x / base_scale;
        double p = reg_lower_gamma(shape_base, y);
        // term_j = y^(shape+j) e^-y / Gamma(shape+j+1), stepped in log space:
        // the leading term can sit far below the double underflow threshold
        // and still climb back to O(1) once shape+j approaches y.
        double log_term = shape_base * std::log(y) - y - std::lgamma(shape_base + 1.0);
        double acc = 0.0;
        for (std::size_t j = 0; j < d.size(); ++j) {
            acc += d[j] * p;
            p -= std::exp(log_term);
            if (p < 0.0) p = 0.0;
            log_term += std::log(y / (shape_base + static_cast<double>(j) + 1.0));
        }
        if (acc <= 0.0)
            return 0.0;
        const double v = std::exp(log_prefactor + log_shift + std::log(acc));
        return std::min(v, 1.0);
    }
};

namespace detail {

// One step of the expansion recursion:
// delta_{j+1} = shape/(j+1) * sum_{i=1..j+1} (sum_q r_q^i) delta_{j+1-i}.
// `pw` holds the running powers r_q^i; `g` caches their sums.
inline double next_delta(double shape, const std::vector<double>& ratios,
                         std::vector<double>& pw, std::vector<double>& g,
                         const std::vector<double>& d, std::size_t j1) {
    double gi = 0.0;
    for (std::size_t q = 0; q < ratios.size(); ++q) {
        pw[q] *= ratios[q];
        gi += pw[q];
    }
    g.push_back(gi); // g[i-1] = sum_q r_q^i
    double s = 0.0;
    for (std::size_t i = 1; i <= j1; ++i)
        s += g[i - 1] * d[j1 - i];
    return shape * s / static_cast<double>(j1);
}

} // namespace detail

// Raw expansion coefficients delta_0 .. delta_{count-1} for given convergence
// ratios; exposed mainly so the recursion can be checked by hand.
inline std::vector<double> mosch_deltas(double shape, const std::vector<double>& ratios,
                                        std::size_t count) {
    if (!(shape > 0.0))
        throw domain_error("mosch_deltas: shape must be positive");
    for (double r : ratios)
        if (!(r >= 0.0) || r >= 1.0)
            throw domain_error("mosch_deltas: ratios must lie in [0, 1)");
    std::vector<double> d{1.0};
    std::vector<double> pw(ratios.size(), 1.0), g;
    for (std::size_t j1 = 1; j1 < count; ++j1)
        d.push_back(detail::next_delta(shape, ratios, pw, g, d, j1));
    return d;
}

inline GammaMixture mosch_mixture(const std::vector<double>& scales, double shape,
                                  const SeriesControl& ctrl = {}) {
    if (scales.empty())
        throw domain_error("mosch_mixture: no scales given");
    if (!(shape > 0.0))
        throw domain_error("mosch_mixture: shape must be positive");
    for (double s : scales)
        if (!(s > 0.0) || !std::isfinite(s))
            throw domain_error("mosch_mixture: scales must be positive and finite");
    if (!(ctrl.tail_tol > 0.0) || ctrl.max_terms < 1)
        throw domain_error("mosch_mixture: bad series control");

    GammaMixture mix;
    mix.base_scale = *std::min_element(scales.begin(), scales.end());
    mix.shape_base = shape * static_cast<double>(scales.size());

    std::vector<double> ratios(scales.size());
    for (std::size_t q = 0; q < scales.size(); ++q) {
        ratios[q] = 1.0 - mix.base_scale / scales[q];
        mix.log_prefactor += shape * std::log1p(-ratios[q]);
    }

    mix.d = {1.0};
    std::vector<double> pw(ratios.size(), 1.0), g;
    double sum_d = 1.0;
    for (int j = 0; j < ctrl.max_terms; ++j) {
        const double covered = mix.log_prefactor + mix.log_shift + std::log(sum_d);
        mix.residual = std::max(0.0, -std::expm1(std::min(covered, 0.0)));
        if (mix.residual <= ctrl.tail_tol)
            return mix;
        double nd = detail::next_delta(shape, ratios, pw, g, mix.d, mix.d.size());
        if (nd > 1e280) {
            // Homogeneous recursion: scaling every past coefficient rescales
            // all future ones the same way, so one shared shift suffices.
            const double down = 1e-280;
            for (double& v : mix.d) v *= down;
            sum_d *= down;
            nd *= down;
            mix.log_shift += std::log(1e280);
        }
        mix.d.push_back(nd);
        sum_d += nd;
    }
    throw convergence_error("mosch_mixture: series cap reached before the tail certificate",
                            mix.residual);
}

} // namespace wcss
