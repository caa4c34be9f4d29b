#pragma once

#include <functional>

#include "wcss/detectors.hpp"
#include "wcss/wed_analytic.hpp"
#include "wcss/wevd_analytic.hpp"

namespace wcss {

// Bisection for tau with f(tau) = target, where f is a nonincreasing tail
// probability with f(0) >= target.  `scale` seeds the upper bracket, which
// doubles until the target is straddled.
inline double invert_decreasing(const std::function<double(double)>& f, double target,
                                double scale = 1.0, double tol = 1e-8) {
    if (!(target > 0.0) || !(target < 1.0))
        throw domain_error("invert threshold: target probability must be inside (0, 1)");
    if (!(scale > 0.0))
        throw domain_error("invert threshold: scale must be positive");

    double lo = 0.0;
    double hi = scale;
    bool bracketed = false;
    for (int i = 0; i < 64; ++i) {
        if (f(hi) < target) {
            bracketed = true;
            break;
        }
        lo = hi;
        hi *= 2.0;
    }
    if (!bracketed)
        throw bracket_error("invert threshold: no upper bracket below target");

    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double v = f(mid);
        if (std::fabs(v - target) < tol)
            return mid;
        if (v > target)
            lo = mid;
        else
            hi = mid;
    }
    throw convergence_error("invert threshold: bisection stalled", std::fabs(f(0.5 * (lo + hi)) - target));
}

// Threshold giving the requested false-alarm probability for either detector.
// The H0 mixture is built once and shared across all bisection probes.
inline double invert_threshold(double target_pf, DetectorKind kind,
                               const std::vector<double>& w, double sigma_n2, int k,
                               const SeriesControl& ctrl = {}) {
    if (kind == DetectorKind::wed) {
        const GammaMixture mix = wed_h0_mixture(w, sigma_n2, k, ctrl);
        return invert_decreasing([&](double tau) { return wed_pf_from(mix, k, tau); },
                                 target_pf, sigma_n2);
    }
    std::vector<double> scales(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) scales[i] = sigma_n2 * w[i];
    const WishartSpec spec = make_wishart_spec(std::move(scales), k);
    return invert_decreasing(
        [&](double tau) { return 1.0 - wishart_lmax_cdf(spec, k * tau, false); },
        target_pf, sigma_n2);
}

} // namespace wcss
