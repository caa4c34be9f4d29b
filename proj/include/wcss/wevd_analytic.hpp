#pragma once

#include "wcss/wed_analytic.hpp"
#include "wcss/wishart.hpp"

namespace wcss {

// How the H1 sample-covariance spectrum is modelled for the eigenvalue
// detector: `exact` diagonalizes the full weighted covariance, `diagonal`
// keeps only its per-user diagonal (cheaper, approximate).
enum class H1Spectrum { exact, diagonal };

// Weighted H1 covariance sigma_s2 * v v^H + sigma_n2 * W with
// v_m = sqrt(w_m) alpha_m; its eigenvalues drive both H1 laws.
inline std::vector<double> weighted_h1_covariance_eigs(const std::vector<double>& w,
                                                       const std::vector<std::complex<double>>& alphas,
                                                       double sigma_s2, double sigma_n2) {
    detail::check_weights_vector(w);
    if (alphas.size() != w.size())
        throw domain_error("h1 covariance: amplitude count != weight count");
    const int m = static_cast<int>(w.size());
    cmat cov(m);
    std::vector<cplx> v(m);
    for (int i = 0; i < m; ++i) v[i] = std::sqrt(w[i]) * alphas[i];
    for (int i = 0; i < m; ++i) {
        cov.at(i, i) = sigma_s2 * std::norm(v[i]) + sigma_n2 * w[i];
        for (int j = i + 1; j < m; ++j) {
            cov.at(i, j) = sigma_s2 * v[i] * std::conj(v[j]);
            cov.at(j, i) = std::conj(cov.at(i, j));
        }
    }
    std::vector<double> ev = hermitian_eigenvalues(std::move(cov));
    for (double e : ev)
        if (!(e > 0.0))
            throw numerical_error("h1 covariance: non-positive eigenvalue");
    return ev;
}

// False-alarm probability of the weighted eigenvalue detector.
inline double wevd_pf(double tau, const std::vector<double>& w, double sigma_n2, int k) {
    detail::check_weights_vector(w);
    if (!(sigma_n2 > 0.0))
        throw domain_error("wevd_pf: noise power must be positive");
    std::vector<double> scales(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) scales[i] = sigma_n2 * w[i];
    const WishartSpec spec = make_wishart_spec(std::move(scales), k);
    return 1.0 - wishart_lmax_cdf(spec, k * tau);
}

// Detection probability, conditional on the realized amplitudes.
inline double wevd_pd(double tau, const std::vector<double>& w,
                      const std::vector<std::complex<double>>& alphas, double sigma_s2,
                      double sigma_n2, int k, H1Spectrum mode = H1Spectrum::exact) {
    std::vector<double> scales;
    if (mode == H1Spectrum::exact) {
        scales = weighted_h1_covariance_eigs(w, alphas, sigma_s2, sigma_n2);
    } else {
        detail::check_weights_vector(w);
        if (alphas.size() != w.size())
            throw domain_error("wevd_pd: amplitude count != weight count");
        scales.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            scales[i] = w[i] * (sigma_s2 * std::norm(alphas[i]) + sigma_n2);
    }
    const WishartSpec spec = make_wishart_spec(std::move(scales), k);
    return 1.0 - wishart_lmax_cdf(spec, k * tau);
}

} // namespace wcss
