#pragma once

#include <complex>
#include <vector>

#include "wcss/gamma_mixture.hpp"
#include "wcss/linalg.hpp"

namespace wcss {

namespace detail {

inline void check_weights_vector(const std::vector<double>& w) {
    if (w.empty())
        throw domain_error("analytic detector: empty weight vector");
    for (double v : w)
        if (!(v > 0.0) || !std::isfinite(v))
            throw domain_error("analytic detector: weights must be positive and finite");
}

} // namespace detail

// H0 law of the weighted energy statistic: K * Lambda is a sum of M
// independent Gamma(K, sigma_n2 w_m) energies.
inline GammaMixture wed_h0_mixture(const std::vector<double>& w, double sigma_n2, int k,
                                   const SeriesControl& ctrl = {}) {
    detail::check_weights_vector(w);
    if (!(sigma_n2 > 0.0) || k < 1)
        throw domain_error("wed_h0_mixture: need sigma_n2 > 0 and K >= 1");
    std::vector<double> scales(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) scales[i] = sigma_n2 * w[i];
    return mosch_mixture(scales, static_cast<double>(k), ctrl);
}

inline double wed_pf_from(const GammaMixture& mix, int k, double tau) {
    return 1.0 - mix.cdf(static_cast<double>(k) * tau);
}

// False-alarm probability of the weighted energy detector at threshold tau.
inline double wed_pf(double tau, const std::vector<double>& w, double sigma_n2, int k,
                     const SeriesControl& ctrl = {}) {
    return wed_pf_from(wed_h0_mixture(w, sigma_n2, k, ctrl), k, tau);
}

// Cross-user energy correlation induced by the shared primary waveform.
// Entry (i,j) is sqrt(rho_ij); the diagonal is 1.
inline cmat wed_corr(const std::vector<std::complex<double>>& alphas, double sigma_s2,
                     double sigma_n2) {
    const int m = static_cast<int>(alphas.size());
    if (m < 1)
        throw domain_error("wed_corr: no amplitudes given");
    if (!(sigma_s2 > 0.0) || !(sigma_n2 > 0.0))
        throw domain_error("wed_corr: powers must be positive");
    cmat c(m);
    for (int i = 0; i < m; ++i) {
        c.at(i, i) = 1.0;
        const double ai2 = std::norm(alphas[i]);
        for (int j = i + 1; j < m; ++j) {
            const double aj2 = std::norm(alphas[j]);
            const double num = sigma_s2 * sigma_s2 * ai2 * aj2;
            const double den = num + sigma_s2 * sigma_n2 * (ai2 + aj2) + sigma_n2 * sigma_n2;
            const double rho = num / den;
            c.at(i, j) = std::sqrt(rho);
            c.at(j, i) = c.at(i, j);
        }
    }
    return c;
}

// Scale parameters of the H1 energy law: eigenvalues of D^(1/2) C D^(1/2)
// with D the per-user mean energies.  The symmetric similarity keeps the
// eigenproblem Hermitian; the spectrum is provably positive (C is a positive
// diagonal plus a rank-one update), and that is still guarded numerically.
inline std::vector<double> wed_h1_scales(const std::vector<double>& w,
                                         const std::vector<std::complex<double>>& alphas,
                                         double sigma_s2, double sigma_n2) {
    detail::check_weights_vector(w);
    if (alphas.size() != w.size())
        throw domain_error("wed_h1_scales: amplitude count != weight count");
    const int m = static_cast<int>(w.size());
    cmat c = wed_corr(alphas, sigma_s2, sigma_n2);
    std::vector<double> dm(m), sq(m);
    for (int i = 0; i < m; ++i) {
        const double gamma = std::norm(alphas[i]) * sigma_s2 / sigma_n2;
        dm[i] = sigma_n2 * w[i] * (gamma + 1.0);
        sq[i] = std::sqrt(dm[i]);
    }
    cmat sym(m);
    for (int i = 0; i < m; ++i) {
        sym.at(i, i) = dm[i]; // C diagonal is exactly 1
        for (int j = i + 1; j < m; ++j) {
            sym.at(i, j) = sq[i] * sq[j] * c.at(i, j).real();
            sym.at(j, i) = sym.at(i, j);
        }
    }
    std::vector<double> ev = hermitian_eigenvalues(std::move(sym));
    for (double v : ev)
        if (!(v > 0.0))
            throw numerical_error("wed_h1_scales: non-positive energy eigenvalue");
    return ev;
}

inline GammaMixture wed_h1_mixture(const std::vector<double>& w,
                                   const std::vector<std::complex<double>>& alphas,
                                   double sigma_s2, double sigma_n2, int k,
                                   const SeriesControl& ctrl = {}) {
    if (k < 1)
        throw domain_error("wed_h1_mixture: K must be >= 1");
    return mosch_mixture(wed_h1_scales(w, alphas, sigma_s2, sigma_n2),
                         static_cast<double>(k), ctrl);
}

// Detection probability of the weighted energy detector at threshold tau,
// conditional on the realized amplitudes.
inline double wed_pd(double tau, const std::vector<double>& w,
                     const std::vector<std::complex<double>>& alphas, double sigma_s2,
                     double sigma_n2, int k, const SeriesControl& ctrl = {}) {
    return 1.0 - wed_h1_mixture(w, alphas, sigma_s2, sigma_n2, k, ctrl)
                     .cdf(static_cast<double>(k) * tau);
}

} // namespace wcss
