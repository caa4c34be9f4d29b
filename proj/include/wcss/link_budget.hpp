#pragma once

#include <complex>
#include <vector>

#include "wcss/array_factor.hpp"
#include "wcss/rng.hpp"
#include "wcss/scenario.hpp"

namespace wcss {

// Deterministic link amplitude: free-space magnitude scaled by the combined
// array and element response toward the receiver.
inline double path_amplitude(const RadioParams& radio, double af, double ef, double r) {
    if (!(r > 0.0))
        throw domain_error("path_amplitude: range must be positive");
    const double kPi = 3.141592653589793238462643383279502884;
    const double beam = std::fabs(af * ef);
    return std::sqrt(radio.p * radio.g) * kSpeedOfLight * beam / (4.0 * kPi * radio.fc * r);
}

// Unit-mean-power channel coefficient.  The deterministic model consumes no
// randomness, so draw streams stay aligned when fading is switched off.
inline std::complex<double> draw_fading(const FadingConfig& f, rng& gen) {
    switch (f.model) {
    case FadingModel::deterministic:
        return {1.0, 0.0};
    case FadingModel::rician: {
        const double k = f.rician_k;
        const std::complex<double> scatter = gen.cgauss(1.0 / (k + 1.0));
        return std::sqrt(k / (k + 1.0)) + scatter;
    }
    }
    throw domain_error("draw_fading: unknown fading model");
}

// Energy-proportional combining weights; they sum to one by construction.
inline std::vector<double> weights(const std::vector<std::complex<double>>& alphas) {
    if (alphas.empty())
        throw domain_error("weights: no amplitudes given");
    double total = 0.0;
    std::vector<double> w(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        w[i] = std::norm(alphas[i]);
        total += w[i];
    }
    if (!(total > 0.0))
        throw domain_error("weights: all amplitudes are zero");
    for (double& v : w) v /= total;
    return w;
}

struct LinkState {
    std::complex<double> alpha; // realized complex amplitude
    double gamma = 0.0;         // per-SU SNR, |alpha|^2 sigma_s2 / sigma_n2
    double weight = 0.0;
};

// Deterministic gain of the array toward one position.
inline double deterministic_gain(const Scenario& sc, Point3 position,
                                 const ElementPattern& pattern = isotropic_element) {
    const Direction d = angles_to(sc, position);
    const double af = array_factor(sc, d.theta, d.phi);
    return path_amplitude(sc.radio, af, pattern(d.theta, d.phi), d.r);
}

// Combines per-SU deterministic gains with channel draws into the realized
// link states.  `weight_gains` lets the caller age the geometric part of the
// weights independently of the synthesis amplitudes (mobility staleness).
inline std::vector<LinkState> link_states(const RadioParams& radio,
                                          const std::vector<double>& gains,
                                          const std::vector<std::complex<double>>& h,
                                          const std::vector<double>* weight_gains = nullptr,
                                          bool weights_use_fading = true) {
    const std::size_t m = gains.size();
    std::vector<std::complex<double>> alphas(m), walphas(m);
    for (std::size_t i = 0; i < m; ++i) {
        alphas[i] = gains[i] * h[i];
        const double wg = weight_gains ? (*weight_gains)[i] : gains[i];
        walphas[i] = weights_use_fading ? wg * h[i] : std::complex<double>(wg, 0.0);
    }
    const std::vector<double> w = weights(walphas);
    std::vector<LinkState> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i].alpha = alphas[i];
        out[i].gamma = std::norm(alphas[i]) * radio.sigma_s2 / radio.sigma_n2;
        out[i].weight = w[i];
    }
    return out;
}

} // namespace wcss
