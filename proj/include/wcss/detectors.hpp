#pragma once

#include <complex>
#include <vector>

#include "wcss/linalg.hpp"
#include "wcss/rng.hpp"

namespace wcss {

enum class DetectorKind { wed, wevd };

// One sensing window of raw samples forwarded by M users, row-major M x K.
struct SampleBlock {
    int m = 0, k = 0;
    std::vector<cplx> y;

    cplx& at(int i, int j) { return y[static_cast<std::size_t>(i) * k + j]; }
    const cplx& at(int i, int j) const { return y[static_cast<std::size_t>(i) * k + j]; }
};

// Draws one window.  With the signal present every user sees the same
// primary waveform scaled by its own amplitude, plus private noise; without
// it the block is pure noise.  Draw order is fixed: signal first, then noise
// row by row.
inline SampleBlock synth_block(const std::vector<cplx>& alphas, double sigma_s2,
                               double sigma_n2, int k, bool signal_present, rng& gen) {
    const int m = static_cast<int>(alphas.size());
    if (m < 1 || k < 1)
        throw domain_error("synth_block: need at least one user and one sample");
    if (!(sigma_n2 > 0.0))
        throw domain_error("synth_block: noise power must be positive");

    SampleBlock b;
    b.m = m;
    b.k = k;
    b.y.resize(static_cast<std::size_t>(m) * k);

    std::vector<cplx> s;
    if (signal_present) {
        s.resize(k);
        for (int j = 0; j < k; ++j) s[j] = gen.cgauss(sigma_s2);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) {
            cplx v = gen.cgauss(sigma_n2);
            if (signal_present)
                v += alphas[i] * s[j];
            b.at(i, j) = v;
        }
    }
    return b;
}

namespace detail {

inline void check_block_weights(const SampleBlock& b, const std::vector<double>& w) {
    if (b.m < 1 || b.k < 1 || b.y.size() != static_cast<std::size_t>(b.m) * b.k)
        throw domain_error("detector statistic: malformed sample block");
    if (w.size() != static_cast<std::size_t>(b.m))
        throw domain_error("detector statistic: weight count != user count");
}

} // namespace detail

// Weighted energy: (1/K) sum_m w_m ||y_m||^2.
inline double wed_statistic(const SampleBlock& b, const std::vector<double>& w) {
    detail::check_block_weights(b, w);
    double acc = 0.0;
    for (int i = 0; i < b.m; ++i) {
        double row = 0.0;
        for (int j = 0; j < b.k; ++j) row += std::norm(b.at(i, j));
        acc += w[i] * row;
    }
    return acc / b.k;
}

// Largest eigenvalue of the weighted sample covariance Z Z^H / K with
// Z = W^(1/2) Y.  The M x M Gram matrix is formed explicitly (M is small)
// and diagonalized by the deterministic Jacobi solver.  For M = 1 this is
// arithmetic-for-arithmetic the weighted energy.
inline double wevd_statistic(const SampleBlock& b, const std::vector<double>& w) {
    detail::check_block_weights(b, w);
    cmat r(b.m);
    std::vector<double> sq(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] >= 0.0))
            throw domain_error("detector statistic: weights must be >= 0");
        sq[i] = std::sqrt(w[i]);
    }
    for (int i = 0; i < b.m; ++i) {
        for (int j = i; j < b.m; ++j) {
            if (i == j) {
                double acc = 0.0;
                for (int t = 0; t < b.k; ++t) acc += std::norm(b.at(i, t));
                r.at(i, i) = (w[i] * acc) / b.k;
            } else {
                cplx acc = 0.0;
                for (int t = 0; t < b.k; ++t) acc += b.at(i, t) * std::conj(b.at(j, t));
                r.at(i, j) = (sq[i] * sq[j] / b.k) * acc;
                r.at(j, i) = std::conj(r.at(i, j));
            }
        }
    }
    return hermitian_eigenvalues(std::move(r)).back();
}

inline double detector_statistic(DetectorKind kind, const SampleBlock& b,
                                 const std::vector<double>& w) {
    return kind == DetectorKind::wed ? wed_statistic(b, w) : wevd_statistic(b, w);
}

// Strict comparison: a statistic exactly on the threshold stays with H0.
inline bool decide(double lambda, double tau) { return lambda > tau; }

} // namespace wcss
