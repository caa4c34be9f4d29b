#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "wcss/errors.hpp"

namespace wcss {

using cplx = std::complex<double>;

// Dense row-major complex matrix, sized for fusion-center work (M <= ~16).
struct cmat {
    int n = 0;
    std::vector<cplx> a;

    cmat() = default;
    explicit cmat(int n) : n(n), a(static_cast<std::size_t>(n) * n) {}

    cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const cplx& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

namespace detail {

inline double offdiag_fro(const cmat& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j) s += std::norm(m.at(i, j));
    return std::sqrt(s);
}

} // namespace detail

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
// The pivot order is fixed (row-major upper triangle) and each rotation is
// branch-deterministic, so repeated runs give bit-identical spectra.
// Each complex pivot is phase-twisted to a real one, then annihilated with the
// classic symmetric rotation; the twist is a unitary diagonal similarity and
// leaves the spectrum untouched.
inline std::vector<double> hermitian_eigenvalues(cmat m, double tol = 1e-12) {
    const int n = m.n;
    if (n <= 0)
        throw domain_error("hermitian_eigenvalues: empty matrix");

    double fro = 0.0;
    for (const cplx& v : m.a) fro += std::norm(v);
    fro = std::sqrt(fro);
    const double stop = tol * std::max(fro, 1.0e-300);

    for (int sweep = 0; sweep < 60; ++sweep) {
        if (detail::offdiag_fro(m) <= stop)
            break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx g = m.at(p, q);
                const double r = std::abs(g);
                if (r == 0.0)
                    continue;
                const cplx e = std::conj(g) / r; // twist that makes the pivot real
                const double app = m.at(p, p).real();
                const double aqq = m.at(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                m.at(p, p) = app - t * r;
                m.at(q, q) = aqq + t * r;
                m.at(p, q) = 0.0;
                m.at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const cplx akp = m.at(k, p);
                    const cplx akq = m.at(k, q);
                    const cplx np = c * akp - s * (e * akq);
                    const cplx nq = s * akp + c * (e * akq);
                    m.at(k, p) = np;
                    m.at(p, k) = std::conj(np);
                    m.at(k, q) = nq;
                    m.at(q, k) = std::conj(nq);
                }
            }
        }
    }
    if (detail::offdiag_fro(m) > stop)
        throw numerical_error("hermitian_eigenvalues: Jacobi sweeps did not converge");

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m.at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

struct logdet_result {
    double log_abs; // log |det|
    int sign;       // -1, 0, +1
};

// log-determinant of a real square matrix via LU with partial pivoting.
// The input is consumed.
inline logdet_result logdet_lu(std::vector<double>& a, int n) {
    int sign = 1;
    double log_abs = 0.0;
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::fabs(at(col, col));
        for (int i = col + 1; i < n; ++i) {
            const double v = std::fabs(at(i, col));
            if (v > best) { best = v; piv = i; }
        }
        if (best == 0.0)
            return {-std::numeric_limits<double>::infinity(), 0};
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
            sign = -sign;
        }
        const double d = at(col, col);
        log_abs += std::log(std::fabs(d));
        if (d < 0.0) sign = -sign;
        for (int i = col + 1; i < n; ++i) {
            const double f = at(i, col) / d;
            for (int j = col + 1; j < n; ++j) at(i, j) -= f * at(col, j);
        }
    }
    return {log_abs, sign};
}

} // namespace wcss
