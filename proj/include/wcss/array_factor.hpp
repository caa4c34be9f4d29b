#pragma once

#include <cmath>
#include <functional>

#include "wcss/scenario.hpp"

namespace wcss {

// Per-element radiation pattern hook; the default radiator is isotropic.
using ElementPattern = std::function<double(double theta, double phi)>;

inline double isotropic_element(double, double) { return 1.0; }

// Signed real array factor of the quadrant-symmetric planar array, summed
// over all steered beams.  Each beam contributes through the difference
// between the observation direction and its steering direction in (u,v)
// space; at a steering direction every cosine is 1 and the factor peaks at
// 4 * a_l * sum(e) = Lx * Ly for uniform excitation.
inline double array_factor(const ArrayGeometry& g, const BeamSet& beams,
                           double theta, double phi, double fc) {
    const int nx = g.lx / 2;
    const int ny = g.ly / 2;
    const double kx = 3.141592653589793238462643383279502884 * g.dx * fc / kSpeedOfLight;
    const double ky = 3.141592653589793238462643383279502884 * g.dy * fc / kSpeedOfLight;
    const double u = std::sin(theta) * std::cos(phi);
    const double v = std::sin(theta) * std::sin(phi);

    double total = 0.0;
    for (const Beam& b : beams) {
        const double b1 = (u - std::sin(b.theta) * std::cos(b.phi)) * kx;
        const double b2 = (v - std::sin(b.theta) * std::sin(b.phi)) * ky;
        double quad;
        if (g.excitation.empty()) {
            // Uniform excitation separates into two axis sums.
            double sx = 0.0, sy = 0.0;
            for (int i = 1; i <= nx; ++i) sx += std::cos((2 * i - 1) * b1);
            for (int j = 1; j <= ny; ++j) sy += std::cos((2 * j - 1) * b2);
            quad = sx * sy;
        } else {
            quad = 0.0;
            for (int i = 1; i <= nx; ++i) {
                const double ci = std::cos((2 * i - 1) * b1);
                for (int j = 1; j <= ny; ++j)
                    quad += g.e_at(i - 1, j - 1) * ci * std::cos((2 * j - 1) * b2);
            }
        }
        total += b.a * quad;
    }
    return 4.0 * total;
}

inline double array_factor(const Scenario& sc, double theta, double phi) {
    return array_factor(sc.geometry, sc.beams, theta, phi, sc.radio.fc);
}

} // namespace wcss
