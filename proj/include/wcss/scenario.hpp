#pragma once

#include <cstdint>
#include <vector>

#include "wcss/geometry.hpp"

namespace wcss {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

// Rectangular planar array, quadrant-symmetric excitation.  Element (i,j) of
// the excitation grid drives the four elements mirrored across the array axes,
// so the grid is Lx/2 x Ly/2 for an Lx x Ly array.
struct ArrayGeometry {
    int lx = 0, ly = 0;            // element counts per axis, both even
    double dx = 0.0, dy = 0.0;     // element spacings in metres
    std::vector<double> excitation; // row-major Lx/2 x Ly/2, empty = all ones

    double e_at(int i, int j) const { // zero-based quadrant indices
        return excitation.empty() ? 1.0 : excitation[static_cast<std::size_t>(i) * (ly / 2) + j];
    }
    bool operator==(const ArrayGeometry&) const = default;
};

struct Beam {
    double theta = 0.0; // steering polar angle, radians off boresight
    double phi = 0.0;   // steering azimuth, radians from the local x-axis
    double a = 1.0;     // per-beam excitation weight
    bool operator==(const Beam&) const = default;
};

using BeamSet = std::vector<Beam>;

struct RadioParams {
    double p = 0.0;        // transmit power, W
    double g = 1.0;        // antenna gain, linear
    double fc = 0.0;       // carrier frequency, Hz
    double sigma_n2 = 0.0; // noise power, W
    double sigma_s2 = 1.0; // primary signal power, unit by default
    int k = 0;             // samples per sensing window
    bool operator==(const RadioParams&) const = default;
};

enum class FadingModel { deterministic, rician };

struct FadingConfig {
    FadingModel model = FadingModel::deterministic;
    double rician_k = 10.0; // linear K-factor; 0 degenerates to Rayleigh
    bool operator==(const FadingConfig&) const = default;
};

struct Scenario {
    Point3 array_origin{0.0, 0.0, 60.0};
    Point3 boresight{0.0, 0.0, -1.0};
    ArrayGeometry geometry;
    BeamSet beams;
    RadioParams radio;
    std::vector<Trajectory> sus;
    FadingConfig fading;
    std::uint64_t seed = 1;

    bool operator==(const Scenario&) const = default;
};

inline Direction angles_to(const Scenario& sc, Point3 target) {
    return angles_in_frame(ArrayFrame::from_boresight(sc.boresight), sc.array_origin, target);
}

inline void validate(const Scenario& sc) {
    const ArrayGeometry& g = sc.geometry;
    if (g.lx <= 0 || g.ly <= 0 || g.lx % 2 != 0 || g.ly % 2 != 0)
        throw domain_error("array dimensions must be positive and even");
    if (!(g.dx > 0.0) || !(g.dy > 0.0))
        throw domain_error("element spacings must be positive");
    if (!g.excitation.empty() &&
        g.excitation.size() != static_cast<std::size_t>(g.lx / 2) * (g.ly / 2))
        throw domain_error("excitation grid must be Lx/2 x Ly/2");
    if (sc.beams.empty())
        throw domain_error("scenario needs at least one beam");
    if (sc.sus.empty())
        throw domain_error("scenario needs at least one secondary user");
    if (!(sc.radio.p > 0.0) || !(sc.radio.g > 0.0) || !(sc.radio.fc > 0.0))
        throw domain_error("transmit power, gain and carrier frequency must be positive");
    if (!(sc.radio.sigma_n2 > 0.0) || !(sc.radio.sigma_s2 > 0.0))
        throw domain_error("noise and signal powers must be positive");
    if (sc.radio.k < 1)
        throw domain_error("samples per window (K) must be >= 1");
    if (sc.fading.rician_k < 0.0)
        throw domain_error("rician k-factor must be >= 0");
    for (const Trajectory& tr : sc.sus) {
        if (tr.waypoints.empty())
            throw domain_error("every SU needs at least one waypoint");
        if (tr.waypoints.size() > 1 && !(tr.speed > 0.0))
            throw domain_error("moving SUs need positive speed");
    }
}

} // namespace wcss
