#pragma once

#include <limits>
#include <vector>

#include "wcss/link_budget.hpp"

namespace wcss {

// Ground-plane SNR map in dB, row-major with ys as rows.  Cells where the
// range is singular (grid point on the array origin) hold NaN.
struct Heatmap {
    std::vector<double> xs, ys;
    std::vector<double> db; // ys.size() x xs.size()

    double at(std::size_t iy, std::size_t ix) const { return db[iy * xs.size() + ix]; }
};

inline Heatmap snr_heatmap(const Scenario& sc, double x0, double x1, int nx,
                           double y0, double y1, int ny, double z,
                           const ElementPattern& pattern = isotropic_element) {
    if (nx < 2 || ny < 2)
        throw domain_error("snr_heatmap: need at least a 2x2 grid");
    if (!(x1 > x0) || !(y1 > y0))
        throw domain_error("snr_heatmap: ranges must be increasing");

    Heatmap hm;
    hm.xs.resize(nx);
    hm.ys.resize(ny);
    for (int i = 0; i < nx; ++i) hm.xs[i] = x0 + (x1 - x0) * i / (nx - 1);
    for (int j = 0; j < ny; ++j) hm.ys[j] = y0 + (y1 - y0) * j / (ny - 1);

    hm.db.resize(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const Point3 p{hm.xs[i], hm.ys[j], z};
            double value;
            if (p == sc.array_origin) {
                value = std::numeric_limits<double>::quiet_NaN();
            } else {
                const double gain = deterministic_gain(sc, p, pattern);
                const double snr = gain * gain * sc.radio.sigma_s2 / sc.radio.sigma_n2;
                value = 10.0 * std::log10(snr);
            }
            hm.db[static_cast<std::size_t>(j) * nx + i] = value;
        }
    }
    return hm;
}

// Number of cells within `drop_db` of the map's peak; a simple footprint
// measure for lobe-width comparisons.
inline std::size_t mainlobe_cells(const Heatmap& hm, double drop_db = 3.0) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : hm.db)
        if (!std::isnan(v) && v > peak) peak = v;
    std::size_t n = 0;
    for (double v : hm.db)
        if (!std::isnan(v) && v >= peak - drop_db) ++n;
    return n;
}

} // namespace wcss
