#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wcss/config.hpp"
#include "wcss/csv.hpp"

namespace wcss {

// Series budget for emitted products: a deeper truncation cap than the
// library default so strongly skewed weight profiles (e.g. a wide aperture
// that drops the dominant sensor out of its lobe; the default scene at 128
// elements needs ~250k terms) still get exact closed forms instead of
// refusals.  Laws that converge under the default budget are unchanged —
// the cap only matters when it would otherwise be hit.
inline constexpr SeriesControl kEmitSeries{1e-10, 400000};

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "static-compare", "user-count", "mobility", "aperture", "heatmap"};
    return names;
}

namespace presetdetail {

inline RocMeta map_meta(const ExperimentConfig& cfg) {
    RocMeta meta;
    meta.detector = "none";
    meta.weights = "none";
    meta.source = "analytic";
    meta.seed = cfg.scenario.seed;
    meta.trials = 0;
    meta.digest = config_digest(cfg);
    return meta;
}

struct Emitter {
    std::filesystem::path dir;
    std::vector<std::string> files;

    void roc(const std::string& name, RocCurve curve, const std::string& digest) {
        curve.meta.digest = digest;
        write_roc_files(dir / name, curve);
        files.push_back(name);
    }
    void map(const std::string& name, const Heatmap& hm, const RocMeta& meta) {
        write_heatmap_files(dir / name, hm, meta);
        files.push_back(name);
    }
};

// Monte Carlo curve plus the closed-form curve on the identical threshold
// grid, so agreement between model and simulation is a column-wise diff of
// two files.
inline void roc_with_overlay(Emitter& em, const std::string& stem,
                             const ExperimentConfig& cfg, DetectorKind kind,
                             WeightPolicy policy, int n_points, long trials,
                             int workers) {
    const std::string digest = config_digest(cfg);
    const RocCurve mc = roc(cfg.scenario, kind, n_points, trials, cfg.scenario.seed,
                            policy, workers, kEmitSeries);
    std::vector<double> taus;
    for (const RocPoint& p : mc.points) taus.push_back(p.tau);
    em.roc(stem + "_mc.csv", mc, digest);
    em.roc(stem + "_analytic.csv",
           analytic_curve(cfg.scenario, kind, taus, policy, kEmitSeries), digest);
}

inline Heatmap window_map(const ExperimentConfig& cfg) {
    const HeatmapWindow& w = cfg.heatmap;
    return snr_heatmap(cfg.scenario, w.x0, w.x1, w.nx, w.y0, w.y1, w.ny, w.z);
}

} // namespace presetdetail

// Runs one named experiment bundle into `out_dir` and returns the emitted
// file names (each CSV also gets a `.meta` sidecar, not listed).
//
//   static-compare  both detectors x both weightings, simulation + closed form
//   user-count      five sensors vs ten, energy detector
//   mobility        weight-refresh intervals 1/20/60 s over a 60 s horizon
//   aperture        64- vs 128-element array: curves and both field maps
//   heatmap         one field map of the configured window
inline std::vector<std::string> run_preset(const std::string& name,
                                           const ExperimentConfig& base,
                                           const std::filesystem::path& out_dir,
                                           long trials = 20000, int n_points = 15,
                                           int workers = 0) {
    using namespace presetdetail;
    std::filesystem::create_directories(out_dir);
    Emitter em{out_dir, {}};
    const WeightPolicy weighted{WeightMode::snr_proportional, base.weights_use_fading};
    const WeightPolicy uniform{WeightMode::uniform, base.weights_use_fading};

    if (name == "static-compare") {
        for (DetectorKind kind : {DetectorKind::wed, DetectorKind::wevd}) {
            const std::string det = kind == DetectorKind::wed ? "wed" : "wevd";
            roc_with_overlay(em, "roc_" + det + "_weighted", base, kind, weighted,
                             n_points, trials, workers);
            roc_with_overlay(em, "roc_" + det + "_uniform", base, kind, uniform,
                             n_points, trials, workers);
        }
    } else if (name == "user-count") {
        for (std::size_t m : {std::size_t{5}, std::size_t{10}}) {
            if (base.scenario.sus.size() < m)
                throw domain_error("user-count preset: base config has fewer than " +
                                   std::to_string(m) + " sensors");
            ExperimentConfig cfg = base;
            cfg.scenario.sus.resize(m);
            roc_with_overlay(em, "roc_wed_weighted_m" + std::to_string(m), cfg,
                             DetectorKind::wed, weighted, n_points, trials, workers);
        }
    } else if (name == "mobility") {
        for (double mu : {1.0, 20.0, 60.0}) {
            const ExperimentConfig cfg =
                apply_overrides(base, {{"mobility.mu", csv_number(mu)}});
            const std::string digest = config_digest(cfg);
            const std::string stem = "roc_wed_weighted_mu" + csv_number(mu);
            em.roc(stem + "_mc.csv",
                   mobility_roc(cfg.scenario, cfg.mobility, DetectorKind::wed, n_points,
                                trials, cfg.scenario.seed, weighted, workers,
                                kEmitSeries),
                   digest);
            if (cfg.scenario.fading.model == FadingModel::deterministic)
                em.roc(stem + "_analytic.csv",
                       analytic_mobility_curve(cfg.scenario, cfg.mobility,
                                               DetectorKind::wed, n_points, weighted,
                                               kEmitSeries),
                       digest);
        }
    } else if (name == "aperture") {
        for (int l : {64, 128}) {
            const ExperimentConfig cfg =
                apply_overrides(base, {{"array.l", std::to_string(l)}});
            roc_with_overlay(em, "roc_wed_weighted_l" + std::to_string(l), cfg,
                             DetectorKind::wed, weighted, n_points, trials, workers);
            em.map("heatmap_l" + std::to_string(l) + ".csv", window_map(cfg),
                   map_meta(cfg));
        }
    } else if (name == "heatmap") {
        em.map("heatmap.csv", window_map(base), map_meta(base));
    } else {
        throw domain_error("unknown preset '" + name + "' (want static-compare, "
                           "user-count, mobility, aperture or heatmap)");
    }
    return em.files;
}

} // namespace wcss
