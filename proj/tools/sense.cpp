// Command-line front end for the cooperative spectrum sensing workbench:
// operating curves, field maps and canned experiment bundles, emitted as CSV
// plus key=value sidecars.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wcss/config.hpp"
#include "wcss/csv.hpp"
#include "wcss/presets.hpp"

namespace {

namespace fs = std::filesystem;

wcss::ExperimentConfig load_config(const std::string& path) {
    if (path.empty()) return wcss::default_experiment_config();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return wcss::parse_config(ss.str());
}

const std::map<std::string, wcss::DetectorKind> kDetectors = {
    {"wed", wcss::DetectorKind::wed}, {"wevd", wcss::DetectorKind::wevd}};

// "paper" selects the energy-proportional weighting the workbench studies;
// "uniform" the flat 1/M baseline.
const std::map<std::string, wcss::WeightMode> kWeights = {
    {"paper", wcss::WeightMode::snr_proportional},
    {"uniform", wcss::WeightMode::uniform}};

std::string mode_token(wcss::WeightMode mode) {
    return mode == wcss::WeightMode::uniform ? "uniform" : "weighted";
}

void announce(const fs::path& file) { std::cout << file.string() << "\n"; }

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    wcss::DetectorKind detector = wcss::DetectorKind::wed;
    wcss::WeightMode weights = wcss::WeightMode::snr_proportional;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted cooperative spectrum sensing workbench"};
    app.require_subcommand(1);

    CommonArgs a;
    long trials = 20000;
    int n_points = 15;
    int workers = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool use_mobility = false;
    std::string preset_name;
    std::vector<double> tau_grid;

    auto add_common = [&](CLI::App* cmd, bool with_detector) {
        cmd->add_option("--config", a.config_path, "experiment description file "
                                                   "(omit for the built-in default)")
            ->check(CLI::ExistingFile);
        cmd->add_option("--out", a.out_dir, "output directory")->required();
        if (with_detector) {
            cmd->add_option("--detector", a.detector, "detector statistic")
                ->transform(CLI::CheckedTransformer(kDetectors, CLI::ignore_case));
            cmd->add_option("--weights", a.weights, "fusion weighting scheme")
                ->transform(CLI::CheckedTransformer(kWeights, CLI::ignore_case));
        }
    };

    CLI::App* roc = app.add_subcommand("roc", "Monte Carlo operating curve");
    add_common(roc, true);
    roc->add_option("--trials", trials, "Monte Carlo trials per point")
        ->check(CLI::PositiveNumber);
    roc->add_option("--points", n_points, "false-alarm grid size")
        ->check(CLI::Range(2, 1000));
    roc->add_option("--workers", workers, "worker threads (0 = hardware)")
        ->check(CLI::NonNegativeNumber);
    roc->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& s) { seed = s; seed_given = true; },
        "master seed (default: config seed)");
    roc->add_flag("--mobility", use_mobility,
                  "run the config's mobility plan instead of the static scene");

    CLI::App* heat = app.add_subcommand("heatmap", "received-SNR map of the "
                                                   "configured window");
    add_common(heat, false);

    CLI::App* preset = app.add_subcommand("preset", "canned experiment bundle");
    add_common(preset, false);
    preset->add_option("--name", preset_name, "bundle name")
        ->required()
        ->check(CLI::IsMember(wcss::preset_names()));
    preset->add_option("--trials", trials, "Monte Carlo trials per point")
        ->check(CLI::PositiveNumber);
    preset->add_option("--points", n_points, "false-alarm grid size")
        ->check(CLI::Range(2, 1000));
    preset->add_option("--workers", workers, "worker threads (0 = hardware)")
        ->check(CLI::NonNegativeNumber);
    preset->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& s) { seed = s; seed_given = true; },
        "master seed (default: config seed)");

    CLI::App* analytic = app.add_subcommand("analytic", "closed-form curve on an "
                                                        "explicit threshold grid");
    add_common(analytic, true);
    analytic->add_option("--tau-grid", tau_grid, "threshold values")
        ->required()
        ->expected(-1)
        ->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        wcss::ExperimentConfig cfg = load_config(a.config_path);
        if (seed_given) cfg.scenario.seed = seed;
        const fs::path out(a.out_dir);
        const wcss::WeightPolicy policy{a.weights, cfg.weights_use_fading};
        const std::string digest = wcss::config_digest(cfg);

        if (roc->parsed()) {
            fs::create_directories(out);
            const std::string det =
                a.detector == wcss::DetectorKind::wed ? "wed" : "wevd";
            std::string stem = "roc_" + det + "_" + mode_token(a.weights);
            wcss::RocCurve curve;
            if (use_mobility) {
                stem += "_mu" + wcss::csv_number(cfg.mobility.mu);
                curve = wcss::mobility_roc(cfg.scenario, cfg.mobility, a.detector,
                                           n_points, trials, cfg.scenario.seed, policy,
                                           workers, wcss::kEmitSeries);
            } else {
                curve = wcss::roc(cfg.scenario, a.detector, n_points, trials,
                                  cfg.scenario.seed, policy, workers,
                                  wcss::kEmitSeries);
            }
            curve.meta.digest = digest;
            const fs::path file = out / (stem + "_mc.csv");
            wcss::write_roc_files(file, curve);
            announce(file);
        } else if (heat->parsed()) {
            fs::create_directories(out);
            const wcss::HeatmapWindow& w = cfg.heatmap;
            const wcss::Heatmap hm = wcss::snr_heatmap(cfg.scenario, w.x0, w.x1, w.nx,
                                                       w.y0, w.y1, w.ny, w.z);
            wcss::RocMeta meta;
            meta.detector = "none";
            meta.weights = "none";
            meta.source = "analytic";
            meta.seed = cfg.scenario.seed;
            meta.trials = 0;
            meta.digest = digest;
            const fs::path file = out / "heatmap.csv";
            wcss::write_heatmap_files(file, hm, meta);
            announce(file);
        } else if (preset->parsed()) {
            const std::vector<std::string> files =
                wcss::run_preset(preset_name, cfg, out, trials, n_points, workers);
            for (const std::string& f : files) announce(out / f);
        } else if (analytic->parsed()) {
            fs::create_directories(out);
            const std::string det =
                a.detector == wcss::DetectorKind::wed ? "wed" : "wevd";
            wcss::RocCurve curve = wcss::analytic_curve(cfg.scenario, a.detector,
                                                        tau_grid, policy,
                                                        wcss::kEmitSeries);
            curve.meta.digest = digest;
            const fs::path file =
                out / ("roc_" + det + "_" + mode_token(a.weights) + "_analytic.csv");
            wcss::write_roc_files(file, curve);
            announce(file);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
