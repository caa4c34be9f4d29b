#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "wcss/detectors.hpp"
#include "wcss/link_budget.hpp"
#include "wcss/threshold.hpp"
#include "wcss/wevd_analytic.hpp"

namespace wcss {

// How the fusion weights are chosen: energy-proportional (the cooperative
// scheme under study) or the flat 1/M baseline it is compared against.
enum class WeightMode { snr_proportional, uniform };

inline const char* weight_mode_name(WeightMode m) {
    return m == WeightMode::uniform ? "uniform" : "snr-proportional";
}

struct WeightPolicy {
    WeightMode mode = WeightMode::snr_proportional;
    // Weights follow the realized amplitudes by default; switching this off
    // bases them on the deterministic gains only.
    bool use_fading = true;
};

struct RocPoint {
    double tau = 0.0;
    double pf = 0.0, pf_ci = 0.0;
    double pd = 0.0, pd_ci = 0.0;
};

struct RocMeta {
    std::string detector; // "wed" | "wevd"
    std::string weights;  // weight_mode_name()
    std::string source;   // "montecarlo" | "analytic"
    std::uint64_t seed = 0;
    long trials = 0;
    std::string digest; // emitted-config digest, filled by the front end
};

// Operating curve ordered by descending threshold, so pf grows along the
// sequence.
struct RocCurve {
    std::vector<RocPoint> points;
    RocMeta meta;
};

// Sensing cadence for moving users.  Weights refresh only every `mu` seconds
// while the links themselves follow the true positions; sensing instants are
// t = 0, detect_every, ..., up to `horizon`.  With `average` set, trials
// cycle over all instants; otherwise only instant index `instant` is used.
struct MobilityPlan {
    double mu = 1.0;
    double horizon = 60.0;
    double detect_every = 1.0;
    bool average = true;
    int instant = 0;
    bool operator==(const MobilityPlan&) const = default;
};

struct RateEstimate {
    double pf = 0.0, pf_ci = 0.0;
    double pd = 0.0, pd_ci = 0.0;
};

namespace detail {

// Substream purposes; keeping them distinct makes every consumer of the
// master seed independent of the others.
inline constexpr std::uint64_t kTrialStream = 1;
inline constexpr std::uint64_t kPilotStream = 2;

// Deterministic gains per sensing instant: `fresh` follows the true position
// at the sensing time, `stale` the position at the latest weight update.
struct PhaseGains {
    std::vector<std::vector<double>> fresh; // [phase][user]
    std::vector<std::vector<double>> stale;
    std::vector<bool> degenerate; // all stale gains zero: weights undefined
};

inline void validate_plan(const MobilityPlan& plan) {
    if (!(plan.mu > 0.0))
        throw domain_error("mobility plan: mu must be positive");
    if (!(plan.detect_every > 0.0) || !(plan.horizon >= plan.detect_every))
        throw domain_error("mobility plan: need horizon >= detect_every > 0");
}

inline int plan_phase_count(const MobilityPlan& plan) {
    return static_cast<int>(plan.horizon / plan.detect_every + 1e-9) + 1;
}

inline PhaseGains phase_gains(const Scenario& sc, const MobilityPlan* plan) {
    const std::size_t m = sc.sus.size();
    PhaseGains pg;
    int phases = 1;
    if (plan) {
        validate_plan(*plan);
        phases = plan_phase_count(*plan);
        if (!plan->average) {
            if (plan->instant < 0 || plan->instant >= phases)
                throw domain_error("mobility plan: instant outside the horizon");
        }
    }
    pg.fresh.resize(phases);
    pg.stale.resize(phases);
    pg.degenerate.resize(phases);
    for (int s = 0; s < phases; ++s) {
        const double t = plan ? s * plan->detect_every : 0.0;
        // Latest weight refresh at or before t (guard against t/mu landing
        // a hair under an integer).
        const double u = plan ? plan->mu * std::floor(t / plan->mu + 1e-9) : 0.0;
        pg.fresh[s].resize(m);
        pg.stale[s].resize(m);
        bool any = false;
        for (std::size_t i = 0; i < m; ++i) {
            pg.fresh[s][i] = deterministic_gain(sc, position_at(sc.sus[i], t));
            pg.stale[s][i] = (plan && u != t)
                                 ? deterministic_gain(sc, position_at(sc.sus[i], u))
                                 : pg.fresh[s][i];
            any = any || pg.stale[s][i] > 0.0;
        }
        pg.degenerate[s] = !any;
    }
    return pg;
}

// Weight vector implied by one phase's stale gains under the policy, before
// any fading is drawn.
inline std::vector<double> stale_weights(const PhaseGains& pg, int s,
                                         WeightPolicy policy) {
    const std::size_t m = pg.stale[static_cast<std::size_t>(s)].size();
    if (policy.mode == WeightMode::uniform || pg.degenerate[static_cast<std::size_t>(s)])
        return std::vector<double>(m, 1.0 / static_cast<double>(m));
    std::vector<std::complex<double>> a(m);
    for (std::size_t i = 0; i < m; ++i)
        a[i] = pg.stale[static_cast<std::size_t>(s)][i];
    return weights(a);
}

// Weight vector the analytic H0 law sees: deterministic, instant 0.
inline std::vector<double> planning_weights(const Scenario& sc, const PhaseGains& pg,
                                            WeightPolicy policy) {
    (void)sc;
    return stale_weights(pg, 0, policy);
}

// Per-phase threshold rows.  Each row belongs to one weight regime (a set of
// sensing instants whose stale gains coincide) and holds the thresholds that
// that regime's H0 law assigns to the shared false-alarm targets.  The
// detector re-derives its threshold from the same stale snapshot as its
// weights, so the false-alarm rate is held at target at every instant and
// detection differences isolate the weight staleness itself.
struct TauTable {
    std::vector<double> targets;           // ascending false-alarm targets
    std::vector<std::vector<double>> rows; // [regime][target], descending taus
    std::vector<int> phase_regime;         // empty: every phase uses rows[0]

    const double* row(int s) const {
        const std::size_t r =
            phase_regime.empty() ? 0
                                 : static_cast<std::size_t>(
                                       phase_regime[static_cast<std::size_t>(s)]);
        return rows[r].data();
    }
    std::size_t ntau() const { return rows.empty() ? 0 : rows[0].size(); }
};

// Empirical H0 quantiles for one weight regime from a dedicated pilot
// substream.  Thresholds are planned against the deterministic-gain weight
// vector; the reported rates always reflect what was actually applied.
inline std::vector<double> pilot_row(const Scenario& sc, DetectorKind kind,
                                     const std::vector<double>& w,
                                     const std::vector<double>& targets, long trials,
                                     std::uint64_t seed, std::uint64_t regime) {
    const long pilot = std::min<long>(std::max<long>(trials, 2000), 20000);
    const std::size_t m = sc.sus.size();
    const std::vector<std::complex<double>> silent(m, 0.0);
    std::vector<double> stats(static_cast<std::size_t>(pilot));
    for (long t = 0; t < pilot; ++t) {
        rng gen = rng::substream(seed, {kPilotStream, regime,
                                        static_cast<std::uint64_t>(t)});
        const SampleBlock b0 = synth_block(silent, sc.radio.sigma_s2, sc.radio.sigma_n2,
                                           sc.radio.k, false, gen);
        stats[static_cast<std::size_t>(t)] = detector_statistic(kind, b0, w);
    }
    std::sort(stats.begin(), stats.end());
    std::vector<double> row(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const double q = 1.0 - targets[i];
        const long idx = std::clamp<long>(static_cast<long>(q * (pilot - 1)), 0,
                                          pilot - 1);
        row[i] = stats[static_cast<std::size_t>(idx)];
    }
    return row;
}

// Thresholds hitting the false-alarm targets exactly under the closed-form
// H0 law for one weight vector.  Uses only fast arithmetic for the
// eigenvalue detector; throws when the law is unavailable (degenerate
// weights, K < M, cancellation, series cap, missed bracket).
inline std::vector<double> analytic_row(const Scenario& sc, DetectorKind kind,
                                        const std::vector<double>& w,
                                        const std::vector<double>& targets,
                                        const SeriesControl& ctrl = {}) {
    std::vector<double> row(targets.size());
    if (kind == DetectorKind::wed) {
        const GammaMixture mix = wed_h0_mixture(w, sc.radio.sigma_n2, sc.radio.k, ctrl);
        for (std::size_t i = 0; i < targets.size(); ++i)
            row[i] = invert_decreasing(
                [&](double tau) { return wed_pf_from(mix, sc.radio.k, tau); },
                targets[i], sc.radio.sigma_n2);
    } else {
        std::vector<double> scales(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            scales[i] = sc.radio.sigma_n2 * w[i];
        const WishartSpec spec = make_wishart_spec(std::move(scales), sc.radio.k);
        for (std::size_t i = 0; i < targets.size(); ++i)
            row[i] = invert_decreasing(
                [&](double tau) {
                    return 1.0 - wishart_lmax_cdf(spec, sc.radio.k * tau, false);
                },
                targets[i], sc.radio.sigma_n2);
    }
    return row;
}

// Analytic thresholds when the law cooperates, pilot quantiles otherwise.
inline std::vector<double> regime_row(const Scenario& sc, DetectorKind kind,
                                      const std::vector<double>& w,
                                      const std::vector<double>& targets, long trials,
                                      std::uint64_t seed, std::uint64_t regime,
                                      const SeriesControl& ctrl = {}) {
    try {
        return analytic_row(sc, kind, w, targets, ctrl);
    } catch (const domain_error&) {
    } catch (const std::runtime_error&) {
    }
    return pilot_row(sc, kind, w, targets, trials, seed, regime);
}

inline std::vector<double> pf_targets(int n_points) {
    if (n_points < 2)
        throw domain_error("roc: need at least two grid points");
    std::vector<double> targets(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i)
        targets[static_cast<std::size_t>(i)] = 0.01 + (0.99 - 0.01) * i / (n_points - 1);
    return targets;
}

// Partition of sensing instants into weight regimes: instants whose stale
// gains agree share one H0 law and therefore one threshold row.  Uniform
// weighting collapses everything to a single regime.
struct RegimeSplit {
    std::vector<int> reps;         // one representative instant per regime
    std::vector<int> phase_regime; // [phase] -> regime index
};

inline RegimeSplit split_regimes(const PhaseGains& pg, WeightPolicy policy) {
    const int phases = static_cast<int>(pg.fresh.size());
    RegimeSplit rs;
    rs.phase_regime.assign(static_cast<std::size_t>(phases), 0);
    for (int s = 0; s < phases; ++s) {
        int g = -1;
        if (policy.mode == WeightMode::uniform) {
            g = rs.reps.empty() ? -1 : 0;
        } else {
            for (std::size_t r = 0; r < rs.reps.size() && g < 0; ++r) {
                const std::size_t p = static_cast<std::size_t>(rs.reps[r]);
                if (pg.degenerate[static_cast<std::size_t>(s)] == pg.degenerate[p] &&
                    pg.stale[static_cast<std::size_t>(s)] == pg.stale[p])
                    g = static_cast<int>(r);
            }
        }
        if (g < 0) {
            g = static_cast<int>(rs.reps.size());
            rs.reps.push_back(s);
        }
        rs.phase_regime[static_cast<std::size_t>(s)] = g;
    }
    return rs;
}

inline TauTable threshold_table(const Scenario& sc, DetectorKind kind, int n_points,
                                long trials, std::uint64_t seed, WeightPolicy policy,
                                const MobilityPlan* plan, const SeriesControl& ctrl = {}) {
    const PhaseGains pg = phase_gains(sc, plan);

    TauTable tb;
    tb.targets = pf_targets(n_points);

    if (plan && !plan->average) {
        // Only one sensing instant is exercised; one row serves it.
        tb.rows.push_back(regime_row(sc, kind, stale_weights(pg, plan->instant, policy),
                                     tb.targets, trials, seed, 0, ctrl));
        return tb;
    }

    const RegimeSplit rs = split_regimes(pg, policy);
    tb.phase_regime = rs.phase_regime;
    for (std::size_t r = 0; r < rs.reps.size(); ++r)
        tb.rows.push_back(regime_row(sc, kind, stale_weights(pg, rs.reps[r], policy),
                                     tb.targets, trials, seed, r, ctrl));
    if (tb.rows.size() == 1)
        tb.phase_regime.clear();
    return tb;
}

// Empirical exceedance rates against the table's per-instant thresholds, one
// pair of hypothesis blocks per trial (shared-sample thresholding).  Each
// trial draws from its own substream of (seed, trial index), in a fixed
// order: per-user fading, then the H1 window, then the H0 window.  Identical
// inputs give identical outputs for any worker count, because trials never
// share random state and the merge is an integer sum.
inline std::vector<RateEstimate> run_rates(const Scenario& sc, DetectorKind kind,
                                           const TauTable& tb, long trials,
                                           std::uint64_t seed, WeightPolicy policy,
                                           const MobilityPlan* plan, int workers) {
    if (trials < 100)
        throw domain_error("estimate_rates: need at least 100 trials");
    if (tb.ntau() == 0)
        throw domain_error("estimate_rates: empty threshold grid");

    const PhaseGains pg = phase_gains(sc, plan);
    const int phases = static_cast<int>(pg.fresh.size());
    const std::size_t m = sc.sus.size();
    const std::size_t ntau = tb.ntau();
    const std::vector<double> flat(m, 1.0 / static_cast<double>(m));

    if (workers <= 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<int>(std::min<long>(workers, trials));

    std::vector<std::vector<long long>> h0w(workers), h1w(workers);
    auto run = [&](int wk, long lo, long hi) {
        std::vector<long long>& h0 = h0w[static_cast<std::size_t>(wk)];
        std::vector<long long>& h1 = h1w[static_cast<std::size_t>(wk)];
        h0.assign(ntau, 0);
        h1.assign(ntau, 0);
        std::vector<std::complex<double>> h(m), alphas(m), walphas(m);
        for (long t = lo; t < hi; ++t) {
            const int s = (plan && !plan->average)
                              ? plan->instant
                              : static_cast<int>(t % phases);
            const double* taus = tb.row(s);
            rng gen = rng::substream(seed, {kTrialStream,
                                            static_cast<std::uint64_t>(t)});
            for (std::size_t i = 0; i < m; ++i) h[i] = draw_fading(sc.fading, gen);

            std::vector<double> w;
            if (policy.mode == WeightMode::uniform || pg.degenerate[s]) {
                w = flat;
            } else {
                for (std::size_t i = 0; i < m; ++i)
                    walphas[i] = policy.use_fading
                                     ? pg.stale[s][i] * h[i]
                                     : std::complex<double>(pg.stale[s][i], 0.0);
                w = weights(walphas);
            }
            for (std::size_t i = 0; i < m; ++i) alphas[i] = pg.fresh[s][i] * h[i];

            const SampleBlock b1 = synth_block(alphas, sc.radio.sigma_s2,
                                               sc.radio.sigma_n2, sc.radio.k, true, gen);
            const SampleBlock b0 = synth_block(alphas, sc.radio.sigma_s2,
                                               sc.radio.sigma_n2, sc.radio.k, false, gen);
            const double s1 = detector_statistic(kind, b1, w);
            const double s0 = detector_statistic(kind, b0, w);
            for (std::size_t j = 0; j < ntau; ++j) {
                h1[j] += decide(s1, taus[j]);
                h0[j] += decide(s0, taus[j]);
            }
        }
    };

    if (workers == 1) {
        run(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const long chunk = (trials + workers - 1) / workers;
        for (int wk = 0; wk < workers; ++wk) {
            const long lo = wk * chunk;
            const long hi = std::min<long>(trials, lo + chunk);
            pool.emplace_back(run, wk, lo, hi);
        }
        for (std::thread& th : pool) th.join();
    }

    std::vector<RateEstimate> out(ntau);
    const double n = static_cast<double>(trials);
    for (std::size_t j = 0; j < ntau; ++j) {
        long long c0 = 0, c1 = 0;
        for (int wk = 0; wk < workers; ++wk) {
            c0 += h0w[static_cast<std::size_t>(wk)].empty()
                      ? 0
                      : h0w[static_cast<std::size_t>(wk)][j];
            c1 += h1w[static_cast<std::size_t>(wk)].empty()
                      ? 0
                      : h1w[static_cast<std::size_t>(wk)][j];
        }
        RateEstimate& r = out[j];
        r.pf = static_cast<double>(c0) / n;
        r.pd = static_cast<double>(c1) / n;
        r.pf_ci = 1.96 * std::sqrt(r.pf * (1.0 - r.pf) / n);
        r.pd_ci = 1.96 * std::sqrt(r.pd * (1.0 - r.pd) / n);
    }
    return out;
}

inline RocCurve assemble(const Scenario& sc, DetectorKind kind, const TauTable& tb,
                         long trials, std::uint64_t seed, WeightPolicy policy,
                         const MobilityPlan* plan, int workers) {
    const std::vector<RateEstimate> est =
        run_rates(sc, kind, tb, trials, seed, policy, plan, workers);
    RocCurve curve;
    const std::size_t ntau = tb.ntau();
    curve.points.resize(ntau);
    for (std::size_t i = 0; i < ntau; ++i) {
        double tau;
        if (tb.phase_regime.empty()) {
            tau = tb.rows[0][i];
        } else {
            // Representative threshold: the per-instant average.
            double acc = 0.0;
            for (int r : tb.phase_regime) acc += tb.rows[static_cast<std::size_t>(r)][i];
            tau = acc / static_cast<double>(tb.phase_regime.size());
        }
        curve.points[i] = {tau, est[i].pf, est[i].pf_ci, est[i].pd, est[i].pd_ci};
    }
    curve.meta.detector = kind == DetectorKind::wed ? "wed" : "wevd";
    curve.meta.weights = weight_mode_name(policy.mode);
    curve.meta.source = "montecarlo";
    curve.meta.seed = seed;
    curve.meta.trials = trials;
    return curve;
}

// The exact laws are nonincreasing in the threshold, but a truncated-series
// evaluation may wobble by up to its residual certificate (~1e-10 near
// saturation).  Project the columns back onto the monotone cone; the
// adjustment never exceeds the certified series error.
inline void restore_monotone(RocCurve& curve) {
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        RocPoint& p = curve.points[i];
        const RocPoint& q = curve.points[i - 1];
        p.pf = std::max(p.pf, q.pf);
        p.pd = std::max(p.pd, q.pd);
    }
}

} // namespace detail

// Empirical exceedance rates at an explicit threshold grid, evaluated in the
// given order (every sensing instant shares the same grid).
inline std::vector<RateEstimate> estimate_rates(const Scenario& sc, DetectorKind kind,
                                                const std::vector<double>& taus,
                                                long trials, std::uint64_t seed,
                                                WeightPolicy policy = {},
                                                const MobilityPlan* plan = nullptr,
                                                int workers = 0) {
    validate(sc);
    if (taus.empty())
        throw domain_error("estimate_rates: empty threshold grid");
    for (double t : taus)
        if (!(t >= 0.0))
            throw domain_error("estimate_rates: thresholds must be >= 0");
    detail::TauTable tb;
    tb.rows.push_back(taus);
    return detail::run_rates(sc, kind, tb, trials, seed, policy, plan, workers);
}

// Monte Carlo operating curve for the static scenario.
inline RocCurve roc(const Scenario& sc, DetectorKind kind, int n_points, long trials,
                    std::uint64_t seed, WeightPolicy policy = {}, int workers = 0,
                    const SeriesControl& ctrl = {}) {
    validate(sc);
    const detail::TauTable tb =
        detail::threshold_table(sc, kind, n_points, trials, seed, policy, nullptr, ctrl);
    return detail::assemble(sc, kind, tb, trials, seed, policy, nullptr, workers);
}

// Monte Carlo operating curve with moving users and stale weights.  At every
// sensing instant the detector derives weights and threshold from the same
// stale gain snapshot, holding the false-alarm rate at target throughout the
// horizon (constant-false-alarm operation).
inline RocCurve mobility_roc(const Scenario& sc, const MobilityPlan& plan,
                             DetectorKind kind, int n_points, long trials,
                             std::uint64_t seed, WeightPolicy policy = {},
                             int workers = 0, const SeriesControl& ctrl = {}) {
    validate(sc);
    detail::validate_plan(plan);
    const detail::TauTable tb =
        detail::threshold_table(sc, kind, n_points, trials, seed, policy, &plan, ctrl);
    return detail::assemble(sc, kind, tb, trials, seed, policy, &plan, workers);
}

// Closed-form curve over an explicit threshold grid, conditional on the
// deterministic link amplitudes (instant 0, no fading).  Confidence radii
// are zero by construction.
inline RocCurve analytic_curve(const Scenario& sc, DetectorKind kind,
                               const std::vector<double>& taus,
                               WeightPolicy policy = {},
                               const SeriesControl& ctrl = {}) {
    validate(sc);
    if (taus.empty())
        throw domain_error("analytic_curve: empty threshold grid");
    const detail::PhaseGains pg = detail::phase_gains(sc, nullptr);
    const std::vector<double> w = detail::planning_weights(sc, pg, policy);
    const std::size_t m = sc.sus.size();
    std::vector<std::complex<double>> alphas(m);
    for (std::size_t i = 0; i < m; ++i) alphas[i] = pg.fresh[0][i];

    std::vector<double> grid = taus;
    std::sort(grid.begin(), grid.end(), std::greater<>());
    RocCurve curve;
    curve.points.resize(grid.size());
    if (kind == DetectorKind::wed) {
        const GammaMixture h0 = wed_h0_mixture(w, sc.radio.sigma_n2, sc.radio.k, ctrl);
        const GammaMixture h1 = wed_h1_mixture(w, alphas, sc.radio.sigma_s2,
                                               sc.radio.sigma_n2, sc.radio.k, ctrl);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            curve.points[i].tau = grid[i];
            curve.points[i].pf = wed_pf_from(h0, sc.radio.k, grid[i]);
            curve.points[i].pd = wed_pf_from(h1, sc.radio.k, grid[i]);
        }
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            curve.points[i].tau = grid[i];
            curve.points[i].pf = wevd_pf(grid[i], w, sc.radio.sigma_n2, sc.radio.k);
            curve.points[i].pd = wevd_pd(grid[i], w, alphas, sc.radio.sigma_s2,
                                         sc.radio.sigma_n2, sc.radio.k);
        }
    }
    detail::restore_monotone(curve);
    curve.meta.detector = kind == DetectorKind::wed ? "wed" : "wevd";
    curve.meta.weights = weight_mode_name(policy.mode);
    curve.meta.source = "analytic";
    curve.meta.seed = sc.seed;
    curve.meta.trials = 0;
    return curve;
}

// Closed-form counterpart of mobility_roc: at every sensing instant the
// threshold is re-derived from the stale snapshot (so pf sits exactly on the
// grid targets) and the conditional detection probability under the fresh
// gains is averaged over the horizon.  Requires the analytic H0 law for
// every weight regime; throws where mobility_roc would fall back to pilot
// thresholds.  Deterministic fading only — with a random channel the Monte
// Carlo curve estimates a different (fading-averaged) quantity.
inline RocCurve analytic_mobility_curve(const Scenario& sc, const MobilityPlan& plan,
                                        DetectorKind kind, int n_points,
                                        WeightPolicy policy = {},
                                        const SeriesControl& ctrl = {}) {
    validate(sc);
    detail::validate_plan(plan);
    if (sc.fading.model != FadingModel::deterministic)
        throw domain_error("analytic mobility curve: needs the deterministic channel");
    const detail::PhaseGains pg = detail::phase_gains(sc, &plan);
    const std::vector<double> targets = detail::pf_targets(n_points);
    const std::size_t m = sc.sus.size();
    const std::size_t ntau = targets.size();

    std::vector<int> instants;
    if (plan.average) {
        instants.resize(pg.fresh.size());
        for (std::size_t s = 0; s < instants.size(); ++s)
            instants[s] = static_cast<int>(s);
    } else {
        instants.push_back(plan.instant);
    }

    const detail::RegimeSplit rs = detail::split_regimes(pg, policy);
    std::vector<std::vector<double>> rows(rs.reps.size());
    std::vector<bool> built(rs.reps.size(), false);
    std::vector<double> tau_acc(ntau, 0.0), pd_acc(ntau, 0.0);
    std::vector<std::complex<double>> alphas(m);
    for (int s : instants) {
        const std::size_t r = static_cast<std::size_t>(rs.phase_regime[s]);
        if (!built[r]) {
            rows[r] = detail::analytic_row(
                sc, kind, detail::stale_weights(pg, rs.reps[r], policy), targets, ctrl);
            built[r] = true;
        }
        const std::vector<double>& row = rows[r];
        const std::vector<double> w = detail::stale_weights(pg, s, policy);
        for (std::size_t i = 0; i < m; ++i) alphas[i] = pg.fresh[s][i];
        if (kind == DetectorKind::wed) {
            const GammaMixture h1 = wed_h1_mixture(w, alphas, sc.radio.sigma_s2,
                                                   sc.radio.sigma_n2, sc.radio.k, ctrl);
            for (std::size_t j = 0; j < ntau; ++j)
                pd_acc[j] += wed_pf_from(h1, sc.radio.k, row[j]);
        } else {
            for (std::size_t j = 0; j < ntau; ++j)
                pd_acc[j] += wevd_pd(row[j], w, alphas, sc.radio.sigma_s2,
                                     sc.radio.sigma_n2, sc.radio.k);
        }
        for (std::size_t j = 0; j < ntau; ++j) tau_acc[j] += row[j];
    }

    RocCurve curve;
    curve.points.resize(ntau);
    const double n = static_cast<double>(instants.size());
    for (std::size_t j = 0; j < ntau; ++j)
        curve.points[j] = {tau_acc[j] / n, targets[j], 0.0, pd_acc[j] / n, 0.0};
    detail::restore_monotone(curve);
    curve.meta.detector = kind == DetectorKind::wed ? "wed" : "wevd";
    curve.meta.weights = weight_mode_name(policy.mode);
    curve.meta.source = "analytic";
    curve.meta.seed = sc.seed;
    curve.meta.trials = 0;
    return curve;
}

// Linear interpolation of pd at a requested pf, for trend digests.  The
// curve's pf is nondecreasing; between grid points the curve is chorded.
inline double pd_at_pf(const RocCurve& curve, double pf) {
    if (curve.points.empty())
        throw domain_error("pd_at_pf: empty curve");
    const std::vector<RocPoint>& p = curve.points;
    if (pf <= p.front().pf)
        return p.front().pd;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (pf <= p[i].pf) {
            const double span = p[i].pf - p[i - 1].pf;
            if (span <= 0.0)
                return p[i].pd;
            const double f = (pf - p[i - 1].pf) / span;
            return p[i - 1].pd + f * (p[i].pd - p[i - 1].pd);
        }
    }
    return p.back().pd;
}

} // namespace wcss
