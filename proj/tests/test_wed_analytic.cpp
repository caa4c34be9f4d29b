#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "wcss/detectors.hpp"
#include "wcss/wed_analytic.hpp"

using namespace wcss;

TEST_CASE("false-alarm curve boundary values") {
    const std::vector<double> w{0.3, 0.7};
    CHECK(wed_pf(0.0, w, 1.0, 4) == Catch::Approx(1.0).epsilon(1e-12));
    // Far in the tail the value is dominated by the truncated series mass,
    // which is bounded by the mixture's tail tolerance.
    CHECK(wed_pf(1e9, w, 1.0, 4) == Catch::Approx(0.0).margin(SeriesControl{}.tail_tol));
}

TEST_CASE("single-user single-sample false alarm is exponential") {
    // Lambda = |n|^2 with E = sigma_n2: Pf(tau) = exp(-tau / sigma_n2).
    const std::vector<double> w{1.0};
    CHECK(wed_pf(std::log(2.0), w, 1.0, 1) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(wed_pf(2.0, w, 1.0, 1) == Catch::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(wed_pf(1.0, w, 0.5, 1) == Catch::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("two equal users at one sample form an Erlang tail") {
    // K=1, w = (1/2, 1/2): 2*Lambda ~ Gamma(2, 1) in units of sigma_n2/2...
    // equivalently Pf(tau) = (1 + 2 tau) exp(-2 tau).
    const std::vector<double> w{0.5, 0.5};
    const double tau = 0.5;
    CHECK(wed_pf(tau, w, 1.0, 1) == Catch::Approx(2.0 / std::exp(1.0)).epsilon(1e-12));
    CHECK(wed_pf(1.0, w, 1.0, 1) == Catch::Approx(3.0 * std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("equal weights collapse to the plain energy detector law") {
    // With w_m = 1/M the statistic is the unweighted average energy, whose
    // scaled form K M Lambda / sigma_n2 ~ Gamma(K M, 1).
    for (int m : {2, 5}) {
        for (int k : {3, 16}) {
            const std::vector<double> w(m, 1.0 / m);
            const double sigma_n2 = 2.5e-9;
            for (double t : {0.6, 0.9, 1.0, 1.1, 1.5}) {
                const double tau = t * sigma_n2 / m;
                const double direct =
                    1.0 - reg_lower_gamma(static_cast<double>(k) * m,
                                          static_cast<double>(k) * tau * m / sigma_n2);
                CHECK(wed_pf(tau, w, sigma_n2, k) == Catch::Approx(direct).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("false-alarm curve matches Monte Carlo across sizes") {
    rng gen(2024);
    for (int m : {1, 2, 3}) {
        for (int k : {1, 2, 4}) {
            // Uneven weights keyed off the size so every case differs.
            std::vector<double> w(m);
            double tot = 0.0;
            for (int i = 0; i < m; ++i) tot += (w[i] = 1.0 + 0.7 * i);
            for (double& v : w) v /= tot;
            const double sigma_n2 = 1.0;
            const std::vector<cplx> alphas(m, cplx{0.0, 0.0});

            const int trials = 200000;
            std::vector<double> stats(trials);
            for (int t = 0; t < trials; ++t) {
                SampleBlock b = synth_block(alphas, 1.0, sigma_n2, k, false, gen);
                stats[t] = wed_statistic(b, w);
            }
            for (double tau : {0.3, 0.6, 1.0, 1.4, 2.2}) {
                int above = 0;
                for (double s : stats)
                    if (s > tau) ++above;
                const double emp = static_cast<double>(above) / trials;
                const double pf = wed_pf(tau, w, sigma_n2, k);
                const double se = std::sqrt(std::max(pf * (1.0 - pf), 1e-9) / trials);
                INFO("m=" << m << " k=" << k << " tau=" << tau
                          << " emp=" << emp << " analytic=" << pf);
                CHECK(std::fabs(emp - pf) <= 4.0 * se + 1e-4);
            }
        }
    }
}

TEST_CASE("energy correlation matrix identities") {
    rng gen(555);
    for (int rep = 0; rep < 1000; ++rep) {
        std::vector<cplx> alphas(3);
        for (auto& a : alphas) a = gen.cgauss(1.0);
        const double s2 = 0.5 + gen.uniform01();
        const double n2 = 0.1 + gen.uniform01();
        cmat c = wed_corr(alphas, s2, n2);
        for (int i = 0; i < 3; ++i) {
            CHECK(c.at(i, i) == cplx{1.0, 0.0});
            for (int j = i + 1; j < 3; ++j) {
                // sqrt(rho_ij) with rho = g_i g_j / ((g_i + 1)(g_j + 1)).
                const double gi = std::norm(alphas[i]) * s2 / n2;
                const double gj = std::norm(alphas[j]) * s2 / n2;
                const double want = std::sqrt(gi * gj / ((gi + 1.0) * (gj + 1.0)));
                CHECK(c.at(i, j).real() == Catch::Approx(want).epsilon(1e-12));
                CHECK(c.at(i, j).imag() == 0.0);
                CHECK(c.at(j, i) == c.at(i, j));
                CHECK(c.at(i, j).real() >= 0.0);
                CHECK(c.at(i, j).real() < 1.0);
            }
        }
    }
}

TEST_CASE("vanishing amplitudes reduce detection to false alarm") {
    const std::vector<double> w{0.2, 0.5, 0.3};
    const std::vector<cplx> zero(3, cplx{0.0, 0.0});
    // wed_h1_scales rejects zero amplitudes only through the guard in
    // wed_corr's rho (0/den = 0), so the scales equal the H0 scales exactly.
    const auto scales = wed_h1_scales(w, zero, 1.0, 1e-9);
    std::vector<double> h0(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) h0[i] = 1e-9 * w[i];
    std::sort(h0.begin(), h0.end());
    for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(scales[i] == Catch::Approx(h0[i]).epsilon(1e-12));

    for (double tau : {0.5e-9, 1.0e-9, 2.0e-9})
        CHECK(wed_pd(tau, w, zero, 1.0, 1e-9, 4) ==
              Catch::Approx(wed_pf(tau, w, 1e-9, 4)).epsilon(1e-10));
}

TEST_CASE("single-user detection has a closed form") {
    // M=1, K=1: Lambda = |alpha s + n|^2 ~ Exp(mean = g + 1), so
    // Pd(tau) = exp(-tau / (g + 1)); with g = 1, Pd(2 ln 2) = 0.5.
    const std::vector<double> w{1.0};
    const std::vector<cplx> a{{1.0, 0.0}};
    CHECK(wed_pd(2.0 * std::log(2.0), w, a, 1.0, 1.0, 1) ==
          Catch::Approx(0.5).epsilon(1e-12));
    CHECK(wed_pd(4.0, w, a, 1.0, 1.0, 1) == Catch::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("detection probability matches Monte Carlo with correlated energies") {
    const std::vector<double> w{0.6, 0.4};
    const std::vector<cplx> alphas{{1.2, 0.0}, {0.0, -0.7}};
    const double s2 = 1.0, n2 = 1.0;
    const int k = 4, trials = 300000;
    rng gen(91);
    std::vector<double> stats(trials);
    for (int t = 0; t < trials; ++t) {
        SampleBlock b = synth_block(alphas, s2, n2, k, true, gen);
        stats[t] = wed_statistic(b, w);
    }
    for (double tau : {1.0, 1.8, 2.6, 3.4}) {
        int above = 0;
        for (double s : stats)
            if (s > tau) ++above;
        const double emp = static_cast<double>(above) / trials;
        const double pd = wed_pd(tau, w, alphas, s2, n2, k);
        const double se = std::sqrt(std::max(pd * (1.0 - pd), 1e-9) / trials);
        INFO("tau=" << tau << " emp=" << emp << " analytic=" << pd);
        CHECK(std::fabs(emp - pd) <= 4.0 * se + 1e-4);
    }
}

TEST_CASE("analytic laws reject inconsistent arguments") {
    CHECK_THROWS_AS(wed_pf(1.0, {}, 1.0, 4), domain_error);
    CHECK_THROWS_AS(wed_pf(1.0, {0.5, -0.5}, 1.0, 4), domain_error);
    CHECK_THROWS_AS(wed_pf(1.0, {1.0}, 0.0, 4), domain_error);
    CHECK_THROWS_AS(wed_pf(1.0, {1.0}, 1.0, 0), domain_error);
    CHECK_THROWS_AS(wed_h1_scales({0.5, 0.5}, {{1.0, 0.0}}, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(wed_corr({}, 1.0, 1.0), domain_error);
}
