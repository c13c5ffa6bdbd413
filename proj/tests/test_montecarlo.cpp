// Copyright 2026 The alphaeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "alphaeta/montecarlo.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "alphaeta/report_json.hpp"
#include "oracles.hpp"

using namespace alphaeta;

namespace {

/// |observed - expected| within k standard deviations of a binomial count.
void expect_binomial(uint64_t observed, uint64_t n, double p, double k) {
    const double mean = p * static_cast<double>(n);
    const double sigma = std::sqrt(mean * (1 - p));
    EXPECT_NEAR(static_cast<double>(observed), mean, k * sigma) << "n=" << n << " p=" << p;
}

}  // namespace

TEST(wilson, interval_properties) {
    for (uint64_t n : {uint64_t{1}, uint64_t{10}, uint64_t{1000}, uint64_t{10000000}}) {
        for (uint64_t e : {uint64_t{0}, uint64_t{1}, n / 2, n}) {
            if (e > n) {
                continue;
            }
            auto b = BerEstimate::wilson(e, n);
            EXPECT_DOUBLE_EQ(b.p_hat, static_cast<double>(e) / static_cast<double>(n));
            EXPECT_LE(0.0, b.ci_low);
            EXPECT_LE(b.ci_low, b.p_hat);
            EXPECT_LE(b.p_hat, b.ci_high);
            EXPECT_LE(b.ci_high, 1.0);
        }
    }
    // 50 / 1000 at z = 2.5758: reference interval from the closed form.
    auto b = BerEstimate::wilson(50, 1000);
    EXPECT_NEAR(b.ci_low, 0.0350251, 1e-6);
    EXPECT_NEAR(b.ci_high, 0.0709070, 1e-6);
    EXPECT_THROW(BerEstimate::wilson(1, 0), std::invalid_argument);
    EXPECT_THROW(BerEstimate::wilson(3, 2), std::invalid_argument);
}

TEST(sampling, heterodyne_vacuum_moments) {
    Rng rng(1);
    const int n = 1000000;
    double sx = 0, sy = 0, sxx = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        auto z = sample_heterodyne(0, 0, rng);
        sx += z.real();
        sy += z.imag();
        sxx += z.real() * z.real();
        syy += z.imag() * z.imag();
    }
    const double tol_mean = 5 * std::sqrt(0.5 / n);
    const double tol_var = 5 * 0.5 * std::sqrt(2.0 / n);
    EXPECT_NEAR(sx / n, 0, tol_mean);
    EXPECT_NEAR(sy / n, 0, tol_mean);
    EXPECT_NEAR(sxx / n, 0.5, tol_var);
    EXPECT_NEAR(syy / n, 0.5, tol_var);
}

TEST(sampling, heterodyne_mean_follows_amplitude) {
    Rng rng(2);
    const int n = 1000000;
    std::complex<double> sum = 0;
    for (int i = 0; i < n; ++i) {
        sum += sample_heterodyne(4, kPi / 2, rng);
    }
    const double tol = 5 * std::sqrt(0.5 / n);
    EXPECT_NEAR(sum.real() / n, 0.0, tol);
    EXPECT_NEAR(sum.imag() / n, 2.0, tol);
}

TEST(sampling, heterodyne_sign_decision_matches_erfc) {
    Rng rng(3);
    const uint64_t n = 10000000;
    uint64_t errors = 0;
    for (uint64_t i = 0; i < n; ++i) {
        const bool send_pi = (i & 1) != 0;
        const auto z = sample_heterodyne(7, send_pi ? kPi : 0.0, rng);
        errors += static_cast<uint64_t>((z.real() < 0) != send_pi);
    }
    expect_binomial(errors, n, heterodyne_antipodal(7).exact, 3);
}

TEST(sampling, homodyne_moments_and_error) {
    Rng rng(4);
    const int n = 1000000;
    double s0 = 0, s0sq = 0, orth = 0;
    for (int i = 0; i < n; ++i) {
        const double x = sample_homodyne(0, 0, 0, rng);
        s0 += x;
        s0sq += x * x;
        orth += sample_homodyne(5, kPi / 2, 0, rng);
    }
    EXPECT_NEAR(s0sq / n - (s0 / n) * (s0 / n), 0.25, 5 * 0.25 * std::sqrt(2.0 / n));
    EXPECT_NEAR(orth / n, 0.0, 5 * 0.5 / std::sqrt(n));

    const uint64_t trials = 10000000;
    uint64_t errors = 0;
    for (uint64_t i = 0; i < trials; ++i) {
        errors += static_cast<uint64_t>(sample_homodyne(2, 0, 0, rng) < 0);
    }
    expect_binomial(errors, trials, homodyne_antipodal(2).exact, 3);
}

TEST(sampling, phase_vacuum_is_uniform) {
    Rng rng(5);
    PhaseSampler sampler(coherent_amplitudes(0, 0, 4));
    std::vector<double> xs(100000);
    for (auto &x : xs) {
        x = sampler.sample(rng);
        ASSERT_GE(x, -kPi);
        ASSERT_LT(x, kPi);
    }
    // 1% critical value of the one-sample KS statistic.
    EXPECT_LT(oracle::ks_uniform_circle(xs), 1.628 / std::sqrt(static_cast<double>(xs.size())));
}

TEST(sampling, phase_half_plane_error_matches_quadrature) {
    Rng rng(6);
    PhaseSampler sampler(coherent_amplitudes(7, 0));
    const uint64_t n = 10000000;
    uint64_t errors = 0;
    for (uint64_t i = 0; i < n; ++i) {
        errors += static_cast<uint64_t>(std::cos(sampler.sample(rng)) < 0);
    }
    expect_binomial(errors, n, canonical_phase_antipodal(7).exact, 3);
}

TEST(sampling, phase_mode_follows_state) {
    const double theta = 1.2;
    Rng rng(7);
    const CoherentVec v = coherent_amplitudes(7, theta);
    PhaseSampler sampler(v);
    const int bins = 256;
    std::vector<int> hist(bins, 0);
    std::complex<double> circular = 0;
    for (int i = 0; i < 200000; ++i) {
        const double x = sampler.sample(rng);
        circular += std::polar(1.0, x);
        hist[static_cast<size_t>((x + kPi) / kTwoPi * bins) % bins]++;
    }
    const auto peak = std::distance(hist.begin(), std::max_element(hist.begin(), hist.end()));
    const double bin_width = kTwoPi / bins;
    EXPECT_LE(std::abs(-kPi + (peak + 0.5) * bin_width - theta), 1.5 * bin_width);
    EXPECT_NEAR(std::arg(circular), theta, 2 * kTwoPi / 4096);
    // One-shot helper draws from the same distribution.
    Rng again(8);
    EXPECT_LT(angular_distance(sample_phase(v, again), theta), 1.5);
}

TEST(simulation, heterodyne_bob_matches_closed_form) {
    SimConfig cfg;
    cfg.mean_photons = 7;
    cfg.m_bases = 32;
    cfg.bob.kind = ReceiverKind::Heterodyne;
    cfg.trials = 1000000;
    TrialReport r = run_simulation(cfg);
    EXPECT_FALSE(r.eve.has_value());
    EXPECT_NEAR(r.analytic_bob, 0.5 * std::erfc(std::sqrt(7.0)), 1e-18);
    EXPECT_TRUE(r.bob.contains(r.analytic_bob)) << r.bob.p_hat;
}

TEST(simulation, optimal_bob_is_nearly_error_free) {
    SimConfig cfg;
    cfg.mean_photons = 7;
    cfg.m_bases = 32;
    cfg.trials = 1000000;
    TrialReport r = run_simulation(cfg);
    EXPECT_LE(r.bob.errors, 1u);
    EXPECT_NEAR(r.analytic_bob, 1.7286e-13, 1e-16);
}

TEST(simulation, no_signal_gives_coin_flips) {
    for (auto bob : {ReceiverKind::OptimalKeyed, ReceiverKind::Heterodyne, ReceiverKind::Homodyne,
                     ReceiverKind::CanonicalPhase}) {
        SimConfig cfg;
        cfg.mean_photons = 0;
        cfg.m_bases = 8;
        cfg.bob.kind = bob;
        cfg.eve = EveStrategy::PhaseDeferred;
        cfg.trials = 100000;
        TrialReport r = run_simulation(cfg);
        EXPECT_TRUE(r.bob.contains(0.5)) << to_string(bob) << " " << r.bob.p_hat;
        EXPECT_TRUE(r.eve->contains(0.5)) << r.eve->p_hat;
    }
}

TEST(simulation, physical_receivers_agree_with_analytic) {
    struct Case {
        ReceiverKind bob;
        EveStrategy eve;
        double s;
        uint64_t trials;
    };
    // Expected error counts are all well above 50.
    for (const Case &c : {Case{ReceiverKind::Homodyne, EveStrategy::HeterodyneDeferred, 2.0, 1000000},
                          Case{ReceiverKind::CanonicalPhase, EveStrategy::PhaseDeferred, 3.0, 1000000},
                          Case{ReceiverKind::Heterodyne, EveStrategy::PhaseDeferred, 1.0, 200000}}) {
        SimConfig cfg;
        cfg.mean_photons = c.s;
        cfg.m_bases = 16;
        cfg.bob.kind = c.bob;
        cfg.eve = c.eve;
        cfg.trials = c.trials;
        cfg.master_seed = 11;
        TrialReport r = run_simulation(cfg);
        EXPECT_TRUE(r.bob.contains(r.analytic_bob)) << to_string(c.bob) << " " << r.bob.p_hat << " vs " << r.analytic_bob;
        EXPECT_TRUE(r.eve->contains(*r.analytic_eve)) << to_string(c.eve) << " " << r.eve->p_hat;
        EXPECT_EQ(r.analytic_eve_kind, "deferred-exact");
    }
}

TEST(simulation, eve_phase_deferred_worse_than_keyed_bob) {
    for (double s : {1.0, 2.0, 4.0, 6.0, 8.0}) {
        SimConfig cfg;
        cfg.mean_photons = s;
        cfg.eve = EveStrategy::PhaseDeferred;
        cfg.trials = 1000000;
        cfg.master_seed = 99;
        TrialReport r = run_simulation(cfg);
        EXPECT_GT(r.eve->p_hat, r.analytic_bob) << "S=" << s;
    }
}

TEST(simulation, nearest_point_eve_is_confused) {
    SimConfig cfg;
    cfg.mean_photons = 7;
    cfg.m_bases = 64;
    cfg.eve = EveStrategy::NearestPoint;
    cfg.trials = 100000;
    TrialReport r = run_simulation(cfg);
    EXPECT_GE(r.eve->p_hat, 0.25);
    EXPECT_EQ(r.analytic_eve_kind, "nokey-helstrom-bound");
    EXPECT_GE(r.eve->p_hat, *r.analytic_eve - 0.01);
}

TEST(simulation, dsr_keeps_bob_decodable) {
    SimConfig cfg;
    cfg.mean_photons = 7;
    cfg.m_bases = 64;
    cfg.bob.kind = ReceiverKind::Homodyne;
    cfg.dsr_d = 3;
    cfg.trials = 200000;
    TrialReport r = run_simulation(cfg);
    // Dither rotates the point by at most 3 pi / 64, so Bob stays close to
    // the undithered homodyne error and far from coin flipping.
    EXPECT_LT(r.bob.p_hat, 1e-4);
}

TEST(simulation, rejects_bad_configs) {
    SimConfig cfg;
    cfg.dsr_d = 1;
    EXPECT_THROW(run_simulation(cfg), std::invalid_argument);  // analytic flip + DSR
    cfg.bob.kind = ReceiverKind::Heterodyne;
    cfg.dsr_d = 16;
    EXPECT_THROW(run_simulation(cfg), std::invalid_argument);  // d >= M/2
    cfg.dsr_d = 0;
    cfg.trials = 0;
    EXPECT_THROW(run_simulation(cfg), std::invalid_argument);
    cfg.trials = 10;
    cfg.m_bases = 12;
    EXPECT_THROW(run_simulation(cfg), std::invalid_argument);
    cfg.m_bases = 8;
    cfg.seed_key = "0";
    EXPECT_THROW(run_simulation(cfg), std::invalid_argument);
    cfg.seed_key = "1";
    cfg.mean_photons = -1;
    EXPECT_THROW(run_simulation(cfg), std::invalid_argument);
}

TEST(simulation, deterministic_across_thread_counts) {
    SimConfig cfg;
    cfg.mean_photons = 3;
    cfg.m_bases = 16;
    cfg.bob.kind = ReceiverKind::CanonicalPhase;
    cfg.eve = EveStrategy::HeterodyneDeferred;
    cfg.trials = 1500000;  // spans two keystream blocks
    cfg.master_seed = 424242;
    cfg.dsr_d = 2;
    cfg.threads = 1;
    const std::string serial = dump_json(to_json(run_simulation(cfg)));
    cfg.threads = 7;
    const std::string parallel = dump_json(to_json(run_simulation(cfg)));
    EXPECT_EQ(serial, parallel);

    cfg.master_seed = 424243;
    EXPECT_NE(dump_json(to_json(run_simulation(cfg))), parallel);
}

TEST(rng, trial_streams_are_stable) {
    Rng a = Rng::for_trial(1, 5);
    Rng b = Rng::for_trial(1, 5);
    Rng c = Rng::for_trial(1, 6);
    EXPECT_EQ(a(), b());
    EXPECT_NE(a(), c());
    Rng d(0);
    for (int i = 0; i < 1000; ++i) {
        const double u = d.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(d.uniform_below(3), 3u);
    }
}
