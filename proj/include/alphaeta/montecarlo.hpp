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

// End-to-end trial engine.
//
// Quadrature convention: x = (a + a^dagger)/2, so the vacuum variance is 1/4
// per quadrature. A homodyne outcome has variance 1/4; heterodyne measures
// both quadratures with one extra vacuum unit, i.e. variance 1/2 each.
// With this convention the keyed antipodal error rates are erfc(sqrt(2S))/2
// (homodyne) and erfc(sqrt(S))/2 (heterodyne).

#ifndef ALPHAETA_MONTECARLO_HPP
#define ALPHAETA_MONTECARLO_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphaeta/cipher.hpp"
#include "alphaeta/fock.hpp"
#include "alphaeta/receivers.hpp"
#include "alphaeta/rng.hpp"

namespace alphaeta {

enum class EveStrategy {
    None,
    /// Heterodyne now, keyed half-plane decision once the basis is known.
    HeterodyneDeferred,
    /// Canonical phase now, keyed half-plane decision once the basis is known.
    PhaseDeferred,
    /// Heterodyne, then the bit label of the nearest of all 2M points. The
    /// key is never used.
    NearestPoint,
};

std::string_view to_string(EveStrategy strategy);
/// Accepts "none", "heterodyne-deferred", "phase-deferred", "nearest-point".
EveStrategy parse_eve_strategy(std::string_view text);

/// Two-sided 99% standard normal quantile.
inline constexpr double kWilsonZ99 = 2.5758293035489004;

struct BerEstimate {
    uint64_t errors = 0;
    uint64_t trials = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 1;

    /// Wilson score interval at the given normal quantile.
    static BerEstimate wilson(uint64_t errors, uint64_t trials, double z = kWilsonZ99);
    bool contains(double p) const { return ci_low <= p && p <= ci_high; }
};

struct SimConfig {
    double mean_photons = 7.0;
    size_t m_bases = 32;
    Mapping mapping = Mapping::Alternating;
    std::string seed_key = "9E3779B9";
    ReceiverModel bob{};
    EveStrategy eve = EveStrategy::None;
    uint64_t trials = 1000000;
    uint64_t master_seed = 1;
    size_t dsr_d = 0;
    /// Worker threads; 0 picks the hardware concurrency. Does not affect
    /// results.
    unsigned threads = 0;

    /// Throws std::invalid_argument on any rejected combination.
    void validate() const;
};

struct TrialReport {
    SimConfig config;
    BerEstimate bob;
    std::optional<BerEstimate> eve;
    double analytic_bob = 0.5;
    std::optional<double> analytic_eve;
    /// What analytic_eve means: "deferred-exact" or "nokey-helstrom-bound".
    std::string analytic_eve_kind;
};

/// z = sqrt(S) e^{i phi} + g, g with independent N(0, 1/2) parts.
std::complex<double> sample_heterodyne(double mean_photons, double phase, Rng &rng);

/// x = sqrt(S) cos(phase_signal - phase_lo) + g, g ~ N(0, 1/4).
double sample_homodyne(double mean_photons, double phase_signal, double phase_lo, Rng &rng);

/// Inverse-CDF sampler for the canonical phase distribution of a state.
///
/// The density is tabulated once; each cell between adjacent grid points
/// carries its trapezoid mass and is sampled uniformly, so the probability
/// of any arc whose ends are grid points equals its trapezoid quadrature.
class PhaseSampler {
   public:
    PhaseSampler(const CoherentVec &v, size_t resolution = kDefaultPhaseResolution);

    double sample(Rng &rng) const;
    /// Sample for the same state rotated by `offset`.
    double sample_rotated(double offset, Rng &rng) const;

   private:
    double grid_start_ = 0;
    double step_ = 0;
    std::vector<double> cumulative_;
};

/// One-off phase draw from the canonical distribution of v.
double sample_phase(const CoherentVec &v, Rng &rng, size_t resolution = kDefaultPhaseResolution);

TrialReport run_simulation(const SimConfig &config);

}  // namespace alphaeta

#endif
