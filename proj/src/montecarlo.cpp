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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "alphaeta/angles.hpp"

namespace alphaeta {

namespace {

// Bases are drawn serially from the keystream one block at a time; the
// trials inside a block are then split across workers.
constexpr uint64_t kBlockTrials = uint64_t{1} << 20;
constexpr uint64_t kMinTrialsPerWorker = 8192;

struct ErrorCounts {
    uint64_t bob = 0;
    uint64_t eve = 0;
};

/// Everything a worker needs that does not change between trials.
struct TrialContext {
    const SimConfig &config;
    Constellation constellation;
    double flip_probability = 0;
    std::optional<PhaseSampler> phase_sampler;
};

int keyed_bit_from_heterodyne(std::complex<double> z, size_t basis, const Constellation &c) {
    return decide_in_basis(std::arg(z), basis, c);
}

int nearest_point_bit(std::complex<double> z, const Constellation &c) {
    const auto n_points = static_cast<long long>(c.size());
    const double scaled = std::arg(z) * static_cast<double>(c.m_bases()) / kPi;
    long long k = std::llround(scaled) % n_points;
    if (k < 0) {
        k += n_points;
    }
    return c.bit_of(static_cast<size_t>(k));
}

ErrorCounts run_trials(const TrialContext &ctx, uint64_t first_trial, const std::vector<uint16_t> &bases,
                       size_t begin, size_t end) {
    const SimConfig &cfg = ctx.config;
    const Constellation &c = ctx.constellation;
    const double s = cfg.mean_photons;
    ErrorCounts counts;

    for (size_t i = begin; i < end; ++i) {
        Rng rng = Rng::for_trial(cfg.master_seed, first_trial + i);
        const int bit = rng.bit() ? 1 : 0;
        const size_t basis = bases[i];
        size_t j = encode(bit, basis, c);
        if (cfg.dsr_d > 0) {
            j = dsr_offset(rng, cfg.dsr_d, j, c.m_bases());
        }
        const double theta = c.phase(j);

        int bob_bit = 0;
        switch (cfg.bob.kind) {
            case ReceiverKind::OptimalKeyed:
                bob_bit = bit ^ (rng.uniform01() < ctx.flip_probability ? 1 : 0);
                break;
            case ReceiverKind::Heterodyne:
                bob_bit = keyed_bit_from_heterodyne(sample_heterodyne(s, theta, rng), basis, c);
                break;
            case ReceiverKind::Homodyne: {
                const double x = sample_homodyne(s, theta, c.phase(basis), rng);
                bob_bit = c.bit_of(x >= 0 ? basis : basis + c.m_bases());
                break;
            }
            case ReceiverKind::CanonicalPhase:
                bob_bit = decide_in_basis(ctx.phase_sampler->sample_rotated(theta, rng), basis, c);
                break;
        }
        counts.bob += static_cast<uint64_t>(bob_bit != bit);

        // Eve's copy carries its own quantum noise; the basis is used only
        // after her measurement (deferred strategies) or never.
        int eve_bit = bit;
        switch (cfg.eve) {
            case EveStrategy::None:
                break;
            case EveStrategy::HeterodyneDeferred:
                eve_bit = keyed_bit_from_heterodyne(sample_heterodyne(s, theta, rng), basis, c);
                break;
            case EveStrategy::PhaseDeferred:
                eve_bit = decide_in_basis(ctx.phase_sampler->sample_rotated(theta, rng), basis, c);
                break;
            case EveStrategy::NearestPoint:
                eve_bit = nearest_point_bit(sample_heterodyne(s, theta, rng), c);
                break;
        }
        counts.eve += static_cast<uint64_t>(eve_bit != bit);
    }
    return counts;
}

unsigned worker_count(unsigned requested, uint64_t trials) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    const uint64_t useful = std::max<uint64_t>(1, trials / kMinTrialsPerWorker);
    return static_cast<unsigned>(std::min<uint64_t>(n, useful));
}

}  // namespace

std::string_view to_string(EveStrategy strategy) {
    switch (strategy) {
        case EveStrategy::None:
            return "none";
        case EveStrategy::HeterodyneDeferred:
            return "heterodyne-deferred";
        case EveStrategy::PhaseDeferred:
            return "phase-deferred";
        case EveStrategy::NearestPoint:
            return "nearest-point";
    }
    return "unknown";
}

EveStrategy parse_eve_strategy(std::string_view text) {
    if (text == "none") {
        return EveStrategy::None;
    }
    if (text == "heterodyne-deferred") {
        return EveStrategy::HeterodyneDeferred;
    }
    if (text == "phase-deferred") {
        return EveStrategy::PhaseDeferred;
    }
    if (text == "nearest-point") {
        return EveStrategy::NearestPoint;
    }
    throw std::invalid_argument("unknown Eve strategy '" + std::string(text) +
                                "' (expected none, heterodyne-deferred, phase-deferred or nearest-point)");
}

BerEstimate BerEstimate::wilson(uint64_t errors, uint64_t trials, double z) {
    if (trials == 0) {
        throw std::invalid_argument("BerEstimate: no trials");
    }
    if (errors > trials) {
        throw std::invalid_argument("BerEstimate: more errors than trials");
    }
    BerEstimate e;
    e.errors = errors;
    e.trials = trials;
    const auto n = static_cast<double>(trials);
    e.p_hat = static_cast<double>(errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (e.p_hat + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(e.p_hat * (1.0 - e.p_hat) / n + z2 / (4.0 * n * n));
    e.ci_low = std::clamp(center - half, 0.0, e.p_hat);
    e.ci_high = std::clamp(center + half, e.p_hat, 1.0);
    return e;
}

void SimConfig::validate() const {
    if (!(mean_photons >= 0) || !std::isfinite(mean_photons)) {
        throw std::invalid_argument("S must be finite and non-negative");
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    Constellation constellation(m_bases, mapping);
    (void)KeystreamGen::from_hex(seed_key);
    validate_dsr(dsr_d, m_bases);
    if (bob.kind == ReceiverKind::OptimalKeyed && dsr_d > 0) {
        throw std::invalid_argument(
            "the optimal keyed receiver is simulated as an analytic flip, which is not valid with DSR (dsr_d > 0)");
    }
    const bool needs_phase = bob.kind == ReceiverKind::CanonicalPhase || eve == EveStrategy::PhaseDeferred;
    if (needs_phase) {
        if (mean_photons > kMaxPhaseMeanPhotons) {
            throw std::invalid_argument("canonical phase sampling requires S <= " +
                                        std::to_string(kMaxPhaseMeanPhotons));
        }
        if (bob.resolution < kDefaultPhaseResolution || bob.resolution % 4 != 0) {
            throw std::invalid_argument("phase resolution must be a multiple of 4 and at least 4096");
        }
    }
}

std::complex<double> sample_heterodyne(double mean_photons, double phase, Rng &rng) {
    double gx;
    double gy;
    rng.standard_normal_pair(gx, gy);
    const double sigma = std::sqrt(0.5);
    return std::polar(std::sqrt(mean_photons), phase) + std::complex<double>(sigma * gx, sigma * gy);
}

double sample_homodyne(double mean_photons, double phase_signal, double phase_lo, Rng &rng) {
    return std::sqrt(mean_photons) * std::cos(phase_signal - phase_lo) + 0.5 * rng.standard_normal();
}

PhaseSampler::PhaseSampler(const CoherentVec &v, size_t resolution) {
    const PhaseDistribution dist = phase_distribution(v, resolution);
    grid_start_ = dist.grid.front();
    step_ = dist.step();
    cumulative_.resize(resolution + 1);
    cumulative_[0] = 0;
    for (size_t k = 0; k < resolution; ++k) {
        const double next = dist.density[(k + 1) % resolution];
        cumulative_[k + 1] = cumulative_[k] + 0.5 * step_ * (dist.density[k] + next);
    }
}

double PhaseSampler::sample(Rng &rng) const {
    const double target = rng.uniform01() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    size_t cell = static_cast<size_t>(std::distance(cumulative_.begin(), it));
    cell = std::clamp<size_t>(cell, 1, cumulative_.size() - 1) - 1;
    const double width = cumulative_[cell + 1] - cumulative_[cell];
    const double frac = width > 0 ? (target - cumulative_[cell]) / width : 0.5;
    return wrap_phase(grid_start_ + step_ * (static_cast<double>(cell) + frac));
}

double PhaseSampler::sample_rotated(double offset, Rng &rng) const {
    return wrap_phase(offset + sample(rng));
}

double sample_phase(const CoherentVec &v, Rng &rng, size_t resolution) {
    return PhaseSampler(v, resolution).sample(rng);
}

TrialReport run_simulation(const SimConfig &config) {
    config.validate();

    TrialContext ctx{config, Constellation(config.m_bases, config.mapping), 0, std::nullopt};
    if (config.bob.kind == ReceiverKind::OptimalKeyed) {
        ctx.flip_probability = helstrom_pure_antipodal(config.mean_photons).exact;
    }
    if (config.bob.kind == ReceiverKind::CanonicalPhase || config.eve == EveStrategy::PhaseDeferred) {
        ctx.phase_sampler.emplace(coherent_amplitudes(config.mean_photons, 0.0), config.bob.resolution);
    }

    KeystreamGen keystream = KeystreamGen::from_hex(config.seed_key);
    ErrorCounts total;
    std::vector<uint16_t> bases;
    for (uint64_t first = 0; first < config.trials; first += kBlockTrials) {
        const auto block = static_cast<size_t>(std::min(kBlockTrials, config.trials - first));
        bases.resize(block);
        for (auto &b : bases) {
            b = static_cast<uint16_t>(keystream.next_basis(config.m_bases));
        }

        const unsigned workers = worker_count(config.threads, block);
        std::vector<ErrorCounts> partial(workers);
        if (workers == 1) {
            partial[0] = run_trials(ctx, first, bases, 0, block);
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                const size_t begin = block * w / workers;
                const size_t end = block * (w + 1) / workers;
                pool.emplace_back([&, w, begin, end] { partial[w] = run_trials(ctx, first, bases, begin, end); });
            }
        }
        for (const auto &p : partial) {
            total.bob += p.bob;
            total.eve += p.eve;
        }
    }

    TrialReport report;
    report.config = config;
    report.bob = BerEstimate::wilson(total.bob, config.trials);
    report.analytic_bob = receiver_ber(config.bob, config.mean_photons).exact;
    switch (config.eve) {
        case EveStrategy::None:
            break;
        case EveStrategy::HeterodyneDeferred:
        case EveStrategy::PhaseDeferred: {
            const auto strategy = config.eve == EveStrategy::PhaseDeferred ? DeferredStrategy::CanonicalPhase
                                                                           : DeferredStrategy::Heterodyne;
            report.eve = BerEstimate::wilson(total.eve, config.trials);
            report.analytic_eve = eve_deferred_key_ber(config.mean_photons, strategy, config.bob.resolution).exact;
            report.analytic_eve_kind = "deferred-exact";
            break;
        }
        case EveStrategy::NearestPoint:
            report.eve = BerEstimate::wilson(total.eve, config.trials);
            report.analytic_eve = eve_nokey_helstrom(config.mean_photons, ctx.constellation);
            report.analytic_eve_kind = "nokey-helstrom-bound";
            break;
    }
    return report;
}

}  // namespace alphaeta
