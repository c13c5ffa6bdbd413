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

#include "alphaeta/receivers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace alphaeta {

namespace {

void require_photons(double mean_photons) {
    if (!(mean_photons >= 0) || !std::isfinite(mean_photons)) {
        throw std::invalid_argument("mean photon number must be finite and non-negative");
    }
}

}  // namespace

std::string_view to_string(ReceiverKind kind) {
    switch (kind) {
        case ReceiverKind::OptimalKeyed:
            return "optimal";
        case ReceiverKind::CanonicalPhase:
            return "phase";
        case ReceiverKind::Heterodyne:
            return "heterodyne";
        case ReceiverKind::Homodyne:
            return "homodyne";
    }
    return "unknown";
}

ReceiverKind parse_receiver(std::string_view text) {
    if (text == "optimal") {
        return ReceiverKind::OptimalKeyed;
    }
    if (text == "phase") {
        return ReceiverKind::CanonicalPhase;
    }
    if (text == "heterodyne") {
        return ReceiverKind::Heterodyne;
    }
    if (text == "homodyne") {
        return ReceiverKind::Homodyne;
    }
    throw std::invalid_argument("unknown receiver '" + std::string(text) +
                                "' (expected optimal, phase, heterodyne or homodyne)");
}

BerLaw helstrom_pure_antipodal(double mean_photons) {
    require_photons(mean_photons);
    // |<a|-a>|^2 = e^{-4S}. The rationalized form avoids cancellation in
    // 1 - sqrt(1 - x) for small x.
    const double x = std::exp(-4.0 * mean_photons);
    return {0.5 * x / (1.0 + std::sqrt(1.0 - x)), x, 4.0};
}

BerLaw heterodyne_antipodal(double mean_photons) {
    require_photons(mean_photons);
    return {0.5 * std::erfc(std::sqrt(mean_photons)), std::exp(-mean_photons), 1.0};
}

BerLaw homodyne_antipodal(double mean_photons) {
    require_photons(mean_photons);
    return {0.5 * std::erfc(std::sqrt(2.0 * mean_photons)), std::exp(-2.0 * mean_photons), 2.0};
}

BerLaw canonical_phase_antipodal(double mean_photons, size_t resolution) {
    require_photons(mean_photons);
    if (mean_photons > kMaxPhaseMeanPhotons) {
        throw std::invalid_argument("canonical phase error is only evaluated for S <= " +
                                    std::to_string(kMaxPhaseMeanPhotons));
    }
    if (resolution < kDefaultPhaseResolution || resolution % 4 != 0) {
        throw std::invalid_argument("canonical phase resolution must be a multiple of 4 and at least 4096");
    }

    const CoherentVec state = coherent_amplitudes(mean_photons, 0.0);
    const double h = kTwoPi / static_cast<double>(resolution);
    auto weight = [&](size_t k) { return phase_weight(state, -kPi + h * static_cast<double>(k)); };

    // Grid points k = R/4 and 3R/4 sit exactly on -pi/2 and +pi/2. The error
    // arc runs from +pi/2 through pi (= -pi) to -pi/2. Summing the raw weights
    // and dividing by R once keeps S = 0 at exactly 1/2.
    const size_t quarter = resolution / 4;
    const size_t begin = 3 * quarter;
    double total = 0.5 * (weight(begin) + weight(quarter));
    for (size_t k = begin + 1; k < resolution; ++k) {
        total += weight(k);
    }
    for (size_t k = 0; k < quarter; ++k) {
        total += weight(k);
    }
    return {total / static_cast<double>(resolution), std::exp(-2.0 * mean_photons), 2.0};
}

BerLaw receiver_ber(const ReceiverModel &model, double mean_photons) {
    switch (model.kind) {
        case ReceiverKind::OptimalKeyed:
            return helstrom_pure_antipodal(mean_photons);
        case ReceiverKind::CanonicalPhase:
            return canonical_phase_antipodal(mean_photons, model.resolution);
        case ReceiverKind::Heterodyne:
            return heterodyne_antipodal(mean_photons);
        case ReceiverKind::Homodyne:
            return homodyne_antipodal(mean_photons);
    }
    throw std::invalid_argument("unknown receiver kind");
}

double helstrom_mixed(const DensityMatrix &rho0, const DensityMatrix &rho1) {
    if (rho0.dim() != rho1.dim()) {
        throw std::invalid_argument("helstrom_mixed: dimension mismatch");
    }
    double trace_norm = 0;
    for (double lambda : hermitian_eigenvalues(rho0.entries() - rho1.entries())) {
        trace_norm += std::abs(lambda);
    }
    return 0.5 - 0.25 * trace_norm;
}

BerLaw eve_deferred_key_ber(double mean_photons, DeferredStrategy strategy, size_t resolution) {
    switch (strategy) {
        case DeferredStrategy::CanonicalPhase:
            return canonical_phase_antipodal(mean_photons, resolution);
        case DeferredStrategy::Heterodyne:
            return heterodyne_antipodal(mean_photons);
    }
    throw std::invalid_argument("unknown deferred strategy");
}

double eve_nokey_helstrom(double mean_photons, const Constellation &constellation) {
    require_photons(mean_photons);
    const size_t n_trunc = default_truncation(mean_photons);
    const auto dim = static_cast<Eigen::Index>(n_trunc);
    const size_t m_bases = constellation.m_bases();
    const double weight = 1.0 / static_cast<double>(m_bases);

    // Accumulate each basis-averaged bit mixture from rank-one terms.
    Eigen::MatrixXcd rho[2] = {Eigen::MatrixXcd::Zero(dim, dim), Eigen::MatrixXcd::Zero(dim, dim)};
    Eigen::VectorXcd col(dim);
    for (size_t basis = 0; basis < m_bases; ++basis) {
        for (int bit = 0; bit < 2; ++bit) {
            const size_t j = encode(bit, basis, constellation);
            const CoherentVec v = coherent_amplitudes(mean_photons, constellation.phase(j), n_trunc);
            for (Eigen::Index n = 0; n < dim; ++n) {
                col(n) = v.coeffs[static_cast<size_t>(n)];
            }
            rho[bit].selfadjointView<Eigen::Lower>().rankUpdate(col, weight);
        }
    }
    for (auto &r : rho) {
        Eigen::MatrixXcd full = r.selfadjointView<Eigen::Lower>();
        r = std::move(full);
    }
    return helstrom_mixed(DensityMatrix(std::move(rho[0])), DensityMatrix(std::move(rho[1])));
}

double exponent_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 4) {
        throw std::invalid_argument("exponent_fit: need at least four points");
    }
    double mean_s = 0;
    double mean_log = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        const auto [s, p] = points[i];
        if (!(p > 0)) {
            throw std::invalid_argument("exponent_fit: error probabilities must be positive");
        }
        if (i > 0 && !(s > points[i - 1].first)) {
            throw std::invalid_argument("exponent_fit: S values must be strictly increasing");
        }
        mean_s += s;
        mean_log += std::log(p);
    }
    const auto n = static_cast<double>(points.size());
    mean_s /= n;
    mean_log /= n;
    double sxy = 0;
    double sxx = 0;
    for (const auto &[s, p] : points) {
        sxy += (s - mean_s) * (std::log(p) - mean_log);
        sxx += (s - mean_s) * (s - mean_s);
    }
    return sxy / sxx;
}

}  // namespace alphaeta
