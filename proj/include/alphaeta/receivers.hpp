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

// Bit-error rates for discriminating the antipodal pair |sqrt(S)>, |-sqrt(S)>
// with different receivers, and the error rates available to an
// eavesdropper holding a full copy of the transmitted state.

#ifndef ALPHAETA_RECEIVERS_HPP
#define ALPHAETA_RECEIVERS_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>

#include "alphaeta/cipher.hpp"
#include "alphaeta/fock.hpp"

namespace alphaeta {

enum class ReceiverKind {
    /// Minimum-error (Helstrom) measurement on the keyed antipodal pair.
    OptimalKeyed,
    /// Canonical phase measurement followed by the half-plane decision.
    CanonicalPhase,
    Heterodyne,
    Homodyne,
};

std::string_view to_string(ReceiverKind kind);
/// Accepts "optimal", "phase", "heterodyne", "homodyne".
ReceiverKind parse_receiver(std::string_view text);

inline constexpr size_t kDefaultPhaseResolution = 4096;
/// Largest S accepted by the canonical-phase calculation.
inline constexpr double kMaxPhaseMeanPhotons = 40.0;

struct ReceiverModel {
    ReceiverKind kind = ReceiverKind::OptimalKeyed;
    size_t resolution = kDefaultPhaseResolution;
};

/// Exact error probability next to its e^{-cS} envelope.
struct BerLaw {
    double exact = 0.5;
    double asymptotic = 1.0;
    double exponent_coefficient = 0;
};

/// exact = (1 - sqrt(1 - e^{-4S})) / 2, asymptotic e^{-4S}.
BerLaw helstrom_pure_antipodal(double mean_photons);
/// exact = erfc(sqrt(S)) / 2, asymptotic e^{-S}.
BerLaw heterodyne_antipodal(double mean_photons);
/// exact = erfc(sqrt(2S)) / 2, asymptotic e^{-2S}.
BerLaw homodyne_antipodal(double mean_photons);
/// exact = probability mass of the canonical phase density of |sqrt(S)>
/// outside (-pi/2, pi/2), by trapezoid quadrature; asymptotic e^{-2S}.
/// resolution must be a multiple of 4 and at least 4096.
BerLaw canonical_phase_antipodal(double mean_photons, size_t resolution = kDefaultPhaseResolution);

BerLaw receiver_ber(const ReceiverModel &model, double mean_photons);

/// Helstrom error for equiprobable states: 1/2 - 1/4 ||rho0 - rho1||_1.
double helstrom_mixed(const DensityMatrix &rho0, const DensityMatrix &rho1);

enum class DeferredStrategy { CanonicalPhase, Heterodyne };

/// Eve measures her copy without the key, stores the outcome, is told the
/// basis afterwards and makes the keyed binary decision on the stored
/// outcome. Both measurements are phase covariant, so this equals the
/// keyed error rate of the same receiver.
BerLaw eve_deferred_key_ber(double mean_photons, DeferredStrategy strategy,
                            size_t resolution = kDefaultPhaseResolution);

/// Minimum error for a bit when the basis is never revealed: Helstrom
/// discrimination between the basis-averaged bit-0 and bit-1 mixtures.
double eve_nokey_helstrom(double mean_photons, const Constellation &constellation);

/// Least-squares slope of ln(P_e) against S. Requires at least four points,
/// strictly increasing S and positive P_e.
double exponent_fit(std::span<const std::pair<double, double>> points);

}  // namespace alphaeta

#endif
