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

// Coherent states in a truncated photon-number (Fock) basis.
//
// A coherent state |alpha>, alpha = sqrt(S) e^{i phi}, has coefficients
//     c_n = e^{-S/2} S^{n/2} e^{i n phi} / sqrt(n!)
// for n = 0 .. N-1. States, their mixtures and the canonical phase
// distribution are all represented on this basis.

#ifndef ALPHAETA_FOCK_HPP
#define ALPHAETA_FOCK_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace alphaeta {

using cdouble = std::complex<double>;

/// Maximum tolerated norm deficit 1 - sum |c_n|^2 of a truncated state.
inline constexpr double kTruncationTolerance = 1e-12;

/// Raised when the Fock truncation drops too much probability.
class TruncationError : public std::runtime_error {
   public:
    TruncationError(double residual, size_t n_trunc);
    double residual() const { return residual_; }
    size_t n_trunc() const { return n_trunc_; }

   private:
    double residual_;
    size_t n_trunc_;
};

/// Truncated coherent state.
struct CoherentVec {
    std::vector<cdouble> coeffs;
    double mean_photons = 0;
    double phase = 0;

    size_t dim() const { return coeffs.size(); }
    double norm_squared() const;
};

/// ceil(S + 10 sqrt(S) + 20).
size_t default_truncation(double mean_photons);

/// Coefficients of |sqrt(S) e^{i phi}> on n = 0 .. n_trunc - 1.
/// Throws TruncationError if the dropped tail reaches kTruncationTolerance.
CoherentVec coherent_amplitudes(double mean_photons, double phase, size_t n_trunc);
CoherentVec coherent_amplitudes(double mean_photons, double phase);

/// <a|b>. Both vectors must share the same truncation.
cdouble overlap(const CoherentVec &a, const CoherentVec &b);

/// Hermitian, unit-trace density operator.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    explicit DensityMatrix(Eigen::MatrixXcd entries);

    const Eigen::MatrixXcd &entries() const { return entries_; }
    size_t dim() const { return static_cast<size_t>(entries_.rows()); }
    double trace() const { return entries_.trace().real(); }

   private:
    Eigen::MatrixXcd entries_;
};

DensityMatrix pure_density(const CoherentVec &v);

/// Convex combination sum_k w_k rho_k. Weights must be non-negative and sum
/// to one within 1e-12; all matrices must share a dimension.
DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> states);

/// Ascending eigenvalues of a Hermitian matrix. Rejects inputs whose
/// anti-Hermitian part exceeds 1e-10 elementwise.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &mat);

/// Canonical phase density (1/2pi)|sum_n c_n e^{-i n phi}|^2 on the uniform
/// grid phi_k = -pi + 2 pi k / resolution.
struct PhaseDistribution {
    std::vector<double> grid;
    std::vector<double> density;

    size_t resolution() const { return grid.size(); }
    double step() const;
    /// Periodic trapezoid integral over [-pi, pi).
    double integral() const;
};

PhaseDistribution phase_distribution(const CoherentVec &v, size_t resolution);

/// |sum_n c_n e^{-i n phi}|^2, the phase density without its 1/2pi.
double phase_weight(const CoherentVec &v, double phi);

}  // namespace alphaeta

#endif
