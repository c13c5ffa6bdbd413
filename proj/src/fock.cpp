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

#include "alphaeta/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "alphaeta/angles.hpp"

namespace alphaeta {

namespace {

std::string truncation_message(double residual, size_t n_trunc) {
    std::ostringstream out;
    out << "Fock truncation at " << n_trunc << " levels leaves residual norm " << residual
        << " (tolerance " << kTruncationTolerance << ")";
    return out.str();
}

double anti_hermitian_defect(const Eigen::MatrixXcd &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

TruncationError::TruncationError(double residual, size_t n_trunc)
    : std::runtime_error(truncation_message(residual, n_trunc)), residual_(residual), n_trunc_(n_trunc) {}

double CoherentVec::norm_squared() const {
    double total = 0;
    for (const auto &c : coeffs) {
        total += std::norm(c);
    }
    return total;
}

size_t default_truncation(double mean_photons) {
    if (!(mean_photons >= 0) || !std::isfinite(mean_photons)) {
        throw std::invalid_argument("mean photon number must be finite and non-negative");
    }
    return static_cast<size_t>(std::ceil(mean_photons + 10.0 * std::sqrt(mean_photons) + 20.0));
}

CoherentVec coherent_amplitudes(double mean_photons, double phase, size_t n_trunc) {
    if (!(mean_photons >= 0) || !std::isfinite(mean_photons)) {
        throw std::invalid_argument("mean photon number must be finite and non-negative");
    }
    if (!std::isfinite(phase)) {
        throw std::invalid_argument("phase must be finite");
    }
    if (n_trunc < 1) {
        throw std::invalid_argument("truncation must keep at least one Fock level");
    }

    CoherentVec v;
    v.mean_photons = mean_photons;
    v.phase = wrap_phase(phase);
    v.coeffs.resize(n_trunc);

    // c_{n+1} = c_n sqrt(S) e^{i phi} / sqrt(n+1); the magnitudes are carried
    // separately from the phase factor so no factorial is ever formed.
    const double amplitude = std::sqrt(mean_photons);
    const cdouble rotor = std::polar(1.0, v.phase);
    double magnitude = std::exp(-0.5 * mean_photons);
    cdouble phase_factor = 1.0;
    double tail_sum = 0;
    for (size_t n = 0; n < n_trunc; ++n) {
        v.coeffs[n] = magnitude * phase_factor;
        tail_sum += magnitude * magnitude;
        magnitude *= amplitude / std::sqrt(static_cast<double>(n + 1));
        phase_factor *= rotor;
        // Keep the accumulated rotor on the unit circle.
        if ((n & 31) == 31) {
            phase_factor = std::polar(1.0, static_cast<double>(n + 1) * v.phase);
        }
    }

    double residual = 1.0 - tail_sum;
    if (residual >= kTruncationTolerance) {
        throw TruncationError(residual, n_trunc);
    }
    return v;
}

CoherentVec coherent_amplitudes(double mean_photons, double phase) {
    return coherent_amplitudes(mean_photons, phase, default_truncation(mean_photons));
}

cdouble overlap(const CoherentVec &a, const CoherentVec &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("overlap: truncation dimensions differ");
    }
    cdouble total = 0;
    for (size_t n = 0; n < a.dim(); ++n) {
        total += std::conj(a.coeffs[n]) * b.coeffs[n];
    }
    return total;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw std::invalid_argument("density matrix must be square and non-empty");
    }
    if (anti_hermitian_defect(entries_) > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(trace() - 1.0) > 1e-10) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
}

DensityMatrix pure_density(const CoherentVec &v) {
    Eigen::VectorXcd col(static_cast<Eigen::Index>(v.dim()));
    for (size_t n = 0; n < v.dim(); ++n) {
        col(static_cast<Eigen::Index>(n)) = v.coeffs[n];
    }
    Eigen::MatrixXcd outer = col * col.adjoint();
    // The outer product is Hermitian up to rounding; make it exact.
    outer = 0.5 * (outer + outer.adjoint()).eval();
    return DensityMatrix(std::move(outer));
}

DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> states) {
    if (states.empty()) {
        throw std::invalid_argument("mix: no states given");
    }
    const auto dim = states.front().second.entries().rows();
    double weight_sum = 0;
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[weight, rho] : states) {
        if (!(weight >= 0)) {
            throw std::invalid_argument("mix: weights must be non-negative");
        }
        if (rho.entries().rows() != dim) {
            throw std::invalid_argument("mix: dimension mismatch");
        }
        weight_sum += weight;
        total += weight * rho.entries();
    }
    if (std::abs(weight_sum - 1.0) > 1e-12) {
        std::ostringstream out;
        out << "mix: weights sum to " << weight_sum << ", expected 1";
        throw std::invalid_argument(out.str());
    }
    return DensityMatrix(std::move(total));
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &mat) {
    if (mat.rows() != mat.cols()) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
    }
    if (mat.rows() == 0) {
        return {};
    }
    if (anti_hermitian_defect(mat) > 1e-10) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigen decomposition did not converge");
    }
    const auto &values = solver.eigenvalues();
    std::vector<double> out(values.data(), values.data() + values.size());
    std::sort(out.begin(), out.end());
    return out;
}

double PhaseDistribution::step() const {
    return kTwoPi / static_cast<double>(grid.size());
}

double PhaseDistribution::integral() const {
    // Uniform periodic grid: the trapezoid rule reduces to h * sum.
    double total = 0;
    for (double d : density) {
        total += d;
    }
    return total * step();
}

double phase_weight(const CoherentVec &v, double phi) {
    // Horner evaluation of sum_n c_n w^n with w = e^{-i phi}.
    const cdouble w = std::polar(1.0, -phi);
    cdouble acc = 0;
    for (size_t n = v.dim(); n-- > 0;) {
        acc = acc * w + v.coeffs[n];
    }
    return std::norm(acc);
}

PhaseDistribution phase_distribution(const CoherentVec &v, size_t resolution) {
    if (resolution < 1024) {
        throw std::invalid_argument("phase_distribution: resolution must be at least 1024");
    }
    if (std::abs(v.norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument("phase_distribution: state is not normalized");
    }

    PhaseDistribution out;
    out.grid.resize(resolution);
    out.density.resize(resolution);
    const double h = kTwoPi / static_cast<double>(resolution);
    for (size_t k = 0; k < resolution; ++k) {
        const double phi = -kPi + h * static_cast<double>(k);
        out.grid[k] = phi;
        out.density[k] = phase_weight(v, phi) / kTwoPi;
    }
    return out;
}

}  // namespace alphaeta
