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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "alphaeta/angles.hpp"
#include "oracles.hpp"

using namespace alphaeta;

TEST(fock, vacuum_amplitudes) {
    CoherentVec v = coherent_amplitudes(0.0, 0.0, 8);
    ASSERT_EQ(v.dim(), 8u);
    EXPECT_EQ(v.coeffs[0], cdouble(1.0));
    for (size_t n = 1; n < 8; ++n) {
        EXPECT_EQ(v.coeffs[n], cdouble(0.0));
    }
}

TEST(fock, amplitudes_match_series) {
    CoherentVec v = coherent_amplitudes(1.0, 0.0, 40);
    EXPECT_NEAR(v.coeffs[0].real(), 0.6065306597126334, 1e-15);
    EXPECT_NEAR(v.norm_squared(), 1.0, 1e-14);

    CoherentVec w = coherent_amplitudes(7.0, kPi, 64);
    for (int n = 0; n < 64; ++n) {
        const cdouble expected = oracle::coherent_coefficient(7.0, kPi, n);
        EXPECT_NEAR(std::abs(w.coeffs[static_cast<size_t>(n)] - expected), 0.0, 1e-14) << "n=" << n;
        // e^{i n pi} alternates the sign of the real coefficients.
        if (std::abs(expected) > 1e-6) {
            EXPECT_EQ(std::signbit(w.coeffs[static_cast<size_t>(n)].real()), n % 2 == 1) << "n=" << n;
        }
    }
}

TEST(fock, truncation_failure_names_residual) {
    try {
        coherent_amplitudes(7.0, 0.0, 10);
        FAIL() << "expected TruncationError";
    } catch (const TruncationError &e) {
        EXPECT_GT(e.residual(), 1e-12);
        EXPECT_EQ(e.n_trunc(), 10u);
        EXPECT_NE(std::string(e.what()).find("residual"), std::string::npos);
    }
    EXPECT_THROW(coherent_amplitudes(1.0, 0.0, 0), std::invalid_argument);
    EXPECT_THROW(coherent_amplitudes(-1.0, 0.0, 10), std::invalid_argument);
    EXPECT_THROW(coherent_amplitudes(std::nan(""), 0.0, 10), std::invalid_argument);
}

TEST(fock, default_truncation_captures_state) {
    for (double s : {0.5, 1.0, 2.0, 4.0, 7.0, 10.0, 20.0}) {
        const size_t n = default_truncation(s);
        EXPECT_EQ(n, static_cast<size_t>(std::ceil(s + 10 * std::sqrt(s) + 20)));
        CoherentVec v = coherent_amplitudes(s, 0.3, n);
        EXPECT_LT(1.0 - v.norm_squared(), 1e-12) << "S=" << s;
    }
}

TEST(fock, overlap_examples) {
    CoherentVec a = coherent_amplitudes(3.0, 0.4);
    EXPECT_NEAR(std::abs(overlap(a, a) - cdouble(1.0)), 0.0, 1e-13);

    CoherentVec plus = coherent_amplitudes(7.0, 0.0);
    CoherentVec minus = coherent_amplitudes(7.0, kPi);
    EXPECT_NEAR(std::norm(overlap(plus, minus)) / std::exp(-28.0), 1.0, 1e-6);
    EXPECT_NEAR(std::exp(-28.0), 6.914400106940203e-13, 1e-24);

    for (double s : {0.5, 2.0, 9.0}) {
        CoherentVec vac = coherent_amplitudes(0.0, 0.0, default_truncation(s));
        CoherentVec v = coherent_amplitudes(s, 1.1);
        EXPECT_NEAR(std::abs(overlap(vac, v) - cdouble(std::exp(-s / 2))), 0.0, 1e-14);
    }

    EXPECT_THROW(overlap(coherent_amplitudes(1.0, 0, 30), coherent_amplitudes(1.0, 0, 31)), std::invalid_argument);
}

TEST(fock, overlap_matches_closed_form_randomly) {
    std::mt19937_64 gen(12345);
    std::uniform_real_distribution<double> s_dist(0.0, 10.0);
    std::uniform_real_distribution<double> phi_dist(-kPi, kPi);
    for (int trial = 0; trial < 100; ++trial) {
        const double sa = s_dist(gen), sb = s_dist(gen);
        const double pa = phi_dist(gen), pb = phi_dist(gen);
        const size_t n = default_truncation(std::max(sa, sb));
        const cdouble got = overlap(coherent_amplitudes(sa, pa, n), coherent_amplitudes(sb, pb, n));
        const cdouble want = oracle::coherent_overlap(sa, pa, sb, pb);
        EXPECT_NEAR(std::abs(got - want), 0.0, 1e-10) << sa << " " << pa << " " << sb << " " << pb;
    }
}

TEST(fock, pure_density) {
    DensityMatrix vac = pure_density(coherent_amplitudes(0.0, 0.0, 6));
    for (size_t i = 0; i < 6; ++i) {
        for (size_t j = 0; j < 6; ++j) {
            const auto e = vac.entries()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            EXPECT_EQ(e, cdouble(i == 0 && j == 0 ? 1.0 : 0.0));
        }
    }

    CoherentVec v = coherent_amplitudes(1.0, 0.7);
    DensityMatrix rho = pure_density(v);
    EXPECT_NEAR(rho.trace(), v.norm_squared(), 1e-15);
    auto eig = hermitian_eigenvalues(rho.entries());
    EXPECT_NEAR(eig.back(), 1.0, 1e-10);
    for (size_t i = 0; i + 1 < eig.size(); ++i) {
        EXPECT_NEAR(eig[i], 0.0, 1e-10);
    }
}

TEST(fock, mix_examples) {
    const double s = 2.0;
    const size_t n = default_truncation(s);
    DensityMatrix plus = pure_density(coherent_amplitudes(s, 0.0, n));
    DensityMatrix minus = pure_density(coherent_amplitudes(s, kPi, n));

    std::vector<std::pair<double, DensityMatrix>> single{{1.0, plus}};
    EXPECT_TRUE(mix(single).entries().isApprox(plus.entries(), 1e-15));

    std::vector<std::pair<double, DensityMatrix>> cat{{0.5, plus}, {0.5, minus}};
    DensityMatrix even = mix(cat);
    EXPECT_NEAR(even.trace(), 1.0, 1e-12);
    // Odd photon numbers cancel; even ones carry Poisson weight.
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(n); ++k) {
        const double poisson = std::exp(-s + k * std::log(s) - std::lgamma(k + 1.0));
        const double diag = even.entries()(k, k).real();
        EXPECT_NEAR(diag, poisson, 1e-14) << k;
        if (k + 1 < static_cast<Eigen::Index>(n)) {
            EXPECT_NEAR(std::abs(even.entries()(k, k + 1)), 0.0, 1e-15);
        }
    }

    std::vector<std::pair<double, DensityMatrix>> rotated;
    for (int m = 0; m < 4; ++m) {
        rotated.emplace_back(0.25, pure_density(coherent_amplitudes(s, kPi * m / 4.0, n)));
    }
    DensityMatrix avg = mix(rotated);
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(n); ++k) {
        EXPECT_NEAR(avg.entries()(k, k).real(), plus.entries()(k, k).real(), 1e-14);
    }

    std::vector<std::pair<double, DensityMatrix>> bad{{0.5, plus}, {0.4, minus}};
    EXPECT_THROW(mix(bad), std::invalid_argument);
    std::vector<std::pair<double, DensityMatrix>> negative{{1.5, plus}, {-0.5, minus}};
    EXPECT_THROW(mix(negative), std::invalid_argument);
}

TEST(fock, eigenvalues_small_closed_forms) {
    Eigen::MatrixXcd pauli_x(2, 2);
    pauli_x << 0, 1, 1, 0;
    auto e = hermitian_eigenvalues(pauli_x);
    ASSERT_EQ(e.size(), 2u);
    EXPECT_NEAR(e[0], -1.0, 1e-14);
    EXPECT_NEAR(e[1], 1.0, 1e-14);

    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(4, 4);
    diag.diagonal() << 3.0, -1.0, 2.5, 0.0;
    EXPECT_EQ(hermitian_eigenvalues(diag), (std::vector<double>{-1.0, 0.0, 2.5, 3.0}));

    std::mt19937_64 gen(7);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 50; ++trial) {
        const double a = g(gen), d = g(gen);
        const cdouble b(g(gen), g(gen));
        Eigen::MatrixXcd m(2, 2);
        m << a, b, std::conj(b), d;
        auto got = hermitian_eigenvalues(m);
        auto want = oracle::eig2(a, b, d);
        EXPECT_NEAR(got[0], want[0], 1e-8);
        EXPECT_NEAR(got[1], want[1], 1e-8);

        std::array<std::array<cdouble, 3>, 3> h{};
        Eigen::MatrixXcd m3(3, 3);
        for (int i = 0; i < 3; ++i) {
            h[i][i] = g(gen);
            for (int j = i + 1; j < 3; ++j) {
                h[i][j] = cdouble(g(gen), g(gen));
                h[j][i] = std::conj(h[i][j]);
            }
        }
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                m3(i, j) = h[i][j];
            }
        }
        auto got3 = hermitian_eigenvalues(m3);
        auto want3 = oracle::eig3(h);
        for (int i = 0; i < 3; ++i) {
            EXPECT_NEAR(got3[static_cast<size_t>(i)], want3[static_cast<size_t>(i)], 1e-8);
        }
    }
}

TEST(fock, eigenvalues_trace_and_frobenius) {
    std::mt19937_64 gen(99);
    std::normal_distribution<double> g;
    for (int dim : {1, 5, 17, 40, 64, 96}) {
        Eigen::MatrixXcd a(dim, dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                a(i, j) = cdouble(g(gen), g(gen));
            }
        }
        Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
        auto eig = hermitian_eigenvalues(h);
        ASSERT_EQ(eig.size(), static_cast<size_t>(dim));
        EXPECT_TRUE(std::is_sorted(eig.begin(), eig.end()));
        double sum = 0, sum_sq = 0;
        for (double l : eig) {
            sum += l;
            sum_sq += l * l;
        }
        EXPECT_NEAR(sum, h.trace().real(), 1e-8 * dim);
        EXPECT_NEAR(sum_sq, h.squaredNorm(), 1e-8 * h.squaredNorm());
    }
}

TEST(fock, eigenvalues_reject_non_hermitian) {
    Eigen::MatrixXcd m(2, 2);
    m << 0, 1, 0, 0;
    EXPECT_THROW(hermitian_eigenvalues(m), std::invalid_argument);
    Eigen::MatrixXcd rect(2, 3);
    EXPECT_THROW(hermitian_eigenvalues(rect), std::invalid_argument);
}

TEST(fock, phase_distribution_vacuum_is_flat) {
    PhaseDistribution d = phase_distribution(coherent_amplitudes(0.0, 0.0, 4), 1024);
    for (double x : d.density) {
        EXPECT_NEAR(x, 1.0 / kTwoPi, 1e-15);
    }
    EXPECT_NEAR(d.integral(), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(d.grid.front(), -kPi);
}

TEST(fock, phase_distribution_symmetric_and_unimodal) {
    const size_t r = 4096;
    PhaseDistribution d = phase_distribution(coherent_amplitudes(3.0, 0.0), r);
    // grid[k] = -pi + 2 pi k / r, so phi = 0 sits at k = r/2.
    const size_t zero = r / 2;
    size_t mode = 0;
    for (size_t k = 0; k < r; ++k) {
        if (d.density[k] > d.density[mode]) {
            mode = k;
        }
    }
    EXPECT_EQ(mode, zero);
    for (size_t k = 1; k < r / 2; ++k) {
        EXPECT_NEAR(d.density[zero + k], d.density[zero - k], 1e-14);
        EXPECT_LE(d.density[zero + k], d.density[zero + k - 1] + 1e-15);
    }
}

TEST(fock, phase_distribution_rotates_with_state) {
    const size_t r = 2048;
    const size_t shift = 300;
    const double theta = kTwoPi * static_cast<double>(shift) / static_cast<double>(r);
    PhaseDistribution base = phase_distribution(coherent_amplitudes(5.0, 0.0), r);
    PhaseDistribution turned = phase_distribution(coherent_amplitudes(5.0, theta), r);
    for (size_t k = 0; k < r; ++k) {
        EXPECT_NEAR(turned.density[(k + shift) % r], base.density[k], 1e-13);
    }
}

TEST(fock, phase_distribution_normalized_and_nonnegative) {
    for (double s : {0.5, 1.0, 2.0, 4.0, 7.0, 10.0, 20.0}) {
        for (double phi : {0.0, 1.3, -2.9}) {
            PhaseDistribution d = phase_distribution(coherent_amplitudes(s, phi), 4096);
            EXPECT_NEAR(d.integral(), 1.0, 1e-9) << s;
            EXPECT_GE(*std::min_element(d.density.begin(), d.density.end()), -1e-12);
        }
    }
}

TEST(fock, phase_distribution_rejects_bad_input) {
    CoherentVec v = coherent_amplitudes(2.0, 0.0);
    EXPECT_THROW(phase_distribution(v, 512), std::invalid_argument);
    v.coeffs[0] *= 2.0;
    EXPECT_THROW(phase_distribution(v, 4096), std::invalid_argument);
}

TEST(angles, wrap_phase_range) {
    for (double x : {-10.0, -kPi, -1e-18, 0.0, 1.0, kPi, 3 * kPi, 100.0}) {
        const double w = wrap_phase(x);
        EXPECT_GE(w, -kPi);
        EXPECT_LT(w, kPi);
        EXPECT_NEAR(std::cos(w), std::cos(x), 1e-12);
        EXPECT_NEAR(std::sin(w), std::sin(x), 1e-12);
    }
    EXPECT_DOUBLE_EQ(wrap_phase(kPi), -kPi);
    EXPECT_NEAR(angular_distance(kPi - 0.1, -kPi + 0.1), 0.2, 1e-12);
}
