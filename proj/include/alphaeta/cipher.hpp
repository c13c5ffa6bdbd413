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

// Running-key generation and the 2M-point phase constellation.
//
// Point j of the constellation sits at phase pi j / M. Basis m is the
// antipodal pair {m, m + M}; the running key picks the basis for every
// symbol and the data bit picks which of the two points is sent.

#ifndef ALPHAETA_CIPHER_HPP
#define ALPHAETA_CIPHER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alphaeta/rng.hpp"

namespace alphaeta {

enum class Mapping {
    /// Polarity flips with the parity of the basis index, so neighbouring
    /// points carry opposite bits.
    Alternating,
    /// Bit 0 on points 0..M-1, bit 1 on M..2M-1.
    Plain,
};

std::string_view to_string(Mapping mapping);
/// Accepts "alternating" or "plain".
Mapping parse_mapping(std::string_view text);

class Constellation {
   public:
    /// m_bases must be a power of two no larger than 32768.
    explicit Constellation(size_t m_bases, Mapping mapping = Mapping::Alternating);

    size_t m_bases() const { return m_bases_; }
    size_t size() const { return 2 * m_bases_; }
    Mapping mapping() const { return mapping_; }

    /// pi j / M, wrapped to [-pi, pi).
    double phase(size_t j) const;
    /// Logical bit carried by point j in its own basis (j mod M).
    int bit_of(size_t j) const;

   private:
    size_t m_bases_;
    Mapping mapping_;
};

size_t encode(int bit, size_t basis, const Constellation &c);

/// Inverse of encode. Throws if j is not one of the two points of `basis`.
int decode(size_t j, size_t basis, const Constellation &c);

/// Keyed half-plane decision: the bit of whichever point of `basis` lies
/// closer in phase to `phase_estimate`.
int decide_in_basis(double phase_estimate, size_t basis, const Constellation &c);

/// Deliberate state randomization: (j + u) mod 2M with u uniform on
/// {-d, ..., d}. Requires d < M/2 so the dithered point stays in the keyed
/// half-plane of its basis.
size_t dsr_offset(Rng &rng, size_t d, size_t j, size_t m_bases);

/// Throws unless 0 <= d < M/2 (d = 0 is always allowed).
void validate_dsr(size_t d, size_t m_bases);

/// Fibonacci LFSR running-key generator.
///
/// Taps follow the usual polynomial notation: taps {32, 22, 2, 1} stand for
/// x^32 + x^22 + x^2 + x + 1. Output is the low register bit; the feedback
/// enters at the top.
class KeystreamGen {
   public:
    static constexpr unsigned kDefaultDegree = 32;
    static std::vector<unsigned> default_taps() { return {32, 22, 2, 1}; }

    KeystreamGen(unsigned degree, std::vector<unsigned> taps, uint64_t seed);
    /// Big-endian hexadecimal fill of the register, e.g. "9E3779B9".
    static KeystreamGen from_hex(std::string_view hex, unsigned degree = kDefaultDegree,
                                 std::vector<unsigned> taps = default_taps());

    int next_bit();
    std::vector<uint8_t> bits(size_t n);
    /// Consumes log2(M) bits, most significant first. M must be a power of
    /// two.
    size_t next_basis(size_t m_bases);

    uint64_t state() const { return state_; }
    unsigned degree() const { return degree_; }
    std::span<const unsigned> taps() const { return taps_; }

   private:
    unsigned degree_;
    std::vector<unsigned> taps_;
    uint64_t feedback_mask_ = 0;
    uint64_t state_;
};

bool is_power_of_two(size_t x);
unsigned log2_exact(size_t power_of_two);

}  // namespace alphaeta

#endif
