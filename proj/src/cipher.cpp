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

#include "alphaeta/cipher.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "alphaeta/angles.hpp"

namespace alphaeta {

bool is_power_of_two(size_t x) {
    return std::has_single_bit(x);
}

unsigned log2_exact(size_t power_of_two) {
    return static_cast<unsigned>(std::countr_zero(power_of_two));
}

std::string_view to_string(Mapping mapping) {
    return mapping == Mapping::Alternating ? "alternating" : "plain";
}

Mapping parse_mapping(std::string_view text) {
    if (text == "alternating") {
        return Mapping::Alternating;
    }
    if (text == "plain") {
        return Mapping::Plain;
    }
    throw std::invalid_argument("unknown mapping '" + std::string(text) + "' (expected alternating or plain)");
}

Constellation::Constellation(size_t m_bases, Mapping mapping) : m_bases_(m_bases), mapping_(mapping) {
    if (!is_power_of_two(m_bases)) {
        throw std::invalid_argument("number of bases M must be a power of two, got " + std::to_string(m_bases));
    }
    if (m_bases > 32768) {
        throw std::invalid_argument("number of bases M must not exceed 32768");
    }
}

double Constellation::phase(size_t j) const {
    return wrap_phase(kPi * static_cast<double>(j % size()) / static_cast<double>(m_bases_));
}

int Constellation::bit_of(size_t j) const {
    j %= size();
    size_t basis = j % m_bases_;
    int upper = j >= m_bases_ ? 1 : 0;
    if (mapping_ == Mapping::Alternating) {
        return upper ^ static_cast<int>(basis & 1);
    }
    return upper;
}

size_t encode(int bit, size_t basis, const Constellation &c) {
    if (basis >= c.m_bases()) {
        throw std::invalid_argument("encode: basis index out of range");
    }
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("encode: bit must be 0 or 1");
    }
    int upper = bit;
    if (c.mapping() == Mapping::Alternating) {
        upper ^= static_cast<int>(basis & 1);
    }
    return basis + static_cast<size_t>(upper) * c.m_bases();
}

int decode(size_t j, size_t basis, const Constellation &c) {
    if (basis >= c.m_bases()) {
        throw std::invalid_argument("decode: basis index out of range");
    }
    if (j != basis && j != basis + c.m_bases()) {
        throw std::invalid_argument("decode: point " + std::to_string(j) + " is not in basis " +
                                    std::to_string(basis) + " (keystream desynchronized?)");
    }
    return c.bit_of(j);
}

int decide_in_basis(double phase_estimate, size_t basis, const Constellation &c) {
    if (basis >= c.m_bases()) {
        throw std::invalid_argument("decide_in_basis: basis index out of range");
    }
    bool near_lower = std::cos(phase_estimate - c.phase(basis)) >= 0;
    return c.bit_of(near_lower ? basis : basis + c.m_bases());
}

void validate_dsr(size_t d, size_t m_bases) {
    if (d == 0) {
        return;
    }
    if (2 * d >= m_bases) {
        throw std::invalid_argument("DSR dither d=" + std::to_string(d) + " must satisfy d < M/2 (M=" +
                                    std::to_string(m_bases) + ")");
    }
}

size_t dsr_offset(Rng &rng, size_t d, size_t j, size_t m_bases) {
    validate_dsr(d, m_bases);
    if (d == 0) {
        return j;
    }
    const size_t n_points = 2 * m_bases;
    const auto u = static_cast<size_t>(rng.uniform_below(2 * d + 1));
    // j + u - d, kept non-negative before the modulus.
    return (j + n_points + u - d) % n_points;
}

KeystreamGen::KeystreamGen(unsigned degree, std::vector<unsigned> taps, uint64_t seed)
    : degree_(degree), taps_(std::move(taps)), state_(seed) {
    if (degree_ < 2 || degree_ > 64) {
        throw std::invalid_argument("LFSR degree must be in [2, 64]");
    }
    if (std::find(taps_.begin(), taps_.end(), degree_) == taps_.end()) {
        throw std::invalid_argument("LFSR taps must include the register degree");
    }
    for (unsigned t : taps_) {
        if (t < 1 || t > degree_) {
            throw std::invalid_argument("LFSR tap out of range");
        }
        feedback_mask_ ^= uint64_t{1} << (degree_ - t);
    }
    if (degree_ < 64 && (state_ >> degree_) != 0) {
        throw std::invalid_argument("seed key does not fit in the LFSR register");
    }
    if (state_ == 0) {
        throw std::invalid_argument("seed key must not be all zero");
    }
}

KeystreamGen KeystreamGen::from_hex(std::string_view hex, unsigned degree, std::vector<unsigned> taps) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) {
        hex.remove_prefix(2);
    }
    if (hex.empty()) {
        throw std::invalid_argument("seed key is empty");
    }
    if (hex.size() > (degree + 3) / 4) {
        throw std::invalid_argument("seed key has more hex digits than the register holds");
    }
    uint64_t value = 0;
    for (char ch : hex) {
        int digit;
        if (ch >= '0' && ch <= '9') {
            digit = ch - '0';
        } else if (ch >= 'a' && ch <= 'f') {
            digit = ch - 'a' + 10;
        } else if (ch >= 'A' && ch <= 'F') {
            digit = ch - 'A' + 10;
        } else {
            throw std::invalid_argument("seed key is not hexadecimal: '" + std::string(hex) + "'");
        }
        value = (value << 4) | static_cast<uint64_t>(digit);
    }
    return KeystreamGen(degree, std::move(taps), value);
}

int KeystreamGen::next_bit() {
    const int out = static_cast<int>(state_ & 1);
    const auto feedback = static_cast<uint64_t>(std::popcount(state_ & feedback_mask_) & 1);
    state_ = (state_ >> 1) | (feedback << (degree_ - 1));
    return out;
}

std::vector<uint8_t> KeystreamGen::bits(size_t n) {
    std::vector<uint8_t> out(n);
    for (auto &b : out) {
        b = static_cast<uint8_t>(next_bit());
    }
    return out;
}

size_t KeystreamGen::next_basis(size_t m_bases) {
    if (!is_power_of_two(m_bases)) {
        throw std::invalid_argument("number of bases M must be a power of two");
    }
    size_t index = 0;
    for (unsigned i = log2_exact(m_bases); i > 0; --i) {
        index = (index << 1) | static_cast<size_t>(next_bit());
    }
    return index;
}

}  // namespace alphaeta
