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

// Point-index ciphertext files.
//
// Layout (all integers little-endian):
//
//   offset  size  field
//   0       4     magic "AETA"
//   4       2     format version (1)
//   6       2     M, number of bases
//   8       1     mapping (0 = alternating, 1 = plain)
//   9       3     reserved, zero
//   12      4     symbol count
//   16      2*n   one u16 point index per symbol
//
// Plaintext bytes are expanded most significant bit first, one symbol per
// bit. There is no integrity check: decrypting with the wrong seed key
// yields wrong bits, not an error.

#ifndef ALPHAETA_CIPHERFILE_HPP
#define ALPHAETA_CIPHERFILE_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "alphaeta/cipher.hpp"

namespace alphaeta {

inline constexpr uint16_t kCipherFormatVersion = 1;
inline constexpr size_t kCipherHeaderBytes = 16;

struct CipherHeader {
    uint16_t version = kCipherFormatVersion;
    uint16_t m_bases = 1;
    Mapping mapping = Mapping::Alternating;
    uint32_t symbol_count = 0;
};

struct EncryptOptions {
    size_t m_bases = 64;
    Mapping mapping = Mapping::Alternating;
    /// Deliberate state randomization half-width; 0 disables it.
    size_t dsr_d = 0;
    uint64_t dsr_seed = 0;
};

std::vector<uint16_t> encrypt_bits(std::span<const uint8_t> bits, KeystreamGen &keystream,
                                   const Constellation &constellation, size_t dsr_d = 0, uint64_t dsr_seed = 0);

/// Keyed half-plane decision per symbol; tolerates DSR dither.
std::vector<uint8_t> decrypt_symbols(std::span<const uint16_t> symbols, KeystreamGen &keystream,
                                     const Constellation &constellation);

std::vector<uint8_t> encrypt_file(std::span<const uint8_t> plaintext, std::string_view seed_key,
                                  const EncryptOptions &options);
std::vector<uint8_t> decrypt_file(std::span<const uint8_t> ciphertext, std::string_view seed_key);

CipherHeader read_cipher_header(std::span<const uint8_t> ciphertext);

std::vector<uint8_t> unpack_bits(std::span<const uint8_t> bytes);
std::vector<uint8_t> pack_bits(std::span<const uint8_t> bits);

}  // namespace alphaeta

#endif
