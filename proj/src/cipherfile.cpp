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

#include "alphaeta/cipherfile.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace alphaeta {

namespace {

constexpr uint8_t kMagic[4] = {'A', 'E', 'T', 'A'};

void put_u16(std::vector<uint8_t> &out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xFF));
    out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t> &out, uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) {
        out.push_back(static_cast<uint8_t>((v >> shift) & 0xFF));
    }
}

uint16_t get_u16(std::span<const uint8_t> in, size_t at) {
    return static_cast<uint16_t>(in[at] | (in[at + 1] << 8));
}

uint32_t get_u32(std::span<const uint8_t> in, size_t at) {
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) {
        v = (v << 8) | in[at + static_cast<size_t>(i)];
    }
    return v;
}

}  // namespace

std::vector<uint8_t> unpack_bits(std::span<const uint8_t> bytes) {
    std::vector<uint8_t> bits;
    bits.reserve(bytes.size() * 8);
    for (uint8_t byte : bytes) {
        for (int k = 7; k >= 0; --k) {
            bits.push_back(static_cast<uint8_t>((byte >> k) & 1));
        }
    }
    return bits;
}

std::vector<uint8_t> pack_bits(std::span<const uint8_t> bits) {
    std::vector<uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0) {
            bytes[i / 8] |= static_cast<uint8_t>(0x80u >> (i % 8));
        }
    }
    return bytes;
}

std::vector<uint16_t> encrypt_bits(std::span<const uint8_t> bits, KeystreamGen &keystream,
                                   const Constellation &constellation, size_t dsr_d, uint64_t dsr_seed) {
    validate_dsr(dsr_d, constellation.m_bases());
    Rng dither(dsr_seed);
    std::vector<uint16_t> symbols;
    symbols.reserve(bits.size());
    for (uint8_t bit : bits) {
        const size_t basis = keystream.next_basis(constellation.m_bases());
        size_t j = encode(bit != 0 ? 1 : 0, basis, constellation);
        if (dsr_d > 0) {
            j = dsr_offset(dither, dsr_d, j, constellation.m_bases());
        }
        symbols.push_back(static_cast<uint16_t>(j));
    }
    return symbols;
}

std::vector<uint8_t> decrypt_symbols(std::span<const uint16_t> symbols, KeystreamGen &keystream,
                                     const Constellation &constellation) {
    std::vector<uint8_t> bits;
    bits.reserve(symbols.size());
    for (uint16_t j : symbols) {
        if (j >= constellation.size()) {
            throw std::invalid_argument("ciphertext symbol " + std::to_string(j) + " outside the constellation");
        }
        const size_t basis = keystream.next_basis(constellation.m_bases());
        bits.push_back(static_cast<uint8_t>(decide_in_basis(constellation.phase(j), basis, constellation)));
    }
    return bits;
}

std::vector<uint8_t> encrypt_file(std::span<const uint8_t> plaintext, std::string_view seed_key,
                                  const EncryptOptions &options) {
    const Constellation constellation(options.m_bases, options.mapping);
    KeystreamGen keystream = KeystreamGen::from_hex(seed_key);
    const std::vector<uint8_t> bits = unpack_bits(plaintext);
    if (bits.size() > std::numeric_limits<uint32_t>::max()) {
        throw std::invalid_argument("plaintext too large for the ciphertext format");
    }
    const std::vector<uint16_t> symbols =
        encrypt_bits(bits, keystream, constellation, options.dsr_d, options.dsr_seed);

    std::vector<uint8_t> out(std::begin(kMagic), std::end(kMagic));
    out.reserve(kCipherHeaderBytes + 2 * symbols.size());
    put_u16(out, kCipherFormatVersion);
    put_u16(out, static_cast<uint16_t>(options.m_bases));
    out.push_back(options.mapping == Mapping::Alternating ? 0 : 1);
    out.insert(out.end(), 3, 0);
    put_u32(out, static_cast<uint32_t>(symbols.size()));
    for (uint16_t s : symbols) {
        put_u16(out, s);
    }
    return out;
}

CipherHeader read_cipher_header(std::span<const uint8_t> ciphertext) {
    if (ciphertext.size() < kCipherHeaderBytes) {
        throw std::invalid_argument("ciphertext shorter than its 16-byte header");
    }
    for (size_t i = 0; i < 4; ++i) {
        if (ciphertext[i] != kMagic[i]) {
            throw std::invalid_argument("ciphertext magic mismatch (not an AETA file)");
        }
    }
    CipherHeader h;
    h.version = get_u16(ciphertext, 4);
    if (h.version != kCipherFormatVersion) {
        throw std::invalid_argument("unsupported ciphertext version " + std::to_string(h.version));
    }
    h.m_bases = get_u16(ciphertext, 6);
    switch (ciphertext[8]) {
        case 0:
            h.mapping = Mapping::Alternating;
            break;
        case 1:
            h.mapping = Mapping::Plain;
            break;
        default:
            throw std::invalid_argument("unknown mapping code in ciphertext header");
    }
    h.symbol_count = get_u32(ciphertext, 12);
    if (ciphertext.size() != kCipherHeaderBytes + 2 * static_cast<size_t>(h.symbol_count)) {
        throw std::invalid_argument("ciphertext length does not match its symbol count");
    }
    return h;
}

std::vector<uint8_t> decrypt_file(std::span<const uint8_t> ciphertext, std::string_view seed_key) {
    const CipherHeader header = read_cipher_header(ciphertext);
    const Constellation constellation(header.m_bases, header.mapping);
    KeystreamGen keystream = KeystreamGen::from_hex(seed_key);
    std::vector<uint16_t> symbols(header.symbol_count);
    for (size_t i = 0; i < symbols.size(); ++i) {
        symbols[i] = get_u16(ciphertext, kCipherHeaderBytes + 2 * i);
    }
    return pack_bits(decrypt_symbols(symbols, keystream, constellation));
}

}  // namespace alphaeta
