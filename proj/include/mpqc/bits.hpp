// Copyright 2026 The mpqclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MPQC_BITS_HPP_
#define MPQC_BITS_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpqc {

// A sequence of bits, one per byte, each 0 or 1.
using BitVec = std::vector<uint8_t>;

inline BitVec random_bits(size_t n, std::mt19937_64& rng) {
  BitVec v(n);
  for (auto& b : v) b = static_cast<uint8_t>(rng() & 1);
  return v;
}

inline void xor_into(BitVec& acc, const BitVec& other) {
  if (acc.size() != other.size()) throw std::invalid_argument("bit length mismatch");
  for (size_t i = 0; i < acc.size(); ++i) acc[i] ^= other[i];
}

inline BitVec xor_bits(BitVec a, const BitVec& b) {
  xor_into(a, b);
  return a;
}

// Bit i of the stream is bit (i % 8) of byte (i / 8), LSB first.
inline std::vector<uint8_t> pack_bits_le(const BitVec& bits) {
  std::vector<uint8_t> out((bits.size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
  }
  return out;
}

inline BitVec unpack_bits_le(const std::vector<uint8_t>& bytes, size_t nbits) {
  if (bytes.size() < (nbits + 7) / 8) throw std::invalid_argument("byte buffer too short");
  BitVec out(nbits);
  for (size_t i = 0; i < nbits; ++i) out[i] = (bytes[i / 8] >> (i % 8)) & 1;
  return out;
}

inline void put_u32(std::vector<uint8_t>& buf, uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

inline uint32_t get_u32(const std::vector<uint8_t>& buf, size_t& pos) {
  if (pos + 4 > buf.size()) throw std::out_of_range("truncated buffer");
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(buf[pos + i]) << (8 * i);
  pos += 4;
  return v;
}

inline void put_bytes(std::vector<uint8_t>& buf, const std::vector<uint8_t>& v) {
  put_u32(buf, static_cast<uint32_t>(v.size()));
  buf.insert(buf.end(), v.begin(), v.end());
}

inline std::vector<uint8_t> get_bytes(const std::vector<uint8_t>& buf, size_t& pos) {
  uint32_t n = get_u32(buf, pos);
  if (pos + n > buf.size()) throw std::out_of_range("truncated buffer");
  std::vector<uint8_t> v(buf.begin() + pos, buf.begin() + pos + n);
  pos += n;
  return v;
}

inline std::string to_hex(const std::vector<uint8_t>& bytes) {
  static const char* kDigits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

inline std::vector<uint8_t> from_hex(const std::string& s) {
  if (s.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  std::vector<uint8_t> out(s.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<uint8_t>((nibble(s[2 * i]) << 4) | nibble(s[2 * i + 1]));
  }
  return out;
}

// Deterministic seed derivation: splitmix64-style mixing of a master seed
// with a tag, so sibling components get independent-looking streams.
inline uint64_t mix_seed(uint64_t seed, uint64_t tag) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace mpqc

#endif  // MPQC_BITS_HPP_
