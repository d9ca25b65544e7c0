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

#include "mpqc/crypto/prg.hpp"

#include <openssl/sha.h>

#include <array>
#include <cstring>
#include <stdexcept>

namespace mpqc::crypto {

namespace {

void append_u64(std::vector<uint8_t>& buf, uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

}  // namespace

// Counter-mode hash expansion: block_i = SHA-256("prg" || k || seed || selector || i).
BitVec prg_expand(const PrgSeed& seed, uint64_t selector, int n_parties) {
  if (seed.k() <= 0) throw std::invalid_argument("empty PRG seed");
  if (n_parties <= 0) throw std::invalid_argument("party count must be positive");

  const size_t out_bits = static_cast<size_t>(n_parties) * seed.k() + 1;
  const size_t out_bytes = (out_bits + 7) / 8;

  std::vector<uint8_t> prefix;
  prefix.insert(prefix.end(), {'p', 'r', 'g'});
  append_u64(prefix, static_cast<uint64_t>(seed.k()));
  auto packed = pack_bits_le(seed.bits);
  prefix.insert(prefix.end(), packed.begin(), packed.end());
  append_u64(prefix, selector);

  std::vector<uint8_t> stream;
  stream.reserve(out_bytes + SHA256_DIGEST_LENGTH);
  for (uint64_t ctr = 0; stream.size() < out_bytes; ++ctr) {
    std::vector<uint8_t> block = prefix;
    append_u64(block, ctr);
    std::array<uint8_t, SHA256_DIGEST_LENGTH> digest;
    SHA256(block.data(), block.size(), digest.data());
    stream.insert(stream.end(), digest.begin(), digest.end());
  }
  stream.resize(out_bytes);
  return unpack_bits_le(stream, out_bits);
}

}  // namespace mpqc::crypto
