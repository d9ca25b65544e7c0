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

#ifndef MPQC_CRYPTO_PRG_HPP_
#define MPQC_CRYPTO_PRG_HPP_

#include <cstdint>
#include <random>

#include "mpqc/bits.hpp"

namespace mpqc::crypto {

// A k-bit PRG seed. k doubles as the security parameter everywhere: seeds,
// wire keys, and expansion block sizes are all derived from it.
struct PrgSeed {
  BitVec bits;

  int k() const { return static_cast<int>(bits.size()); }

  static PrgSeed random(int k_bits, std::mt19937_64& rng) {
    return PrgSeed{random_bits(static_cast<size_t>(k_bits), rng)};
  }

  bool operator==(const PrgSeed&) const = default;
};

// Expands a seed to n*k + 1 pseudorandom bits (one wire-key share per party
// plus a selector bit). `selector` domain-separates repeated expansions of
// the same seed.
BitVec prg_expand(const PrgSeed& seed, uint64_t selector, int n_parties);

}  // namespace mpqc::crypto

#endif  // MPQC_CRYPTO_PRG_HPP_
