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

#ifndef MPQC_CRYPTO_PKE_HPP_
#define MPQC_CRYPTO_PKE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace mpqc::crypto {

// Hashed-ElGamal KEM/DEM over the quadratic-residue subgroup of a safe
// prime. Toy-sized parameters: the group structure is real but the modulus
// is 31 bits, sized for test throughput, not for security.
inline constexpr uint64_t kGroupP = 2147483579;  // safe prime, p = 2q + 1
inline constexpr uint64_t kGroupQ = 1073741789;  // prime subgroup order
inline constexpr uint64_t kGroupG = 4;           // generator of the QR subgroup

struct KeyPair {
  uint64_t pk = 0;
  uint64_t sk = 0;  // discrete log of pk, in [0, q)
};

uint64_t group_pow(uint64_t base, uint64_t exp);

KeyPair pke_keygen(std::mt19937_64& rng);

// Uniform subgroup element sampled by cofactor exponentiation: whoever drew
// it provably holds no secret key for it, yet its distribution is identical
// to a real public key's.
uint64_t pke_dummy_pk(std::mt19937_64& rng);

// Ciphertext layout: 8-byte ephemeral group element, keystream-masked
// payload, 8-byte authentication tag. Same-length messages yield
// same-length ciphertexts.
std::vector<uint8_t> pke_encrypt(uint64_t pk, const std::vector<uint8_t>& msg,
                                 std::mt19937_64& rng);

// Empty result on tag mismatch (wrong key or tampering).
std::optional<std::vector<uint8_t>> pke_decrypt(uint64_t sk,
                                                const std::vector<uint8_t>& ct);

}  // namespace mpqc::crypto

#endif  // MPQC_CRYPTO_PKE_HPP_
