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

#ifndef MPQC_CRYPTO_OT_HPP_
#define MPQC_CRYPTO_OT_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace mpqc::crypto {

// 1-of-N oblivious transfer (N = 2 or 4) in two wire messages:
//
//   1. Receiver samples one real key pair and N-1 dummy public keys, and
//      sends the N public keys ordered with the real one at its choice index.
//   2. Sender encrypts message i under public key i and sends all N
//      ciphertexts.
//
// The receiver can only open its chosen slot (it holds no secret key for the
// dummies); the sender sees N identically distributed public keys and learns
// nothing about the choice.
struct OtReceiver {
  int arity = 0;
  int choice = 0;
  uint64_t sk = 0;
};

// Builds the receiver's request message: arity * 8 bytes of public keys.
std::vector<uint8_t> ot_begin(OtReceiver& state, int arity, int choice,
                              std::mt19937_64& rng);

// Builds the sender's response. All messages must have equal length, so the
// response length leaks nothing about content.
std::vector<uint8_t> ot_send(const std::vector<uint8_t>& request,
                             const std::vector<std::vector<uint8_t>>& messages,
                             std::mt19937_64& rng);

// Opens the chosen slot. Throws if the chosen ciphertext fails to decrypt
// (a malformed response, never an honest run).
std::vector<uint8_t> ot_finish(const OtReceiver& state,
                               const std::vector<uint8_t>& response);

// Slot count a response carries (for tests poking at non-chosen slots).
std::vector<std::vector<uint8_t>> ot_split_response(const std::vector<uint8_t>& response);

}  // namespace mpqc::crypto

#endif  // MPQC_CRYPTO_OT_HPP_
