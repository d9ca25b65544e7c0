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

#include "mpqc/crypto/ot.hpp"

#include <stdexcept>

#include "mpqc/bits.hpp"
#include "mpqc/crypto/pke.hpp"

namespace mpqc::crypto {

namespace {

constexpr size_t kPkLen = 8;

void append_u64(std::vector<uint8_t>& buf, uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t read_u64(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
  return v;
}

void check_arity(int arity) {
  if (arity != 2 && arity != 4) throw std::invalid_argument("OT arity must be 2 or 4");
}

}  // namespace

std::vector<uint8_t> ot_begin(OtReceiver& state, int arity, int choice,
                              std::mt19937_64& rng) {
  check_arity(arity);
  if (choice < 0 || choice >= arity) throw std::invalid_argument("OT choice out of range");
  KeyPair real = pke_keygen(rng);
  state.arity = arity;
  state.choice = choice;
  state.sk = real.sk;

  std::vector<uint8_t> msg;
  for (int i = 0; i < arity; ++i) {
    append_u64(msg, i == choice ? real.pk : pke_dummy_pk(rng));
  }
  return msg;
}

std::vector<uint8_t> ot_send(const std::vector<uint8_t>& request,
                             const std::vector<std::vector<uint8_t>>& messages,
                             std::mt19937_64& rng) {
  int arity = static_cast<int>(messages.size());
  check_arity(arity);
  if (request.size() != static_cast<size_t>(arity) * kPkLen) {
    throw std::invalid_argument("OT request has wrong size");
  }
  for (const auto& m : messages) {
    if (m.size() != messages[0].size()) {
      throw std::invalid_argument("OT messages must have equal length");
    }
  }
  std::vector<uint8_t> response;
  for (int i = 0; i < arity; ++i) {
    uint64_t pk = read_u64(request.data() + static_cast<size_t>(i) * kPkLen);
    put_bytes(response, pke_encrypt(pk, messages[i], rng));
  }
  return response;
}

std::vector<std::vector<uint8_t>> ot_split_response(const std::vector<uint8_t>& response) {
  std::vector<std::vector<uint8_t>> slots;
  size_t pos = 0;
  while (pos < response.size()) slots.push_back(get_bytes(response, pos));
  return slots;
}

std::vector<uint8_t> ot_finish(const OtReceiver& state,
                               const std::vector<uint8_t>& response) {
  auto slots = ot_split_response(response);
  if (static_cast<int>(slots.size()) != state.arity) {
    throw std::invalid_argument("OT response slot count mismatch");
  }
  auto msg = pke_decrypt(state.sk, slots[state.choice]);
  if (!msg) throw std::runtime_error("OT chosen slot failed to decrypt");
  return *msg;
}

}  // namespace mpqc::crypto
