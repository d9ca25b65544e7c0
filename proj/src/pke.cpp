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

#include "mpqc/crypto/pke.hpp"

#include <openssl/sha.h>

#include <array>
#include <cstring>
#include <stdexcept>

namespace mpqc::crypto {

namespace {

constexpr size_t kTagLen = 8;
constexpr size_t kElemLen = 8;

uint64_t mulmod(uint64_t a, uint64_t b) {
  // p < 2^31, so the product fits in 64 bits with room to spare.
  return (a * b) % kGroupP;
}

uint64_t uniform_below(uint64_t bound, std::mt19937_64& rng) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

void append_u64(std::vector<uint8_t>& buf, uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t read_u64(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
  return v;
}

std::array<uint8_t, SHA256_DIGEST_LENGTH> hash_tagged(const char* tag,
                                                      const std::vector<uint8_t>& data) {
  std::vector<uint8_t> buf(tag, tag + std::strlen(tag));
  buf.insert(buf.end(), data.begin(), data.end());
  std::array<uint8_t, SHA256_DIGEST_LENGTH> digest;
  SHA256(buf.data(), buf.size(), digest.data());
  return digest;
}

// KDF-derived keystream of arbitrary length from the shared secret.
std::vector<uint8_t> keystream(uint64_t eph, uint64_t shared, size_t n) {
  std::vector<uint8_t> out;
  for (uint64_t ctr = 0; out.size() < n; ++ctr) {
    std::vector<uint8_t> buf;
    append_u64(buf, eph);
    append_u64(buf, shared);
    append_u64(buf, ctr);
    auto d = hash_tagged("kdf", buf);
    out.insert(out.end(), d.begin(), d.end());
  }
  out.resize(n);
  return out;
}

std::array<uint8_t, kTagLen> auth_tag(uint64_t eph, uint64_t shared,
                                      const std::vector<uint8_t>& msg) {
  std::vector<uint8_t> buf;
  append_u64(buf, eph);
  append_u64(buf, shared);
  buf.insert(buf.end(), msg.begin(), msg.end());
  auto d = hash_tagged("mac", buf);
  std::array<uint8_t, kTagLen> tag;
  std::copy_n(d.begin(), kTagLen, tag.begin());
  return tag;
}

}  // namespace

uint64_t group_pow(uint64_t base, uint64_t exp) {
  uint64_t result = 1;
  base %= kGroupP;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base);
    base = mulmod(base, base);
    exp >>= 1;
  }
  return result;
}

KeyPair pke_keygen(std::mt19937_64& rng) {
  KeyPair kp;
  kp.sk = uniform_below(kGroupQ, rng);
  kp.pk = group_pow(kGroupG, kp.sk);
  return kp;
}

uint64_t pke_dummy_pk(std::mt19937_64& rng) {
  // h^((p-1)/q) = h^2 maps a uniform unit to a uniform subgroup element.
  uint64_t h = 1 + uniform_below(kGroupP - 1, rng);
  return mulmod(h, h);
}

std::vector<uint8_t> pke_encrypt(uint64_t pk, const std::vector<uint8_t>& msg,
                                 std::mt19937_64& rng) {
  if (pk == 0 || pk >= kGroupP) throw std::invalid_argument("bad public key");
  uint64_t r = uniform_below(kGroupQ, rng);
  uint64_t eph = group_pow(kGroupG, r);
  uint64_t shared = group_pow(pk, r);

  std::vector<uint8_t> ct;
  append_u64(ct, eph);
  auto ks = keystream(eph, shared, msg.size());
  for (size_t i = 0; i < msg.size(); ++i) ct.push_back(msg[i] ^ ks[i]);
  auto tag = auth_tag(eph, shared, msg);
  ct.insert(ct.end(), tag.begin(), tag.end());
  return ct;
}

std::optional<std::vector<uint8_t>> pke_decrypt(uint64_t sk,
                                                const std::vector<uint8_t>& ct) {
  if (ct.size() < kElemLen + kTagLen) return std::nullopt;
  uint64_t eph = read_u64(ct.data());
  if (eph == 0 || eph >= kGroupP) return std::nullopt;
  uint64_t shared = group_pow(eph, sk);

  size_t msg_len = ct.size() - kElemLen - kTagLen;
  auto ks = keystream(eph, shared, msg_len);
  std::vector<uint8_t> msg(msg_len);
  for (size_t i = 0; i < msg_len; ++i) msg[i] = ct[kElemLen + i] ^ ks[i];

  auto expect = auth_tag(eph, shared, msg);
  // Not constant-time; adversaries here are statistical, not timing-based.
  if (!std::equal(expect.begin(), expect.end(), ct.end() - kTagLen)) {
    return std::nullopt;
  }
  return msg;
}

}  // namespace mpqc::crypto
