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

#ifndef MPQC_SRC_PROTOCOL_WIRE_HPP_
#define MPQC_SRC_PROTOCOL_WIRE_HPP_

// Payload framing shared by the protocol state machines. Qubit handles ride
// the classical wire as ownership announcements; the qubits themselves never
// leave the shared register.

#include <cstdint>
#include <utility>
#include <vector>

#include "mpqc/bits.hpp"
#include "mpqc/pauliframe/px_group.hpp"
#include "mpqc/qsim/register.hpp"

namespace mpqc::protocols::wire {

inline void put_handles(std::vector<uint8_t>& buf,
                        const std::vector<qsim::Register::Handle>& hs) {
  put_u32(buf, static_cast<uint32_t>(hs.size()));
  for (auto h : hs) put_u32(buf, static_cast<uint32_t>(h));
}

inline std::vector<qsim::Register::Handle> get_handles(const std::vector<uint8_t>& buf,
                                                       size_t& pos) {
  const uint32_t n = get_u32(buf, pos);
  std::vector<qsim::Register::Handle> hs;
  hs.reserve(n);
  for (uint32_t i = 0; i < n; ++i) hs.push_back(static_cast<int>(get_u32(buf, pos)));
  return hs;
}

inline void put_bits(std::vector<uint8_t>& buf, const BitVec& bits) {
  put_u32(buf, static_cast<uint32_t>(bits.size()));
  const auto packed = pack_bits_le(bits);
  buf.insert(buf.end(), packed.begin(), packed.end());
}

inline BitVec get_bits(const std::vector<uint8_t>& buf, size_t& pos) {
  const uint32_t n = get_u32(buf, pos);
  const size_t nbytes = (static_cast<size_t>(n) + 7) / 8;
  if (pos + nbytes > buf.size()) throw std::out_of_range("truncated buffer");
  const std::vector<uint8_t> packed(buf.begin() + pos, buf.begin() + pos + nbytes);
  pos += nbytes;
  return unpack_bits_le(packed, n);
}

// (x, z) bit pairs, e.g. Pauli frames keyed positionally by line.
inline void put_frames(std::vector<uint8_t>& buf,
                       const std::vector<std::pair<uint8_t, uint8_t>>& frames) {
  BitVec bits;
  for (const auto& f : frames) {
    bits.push_back(f.first & 1);
    bits.push_back(f.second & 1);
  }
  put_bits(buf, bits);
}

inline std::vector<std::pair<uint8_t, uint8_t>> get_frames(const std::vector<uint8_t>& buf,
                                                           size_t& pos) {
  const BitVec bits = get_bits(buf, pos);
  if (bits.size() % 2 != 0) throw std::out_of_range("odd frame bit count");
  std::vector<std::pair<uint8_t, uint8_t>> frames;
  for (size_t i = 0; i < bits.size(); i += 2) frames.emplace_back(bits[i], bits[i + 1]);
  return frames;
}

// A PX element packs into five bits: a, then b, then c low-to-high.
inline void put_px_list(std::vector<uint8_t>& buf, const std::vector<pauli::PXElement>& es) {
  put_u32(buf, static_cast<uint32_t>(es.size()));
  for (const auto& e : es) {
    buf.push_back(static_cast<uint8_t>((e.a & 1) | ((e.b & 3) << 1) | ((e.c & 3) << 3)));
  }
}

inline std::vector<pauli::PXElement> get_px_list(const std::vector<uint8_t>& buf, size_t& pos) {
  const uint32_t n = get_u32(buf, pos);
  if (pos + n > buf.size()) throw std::out_of_range("truncated buffer");
  std::vector<pauli::PXElement> es;
  es.reserve(n);
  for (uint32_t i = 0; i < n; ++i) {
    const uint8_t byte = buf[pos++];
    es.push_back({static_cast<uint8_t>(byte & 1), static_cast<uint8_t>((byte >> 1) & 3),
                  static_cast<uint8_t>((byte >> 3) & 3)});
  }
  return es;
}

}  // namespace mpqc::protocols::wire

#endif  // MPQC_SRC_PROTOCOL_WIRE_HPP_
