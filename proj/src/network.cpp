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

#include "mpqc/harness/network.hpp"

#include <stdexcept>

#include "json.hpp"
#include "mpqc/bits.hpp"

namespace mpqc::harness {

int Transcript::counted_rounds(const std::string& excluded_prefix) const {
  int n = 0;
  for (const auto& r : rounds) {
    for (const auto& m : r.messages) {
      if (excluded_prefix.empty() || m.tag.rfind(excluded_prefix, 0) != 0) {
        ++n;
        break;
      }
    }
  }
  return n;
}

size_t Transcript::total_messages() const {
  size_t n = 0;
  for (const auto& r : rounds) n += r.messages.size();
  return n;
}

size_t Transcript::total_payload_bytes() const {
  size_t n = 0;
  for (const auto& r : rounds)
    for (const auto& m : r.messages) n += m.payload.size();
  return n;
}

std::string Transcript::to_json_string(int indent) const {
  nlohmann::json jrounds = nlohmann::json::array();
  for (const auto& r : rounds) {
    nlohmann::json jmsgs = nlohmann::json::array();
    for (const auto& m : r.messages) {
      jmsgs.push_back({{"from", m.from},
                       {"to", m.to},
                       {"tag", m.tag},
                       {"payload", to_hex(m.payload)}});
    }
    jrounds.push_back({{"round", r.index}, {"messages", jmsgs}});
  }
  return nlohmann::json{{"rounds", jrounds}}.dump(indent);
}

Transcript Transcript::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Transcript t;
  for (const auto& jr : j.at("rounds")) {
    Transcript::Round round;
    round.index = jr.at("round").get<int>();
    for (const auto& jm : jr.at("messages")) {
      Message m;
      m.from = jm.at("from").get<int>();
      m.to = jm.at("to").get<int>();
      m.tag = jm.at("tag").get<std::string>();
      m.payload = from_hex(jm.at("payload").get<std::string>());
      round.messages.push_back(std::move(m));
    }
    t.rounds.push_back(std::move(round));
  }
  return t;
}

RunResult run_protocol(const std::vector<Party*>& parties, int max_iterations) {
  const int n = static_cast<int>(parties.size());
  if (n < 1) throw std::invalid_argument("need at least one party");

  RunResult result;
  std::vector<std::vector<Message>> pending(n);  // inboxes for this iteration

  for (int it = 0; it < max_iterations; ++it) {
    bool delivered = false;
    for (const auto& inbox : pending) delivered |= !inbox.empty();

    std::vector<Message> sent;
    for (int p = 0; p < n; ++p) {
      auto outbox = parties[p]->step(it, pending[p]);
      for (auto& m : outbox) {
        m.from = p;  // the wire stamps the sender; parties cannot spoof
        if (m.to < 0 || m.to >= n) throw std::runtime_error("message to unknown party");
        if (m.to == p) throw std::runtime_error("message to self");
        sent.push_back(std::move(m));
      }
    }

    for (auto& inbox : pending) inbox.clear();
    for (const auto& m : sent) pending[m.to].push_back(m);

    if (!sent.empty()) {
      result.transcript.rounds.push_back({it, std::move(sent)});
    } else {
      bool all_done = true;
      for (auto* p : parties) all_done &= p->done();
      if (all_done) {
        result.rounds_used = static_cast<int>(result.transcript.rounds.size());
        return result;
      }
      if (!delivered) {
        throw std::runtime_error("protocol deadlock: no traffic and parties not done");
      }
    }
  }
  throw std::runtime_error("protocol exceeded iteration budget");
}

}  // namespace mpqc::harness
