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

#include "mpqc/harness/circuit_ir.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mpqc::harness {

namespace {

using nlohmann::json;

qsim::Gate quantum_gate_from_name(const std::string& name) {
  if (name == "X") return qsim::Gate::X;
  if (name == "Z") return qsim::Gate::Z;
  if (name == "H") return qsim::Gate::H;
  if (name == "P") return qsim::Gate::P;
  if (name == "CNOT") return qsim::Gate::CNOT;
  if (name == "T") return qsim::Gate::T;
  throw std::invalid_argument("unknown quantum gate: " + name);
}

gmw::BoolOp bool_op_from_name(const std::string& name) {
  if (name == "NOT") return gmw::BoolOp::NOT;
  if (name == "XOR") return gmw::BoolOp::XOR;
  if (name == "AND") return gmw::BoolOp::AND;
  throw std::invalid_argument("unknown boolean gate: " + name);
}

json inputs_to_json(const std::vector<std::vector<int>>& inputs) {
  json j = json::array();
  for (const auto& per_party : inputs) j.push_back(per_party);
  return j;
}

std::vector<std::vector<int>> inputs_from_json(const json& j) {
  std::vector<std::vector<int>> inputs;
  for (const auto& per_party : j) inputs.push_back(per_party.get<std::vector<int>>());
  return inputs;
}

}  // namespace

void QuantumSpec::validate() const {
  std::set<int> seen;
  for (const auto& per_party : inputs) {
    for (int q : per_party) {
      if (q < 0 || q >= circuit.num_qubits) throw std::invalid_argument("input qubit range");
      if (!seen.insert(q).second) throw std::invalid_argument("qubit owned twice");
    }
  }
  if (static_cast<int>(seen.size()) != circuit.num_qubits) {
    throw std::invalid_argument("every qubit needs exactly one owner");
  }
  for (const auto& g : circuit.gates) {
    if (g.t0 < 0 || g.t0 >= circuit.num_qubits) throw std::invalid_argument("gate target");
    if (qsim::gate_arity(g.kind) == 2) {
      if (g.t1 < 0 || g.t1 >= circuit.num_qubits || g.t1 == g.t0) {
        throw std::invalid_argument("gate target");
      }
    } else if (g.t1 != -1) {
      throw std::invalid_argument("one-qubit gate with two targets");
    }
  }
  if (outputs.empty()) throw std::invalid_argument("no output qubits");
  std::set<int> outs;
  for (int q : outputs) {
    if (q < 0 || q >= circuit.num_qubits) throw std::invalid_argument("output qubit range");
    if (!outs.insert(q).second) throw std::invalid_argument("duplicate output qubit");
  }
}

CircuitIR CircuitIR::wrap(QuantumSpec spec) {
  CircuitIR ir;
  ir.kind = "quantum";
  ir.quantum = std::move(spec);
  return ir;
}

CircuitIR CircuitIR::wrap(gmw::BoolCircuit circuit) {
  CircuitIR ir;
  ir.kind = "boolean";
  ir.boolean = std::move(circuit);
  return ir;
}

std::string circuit_to_json(const CircuitIR& ir, int indent) {
  json j;
  j["kind"] = ir.kind;
  if (ir.kind == "quantum") {
    if (!ir.quantum) throw std::invalid_argument("quantum IR without payload");
    const auto& spec = *ir.quantum;
    j["qubits"] = spec.circuit.num_qubits;
    j["inputs"] = inputs_to_json(spec.inputs);
    json gates = json::array();
    for (size_t i = 0; i < spec.circuit.gates.size(); ++i) {
      const auto& g = spec.circuit.gates[i];
      json targets = json::array({g.t0});
      if (g.t1 >= 0) targets.push_back(g.t1);
      gates.push_back({{"id", i}, {"kind", qsim::gate_name(g.kind)}, {"targets", targets}});
    }
    j["gates"] = gates;
    j["outputs"] = spec.outputs;
  } else if (ir.kind == "boolean") {
    if (!ir.boolean) throw std::invalid_argument("boolean IR without payload");
    const auto& c = *ir.boolean;
    j["wires"] = c.num_wires;
    j["inputs"] = inputs_to_json(c.inputs);
    json gates = json::array();
    for (size_t i = 0; i < c.gates.size(); ++i) {
      const auto& g = c.gates[i];
      json targets = json::array({g.out});
      for (int w : g.in) targets.push_back(w);
      gates.push_back({{"id", i}, {"kind", gmw::bool_op_name(g.op)}, {"targets", targets}});
    }
    j["gates"] = gates;
    j["outputs"] = c.outputs;
  } else {
    throw std::invalid_argument("unknown circuit kind: " + ir.kind);
  }
  return j.dump(indent);
}

CircuitIR circuit_from_json(const std::string& text) {
  json j = json::parse(text);
  CircuitIR ir;
  ir.kind = j.at("kind").get<std::string>();
  if (ir.kind == "quantum") {
    QuantumSpec spec;
    spec.circuit.num_qubits = j.at("qubits").get<int>();
    spec.inputs = inputs_from_json(j.at("inputs"));
    for (const auto& jg : j.at("gates")) {
      qsim::QuantumGate g;
      g.kind = quantum_gate_from_name(jg.at("kind").get<std::string>());
      auto targets = jg.at("targets").get<std::vector<int>>();
      if (targets.size() != static_cast<size_t>(qsim::gate_arity(g.kind))) {
        throw std::invalid_argument("target count does not match gate arity");
      }
      g.t0 = targets[0];
      g.t1 = targets.size() > 1 ? targets[1] : -1;
      spec.circuit.gates.push_back(g);
    }
    spec.outputs = j.at("outputs").get<std::vector<int>>();
    spec.validate();
    ir.quantum = std::move(spec);
  } else if (ir.kind == "boolean") {
    gmw::BoolCircuit c;
    c.num_wires = j.at("wires").get<int>();
    c.inputs = inputs_from_json(j.at("inputs"));
    for (const auto& jg : j.at("gates")) {
      gmw::BoolGate g;
      g.op = bool_op_from_name(jg.at("kind").get<std::string>());
      auto targets = jg.at("targets").get<std::vector<int>>();
      if (targets.size() < 2) throw std::invalid_argument("gate needs an output and inputs");
      g.out = targets[0];
      g.in.assign(targets.begin() + 1, targets.end());
      c.gates.push_back(std::move(g));
    }
    c.outputs = j.at("outputs").get<std::vector<int>>();
    c.validate();
    ir.boolean = std::move(c);
  } else {
    throw std::invalid_argument("unknown circuit kind: " + ir.kind);
  }
  return ir;
}

CircuitIR load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return circuit_from_json(ss.str());
}

void save_circuit(const std::string& path, const CircuitIR& ir) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write circuit file: " + path);
  out << circuit_to_json(ir) << "\n";
}

}  // namespace mpqc::harness
