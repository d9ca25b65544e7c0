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

// Command-line laboratory. Every verb double-checks its own run against a
// direct reference (statevector simulation, plaintext evaluation, or a
// statistical threshold) and exits 0 only when all requested checks pass.
//
//   run-two-party    one protocol run on a circuit file, fidelity-checked
//   run-multi-party  same, n parties
//   run-clifford     same, Clifford-only fast path
//   rounds-report    depth sweep: protocols stay constant, gmw does not
//   privacy-audit    the statistical privacy battery
//   garble-bench     garbling sizes, depths, and timings
//
// The MPQC_SEED environment variable supplies the default --seed; everything
// else is explicit flags.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mpqc/bits.hpp"
#include "mpqc/bmr/garble.hpp"
#include "mpqc/bmr/garbling_circuits.hpp"
#include "mpqc/gmw/engine.hpp"
#include "mpqc/harness/audit.hpp"
#include "mpqc/harness/circuit_ir.hpp"
#include "mpqc/harness/corpus.hpp"
#include "mpqc/harness/rounds_report.hpp"
#include "mpqc/protocols/clifford_path.hpp"
#include "mpqc/protocols/multi_party.hpp"
#include "mpqc/protocols/two_party.hpp"
#include "mpqc/qsim/register.hpp"

namespace {

using json = nlohmann::json;
using namespace mpqc;
using qsim::StateVec;

constexpr double kFidelityTol = 1e-9;

uint64_t default_seed() {
  const char* env = std::getenv("MPQC_SEED");
  return env != nullptr ? std::strtoull(env, nullptr, 10) : 1;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
}

// ---------------------------------------------------------------------------
// Protocol run verbs: sample a random basis-state input, run the protocol,
// and compare the joint output state against direct simulation.

struct RunSetup {
  harness::QuantumSpec spec;
  std::vector<std::vector<int>> lines;  // per party, ascending line ids
  std::vector<uint8_t> bits;            // sampled input bit per line
};

RunSetup load_run_setup(const std::string& path, int n_override, uint64_t seed) {
  const auto ir = harness::load_circuit(path);
  if (!ir.quantum.has_value())
    throw std::runtime_error(path + ": expected a quantum circuit file");
  RunSetup setup;
  setup.spec = *ir.quantum;
  setup.spec.validate();

  if (n_override > 0) {
    // Regroup the lines into contiguous blocks, ignoring the file's split.
    const auto sizes = harness::split_sizes(setup.spec.circuit.num_qubits, n_override);
    setup.lines.resize(sizes.size());
    int next = 0;
    for (size_t p = 0; p < sizes.size(); ++p)
      for (int i = 0; i < sizes[p]; ++i) setup.lines[p].push_back(next++);
  } else {
    setup.lines = setup.spec.inputs;
  }

  std::mt19937_64 rng(mix_seed(seed, 0x696e7074));
  setup.bits.resize(setup.spec.circuit.num_qubits);
  for (auto& b : setup.bits) b = static_cast<uint8_t>(rng() & 1);
  return setup;
}

// Prepares one basis qubit per line and hands each party its handles.
std::vector<std::vector<qsim::Register::Handle>> deal_lines(qsim::Register& reg,
                                                            const RunSetup& setup) {
  std::vector<qsim::Register::Handle> by_line(setup.bits.size());
  for (size_t q = 0; q < setup.bits.size(); ++q)
    by_line[q] = reg.add_state(StateVec::basis(1, setup.bits[q]))[0];
  std::vector<std::vector<qsim::Register::Handle>> per_party;
  for (const auto& lines : setup.lines) {
    per_party.emplace_back();
    for (int q : lines) per_party.back().push_back(by_line[q]);
  }
  return per_party;
}

StateVec reference_output(const RunSetup& setup) {
  uint64_t packed = 0;
  for (size_t q = 0; q < setup.bits.size(); ++q)
    packed |= static_cast<uint64_t>(setup.bits[q]) << q;
  StateVec expect = StateVec::basis(setup.spec.circuit.num_qubits, packed);
  qsim::apply_circuit(expect, setup.spec.circuit);
  return expect;
}

int report_run(const std::string& verb, const RunSetup& setup,
               const protocols::ProtocolResult& res, qsim::Register& reg,
               const std::string& out_path) {
  const StateVec got = reg.extract(res.outputs);
  const double fid = qsim::fidelity(got, reference_output(setup));
  const bool pass = std::abs(fid - 1.0) <= kFidelityTol;

  std::cout << verb << ": " << setup.spec.circuit.num_qubits << " qubits, "
            << setup.spec.circuit.gates.size() << " gates, " << setup.lines.size()
            << " parties\n";
  std::cout << "input bits:";
  for (uint8_t b : setup.bits) std::cout << ' ' << static_cast<int>(b);
  std::cout << "\nrounds: " << res.rounds_used << "\nfidelity vs direct simulation: "
            << std::setprecision(12) << fid << "\n"
            << (pass ? "PASS" : "FAIL") << " (|fidelity - 1| <= 1e-9)\n";
  if (!out_path.empty()) write_text(out_path, res.transcript.to_json_string(2));
  return pass ? 0 : 1;
}

int cmd_run_two_party(const std::string& circuit, uint64_t seed, const std::string& out) {
  const RunSetup setup = load_run_setup(circuit, 0, seed);
  if (setup.lines.size() != 2)
    throw std::runtime_error("run-two-party needs a circuit file with two parties");
  qsim::Register reg(mix_seed(seed, 0x726567));
  const auto handles = deal_lines(reg, setup);
  const auto res = protocols::run_two_party(reg, setup.spec.circuit, handles[0],
                                            handles[1], seed);
  return report_run("run-two-party", setup, res, reg, out);
}

int cmd_run_multi_party(const std::string& circuit, int n, int k, uint64_t seed,
                        const std::string& out) {
  const RunSetup setup = load_run_setup(circuit, n, seed);
  if (setup.lines.size() < 2)
    throw std::runtime_error("need at least two parties; pass --n");
  qsim::Register reg(mix_seed(seed, 0x726567));
  const auto handles = deal_lines(reg, setup);
  protocols::MultiPartyOptions opt;
  opt.k = k;
  const auto res = protocols::run_multi_party(reg, setup.spec.circuit, handles, seed, opt);
  return report_run("run-multi-party", setup, res, reg, out);
}

int cmd_run_clifford(const std::string& circuit, int n, uint64_t seed,
                     const std::string& out) {
  const RunSetup setup = load_run_setup(circuit, n, seed);
  if (setup.lines.size() < 2)
    throw std::runtime_error("need at least two parties; pass --n");
  // One cut mid-circuit exercises the deferred-correction machinery.
  std::vector<int> cuts;
  if (setup.spec.circuit.gates.size() >= 2)
    cuts.push_back(static_cast<int>(setup.spec.circuit.gates.size() / 2));
  qsim::Register reg(mix_seed(seed, 0x726567));
  const auto handles = deal_lines(reg, setup);
  const auto res = protocols::run_clifford(reg, setup.spec.circuit, cuts, handles, seed);
  std::cout << "cuts:";
  for (int c : cuts) std::cout << ' ' << c;
  std::cout << '\n';
  return report_run("run-clifford", setup, res.run, reg, out);
}

// ---------------------------------------------------------------------------
// rounds-report: run every protocol over a depth family and verify the round
// count never moves; run gmw over matching AND-ladders as the negative
// control that must grow.

harness::RoundsReport sweep_two_party(const std::vector<int>& depths, uint64_t seed) {
  std::vector<harness::RoundsRow> rows;
  for (int d : depths) {
    const auto f = harness::layered_family(d);
    qsim::Register reg(mix_seed(seed, 2000 + d));
    auto a = reg.add_state(qsim::random_state(1, reg.rng()));
    auto b = reg.add_state(qsim::random_state(1, reg.rng()));
    const auto res = protocols::run_two_party(reg, f, a, b, mix_seed(seed, 2100 + d));
    rows.push_back({d, res.rounds_used});
  }
  return harness::rounds_report(rows);
}

harness::RoundsReport sweep_multi_party(const std::vector<int>& depths, int n, int k,
                                        uint64_t seed) {
  std::vector<harness::RoundsRow> rows;
  for (int d : depths) {
    const auto f = harness::layered_family(d);
    const auto sizes = harness::split_sizes(f.num_qubits, n);
    qsim::Register reg(mix_seed(seed, 3000 + d));
    std::vector<std::vector<qsim::Register::Handle>> inputs;
    for (int s : sizes) {
      inputs.emplace_back();
      for (int i = 0; i < s; ++i)
        inputs.back().push_back(reg.add_state(qsim::random_state(1, reg.rng()))[0]);
    }
    protocols::MultiPartyOptions opt;
    opt.k = k;
    const auto res =
        protocols::run_multi_party(reg, f, inputs, mix_seed(seed, 3100 + d), opt);
    rows.push_back({d, res.rounds_used});
  }
  return harness::rounds_report(rows);
}

harness::RoundsReport sweep_clifford(const std::vector<int>& depths, int n,
                                     uint64_t seed) {
  std::vector<harness::RoundsRow> rows;
  for (int d : depths) {
    const auto f = harness::layered_clifford_family(d);
    const auto sizes = harness::split_sizes(f.num_qubits, n);
    qsim::Register reg(mix_seed(seed, 4000 + d));
    std::vector<std::vector<qsim::Register::Handle>> inputs;
    for (int s : sizes) {
      inputs.emplace_back();
      for (int i = 0; i < s; ++i)
        inputs.back().push_back(reg.add_state(qsim::random_state(1, reg.rng()))[0]);
    }
    const auto res =
        protocols::run_clifford(reg, f, {2}, inputs, mix_seed(seed, 4100 + d));
    rows.push_back({d, res.run.rounds_used});
  }
  return harness::rounds_report(rows);
}

harness::RoundsReport sweep_gmw(const std::vector<int>& depths, uint64_t seed) {
  std::vector<harness::RoundsRow> rows;
  for (int d : depths) {
    const auto c = harness::and_ladder(2, d);
    std::vector<BitVec> inputs(2);
    for (int p = 0; p < 2; ++p)
      inputs[p].assign(c.inputs[p].size(), 1);
    const auto res = gmw::run_gmw(c, inputs, mix_seed(seed, 5000 + d));
    rows.push_back({d, res.rounds_used});
  }
  return harness::rounds_report(rows);
}

bool strictly_increasing(const harness::RoundsReport& r) {
  for (size_t i = 1; i < r.rows.size(); ++i)
    if (r.rows[i].rounds <= r.rows[i - 1].rounds) return false;
  return true;
}

json rounds_to_json(const harness::RoundsReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back({{"depth", row.depth}, {"rounds", row.rounds}});
  return {{"rows", rows}, {"constant", r.constant}};
}

int cmd_rounds_report(const std::vector<int>& depths, int n, int k, uint64_t seed,
                      const std::string& out) {
  const auto two = sweep_two_party(depths, seed);
  const auto multi = sweep_multi_party(depths, n, k, seed);
  const auto cliff = sweep_clifford(depths, n, seed);
  const auto gmw_rows = sweep_gmw(depths, seed);
  const bool gmw_grows = !gmw_rows.constant && strictly_increasing(gmw_rows);

  std::cout << "two-party protocol\n" << two.render() << '\n';
  std::cout << "multi-party protocol (n=" << n << ")\n" << multi.render() << '\n';
  std::cout << "clifford fast path (n=" << n << ")\n" << cliff.render() << '\n';
  std::cout << "gmw negative control\n" << gmw_rows.render();
  std::cout << "depth-dependent control: " << (gmw_grows ? "PASS" : "FAIL")
            << " (rounds must strictly increase)\n";

  const bool pass = two.constant && multi.constant && cliff.constant && gmw_grows;
  if (!out.empty()) {
    json j = {{"two_party", rounds_to_json(two)},
              {"multi_party", rounds_to_json(multi)},
              {"clifford", rounds_to_json(cliff)},
              {"gmw", rounds_to_json(gmw_rows)},
              {"gmw_strictly_increasing", gmw_grows},
              {"pass", pass}};
    write_text(out, j.dump(2) + "\n");
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// privacy-audit

int cmd_privacy_audit(int trials, uint64_t seed, bool sab_qotp, bool sab_ot,
                      bool sab_labels, bool sab_flips, const std::string& out) {
  harness::AuditConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.sabotage_qotp = sab_qotp;
  cfg.sabotage_ot = sab_ot;
  cfg.sabotage_labels = sab_labels;
  cfg.sabotage_flips = sab_flips;
  const auto report = harness::privacy_audit(cfg);
  std::cout << report.render();
  if (!out.empty()) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"pass", c.pass},
                        {"statistic", c.statistic},
                        {"threshold", c.threshold},
                        {"note", c.note}});
    json j = {{"trials", cfg.trials}, {"seed", cfg.seed}, {"checks", checks},
              {"all_pass", report.all_pass()}};
    write_text(out, j.dump(2) + "\n");
  }
  return report.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// garble-bench: depths, sizes, and timings of the garbling pipeline, checked
// against the depth bounds and plaintext evaluation.

struct BenchRow {
  std::string name;
  int wires = 0;
  int gates = 0;
  int lambda_depth = 0;
  int signal_depth = 0;
  int label_depth = 0;
  size_t bytes = 0;
  double garble_us = 0.0;
  double eval_us = 0.0;
  bool ok = false;
};

BenchRow bench_circuit(const std::string& name, const gmw::BoolCircuit& c, int k,
                       int trials, std::mt19937_64& rng) {
  BenchRow row;
  row.name = name;
  row.wires = c.num_wires;
  row.gates = static_cast<int>(c.gates.size());

  const auto norm = bmr::normalize(c);
  const bmr::GarbleParams params{c.num_parties(), k};
  const auto built = bmr::build_garbling_circuits(norm, params);
  row.lambda_depth = built.lambda_depth;
  row.signal_depth = built.signal_depth;
  row.label_depth = built.label_depth;

  std::vector<BitVec> inputs;
  for (const auto& wires : c.inputs) {
    inputs.emplace_back();
    for (size_t i = 0; i < wires.size(); ++i)
      inputs.back().push_back(static_cast<uint8_t>(rng() & 1));
  }

  bool correct = true;
  std::chrono::duration<double, std::micro> garble_time{0}, eval_time{0};
  for (int t = 0; t < trials; ++t) {
    std::vector<bmr::PartyRandomness> rand;
    for (int p = 0; p < params.n; ++p)
      rand.push_back(bmr::PartyRandomness::sample(norm, params.k, rng));
    const auto t0 = std::chrono::steady_clock::now();
    const auto prog = bmr::garble_dealer(norm, params, rand, inputs);
    const auto t1 = std::chrono::steady_clock::now();
    const auto res = bmr::bmr_evaluate(prog);
    const auto t2 = std::chrono::steady_clock::now();
    garble_time += t1 - t0;
    eval_time += t2 - t1;
    if (t == 0) row.bytes = prog.serialize().size();
    correct = correct && (res.outputs == gmw::eval_plaintext(c, inputs));
  }
  row.garble_us = garble_time.count() / trials;
  row.eval_us = eval_time.count() / trials;
  row.ok = correct && row.lambda_depth <= 1 && row.signal_depth <= 4 &&
           row.label_depth <= 6;
  return row;
}

int cmd_garble_bench(const std::string& circuit, int k, int trials, uint64_t seed,
                     const std::string& out) {
  std::mt19937_64 rng(mix_seed(seed, 0x62656e63));
  std::vector<std::pair<std::string, gmw::BoolCircuit>> work;
  if (!circuit.empty()) {
    const auto ir = harness::load_circuit(circuit);
    if (!ir.boolean.has_value())
      throw std::runtime_error(circuit + ": expected a boolean circuit file");
    work.emplace_back(circuit, *ir.boolean);
  } else {
    const auto corpus = harness::boolean_corpus();
    for (size_t i = 0; i < corpus.size(); ++i)
      work.emplace_back("corpus[" + std::to_string(i) + "]", corpus[i]);
  }

  std::cout << std::left << std::setw(12) << "circuit" << std::right << std::setw(6)
            << "wires" << std::setw(6) << "gates" << std::setw(9) << "d(lam)"
            << std::setw(7) << "d(sig)" << std::setw(7) << "d(lab)" << std::setw(8)
            << "bytes" << std::setw(11) << "garble us" << std::setw(9) << "eval us"
            << "  check\n";
  bool pass = true;
  json rows = json::array();
  for (const auto& [name, c] : work) {
    const auto row = bench_circuit(name, c, k, trials, rng);
    pass = pass && row.ok;
    std::cout << std::left << std::setw(12) << row.name << std::right << std::setw(6)
              << row.wires << std::setw(6) << row.gates << std::setw(9)
              << row.lambda_depth << std::setw(7) << row.signal_depth << std::setw(7)
              << row.label_depth << std::setw(8) << row.bytes << std::setw(11)
              << std::fixed << std::setprecision(1) << row.garble_us << std::setw(9)
              << row.eval_us << "  " << (row.ok ? "PASS" : "FAIL") << '\n';
    rows.push_back({{"name", row.name},
                    {"wires", row.wires},
                    {"gates", row.gates},
                    {"lambda_depth", row.lambda_depth},
                    {"signal_depth", row.signal_depth},
                    {"label_depth", row.label_depth},
                    {"bytes", row.bytes},
                    {"garble_us", row.garble_us},
                    {"eval_us", row.eval_us},
                    {"ok", row.ok}});
  }
  std::cout << "depth bounds (<=1, <=4, <=6) and plaintext agreement: "
            << (pass ? "PASS" : "FAIL") << '\n';
  if (!out.empty())
    write_text(out, json{{"rows", rows}, {"pass", pass}}.dump(2) + "\n");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale laboratory for constant-round multi-party quantum computation"};
  app.require_subcommand(1);

  std::string circuit, out;
  uint64_t seed = default_seed();
  int n = 0;  // 0: take the party split from the circuit file
  int n_sweep = 3, k = 4, trials = 10000;
  std::vector<int> depths = {1, 2, 5, 10, 20};
  bool sab_qotp = false, sab_ot = false, sab_labels = false, sab_flips = false;
  int rc = 0;

  auto* two = app.add_subcommand("run-two-party", "one checked two-party run");
  two->add_option("--circuit", circuit, "CircuitIR JSON (kind quantum, two parties)")
      ->required();
  two->add_option("--seed", seed, "master seed (default: MPQC_SEED or 1)");
  two->add_option("--out", out, "write the transcript JSON here");
  two->callback([&] { rc = cmd_run_two_party(circuit, seed, out); });

  auto* multi = app.add_subcommand("run-multi-party", "one checked n-party run");
  multi->add_option("--circuit", circuit, "CircuitIR JSON (kind quantum)")->required();
  multi->add_option("--n", n, "party count; regroups the lines contiguously");
  multi->add_option("--k", k, "seed bits per party in the joint garbling");
  multi->add_option("--seed", seed, "master seed (default: MPQC_SEED or 1)");
  multi->add_option("--out", out, "write the transcript JSON here");
  multi->callback([&] { rc = cmd_run_multi_party(circuit, n, k, seed, out); });

  auto* cliff = app.add_subcommand("run-clifford", "one checked Clifford fast-path run");
  cliff->add_option("--circuit", circuit, "CircuitIR JSON (kind quantum, Clifford-only)")
      ->required();
  cliff->add_option("--n", n, "party count; regroups the lines contiguously");
  cliff->add_option("--seed", seed, "master seed (default: MPQC_SEED or 1)");
  cliff->add_option("--out", out, "write the transcript JSON here");
  cliff->callback([&] { rc = cmd_run_clifford(circuit, n, seed, out); });

  auto* rounds = app.add_subcommand(
      "rounds-report", "depth sweep: constant protocol rounds, growing gmw control");
  rounds->add_option("--depth-sweep", depths, "depths to sweep")->delimiter(',');
  rounds->add_option("--n", n_sweep, "party count for the n-party protocols")
      ->check(CLI::Range(2, 16));
  rounds->add_option("--k", k, "seed bits per party in the joint garbling");
  rounds->add_option("--seed", seed, "master seed (default: MPQC_SEED or 1)");
  rounds->add_option("--out", out, "write the report JSON here");
  rounds->callback([&] { rc = cmd_rounds_report(depths, n_sweep, k, seed, out); });

  auto* audit = app.add_subcommand("privacy-audit", "statistical privacy battery");
  audit->add_option("--trials", trials, "samples per check (>= 1000)");
  audit->add_option("--seed", seed, "master seed (default: MPQC_SEED or 1)");
  audit->add_option("--out", out, "write the report JSON here");
  audit->add_flag("--sabotage-qotp", sab_qotp, "pin pad keys to (0,0); audit must fail");
  audit->add_flag("--sabotage-ot", sab_ot, "leak the choice bit; audit must fail");
  audit->add_flag("--sabotage-labels", sab_labels, "zero mask shares; audit must fail");
  audit->add_flag("--sabotage-flips", sab_flips, "zero one flip share; audit must fail");
  audit->callback([&] {
    rc = cmd_privacy_audit(trials, seed, sab_qotp, sab_ot, sab_labels, sab_flips, out);
  });

  auto* bench = app.add_subcommand("garble-bench", "garbling depths, sizes, timings");
  bench->add_option("--circuit", circuit, "CircuitIR JSON (kind boolean); default: corpus");
  bench->add_option("--k", k, "seed bits per party");
  bench->add_option("--trials", trials, "timing iterations")
      ->default_val(100)
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "master seed (default: MPQC_SEED or 1)");
  bench->add_option("--out", out, "write the report JSON here");
  bench->callback([&] { rc = cmd_garble_bench(circuit, k, trials, seed, out); });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
