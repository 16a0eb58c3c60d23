// Copyright 2026 The catlower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catlower/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catlower/circuit.hpp"
#include "catlower/constructions.hpp"
#include "catlower/errors.hpp"
#include "catlower/rewriter.hpp"
#include "catlower/simulator.hpp"
#include "catlower/synthesis.hpp"

namespace catlower::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  RunReport report;
  Json details = Json::object();
  std::vector<std::string> text;  // human-readable lines for non-JSON mode
  std::string error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

Json counts_json(const GateCounts &counts) {
  Json j = Json::object();
  for (GateTag t : kAllGateTags) j[std::string(tag_name(t))] = counts[t];
  return j;
}

std::string counts_line(const GateCounts &counts) {
  std::string s;
  for (GateTag t : kAllGateTags) {
    if (counts[t] == 0) continue;
    if (!s.empty()) s += ' ';
    s += std::string(tag_name(t)) + ":" + std::to_string(counts[t]);
  }
  return s.empty() ? "(none)" : s;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

void emit(const Outcome &o, bool json, std::ostream &out, std::ostream &err) {
  if (!o.error.empty()) err << "error: " << o.error << '\n';
  if (json) {
    Json j;
    j["command"] = o.report.command;
    j["ok"] = o.report.ok;
    Json metrics = Json::object();
    for (const auto &[k, v] : o.report.metrics) metrics[k] = v;
    j["metrics"] = metrics;
    j["artifacts"] = o.report.artifacts;
    for (const auto &[k, v] : o.details.items()) j[k] = v;
    if (!o.error.empty()) j["error"] = o.error;
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto &line : o.text) out << line << '\n';
  for (const auto &[k, v] : o.report.metrics) out << k << " = " << fmt(v) << '\n';
  for (const auto &a : o.report.artifacts) out << "wrote " << a << '\n';
  out << o.report.command << ": " << (o.report.ok ? "ok" : "FAILED") << '\n';
}

// ---------------------------------------------------------------- verify

Outcome cmd_verify(unsigned steps, double tol) {
  Outcome o;
  o.report.command = "verify";
  double rz_err = 0.0, restore = 0.0;
  for (unsigned k = 0; k < steps; ++k) {
    const double theta = 2 * std::numbers::pi * k / steps;
    const auto chk = verify_gadget(rz_gadget(theta), tol);
    rz_err = std::max({rz_err, chk.induced_error, chk.report.residual_norm});
    restore = std::max(restore, chk.catalyst_fidelity_deficit);
  }
  const auto s = s_gadget();
  const auto s_chk = verify_gadget(s, tol);
  const double s_err =
      std::max({s_chk.induced_error, s_chk.report.residual_norm,
                max_entry_error(circuit_unitary(s.circuit), s_gadget_expected_unitary())});
  const auto cs = cs_gadget();
  const auto cs_chk = verify_gadget(cs, tol);
  const double cs_err =
      std::max({cs_chk.induced_error, cs_chk.report.residual_norm,
                max_entry_error(circuit_unitary(cs.circuit), cs_gadget_expected_unitary())});
  restore = std::max({restore, s_chk.catalyst_fidelity_deficit, cs_chk.catalyst_fidelity_deficit});
  const auto flip = catalyst_flip_check();
  const double flip_err = std::abs(1.0 - flip.magnitude);
  const double flip_phase_err = std::abs(flip.phase - std::numbers::pi / 4);

  o.report.metrics = {{"theta_steps", steps},
                      {"max_rz_error", rz_err},
                      {"s_gadget_error", s_err},
                      {"cs_gadget_error", cs_err},
                      {"catalyst_restoration_error", restore},
                      {"catalyst_flip_error", flip_err},
                      {"catalyst_flip_phase", flip.phase},
                      {"catalyst_flip_phase_error", flip_phase_err},
                      {"tolerance", tol}};
  o.report.ok = rz_err <= tol && s_err <= tol && cs_err <= tol && restore <= tol &&
                flip_err <= tol && flip_phase_err <= tol;
  return o;
}

// ----------------------------------------------------------------- lower

Outcome cmd_lower(const std::string &file, const std::string &target_label,
                  const std::string &out_path, bool sdg_via_z) {
  Outcome o;
  o.report.command = "lower";
  const auto target = GateSetProfile::from_label(target_label);
  if (!target) throw std::runtime_error("unknown target profile '" + target_label + "'");
  const Circuit source = parse_circuit(read_file(file));
  LowerOptions opts;
  if (sdg_via_z) opts.sdg = SdgStrategy::ZThenS;
  std::optional<LoweredCircuit> lowered;
  try {
    lowered = lower(source, *target, opts);
  } catch (const LoweringError &e) {
    o.error = e.what();
    o.report.metrics = {{"gate_index", static_cast<double>(e.gate_index())}};
    return o;
  }
  const LoweredCircuit &lc = *lowered;
  const auto rep = count_report(lc);
  o.details["report"] = Json::parse(count_report_json(rep));
  o.report.metrics = {{"qubits", lc.circuit.num_qubits()},
                      {"gate_count", lc.circuit.size()},
                      {"ccz_count", lc.counts[GateTag::CCZ]}};
  o.text.push_back("target " + std::string(target->label()) + ", " +
                   std::to_string(lc.circuit.num_qubits()) + " qubits");
  o.text.push_back("counts " + counts_line(lc.counts));
  o.text.push_back(std::string("catalyst ") + (rep.catalyst ? "yes" : "no") +
                   ", ancilla " + std::to_string(rep.ancilla));

  const std::string text = serialize_circuit(lc.circuit) + "\n";
  if (!out_path.empty()) {
    write_file(out_path, text);
    o.report.artifacts.push_back(out_path);
  } else {
    o.details["circuit"] = text;
  }

  if (source.num_qubits() <= kMaxVerifyDataQubits &&
      lc.circuit.num_qubits() <= kMaxVerifyTotalQubits) {
    const auto chk = verify_lowering(source, lc);
    o.report.metrics.emplace_back("distance", chk.distance);
    o.report.metrics.emplace_back("catalyst_deficit", chk.catalyst_deficit);
    o.details["verification"] = chk.ok ? "passed" : "failed";
    o.report.ok = chk.ok;
  } else {
    o.details["verification"] = "skipped: " + std::to_string(lc.circuit.num_qubits()) +
                                " qubits exceeds the dense verification bound";
    o.report.ok = true;
  }
  o.text.push_back("verification " + o.details["verification"].get<std::string>());
  if (out_path.empty()) o.text.push_back(text);
  return o;
}

// ------------------------------------------------------------ synthesize

Outcome cmd_synthesize(std::optional<unsigned> m, std::optional<std::uint64_t> seed,
                       const std::string &matrix_file, const std::string &target_label,
                       const std::string &out_path) {
  Outcome o;
  o.report.command = "synthesize";
  if (seed.has_value() == !matrix_file.empty()) {
    throw std::runtime_error("give exactly one of --seed or --matrix");
  }
  const auto target = GateSetProfile::from_label(target_label);
  if (!target || (target->name() != Profile::REAL_O2_CCZ && target->name() != Profile::REAL_O2_CZ)) {
    throw std::runtime_error("synthesis target must be REAL_O2_CCZ or REAL_O2_CZ");
  }
  DenseUnitary u(1);
  if (seed) {
    if (!m) throw std::runtime_error("--seed needs --m");
    if (*m < 1 || *m > kMaxSynthesisQubits) throw std::runtime_error("--m must be 1, 2 or 3");
    u = haar_unitary(*m, *seed);
  } else {
    u = read_matrix_text(read_file(matrix_file));
    if (m && *m != u.num_qubits()) {
      throw std::runtime_error("--m " + std::to_string(*m) + " does not match a " +
                               std::to_string(u.dim()) + "x" + std::to_string(u.dim()) +
                               " matrix");
    }
    const double uerr = u.unitarity_error();
    if (uerr > 1e-10) {
      o.error = "matrix is not unitary: ||U^dag U - I||_F = " + fmt(uerr);
      o.report.metrics = {{"unitarity_error", uerr}};
      return o;
    }
  }
  SynthesisOptions opts;
  opts.target = *target;
  std::optional<SynthesisResult> result;
  try {
    result = synthesize(u, opts);
  } catch (const SynthesisError &e) {
    o.error = e.what();
    return o;
  }
  const SynthesisResult &r = *result;
  o.report.metrics = {{"m", u.num_qubits()},
                      {"distance", r.distance},
                      {"ccz_count", r.lowered.counts[GateTag::CCZ]},
                      {"catalyst_deficit", r.catalyst_deficit},
                      {"decomposition_cz_count", gate_counts(r.decomposed)[GateTag::CZ]},
                      {"gate_count", r.lowered.circuit.size()},
                      {"catalyst", r.lowered.catalyst_qubit ? 1 : 0},
                      {"ancilla", r.lowered.ancilla_qubits.size()}};
  o.details["counts"] = counts_json(r.lowered.counts);
  const std::string text = serialize_circuit(r.lowered.circuit) + "\n";
  if (!out_path.empty()) {
    write_file(out_path, text);
    o.report.artifacts.push_back(out_path);
  } else {
    o.details["circuit"] = text;
  }
  o.text.push_back("counts " + counts_line(r.lowered.counts));
  if (out_path.empty()) o.text.push_back(text);
  o.report.ok = r.distance <= kSynthesisTolerance;
  return o;
}

// ------------------------------------------------------------ check-prep

Outcome cmd_check_prep(const std::string &file, unsigned target_qubit) {
  Outcome o;
  o.report.command = "check-prep";
  const Circuit c = parse_circuit(read_file(file));
  if (target_qubit >= c.num_qubits()) {
    throw std::runtime_error("--target-qubit " + std::to_string(target_qubit) +
                             " out of range for " + std::to_string(c.num_qubits()) +
                             " qubit(s)");
  }
  const auto r = verify_one_prep(c, target_qubit);
  o.report.metrics = {{"passes", r.passes ? 1 : 0},
                      {"gate_set_ok", r.gate_set_ok ? 1 : 0},
                      {"max_error", r.max_error},
                      {"phase", r.phase},
                      {"ccz_count", r.ccz_count}};
  o.details["passes"] = r.passes;
  o.details["gate_set_ok"] = r.gate_set_ok;
  o.text.push_back(std::string("prepares |1>: ") + (r.passes ? "yes" : "no"));
  o.text.push_back(std::string("gate set {H, CCZ}: ") + (r.gate_set_ok ? "yes" : "no"));
  o.report.ok = r.passes;
  return o;
}

// ---------------------------------------------------------------- counts

Outcome cmd_counts(const std::string &file) {
  Outcome o;
  o.report.command = "counts";
  const Circuit c = parse_circuit(read_file(file));
  const auto counts = gate_counts(c);
  o.report.metrics = {{"qubits", c.num_qubits()}, {"gate_count", c.size()}};
  o.details["counts"] = counts_json(counts);
  Json members = Json::object();
  o.text.push_back("counts " + counts_line(counts));
  for (Profile p : {Profile::HCCZ, Profile::HCS, Profile::REAL_O2_CCZ}) {
    const GateSetProfile gp(p);
    const bool member = check_membership(c, gp).empty();
    members[std::string(gp.label())] = member;
    o.text.push_back(std::string(gp.label()) + ": " + (member ? "member" : "not a member"));
  }
  o.details["membership"] = members;
  o.report.ok = true;
  return o;
}

// -------------------------------------------------------------- simulate

Statevector parse_input_spec(const std::string &spec, unsigned n) {
  std::vector<std::string> toks;
  const bool bitstring = !spec.empty() && spec.find_first_not_of("01") == std::string::npos;
  if (bitstring) {
    for (char ch : spec) toks.emplace_back(1, ch);
  } else {
    std::stringstream ss(spec);
    std::string t;
    while (std::getline(ss, t, ',')) toks.push_back(t);
  }
  if (toks.size() != n) {
    throw std::runtime_error("input spec has " + std::to_string(toks.size()) +
                             " qubit(s), circuit has " + std::to_string(n));
  }
  std::vector<Statevector> factors;
  for (const auto &t : toks) {
    if (t == "0") factors.push_back(Statevector::zero());
    else if (t == "1") factors.push_back(Statevector::one());
    else if (t == "+") factors.push_back(Statevector::plus());
    else if (t == "-") factors.push_back(Statevector::minus());
    else if (t == "+i") factors.push_back(Statevector::plus_i());
    else if (t == "-i") factors.push_back(Statevector::minus_i());
    else throw std::runtime_error("bad input token '" + t + "' (use 0, 1, +, -, +i, -i)");
  }
  return Statevector::product(factors);
}

Outcome cmd_simulate(const std::string &file, const std::string &input, double cutoff) {
  Outcome o;
  o.report.command = "simulate";
  const Circuit c = parse_circuit(read_file(file));
  if (c.num_qubits() > kMaxDenseQubits) throw std::runtime_error("too many qubits to simulate");
  const auto s = run(c, parse_input_spec(input, c.num_qubits()));
  Json amps = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (std::abs(s[i]) < cutoff) continue;
    std::string bits;
    for (unsigned q = 0; q < c.num_qubits(); ++q) {
      bits += ((i >> (c.num_qubits() - 1 - q)) & 1U) ? '1' : '0';
    }
    amps.push_back(Json{{"index", i}, {"bits", bits}, {"re", s[i].real()}, {"im", s[i].imag()}});
    std::ostringstream line;
    line << std::setprecision(12) << '|' << bits << ">  " << s[i].real() << ' '
         << s[i].imag();
    o.text.push_back(line.str());
  }
  o.details["amplitudes"] = amps;
  o.report.metrics = {{"qubits", c.num_qubits()}, {"norm", s.norm()}};
  o.report.ok = true;
  return o;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Catalytic gate-set lowering and verification"};
  app.require_subcommand(1);
  bool json = false;

  auto *verify = app.add_subcommand("verify", "Check every gadget identity numerically");
  unsigned theta_steps = 128;
  double tol = 1e-12;
  verify->add_option("--theta-steps", theta_steps, "RZ gadget angle grid size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "Tolerance for every error metric");
  verify->add_flag("--json", json);

  auto *lower_cmd = app.add_subcommand("lower", "Lower a circuit file to a gate-set profile");
  std::string file, target = "REAL_O2_CCZ", out_path;
  bool sdg_via_z = false;
  lower_cmd->add_option("circuit", file)->required();
  lower_cmd->add_option("--target", target, "HCCZ | REAL_O2_CCZ | REAL_O2_CZ | HCS | FULL");
  lower_cmd->add_option("--out", out_path, "Write the lowered circuit here");
  lower_cmd->add_flag("--sdg-via-z", sdg_via_z, "Lower SDG as Z S instead of S S S");
  lower_cmd->add_flag("--json", json);

  auto *synth = app.add_subcommand("synthesize", "Synthesize a unitary over real gates + CCZ");
  std::optional<unsigned> m;
  std::optional<std::uint64_t> seed;
  std::string matrix_file, synth_target = "REAL_O2_CCZ";
  synth->add_option("--m", m, "Number of qubits (1-3)");
  synth->add_option("--seed", seed, "Haar-random target seed");
  synth->add_option("--matrix", matrix_file, "Target matrix file");
  synth->add_option("--target", synth_target, "REAL_O2_CCZ | REAL_O2_CZ");
  synth->add_option("--out", out_path, "Write the lowered circuit here");
  synth->add_flag("--json", json);

  auto *prep = app.add_subcommand("check-prep", "Verify a |1>-preparation circuit");
  unsigned target_qubit = 0;
  prep->add_option("circuit", file)->required();
  prep->add_option("--target-qubit", target_qubit)->required();
  prep->add_flag("--json", json);

  auto *counts = app.add_subcommand("counts", "Gate counts and profile membership");
  counts->add_option("circuit", file)->required();
  counts->add_flag("--json", json);

  auto *sim = app.add_subcommand("simulate", "Run a circuit on a product input state");
  std::string input;
  double cutoff = 1e-3;
  bool show_all = false;
  sim->add_option("circuit", file)->required();
  sim->add_option("--input", input, "Per-qubit tokens 0,1,+,-,+i,-i or a bitstring")->required();
  sim->add_option("--cutoff", cutoff, "Hide amplitudes with smaller magnitude");
  sim->add_flag("--all", show_all, "Show every amplitude");
  sim->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Outcome o;
  try {
    if (*verify) o = cmd_verify(theta_steps, tol);
    else if (*lower_cmd) o = cmd_lower(file, target, out_path, sdg_via_z);
    else if (*synth) o = cmd_synthesize(m, seed, matrix_file, synth_target, out_path);
    else if (*prep) o = cmd_check_prep(file, target_qubit);
    else if (*counts) o = cmd_counts(file);
    else o = cmd_simulate(file, input, show_all ? 0.0 : cutoff);
  } catch (const std::exception &e) {
    o.report.command = app.get_subcommands().front()->get_name();
    o.report.ok = false;
    o.error = e.what();
  }
  emit(o, json, out, err);
  return o.report.ok ? 0 : 1;
}

}  // namespace catlower::cli
