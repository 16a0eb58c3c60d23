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

#include "catlower/rewriter.hpp"

#include <limits>

#include <json.hpp>

#include "catlower/errors.hpp"

namespace catlower {

namespace {

// Placeholders for resource qubits until the final layout is known.
constexpr unsigned kCatalyst = std::numeric_limits<unsigned>::max();
constexpr unsigned kAncilla = std::numeric_limits<unsigned>::max() - 1;

struct PendingGate {
  GateKind kind;
  std::vector<unsigned> operands;
};

class Lowerer {
 public:
  Lowerer(const GateSetProfile &target, const LowerOptions &options)
      : target_(target), options_(options) {}

  void lower_source_gate(const GateApp &g, std::size_t index) {
    index_ = index;
    const std::size_t before = ccz_emitted_;
    lower_gate(g.kind(), g.operands());
    ccz_per_source_.push_back(ccz_emitted_ - before);
  }

  LoweredCircuit finish(const Circuit &source) {
    const unsigned n = source.num_qubits();
    unsigned next = n;
    std::optional<unsigned> cat, anc;
    if (used_catalyst_) cat = next++;
    if (used_ancilla_) anc = next++;

    Circuit out(next);
    for (auto &p : pending_) {
      for (auto &q : p.operands) {
        if (q == kCatalyst) q = *cat;
        else if (q == kAncilla) q = *anc;
      }
      out.add(p.kind, p.operands);
    }
    if (!check_membership(out, target_).empty()) {
      throw std::logic_error("lowering emitted a gate outside the target profile");
    }

    LoweredCircuit lc{std::move(out), cat, {}, {}, {}, target_, stats_,
                      options_.sdg, {}, ccz_per_source_};
    if (anc) {
      lc.ancilla_qubits.push_back({*anc, Statevector::zero(), Statevector::one()});
    }
    for (unsigned q = 0; q < n; ++q) lc.data_qubit_map.push_back(q);
    lc.counts = gate_counts(lc.circuit);
    for (const auto &g : source.gates()) lc.source_tags.push_back(g.tag());
    return lc;
  }

 private:
  [[noreturn]] void fail(GateTag tag, const std::string &why) const {
    throw LoweringError(index_, std::string(tag_name(tag)) + " into " +
                                    std::string(target_.label()) + ": " + why);
  }

  void emit(GateKind kind, std::vector<unsigned> operands) {
    if (kind.tag() == GateTag::CCZ) ++ccz_emitted_;
    pending_.push_back({std::move(kind), std::move(operands)});
  }

  void require(GateTag source, GateTag needed) const {
    if (!target_.admits(needed)) {
      fail(source, "rewrite needs " + std::string(tag_name(needed)));
    }
  }

  // CZ either passes through or becomes CCZ controlled by the |1> ancilla.
  void emit_cz(GateTag source, unsigned a, unsigned b) {
    if (target_.admits(GateTag::CZ)) {
      emit(GateKind::cz(), {a, b});
      return;
    }
    require(source, GateTag::CCZ);
    require(source, GateTag::X);
    if (!used_ancilla_) {
      used_ancilla_ = true;
      emit(GateKind::x(), {kAncilla});
    }
    ++stats_.cz_substitutions;
    emit(GateKind::ccz(), {kAncilla, a, b});
  }

  void lower_gate(const GateKind &kind, const std::vector<unsigned> &ops) {
    if (target_.admits(kind)) {
      emit(kind, ops);
      return;
    }
    switch (kind.tag()) {
      case GateTag::CS: {
        require(GateTag::CS, GateTag::H);
        require(GateTag::CS, GateTag::CCZ);
        used_catalyst_ = true;
        ++stats_.cs_rewrites;
        emit(GateKind::h(), {kCatalyst});
        emit(GateKind::ccz(), {ops[0], ops[1], kCatalyst});
        emit(GateKind::h(), {kCatalyst});
        emit(GateKind::ccz(), {ops[0], ops[1], kCatalyst});
        return;
      }
      case GateTag::S: {
        require(GateTag::S, GateTag::H);
        used_catalyst_ = true;
        ++stats_.s_rewrites;
        emit(GateKind::h(), {kCatalyst});
        emit_cz(GateTag::S, ops[0], kCatalyst);
        emit(GateKind::h(), {kCatalyst});
        emit_cz(GateTag::S, ops[0], kCatalyst);
        return;
      }
      case GateTag::SDG:
        if (options_.sdg == SdgStrategy::ZThenS) {
          lower_gate(GateKind::z(), ops);
          lower_gate(GateKind::s(), ops);
        } else {
          for (int i = 0; i < 3; ++i) lower_gate(GateKind::s(), ops);
        }
        return;
      case GateTag::RX: {
        const double t = *kind.angle();
        lower_gate(GateKind::s(), ops);
        lower_gate(GateKind::ry(t), ops);
        lower_gate(GateKind::sdg(), ops);
        return;
      }
      case GateTag::RZ: {
        const double t = *kind.angle();
        lower_gate(GateKind::h(), ops);
        lower_gate(GateKind::rx(t), ops);
        lower_gate(GateKind::h(), ops);
        return;
      }
      case GateTag::CZ:
        emit_cz(GateTag::CZ, ops[0], ops[1]);
        return;
      case GateTag::CRY:
        fail(kind.tag(), "controlled-RY has no rewrite outside FULL");
      case GateTag::Y:
        fail(kind.tag(), "Y is imaginary and has no real rewrite");
      default:
        fail(kind.tag(), "gate not in target set and no rewrite rule");
    }
  }

  GateSetProfile target_;
  LowerOptions options_;
  std::vector<PendingGate> pending_;
  LoweringStats stats_;
  bool used_catalyst_ = false;
  bool used_ancilla_ = false;
  std::size_t index_ = 0;
  std::size_t ccz_emitted_ = 0;
  std::vector<std::size_t> ccz_per_source_;
};

std::optional<double> mean_ccz(const LoweredCircuit &lc, GateTag tag) {
  std::size_t instances = 0, ccz = 0;
  for (std::size_t i = 0; i < lc.source_tags.size(); ++i) {
    if (lc.source_tags[i] != tag) continue;
    ++instances;
    ccz += lc.ccz_per_source_gate[i];
  }
  if (instances == 0) return std::nullopt;
  return static_cast<double>(ccz) / static_cast<double>(instances);
}

}  // namespace

std::vector<ResourceQubit> LoweredCircuit::resources() const {
  std::vector<ResourceQubit> out;
  if (catalyst_qubit) {
    out.push_back({*catalyst_qubit, Statevector::plus_i(), Statevector::plus_i()});
  }
  out.insert(out.end(), ancilla_qubits.begin(), ancilla_qubits.end());
  return out;
}

LoweredCircuit lower(const Circuit &c, const GateSetProfile &target,
                     const LowerOptions &options) {
  Lowerer l(target, options);
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    l.lower_source_gate(c.gates()[i], i);
  }
  return l.finish(c);
}

CountReport count_report(const LoweredCircuit &lc) {
  CountReport r;
  r.counts = lc.counts;
  r.catalyst = lc.catalyst_qubit.has_value();
  r.ancilla = lc.ancilla_qubits.size();
  r.ccz_per_cs = mean_ccz(lc, GateTag::CS);
  r.ccz_per_s = mean_ccz(lc, GateTag::S);
  r.notes = {
      "reference: S via a 12-CCZ |1> prep plus the 2-CCZ CS gadget totals 14 CCZ (not measured here)",
      "reference: the earlier S construction is quoted at 18 CCZ (not measured here)",
      "reference: the CS gadget is quoted as a >= 75% CCZ reduction over the earlier CS construction (baseline not measured here)",
  };
  if (lc.sdg_strategy == SdgStrategy::CubeOfS) {
    r.notes.push_back("SDG lowered as S S S: three S rewrites per SDG");
  } else {
    r.notes.push_back("SDG lowered as Z S: one S rewrite per SDG");
  }
  return r;
}

std::string count_report_json(const CountReport &r, int indent) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (GateTag t : kAllGateTags) counts[std::string(tag_name(t))] = r.counts[t];
  nlohmann::ordered_json j;
  j["counts"] = counts;
  j["catalyst"] = r.catalyst;
  j["ancilla"] = r.ancilla;
  j["ccz_per_cs"] = r.ccz_per_cs ? nlohmann::ordered_json(*r.ccz_per_cs) : nullptr;
  j["ccz_per_s"] = r.ccz_per_s ? nlohmann::ordered_json(*r.ccz_per_s) : nullptr;
  j["notes"] = r.notes;
  return j.dump(indent);
}

LoweringCheck verify_lowering(const Circuit &source, const LoweredCircuit &lc) {
  if (source.num_qubits() > kMaxVerifyDataQubits ||
      lc.circuit.num_qubits() > kMaxVerifyTotalQubits) {
    throw DimensionError("verify_lowering limited to " +
                         std::to_string(kMaxVerifyDataQubits) + " data / " +
                         std::to_string(kMaxVerifyTotalQubits) + " total qubits");
  }
  const auto res = lc.resources();
  const auto u = circuit_unitary(lc.circuit);
  LoweringCheck out;
  const DenseUnitary target = circuit_unitary(source);
  if (res.empty()) {
    out.distance = phase_aligned_distance(u, target);
  } else {
    const auto rep = extract_induced(u, res, kLoweringTolerance);
    if (rep.data_qubits != lc.data_qubit_map) {
      throw DimensionError("lowered data qubits do not match the data map");
    }
    out.distance = phase_aligned_distance(
        DenseUnitary(source.num_qubits(), rep.projected), target);
    out.catalyst_deficit = rep.catalyst_overlap_deficit;
  }
  out.ok = out.distance <= kLoweringTolerance &&
           out.catalyst_deficit <= kLoweringTolerance;
  return out;
}

}  // namespace catlower
