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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catlower/circuit.hpp"
#include "catlower/simulator.hpp"

namespace catlower {

enum class SdgStrategy {
  CubeOfS,  ///< SDG -> S S S
  ZThenS,   ///< SDG -> Z S (needs Z in the target)
};

struct LowerOptions {
  SdgStrategy sdg = SdgStrategy::CubeOfS;
};

struct LoweringStats {
  std::size_t cs_rewrites = 0;
  std::size_t s_rewrites = 0;        ///< includes S rewrites made for SDG/RX/RZ
  std::size_t cz_substitutions = 0;  ///< CZ -> CCZ(ancilla, ...) replacements
  bool operator==(const LoweringStats &) const = default;
};

/**
 * Output of a lowering pass. Data qubits keep their source indices; the
 * catalyst (|+i>) and then the ancilla (|0>, flipped to |1> by one X at first
 * use) are appended after them when needed.
 */
struct LoweredCircuit {
  Circuit circuit;
  std::optional<unsigned> catalyst_qubit;
  std::vector<ResourceQubit> ancilla_qubits;
  std::vector<unsigned> data_qubit_map;
  GateCounts counts;
  GateSetProfile target_profile;
  LoweringStats stats;
  SdgStrategy sdg_strategy = SdgStrategy::CubeOfS;
  /// Tag of each source gate and the CCZ gates its rewrite emitted.
  std::vector<GateTag> source_tags;
  std::vector<std::size_t> ccz_per_source_gate;

  std::vector<ResourceQubit> resources() const;
};

/// Rewrites `c` into `target` using the gadget rule table. Throws
/// LoweringError naming the first source gate with no rewrite.
LoweredCircuit lower(const Circuit &c, const GateSetProfile &target,
                     const LowerOptions &options = {});

struct CountReport {
  GateCounts counts;
  bool catalyst = false;
  std::size_t ancilla = 0;
  std::optional<double> ccz_per_cs;
  std::optional<double> ccz_per_s;
  std::vector<std::string> notes;
};

CountReport count_report(const LoweredCircuit &lc);
/// {"counts", "catalyst", "ancilla", "ccz_per_cs", "ccz_per_s", "notes"} in
/// that order; `indent` < 0 gives a single line.
std::string count_report_json(const CountReport &r, int indent = -1);

struct LoweringCheck {
  bool ok = false;
  double distance = 0.0;
  double catalyst_deficit = 0.0;
};

inline constexpr unsigned kMaxVerifyDataQubits = 4;
inline constexpr unsigned kMaxVerifyTotalQubits = 6;
inline constexpr double kLoweringTolerance = 1e-10;

/// Projects the lowered unitary onto the declared resource states and compares
/// the induced data operator with the source unitary up to global phase.
LoweringCheck verify_lowering(const Circuit &source, const LoweredCircuit &lc);

}  // namespace catlower
