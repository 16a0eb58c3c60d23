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
#include <vector>

#include "catlower/circuit.hpp"
#include "catlower/simulator.hpp"

namespace catlower {

/**
 * A circuit that, with a |+i> catalyst (and optionally ancillas in declared
 * states), induces `claimed_induced` on `data_qubits`. `claimed_phase` is the
 * global phase of the induced operator relative to its named target gate.
 */
struct Gadget {
  Circuit circuit;
  unsigned catalyst_qubit;
  std::vector<unsigned> data_qubits;
  std::vector<ResourceQubit> ancillas;
  DenseUnitary claimed_induced;
  double claimed_phase = 0.0;

  /// Catalyst first, then ancillas.
  std::vector<ResourceQubit> resources() const;
};

/// CRY(-2 theta) controlled by the data qubit (1) onto the catalyst (0);
/// induces e^{i theta/2} RZ(theta).
Gadget rz_gadget(double theta);
/// [H(c), CZ(d, c), H(c), CZ(d, c)] with c = 0, d = 1; induces S.
Gadget s_gadget();
/// [H(c), CCZ(d1, d2, c), H(c), CCZ(d1, d2, c)] with c = 0; induces CS on (1, 2).
Gadget cs_gadget();

struct GadgetCheck {
  bool ok = false;
  CatalyticReport report;
  /// Entrywise error of the projected operator against the claim (phase kept).
  double induced_error = 0.0;
  double phase_distance = 0.0;
  /// max over data basis inputs of 1 - <+i|rho_catalyst|+i> after the circuit.
  double catalyst_fidelity_deficit = 0.0;
};

/// Checks the gadget's factorization claim with tolerance `tol` on every metric.
GadgetCheck verify_gadget(const Gadget &g, double tol);

struct OnePrepResult {
  bool passes = false;
  double max_error = 0.0;
  bool gate_set_ok = false;
  /// Common global phase of the prepared |1> (0 for a phase-exact prep).
  double phase = 0.0;
  std::size_t ccz_count = 0;
};

inline constexpr double kOnePrepTolerance = 1e-10;

/// Does `c` map |0>_target (x) |phi> to |1>_target (x) |phi> for every
/// computational-basis |phi> on the other qubits, up to one common phase?
OnePrepResult verify_one_prep(const Circuit &c, unsigned target_qubit);

/**
 * Composes a |1>-preparation on a 3-qubit register with the CS gadget so the
 * prepared wire acts as the first CS control. The other two qubits, in
 * ascending order, are the catalyst and the data qubit. Induces S (times the
 * prep's phase) on the data qubit. Throws CircuitError if the prep fails
 * verification or is not 3 qubits wide.
 */
Gadget s_via_prep(const Circuit &prep, unsigned target_qubit);

struct FlipReport {
  bool flipped = false;
  double magnitude = 0.0;   ///< |<-i|H|+i>|
  double phase = 0.0;       ///< arg <-i|H|+i>
  double plus_overlap = 0.0;  ///< |<+i|H|+i>|
};

FlipReport catalyst_flip_check();

/// Block form of the S gadget: I (x) |0><0| + iY (x) |1><1| (catalyst left).
DenseUnitary s_gadget_expected_unitary();
/// Block form of the CS gadget: I (x) (I - |11><11|) + iY (x) |11><11|.
DenseUnitary cs_gadget_expected_unitary();

}  // namespace catlower
