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

#include "catlower/constructions.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "catlower/errors.hpp"

namespace catlower {

namespace {

// Register state with resources in their input states and the data qubits in
// computational basis state `data_index` (first data qubit = MSB).
Statevector resource_input(unsigned n, const std::vector<ResourceQubit> &res,
                           const std::vector<unsigned> &data,
                           std::size_t data_index) {
  std::vector<Statevector> factors(n, Statevector::zero());
  for (const auto &r : res) factors[r.qubit] = r.input;
  for (std::size_t j = 0; j < data.size(); ++j) {
    const bool bit = (data_index >> (data.size() - 1 - j)) & 1U;
    factors[data[j]] = bit ? Statevector::one() : Statevector::zero();
  }
  return Statevector::product(factors);
}

DenseUnitary s_matrix() {
  return gate_matrix(GateKind::s());
}

}  // namespace

std::vector<ResourceQubit> Gadget::resources() const {
  std::vector<ResourceQubit> out;
  out.push_back({catalyst_qubit, Statevector::plus_i(), Statevector::plus_i()});
  out.insert(out.end(), ancillas.begin(), ancillas.end());
  return out;
}

Gadget rz_gadget(double theta) {
  Circuit c(2);
  c.add(GateKind::cry(-2.0 * theta), {1, 0});
  Eigen::MatrixXcd induced = Eigen::MatrixXcd::Zero(2, 2);
  induced(0, 0) = 1.0;
  induced(1, 1) = std::polar(1.0, theta);  // e^{i theta/2} RZ(theta)
  return Gadget{std::move(c), 0, {1}, {}, DenseUnitary(1, induced), theta / 2};
}

Gadget s_gadget() {
  Circuit c(2);
  c.add(GateKind::h(), {0})
      .add(GateKind::cz(), {1, 0})
      .add(GateKind::h(), {0})
      .add(GateKind::cz(), {1, 0});
  return Gadget{std::move(c), 0, {1}, {}, s_matrix(), 0.0};
}

Gadget cs_gadget() {
  Circuit c(3);
  c.add(GateKind::h(), {0})
      .add(GateKind::ccz(), {1, 2, 0})
      .add(GateKind::h(), {0})
      .add(GateKind::ccz(), {1, 2, 0});
  return Gadget{std::move(c), 0, {1, 2}, {}, gate_matrix(GateKind::cs()), 0.0};
}

GadgetCheck verify_gadget(const Gadget &g, double tol) {
  GadgetCheck out;
  const auto res = g.resources();
  const DenseUnitary u = circuit_unitary(g.circuit);
  out.report = extract_induced(u, res, tol);
  if (out.report.data_qubits != g.data_qubits) {
    throw CircuitError("gadget data qubits must be the non-resource qubits in ascending order");
  }
  const DenseUnitary projected(static_cast<unsigned>(g.data_qubits.size()),
                               out.report.projected);
  out.induced_error = max_entry_error(projected, g.claimed_induced);
  out.phase_distance = phase_aligned_distance(projected, g.claimed_induced);
  const std::size_t ddim = std::size_t{1} << g.data_qubits.size();
  for (std::size_t j = 0; j < ddim; ++j) {
    const auto s = run(g.circuit, resource_input(g.circuit.num_qubits(), res,
                                                 g.data_qubits, j));
    const double f = qubit_fidelity(s, g.catalyst_qubit, Statevector::plus_i());
    out.catalyst_fidelity_deficit =
        std::max(out.catalyst_fidelity_deficit, std::abs(1.0 - f));
  }
  out.ok = out.report.is_catalytic && out.induced_error <= tol &&
           out.catalyst_fidelity_deficit <= tol;
  return out;
}

OnePrepResult verify_one_prep(const Circuit &c, unsigned target_qubit) {
  const unsigned n = c.num_qubits();
  if (target_qubit >= n) throw CircuitError("target qubit out of range");
  OnePrepResult out;
  out.gate_set_ok = check_membership(c, GateSetProfile(Profile::HCCZ)).empty();
  out.ccz_count = gate_counts(c)[GateTag::CCZ];

  const std::size_t mask = std::size_t{1} << (n - 1 - target_qubit);
  std::optional<Amplitude> phase;
  double worst = 0.0;
  for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
    if (idx & mask) continue;
    const auto outstate = run(c, Statevector::basis(n, idx));
    const auto expected = Statevector::basis(n, idx | mask);
    if (!phase) {
      const Amplitude ov = expected.inner(outstate);
      phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Amplitude{1.0};
      out.phase = std::arg(*phase);
    }
    const double err = (outstate.amps() - *phase * expected.amps()).norm();
    worst = std::max(worst, err);
  }
  out.max_error = worst;
  out.passes = worst <= kOnePrepTolerance;
  return out;
}

Gadget s_via_prep(const Circuit &prep, unsigned target_qubit) {
  if (prep.num_qubits() != 3) {
    throw CircuitError("prep circuit must act on 3 qubits (control, catalyst, data)");
  }
  const auto check = verify_one_prep(prep, target_qubit);
  if (!check.passes) {
    throw CircuitError("prep fails verification (max error " +
                       std::to_string(check.max_error) + ")");
  }
  std::vector<unsigned> rest;
  for (unsigned q = 0; q < 3; ++q) {
    if (q != target_qubit) rest.push_back(q);
  }
  const unsigned cat = rest[0], data = rest[1];

  Circuit c = prep;
  c.add(GateKind::h(), {cat})
      .add(GateKind::ccz(), {target_qubit, data, cat})
      .add(GateKind::h(), {cat})
      .add(GateKind::ccz(), {target_qubit, data, cat});

  Eigen::MatrixXcd induced = std::polar(1.0, check.phase) * s_matrix().matrix();
  ResourceQubit anc{target_qubit, Statevector::zero(), Statevector::one()};
  return Gadget{std::move(c), cat, {data}, {anc}, DenseUnitary(1, induced),
                check.phase};
}

DenseUnitary s_gadget_expected_unitary() {
  // I (x) |0><0| + iY (x) |1><1|, catalyst as the left factor.
  Eigen::Matrix2cd iy, p0, p1;
  iy << 0, 1, -1, 0;
  p0 << 1, 0, 0, 0;
  p1 << 0, 0, 0, 1;
  return DenseUnitary(2, Eigen::kroneckerProduct(Eigen::Matrix2cd::Identity(), p0).eval() +
                             Eigen::kroneckerProduct(iy, p1).eval());
}

DenseUnitary cs_gadget_expected_unitary() {
  // I (x) (I - |11><11|) + iY (x) |11><11|.
  Eigen::Matrix2cd iy;
  iy << 0, 1, -1, 0;
  Eigen::Matrix4cd p11 = Eigen::Matrix4cd::Zero();
  p11(3, 3) = 1.0;
  const Eigen::Matrix4cd rest = Eigen::Matrix4cd::Identity() - p11;
  return DenseUnitary(3, Eigen::kroneckerProduct(Eigen::Matrix2cd::Identity(), rest).eval() +
                             Eigen::kroneckerProduct(iy, p11).eval());
}

FlipReport catalyst_flip_check() {
  Circuit h(1);
  h.add(GateKind::h(), {0});
  const auto out = run(h, Statevector::plus_i());
  const Amplitude amp = Statevector::minus_i().inner(out);
  FlipReport r;
  r.magnitude = std::abs(amp);
  r.phase = std::arg(amp);
  r.plus_overlap = std::abs(Statevector::plus_i().inner(out));
  r.flipped = std::abs(r.magnitude - 1.0) <= 1e-13;
  return r;
}

}  // namespace catlower
