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

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "catlower/circuit.hpp"

namespace catlower {

using Amplitude = std::complex<double>;

/// Largest register `circuit_unitary` will build densely.
inline constexpr unsigned kMaxDenseQubits = 12;

/**
 * Pure state on n qubits. Qubit 0 is the most significant bit of the
 * amplitude index, so |q0 q1 ... q(n-1)> reads left to right.
 */
class Statevector {
 public:
  /// |0...0> on n qubits.
  explicit Statevector(unsigned num_qubits);
  Statevector(unsigned num_qubits, Eigen::VectorXcd amps);

  static Statevector basis(unsigned num_qubits, std::size_t index);
  /// Tensor product in qubit order: qubit i takes `factors[i]`.
  static Statevector product(std::span<const Statevector> factors);

  static Statevector zero();
  static Statevector one();
  static Statevector plus();
  static Statevector minus();
  static Statevector plus_i();   ///< (|0> + i|1>)/sqrt(2)
  static Statevector minus_i();  ///< (|0> - i|1>)/sqrt(2)

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd &amps() const { return amps_; }
  Eigen::VectorXcd &amps() { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

  double norm() const { return amps_.norm(); }
  /// <this|other>
  Amplitude inner(const Statevector &other) const;

 private:
  unsigned num_qubits_;
  Eigen::VectorXcd amps_;
};

/// Square complex matrix on n qubits, same bit order as Statevector.
class DenseUnitary {
 public:
  explicit DenseUnitary(unsigned num_qubits);  ///< identity
  DenseUnitary(unsigned num_qubits, Eigen::MatrixXcd entries);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd &matrix() const { return m_; }
  Amplitude operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  /// ||U^dagger U - I||_F
  double unitarity_error() const;
  double max_abs_imag() const;
  /// Row-major `re+imi` rendering, for debugging output only.
  std::string to_string(int precision = 6) const;

 private:
  unsigned num_qubits_;
  Eigen::MatrixXcd m_;
};

/// Standard matrix of a gate on arity(kind) qubits, first operand as the
/// most significant bit.
DenseUnitary gate_matrix(const GateKind &kind);

Statevector apply_gate(const Statevector &s, const GateApp &g);
/// In-place variant on a raw amplitude vector of a `num_qubits` register.
void apply_gate_inplace(Eigen::Ref<Eigen::VectorXcd> amps, unsigned num_qubits,
                        const GateApp &g);

Statevector run(const Circuit &c, const Statevector &s0);
DenseUnitary circuit_unitary(const Circuit &c);

/// sqrt(max(0, 1 - |Tr(A^dagger B)| / 2^n)) for unitaries, evaluated as
/// min over phi of ||A - e^{i phi} B||_F / sqrt(2^(n+1)); zero iff A = e^{i phi} B.
double phase_aligned_distance(const DenseUnitary &a, const DenseUnitary &b);

/// Largest entrywise modulus of A - B; no phase quotient.
double max_entry_error(const DenseUnitary &a, const DenseUnitary &b);

/// A qubit held in a declared single-qubit state before the circuit and
/// expected in `output` afterwards (equal to `input` for a catalyst).
struct ResourceQubit {
  unsigned qubit;
  Statevector input;
  Statevector output;
};

/**
 * Factorization certificate for U(|in> (x) |psi>) = |out> (x) V|psi>, with
 * the data register made of every non-resource qubit in ascending order.
 */
struct CatalyticReport {
  bool is_catalytic = false;
  /// Set iff is_catalytic.
  std::optional<DenseUnitary> induced;
  /// (<out| (x) I) U (|in> (x) I), always computed; equals `induced` when set.
  Eigen::MatrixXcd projected;
  /// ||(1 - P_out) U (|in> (x) I)||_F
  double residual_norm = 0.0;
  /// max over basis |psi> of 1 - |<out (x) V psi| U |in (x) psi>|
  double catalyst_overlap_deficit = 0.0;
  /// ||V^dagger V - I||_F
  double unitarity_error = 0.0;
  /// Data qubits of U in the order used for V.
  std::vector<unsigned> data_qubits;
};

/// Multi-resource projection; `extract_catalytic` is the one-catalyst case.
CatalyticReport extract_induced(const DenseUnitary &u,
                                std::span<const ResourceQubit> resources,
                                double tol);

CatalyticReport extract_catalytic(const DenseUnitary &u, unsigned catalyst_qubit,
                                  const Statevector &catalyst_state, double tol);

/// <c| rho_q |c> for the reduced state of qubit q of `s`.
double qubit_fidelity(const Statevector &s, unsigned qubit,
                      const Statevector &c);

}  // namespace catlower
