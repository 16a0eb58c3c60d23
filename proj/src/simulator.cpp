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

#include "catlower/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "catlower/errors.hpp"

namespace catlower {

namespace {

constexpr Amplitude kI{0.0, 1.0};

std::size_t dim_of(unsigned n) { return std::size_t{1} << n; }

// Bit of qubit q inside an n-qubit amplitude index.
std::size_t qubit_mask(unsigned n, unsigned q) {
  return std::size_t{1} << (n - 1 - q);
}

Eigen::MatrixXcd matrix2(Amplitude a, Amplitude b, Amplitude c, Amplitude d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

Eigen::MatrixXcd diagonal(std::initializer_list<Amplitude> d) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (auto x : d) v(i++) = x;
  return v.asDiagonal();
}

void require_one_qubit(const Statevector &s, const char *what) {
  if (s.num_qubits() != 1) {
    throw DimensionError(std::string(what) + " must be a single-qubit state");
  }
}

}  // namespace

Statevector::Statevector(unsigned num_qubits)
    : num_qubits_(num_qubits),
      amps_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim_of(num_qubits)))) {
  if (num_qubits == 0) throw DimensionError("statevector needs at least one qubit");
  amps_(0) = 1.0;
}

Statevector::Statevector(unsigned num_qubits, Eigen::VectorXcd amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
  if (num_qubits == 0) throw DimensionError("statevector needs at least one qubit");
  if (static_cast<std::size_t>(amps_.size()) != dim_of(num_qubits)) {
    throw DimensionError("amplitude count does not match 2^n");
  }
}

Statevector Statevector::basis(unsigned num_qubits, std::size_t index) {
  Statevector s(num_qubits);
  if (index >= s.dim()) throw DimensionError("basis index out of range");
  s.amps_(0) = 0.0;
  s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

Statevector Statevector::product(std::span<const Statevector> factors) {
  if (factors.empty()) throw DimensionError("empty tensor product");
  Eigen::VectorXcd acc = factors.front().amps();
  unsigned n = factors.front().num_qubits();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const auto &b = factors[f].amps();
    Eigen::VectorXcd next(acc.size() * b.size());
    for (Eigen::Index i = 0; i < acc.size(); ++i) {
      next.segment(i * b.size(), b.size()) = acc(i) * b;
    }
    acc = std::move(next);
    n += factors[f].num_qubits();
  }
  return Statevector(n, std::move(acc));
}

Statevector Statevector::zero() { return basis(1, 0); }
Statevector Statevector::one() { return basis(1, 1); }

Statevector Statevector::plus() {
  Eigen::VectorXcd v(2);
  v << std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2;
  return Statevector(1, v);
}

Statevector Statevector::minus() {
  Eigen::VectorXcd v(2);
  v << std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2;
  return Statevector(1, v);
}

Statevector Statevector::plus_i() {
  Eigen::VectorXcd v(2);
  v << std::numbers::sqrt2 / 2, kI * (std::numbers::sqrt2 / 2);
  return Statevector(1, v);
}

Statevector Statevector::minus_i() {
  Eigen::VectorXcd v(2);
  v << std::numbers::sqrt2 / 2, -kI * (std::numbers::sqrt2 / 2);
  return Statevector(1, v);
}

Amplitude Statevector::inner(const Statevector &other) const {
  if (other.dim() != dim()) throw DimensionError("inner product dimension mismatch");
  return amps_.dot(other.amps_);  // conjugates the left operand
}

DenseUnitary::DenseUnitary(unsigned num_qubits)
    : num_qubits_(num_qubits),
      m_(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim_of(num_qubits)),
                                    static_cast<Eigen::Index>(dim_of(num_qubits)))) {}

DenseUnitary::DenseUnitary(unsigned num_qubits, Eigen::MatrixXcd entries)
    : num_qubits_(num_qubits), m_(std::move(entries)) {
  auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
  if (m_.rows() != d || m_.cols() != d) {
    throw DimensionError("matrix shape does not match 2^n x 2^n");
  }
}

double DenseUnitary::unitarity_error() const {
  return (m_.adjoint() * m_ - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols()))
      .norm();
}

double DenseUnitary::max_abs_imag() const {
  return m_.imag().cwiseAbs().maxCoeff();
}

std::string DenseUnitary::to_string(int precision) const {
  std::ostringstream os;
  os.precision(precision);
  for (Eigen::Index r = 0; r < m_.rows(); ++r) {
    for (Eigen::Index c = 0; c < m_.cols(); ++c) {
      const auto z = m_(r, c);
      if (c) os << ' ';
      os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
    }
    os << '\n';
  }
  return os.str();
}

DenseUnitary gate_matrix(const GateKind &kind) {
  const double t = kind.angle().value_or(0.0);
  const double r2 = std::numbers::sqrt2 / 2;
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  switch (kind.tag()) {
    case GateTag::H: return DenseUnitary(1, matrix2(r2, r2, r2, -r2));
    case GateTag::X: return DenseUnitary(1, matrix2(0, 1, 1, 0));
    case GateTag::Y: return DenseUnitary(1, matrix2(0, -kI, kI, 0));
    case GateTag::Z: return DenseUnitary(1, diagonal({1, -1}));
    case GateTag::S: return DenseUnitary(1, diagonal({1, kI}));
    case GateTag::SDG: return DenseUnitary(1, diagonal({1, -kI}));
    case GateTag::RX: return DenseUnitary(1, matrix2(c, -kI * s, -kI * s, c));
    case GateTag::RY: return DenseUnitary(1, matrix2(c, -s, s, c));
    case GateTag::RZ:
      return DenseUnitary(1, diagonal({std::polar(1.0, -t / 2), std::polar(1.0, t / 2)}));
    case GateTag::CZ: return DenseUnitary(2, diagonal({1, 1, 1, -1}));
    case GateTag::CS: return DenseUnitary(2, diagonal({1, 1, 1, kI}));
    case GateTag::CRY: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
      m.block(2, 2, 2, 2) = matrix2(c, -s, s, c);
      return DenseUnitary(2, m);
    }
    case GateTag::CCZ: return DenseUnitary(3, diagonal({1, 1, 1, 1, 1, 1, 1, -1}));
  }
  throw CircuitError("unknown gate tag");
}

void apply_gate_inplace(Eigen::Ref<Eigen::VectorXcd> amps, unsigned num_qubits,
                        const GateApp &g) {
  const auto &ops = g.operands();
  for (unsigned q : ops) {
    if (q >= num_qubits) throw DimensionError("gate operand out of range");
  }
  const std::size_t k = ops.size();
  const std::size_t local_dim = std::size_t{1} << k;
  const Eigen::MatrixXcd m = gate_matrix(g.kind()).matrix();

  // offsets[l]: full-index bits for local basis state l (operand 0 = MSB).
  std::vector<std::size_t> offsets(local_dim, 0);
  std::size_t op_mask = 0;
  for (std::size_t l = 0; l < local_dim; ++l) {
    for (std::size_t i = 0; i < k; ++i) {
      if ((l >> (k - 1 - i)) & 1U) offsets[l] |= qubit_mask(num_qubits, ops[i]);
    }
  }
  for (unsigned q : ops) op_mask |= qubit_mask(num_qubits, q);

  std::vector<Amplitude> in(local_dim);
  const std::size_t full = dim_of(num_qubits);
  for (std::size_t base = 0; base < full; ++base) {
    if (base & op_mask) continue;
    for (std::size_t l = 0; l < local_dim; ++l) {
      in[l] = amps(static_cast<Eigen::Index>(base | offsets[l]));
    }
    for (std::size_t r = 0; r < local_dim; ++r) {
      Amplitude acc = 0.0;
      for (std::size_t l = 0; l < local_dim; ++l) {
        acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(l)) * in[l];
      }
      amps(static_cast<Eigen::Index>(base | offsets[r])) = acc;
    }
  }
}

Statevector apply_gate(const Statevector &s, const GateApp &g) {
  Statevector out = s;
  apply_gate_inplace(out.amps(), s.num_qubits(), g);
  return out;
}

Statevector run(const Circuit &c, const Statevector &s0) {
  if (s0.num_qubits() != c.num_qubits()) {
    throw DimensionError("state has " + std::to_string(s0.num_qubits()) +
                         " qubit(s), circuit has " +
                         std::to_string(c.num_qubits()));
  }
  Statevector s = s0;
  for (const auto &g : c.gates()) apply_gate_inplace(s.amps(), s.num_qubits(), g);
  return s;
}

DenseUnitary circuit_unitary(const Circuit &c) {
  const unsigned n = c.num_qubits();
  if (n > kMaxDenseQubits) {
    throw DimensionError("dense unitary limited to " +
                         std::to_string(kMaxDenseQubits) + " qubits");
  }
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    for (const auto &g : c.gates()) apply_gate_inplace(m.col(col), n, g);
  }
  return DenseUnitary(n, std::move(m));
}

double phase_aligned_distance(const DenseUnitary &a, const DenseUnitary &b) {
  if (a.dim() != b.dim()) throw DimensionError("distance: dimension mismatch");
  // For unitaries 1 - |Tr(A^dagger B)|/N = min_phi ||A - e^{i phi} B||_F^2 / 2N.
  // The right-hand side keeps full precision near zero; the trace form loses
  // half the digits to cancellation.
  const Amplitude tr = (b.matrix().adjoint() * a.matrix()).trace();
  const Amplitude align = std::abs(tr) > 0.0 ? tr / std::abs(tr) : Amplitude{1.0};
  const double diff = (a.matrix() - align * b.matrix()).norm();
  return diff / std::sqrt(2.0 * static_cast<double>(a.dim()));
}

double max_entry_error(const DenseUnitary &a, const DenseUnitary &b) {
  if (a.dim() != b.dim()) throw DimensionError("entry error: dimension mismatch");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

CatalyticReport extract_induced(const DenseUnitary &u,
                                std::span<const ResourceQubit> resources,
                                double tol) {
  const unsigned n = u.num_qubits();
  std::vector<bool> is_resource(n, false);
  for (const auto &r : resources) {
    if (r.qubit >= n) throw DimensionError("resource qubit out of range");
    if (is_resource[r.qubit]) throw DimensionError("resource qubit repeated");
    require_one_qubit(r.input, "resource input");
    require_one_qubit(r.output, "resource output");
    is_resource[r.qubit] = true;
  }
  CatalyticReport report;
  for (unsigned q = 0; q < n; ++q) {
    if (!is_resource[q]) report.data_qubits.push_back(q);
  }
  if (report.data_qubits.empty()) throw DimensionError("no data qubits left");

  const std::size_t nr = resources.size();
  const std::size_t nd = report.data_qubits.size();
  const std::size_t rdim = std::size_t{1} << nr;
  const std::size_t ddim = std::size_t{1} << nd;

  // Full index of (resource assignment a, data index i); resource 0 and data
  // qubit 0 are the most significant bits of a and i respectively.
  auto compose = [&](std::size_t a, std::size_t i) {
    std::size_t idx = 0;
    for (std::size_t r = 0; r < nr; ++r) {
      if ((a >> (nr - 1 - r)) & 1U) idx |= qubit_mask(n, resources[r].qubit);
    }
    for (std::size_t j = 0; j < nd; ++j) {
      if ((i >> (nd - 1 - j)) & 1U) idx |= qubit_mask(n, report.data_qubits[j]);
    }
    return static_cast<Eigen::Index>(idx);
  };
  auto amp = [&](std::size_t a, bool output) {
    Amplitude z = 1.0;
    for (std::size_t r = 0; r < nr; ++r) {
      const auto &st = output ? resources[r].output : resources[r].input;
      z *= st[(a >> (nr - 1 - r)) & 1U];
    }
    return z;
  };

  const auto &m = u.matrix();
  // W = U (|in> (x) I): one full-register column per data basis state.
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(m.rows(), static_cast<Eigen::Index>(ddim));
  for (std::size_t j = 0; j < ddim; ++j) {
    for (std::size_t b = 0; b < rdim; ++b) {
      const Amplitude ib = amp(b, false);
      if (ib == Amplitude{0.0}) continue;
      w.col(static_cast<Eigen::Index>(j)) += ib * m.col(compose(b, j));
    }
  }
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(ddim),
                                              static_cast<Eigen::Index>(ddim));
  for (std::size_t j = 0; j < ddim; ++j) {
    for (std::size_t i = 0; i < ddim; ++i) {
      Amplitude acc = 0.0;
      for (std::size_t a = 0; a < rdim; ++a) {
        acc += std::conj(amp(a, true)) * w(compose(a, i), static_cast<Eigen::Index>(j));
      }
      v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }

  double residual_sq = 0.0;
  double deficit = 0.0;
  for (std::size_t j = 0; j < ddim; ++j) {
    Eigen::VectorXcd factored = Eigen::VectorXcd::Zero(m.rows());
    for (std::size_t a = 0; a < rdim; ++a) {
      const Amplitude oa = amp(a, true);
      for (std::size_t i = 0; i < ddim; ++i) {
        factored(compose(a, i)) = oa * v(static_cast<Eigen::Index>(i),
                                         static_cast<Eigen::Index>(j));
      }
    }
    residual_sq += (w.col(static_cast<Eigen::Index>(j)) - factored).squaredNorm();
    const double overlap = std::abs(factored.dot(w.col(static_cast<Eigen::Index>(j))));
    deficit = std::max(deficit, 1.0 - overlap);
  }

  report.residual_norm = std::sqrt(residual_sq);
  report.catalyst_overlap_deficit = deficit;
  report.unitarity_error =
      (v.adjoint() * v - Eigen::MatrixXcd::Identity(v.rows(), v.cols())).norm();
  report.is_catalytic = report.residual_norm <= tol && report.unitarity_error <= tol;
  report.projected = v;
  if (report.is_catalytic) {
    report.induced = DenseUnitary(static_cast<unsigned>(nd), std::move(v));
  }
  return report;
}

CatalyticReport extract_catalytic(const DenseUnitary &u, unsigned catalyst_qubit,
                                  const Statevector &catalyst_state, double tol) {
  if (u.num_qubits() < 2) {
    throw DimensionError("catalytic extraction needs at least two qubits");
  }
  if (catalyst_qubit >= u.num_qubits()) {
    throw DimensionError("catalyst qubit out of range");
  }
  const ResourceQubit cat{catalyst_qubit, catalyst_state, catalyst_state};
  return extract_induced(u, std::span<const ResourceQubit>(&cat, 1), tol);
}

double qubit_fidelity(const Statevector &s, unsigned qubit, const Statevector &c) {
  require_one_qubit(c, "reference state");
  if (qubit >= s.num_qubits()) throw DimensionError("qubit out of range");
  const std::size_t mask = qubit_mask(s.num_qubits(), qubit);
  Amplitude rho[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    if (idx & mask) continue;
    const Amplitude a0 = s[idx], a1 = s[idx | mask];
    rho[0][0] += a0 * std::conj(a0);
    rho[0][1] += a0 * std::conj(a1);
    rho[1][0] += a1 * std::conj(a0);
    rho[1][1] += a1 * std::conj(a1);
  }
  Amplitude f = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) f += std::conj(c[a]) * rho[a][b] * c[b];
  }
  return f.real();
}

}  // namespace catlower
