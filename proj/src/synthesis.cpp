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

#include "catlower/synthesis.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <variant>

#include "catlower/errors.hpp"

namespace catlower {

namespace {

using std::numbers::pi;
constexpr Amplitude kI{0.0, 1.0};

// Angles and magnitudes below this are treated as exact zeros.
constexpr double kSnap = 1e-14;
// Entrywise tolerance for recognising a fused 1-qubit block as a named gate.
constexpr double kMatchTol = 1e-12;

double snap(double x) { return std::abs(x) < kSnap ? 0.0 : x; }

Eigen::Matrix2cd rx(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), -kI * std::sin(t / 2), -kI * std::sin(t / 2), std::cos(t / 2);
  return m;
}

Eigen::Matrix2cd ry(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  const double r = std::numbers::sqrt2 / 2;
  m << r, r, r, -r;
  return m;
}

Eigen::Matrix2cd s_gate() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, kI;
  return m;
}

Eigen::Matrix2cd as_2x2(const DenseUnitary &u) {
  return u.matrix();
}

std::size_t gray(std::size_t i) { return i ^ (i >> 1); }

// Walsh-Hadamard coefficients: c_s = 2^-k sum_x v_x (-1)^{|x & s|}.
std::vector<double> walsh(const std::vector<double> &v) {
  const std::size_t n = v.size();
  std::vector<double> c(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    double acc = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      acc += (std::popcount(x & s) % 2 ? -1.0 : 1.0) * v[x];
    }
    c[s] = acc / static_cast<double>(n);
  }
  return c;
}

void emit_cnot(Circuit &c, unsigned control, unsigned target) {
  c.add(GateKind::h(), {target})
      .add(GateKind::cz(), {control, target})
      .add(GateKind::h(), {target});
}

// RY on `target` by angles[p], p the basis pattern of `controls` (first
// control most significant). Gray-code walk: 2^k CNOTs for k controls.
struct MuxRy {
  unsigned target;
  std::vector<unsigned> controls;
  std::vector<double> angles;
};

// diag(e^{i phases[x]}) over the whole register.
struct Diagonal {
  std::vector<double> phases;
};

using Stage = std::variant<MuxRy, Diagonal>;

void emit(Circuit &c, const MuxRy &op) {
  const std::size_t k = op.controls.size();
  if (k == 0) {
    if (op.angles[0] != 0.0) c.add(GateKind::ry(op.angles[0]), {op.target});
    return;
  }
  const auto w = walsh(op.angles);
  const std::size_t len = std::size_t{1} << k;
  for (std::size_t i = 0; i < len; ++i) {
    const double angle = w[gray(i)];
    if (angle != 0.0) c.add(GateKind::ry(angle), {op.target});
    const std::size_t flip = gray(i) ^ gray((i + 1) % len);
    const auto bit = static_cast<std::size_t>(std::countr_zero(flip));
    emit_cnot(c, op.controls[k - 1 - bit], op.target);
  }
}

void emit(Circuit &c, const Diagonal &op) {
  const unsigned m = c.num_qubits();
  const auto coeff = walsh(op.phases);
  auto qubit_bit = [m](unsigned q) { return std::size_t{1} << (m - 1 - q); };
  // Parities whose last qubit is t, walked with controls 0..t-1.
  for (unsigned t = m; t-- > 0;) {
    const std::size_t len = std::size_t{1} << t;
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t sub = gray(i);
      std::size_t mask = qubit_bit(t);
      for (unsigned p = 0; p < t; ++p) {
        if ((sub >> p) & 1U) mask |= qubit_bit(t - 1 - p);
      }
      // RZ(phi) contributes e^{-i phi/2 chi}; we want e^{i c chi}.
      const double angle = -2.0 * coeff[mask];
      if (angle != 0.0) c.add(GateKind::rz(angle), {t});
      if (t == 0) break;
      const std::size_t flip = gray(i) ^ gray((i + 1) % len);
      const auto bit = static_cast<unsigned>(std::countr_zero(flip));
      emit_cnot(c, t - 1 - bit, t);
    }
  }
}

bool is_trivial(const Diagonal &d) {
  for (double p : d.phases) {
    if (p != 0.0) return false;
  }
  return true;
}

// Best global phase aligning m to t, and the residual error.
double match_error(const Eigen::Matrix2cd &m, const Eigen::Matrix2cd &t) {
  const Amplitude tr = (t.adjoint() * m).trace();
  const Amplitude ph = std::abs(tr) > 0.0 ? tr / std::abs(tr) : Amplitude{1.0};
  return (m - ph * t).cwiseAbs().maxCoeff();
}

void emit_single(Circuit &out, unsigned q, const Eigen::Matrix2cd &m) {
  const std::pair<GateKind, Eigen::Matrix2cd> table[] = {
      {GateKind::s(), as_2x2(gate_matrix(GateKind::s()))},
      {GateKind::sdg(), as_2x2(gate_matrix(GateKind::sdg()))},
      {GateKind::z(), as_2x2(gate_matrix(GateKind::z()))},
      {GateKind::x(), as_2x2(gate_matrix(GateKind::x()))},
      {GateKind::h(), as_2x2(gate_matrix(GateKind::h()))},
  };
  if (match_error(m, Eigen::Matrix2cd::Identity()) <= kMatchTol) return;
  for (const auto &[kind, mat] : table) {
    if (match_error(m, mat) <= kMatchTol) {
      out.add(kind, {q});
      return;
    }
  }

  // Real orthogonal up to phase: RY, or RY after Z for reflections.
  Eigen::Index r = 0, c = 0;
  m.cwiseAbs().maxCoeff(&r, &c);
  const Amplitude ph = m(r, c) / std::abs(m(r, c));
  const Eigen::Matrix2cd real = m / ph;
  if (real.imag().cwiseAbs().maxCoeff() <= kMatchTol) {
    const Eigen::Matrix2d o = real.real();
    const double theta = 2.0 * std::atan2(o(1, 0), o(0, 0));
    if (o.determinant() > 0) {
      if (match_error(m, ry(theta)) <= kMatchTol) {
        out.add(GateKind::ry(theta), {q});
        return;
      }
    } else {
      const Eigen::Matrix2cd z = as_2x2(gate_matrix(GateKind::z()));
      if (match_error(m, ry(theta) * z) <= kMatchTol) {
        out.add(GateKind::z(), {q}).add(GateKind::ry(theta), {q});
        return;
      }
    }
  }

  // S^dagger m S = e^{i phi} RX(a) RY(b) RX(c) gives m = e^{i phi} RY(a) RX(-b) RY(c):
  // a single RX, the only non-real factor left.
  const auto e = euler_xyx(DenseUnitary(1, s_gate().adjoint() * m * s_gate()));
  if (e.gamma != 0.0) out.add(GateKind::ry(e.gamma), {q});
  if (e.beta != 0.0) out.add(GateKind::rx(-e.beta), {q});
  if (e.alpha != 0.0) out.add(GateKind::ry(e.alpha), {q});
}

double box_muller_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Eigen::Matrix2cd EulerXYX::matrix() const {
  return std::polar(1.0, phase) * rx(alpha) * ry(beta) * rx(gamma);
}

EulerXYX euler_xyx(const DenseUnitary &u) {
  if (u.num_qubits() != 1) throw SynthesisError("euler_xyx expects a 2x2 matrix");
  if (u.unitarity_error() > 1e-10) {
    throw SynthesisError("euler_xyx: matrix is not unitary");
  }
  // H u H = e^{i phi} RZ(a) RY(b) RZ(c)  =>  u = e^{i phi} RX(a) RY(-b) RX(c).
  const Eigen::Matrix2cd h = hadamard();
  const Eigen::Matrix2cd w = h * as_2x2(u) * h;
  const double phi = std::arg(w.determinant()) / 2.0;
  const Eigen::Matrix2cd su = std::polar(1.0, -phi) * w;

  double b = 2.0 * std::atan2(std::abs(su(1, 0)), std::abs(su(0, 0)));
  const double sum = std::abs(su(0, 0)) > kSnap ? std::arg(su(1, 1)) : 0.0;  // (a+c)/2
  double diff = std::abs(su(1, 0)) > kSnap ? std::arg(su(1, 0)) : 0.0;       // (a-c)/2
  // (diff, b) and (diff -+ pi, -b) give the same matrix; keep |diff| <= pi/2.
  if (diff > pi / 2) {
    diff -= pi;
    b = -b;
  } else if (diff < -pi / 2) {
    diff += pi;
    b = -b;
  }
  return EulerXYX{snap(sum + diff), snap(-b), snap(sum - diff), snap(phi)};
}

Circuit decompose_su2m(const DenseUnitary &u) {
  const unsigned m = u.num_qubits();
  if (m < 1 || m > kMaxSynthesisQubits) {
    throw SynthesisError("decompose_su2m supports 1 to 3 qubits, got " + std::to_string(m));
  }
  if (u.unitarity_error() > 1e-10) {
    throw SynthesisError("decompose_su2m: matrix is not unitary (||U^dag U - I|| = " +
                         std::to_string(u.unitarity_error()) + ")");
  }
  const std::size_t n = std::size_t{1} << m;
  Eigen::MatrixXcd w = u.matrix();
  std::vector<Stage> stages;

  auto apply_diagonal = [&](const Diagonal &d) {
    for (std::size_t x = 0; x < n; ++x) {
      w.row(static_cast<Eigen::Index>(x)) *= std::polar(1.0, d.phases[x]);
    }
  };

  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto col = static_cast<Eigen::Index>(gray(k));
    Diagonal d{std::vector<double>(n, 0.0)};
    for (std::size_t j = k; j < n; ++j) {
      const Amplitude z = w(static_cast<Eigen::Index>(gray(j)), col);
      if (std::abs(z) > kSnap) d.phases[gray(j)] = snap(-std::arg(z));
    }
    if (!is_trivial(d)) {
      apply_diagonal(d);
      stages.emplace_back(d);
    }
    for (std::size_t j = n - 1; j > k; --j) {
      const std::size_t a = gray(j - 1), b = gray(j);
      const double xb = w(static_cast<Eigen::Index>(b), col).real();
      if (std::abs(xb) <= kSnap) continue;
      const std::size_t bit = a ^ b;
      const std::size_t lo = a & ~bit, hi = a | bit;
      const double vlo = w(static_cast<Eigen::Index>(lo), col).real();
      const double vhi = w(static_cast<Eigen::Index>(hi), col).real();
      // Zero the entry at b, accumulating its weight into a.
      const double theta = b == hi ? 2.0 * std::atan2(-vhi, vlo)
                                   : 2.0 * std::atan2(vlo, vhi);
      const double c = std::cos(theta / 2), s = std::sin(theta / 2);
      const Eigen::RowVectorXcd rlo = w.row(static_cast<Eigen::Index>(lo));
      const Eigen::RowVectorXcd rhi = w.row(static_cast<Eigen::Index>(hi));
      w.row(static_cast<Eigen::Index>(lo)) = c * rlo - s * rhi;
      w.row(static_cast<Eigen::Index>(hi)) = s * rlo + c * rhi;

      MuxRy op;
      op.target = m - 1 - static_cast<unsigned>(std::countr_zero(bit));
      std::size_t pattern = 0;
      for (unsigned q = 0; q < m; ++q) {
        if (q == op.target) continue;
        op.controls.push_back(q);
        pattern = (pattern << 1) | ((lo >> (m - 1 - q)) & 1U);
      }
      op.angles.assign(std::size_t{1} << op.controls.size(), 0.0);
      op.angles[pattern] = theta;
      stages.emplace_back(std::move(op));
    }
  }
  Diagonal last{std::vector<double>(n, 0.0)};
  for (std::size_t x = 0; x < n; ++x) {
    last.phases[x] = snap(-std::arg(w(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x))));
  }
  // Only relative phases matter.
  const double ref = last.phases[0];
  for (auto &p : last.phases) p = snap(p - ref);
  if (!is_trivial(last)) stages.emplace_back(last);

  // stages_L ... stages_1 U = phase * I, so U is their inverses in reverse.
  Circuit out(m);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    std::visit(
        [&](auto op) {
          if constexpr (std::is_same_v<decltype(op), MuxRy>) {
            for (auto &a : op.angles) a = -a;
          } else {
            for (auto &p : op.phases) p = -p;
          }
          emit(out, op);
        },
        *it);
  }
  return out;
}

std::size_t decomposition_cz_bound(unsigned m) {
  if (m <= 1) return 0;
  const std::size_t n = std::size_t{1} << m;
  return n * (n - 1) / 2 * (std::size_t{1} << (m - 1)) + n * (n - 2);
}

Circuit rebase_to_xy(const Circuit &c) {
  const unsigned n = c.num_qubits();
  std::vector<std::optional<Eigen::Matrix2cd>> pending(n);
  Circuit out(n);
  auto flush = [&](unsigned q) {
    if (pending[q]) emit_single(out, q, *pending[q]);
    pending[q].reset();
  };
  for (const auto &g : c.gates()) {
    if (g.operands().size() == 1) {
      const unsigned q = g.operands()[0];
      const Eigen::Matrix2cd gm = as_2x2(gate_matrix(g.kind()));
      pending[q] = pending[q] ? Eigen::Matrix2cd(gm * *pending[q]) : gm;
      continue;
    }
    for (unsigned q : g.operands()) flush(q);
    out.add(g);
  }
  for (unsigned q = 0; q < n; ++q) flush(q);
  return out;
}

SynthesisResult synthesize(const DenseUnitary &u, const SynthesisOptions &options) {
  SynthesisResult r{lower(Circuit(1), options.target, options.lower), Circuit(1),
                    u.dim(), 0.0, 0.0};
  r.decomposed = decompose_su2m(u);
  r.lowered = lower(rebase_to_xy(r.decomposed), options.target, options.lower);

  const auto res = r.lowered.resources();
  const auto full = circuit_unitary(r.lowered.circuit);
  if (res.empty()) {
    r.distance = phase_aligned_distance(full, u);
  } else {
    const auto rep = extract_induced(full, res, kSynthesisTolerance);
    r.distance = phase_aligned_distance(DenseUnitary(u.num_qubits(), rep.projected), u);
    r.catalyst_deficit = rep.catalyst_overlap_deficit;
  }
  if (!(r.distance <= kSynthesisTolerance) || !(r.catalyst_deficit <= kSynthesisTolerance)) {
    throw SynthesisError("synthesized circuit misses the target: distance " +
                         std::to_string(r.distance) + ", catalyst deficit " +
                         std::to_string(r.catalyst_deficit));
  }
  return r;
}

DenseUnitary haar_unitary(unsigned m, std::uint64_t seed) {
  if (m < 1 || m > kMaxDenseQubits) throw SynthesisError("haar_unitary: bad qubit count");
  const auto n = static_cast<Eigen::Index>(std::size_t{1} << m);
  std::mt19937_64 rng(seed);
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double u1 = box_muller_uniform(rng);
      const double u2 = box_muller_uniform(rng);
      const double rad = std::sqrt(-2.0 * std::log(1.0 - u1));
      g(r, c) = Amplitude(rad * std::cos(2 * pi * u2), rad * std::sin(2 * pi * u2)) /
                std::numbers::sqrt2;
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd &rr = qr.matrixQR();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Amplitude d = rr(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return DenseUnitary(m, q);
}

DenseUnitary read_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  std::size_t dim = 0;
  if (!(in >> word >> dim) || word != "dim") {
    throw SynthesisError("matrix file must start with 'dim <2^m>'");
  }
  if (dim < 2 || !std::has_single_bit(dim) || dim > (std::size_t{1} << kMaxDenseQubits)) {
    throw SynthesisError("matrix dimension must be a power of two >= 2");
  }
  const auto m = static_cast<unsigned>(std::countr_zero(dim));
  Eigen::MatrixXcd mat(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      std::string tok;
      if (!(in >> tok)) throw SynthesisError("matrix file: too few entries");
      const auto comma = tok.find(',');
      if (comma == std::string::npos) {
        throw SynthesisError("matrix entry '" + tok + "' is not 're,im'");
      }
      try {
        std::size_t used_re = 0, used_im = 0;
        const std::string re = tok.substr(0, comma), im = tok.substr(comma + 1);
        const double x = std::stod(re, &used_re);
        const double y = std::stod(im, &used_im);
        if (used_re != re.size() || used_im != im.size() || !std::isfinite(x) ||
            !std::isfinite(y)) {
          throw std::invalid_argument("trailing characters");
        }
        mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Amplitude(x, y);
      } catch (const std::exception &) {
        throw SynthesisError("matrix entry '" + tok + "' is not 're,im'");
      }
    }
  }
  if (in >> word) throw SynthesisError("matrix file: too many entries");
  return DenseUnitary(m, mat);
}

std::string write_matrix_text(const DenseUnitary &u) {
  std::string out = "dim " + std::to_string(u.dim()) + "\n";
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      if (c) out += ' ';
      out += format_angle(u(r, c).real()) + "," + format_angle(u(r, c).imag());
    }
    out += '\n';
  }
  return out;
}

}  // namespace catlower
