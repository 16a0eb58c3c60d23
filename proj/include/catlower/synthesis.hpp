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

#include <cstdint>
#include <string>
#include <string_view>

#include "catlower/circuit.hpp"
#include "catlower/rewriter.hpp"
#include "catlower/simulator.hpp"

namespace catlower {

/// u = e^{i phase} RX(alpha) RY(beta) RX(gamma); angles in (-2pi, 2pi].
struct EulerXYX {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double phase = 0.0;

  Eigen::Matrix2cd matrix() const;
};

/// Throws SynthesisError if u is not a 2x2 unitary within 1e-10.
EulerXYX euler_xyx(const DenseUnitary &u);

inline constexpr unsigned kMaxSynthesisQubits = 3;

/**
 * Exact decomposition of an m-qubit unitary (m <= 3) into RY, RZ, H and CZ,
 * up to global phase. Gray-code-adjacent Givens rotations reduce the matrix
 * column by column; each column is first made real by a diagonal gate.
 * Rotations are uniformly controlled RYs (2^(m-1) CZ each for m > 1, none
 * for m = 1) and diagonals cost 2^m - 2 CZ, so with N = 2^m the CZ count is
 * at most N(N-1)/2 * 2^(m-1) + N * (2^m - 2) for m > 1: 20 for m = 2 and
 * 160 for m = 3 (zero-angle stages are skipped).
 */
Circuit decompose_su2m(const DenseUnitary &u);

/// Upper bound above for m qubits.
std::size_t decomposition_cz_bound(unsigned m);

/**
 * Merges each maximal run of single-qubit gates into one 2x2 unitary and
 * re-emits it as the cheapest of: nothing, S, SDG, Z, X, H, RY (optionally
 * after Z) for real matrices, or RY RX RY otherwise. Exact up to global phase.
 */
Circuit rebase_to_xy(const Circuit &c);

struct SynthesisOptions {
  /// REAL_O2_CCZ (ancilla + catalyst) or REAL_O2_CZ (catalyst only).
  GateSetProfile target = GateSetProfile(Profile::REAL_O2_CCZ);
  LowerOptions lower;
};

struct SynthesisResult {
  LoweredCircuit lowered;
  Circuit decomposed;
  std::size_t target_dim = 0;
  double distance = 0.0;
  double catalyst_deficit = 0.0;
};

inline constexpr double kSynthesisTolerance = 1e-8;

/// decompose_su2m -> rebase_to_xy -> lower -> end-to-end check. Throws
/// SynthesisError when the induced operator misses u by more than 1e-8.
SynthesisResult synthesize(const DenseUnitary &u, const SynthesisOptions &options = {});

/**
 * Haar-random unitary on m qubits. Entries of a Ginibre matrix are filled
 * row-major, each as (a + i b)/sqrt(2) with a, b from Box-Muller over
 * std::mt19937_64(seed) uniforms u = (x >> 11) * 2^-53 (a uses
 * sqrt(-2 ln(1-u1)) cos(2 pi u2), b the matching sin). The Q of a Householder
 * QR is multiplied by diag(R_ii / |R_ii|).
 */
DenseUnitary haar_unitary(unsigned m, std::uint64_t seed);

/// Reads `dim <2^m>` then 2^m rows of `re,im` entries. Throws SynthesisError.
DenseUnitary read_matrix_text(std::string_view text);
std::string write_matrix_text(const DenseUnitary &u);

}  // namespace catlower
