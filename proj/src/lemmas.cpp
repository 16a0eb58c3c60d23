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

#include "catlower/lemmas.hpp"

#include <algorithm>
#include <numbers>

#include "catlower/simulator.hpp"

namespace catlower {

namespace {

Circuit one_qubit(std::initializer_list<GateKind> kinds) {
  Circuit c(1);
  for (const auto &k : kinds) c.add(k, {0});
  return c;
}

constexpr double kAngleGrid[] = {0.0,  0.37, 1.9, -2.6, std::numbers::pi,
                                 5.5, -0.01, 2 * std::numbers::pi};

}  // namespace

const std::vector<RewriteIdentity> &rewrite_identities() {
  static const std::vector<RewriteIdentity> table = {
      {"SDG = S S S", false, std::nullopt,
       [](double) {
         return std::pair{one_qubit({GateKind::sdg()}),
                          one_qubit({GateKind::s(), GateKind::s(), GateKind::s()})};
       }},
      {"SDG = Z S", false, std::nullopt,
       [](double) {
         return std::pair{one_qubit({GateKind::sdg()}),
                          one_qubit({GateKind::s(), GateKind::z()})};
       }},
      {"RX(t) = SDG RY(t) S", true, std::nullopt,
       [](double t) {
         return std::pair{one_qubit({GateKind::rx(t)}),
                          one_qubit({GateKind::s(), GateKind::ry(t), GateKind::sdg()})};
       }},
      {"RZ(t) = H RX(t) H", true, std::nullopt,
       [](double t) {
         return std::pair{one_qubit({GateKind::rz(t)}),
                          one_qubit({GateKind::h(), GateKind::rx(t), GateKind::h()})};
       }},
      {"CZ(a,b) = CCZ(anc,a,b) with anc = |1>", false, 0U,
       [](double) {
         Circuit lhs(3), rhs(3);
         lhs.add(GateKind::x(), {0}).add(GateKind::cz(), {1, 2});
         rhs.add(GateKind::x(), {0}).add(GateKind::ccz(), {0, 1, 2});
         return std::pair{lhs, rhs};
       }},
  };
  return table;
}

std::vector<IdentityCheck> check_rewrite_identities(double tol) {
  std::vector<IdentityCheck> out;
  for (const auto &id : rewrite_identities()) {
    IdentityCheck chk{id.name, 0.0, false};
    const std::vector<double> grid =
        id.parameterized ? std::vector<double>(std::begin(kAngleGrid), std::end(kAngleGrid))
                         : std::vector<double>{0.0};
    for (double t : grid) {
      const auto [lhs, rhs] = id.sides(t);
      const auto a = circuit_unitary(lhs).matrix();
      const auto b = circuit_unitary(rhs).matrix();
      double err = 0.0;
      if (id.zero_ancilla) {
        const std::size_t mask = std::size_t{1} << (lhs.num_qubits() - 1 - *id.zero_ancilla);
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
          if (static_cast<std::size_t>(c) & mask) continue;
          err = std::max(err, (a.col(c) - b.col(c)).cwiseAbs().maxCoeff());
        }
      } else {
        err = (a - b).cwiseAbs().maxCoeff();
      }
      chk.max_error = std::max(chk.max_error, err);
    }
    chk.ok = chk.max_error <= tol;
    out.push_back(chk);
  }
  return out;
}

}  // namespace catlower
