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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catlower/circuit.hpp"

namespace catlower {

/**
 * A gate identity the rewriter relies on. `sides(theta)` returns the two
 * circuits that must have equal unitaries (phase included); non-parameterized
 * identities ignore theta. When `zero_ancilla` is set, equality is only
 * required on inputs with that qubit in |0>.
 */
struct RewriteIdentity {
  std::string name;
  bool parameterized = false;
  std::optional<unsigned> zero_ancilla;
  std::function<std::pair<Circuit, Circuit>(double)> sides;
};

const std::vector<RewriteIdentity> &rewrite_identities();

struct IdentityCheck {
  std::string name;
  double max_error = 0.0;
  bool ok = false;
};

/// Evaluates every identity (parameterized ones over a fixed angle grid).
std::vector<IdentityCheck> check_rewrite_identities(double tol = 1e-13);

}  // namespace catlower
