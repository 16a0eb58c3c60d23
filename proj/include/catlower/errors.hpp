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
#include <stdexcept>
#include <string>

namespace catlower {

/// Raised when a gate, operand list or circuit violates an IR invariant.
class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the circuit text reader. `line()` is 1-based; 0 means "whole input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error(
            line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Dimension mismatches and dense-size limits in the simulator.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A gate has no rewrite rule into the requested target profile.
class LoweringError : public std::runtime_error {
 public:
  LoweringError(std::size_t gate_index, const std::string &what)
      : std::runtime_error(
            "gate " + std::to_string(gate_index) + " not lowerable: " + what),
        gate_index_(gate_index) {}
  std::size_t gate_index() const { return gate_index_; }

 private:
  std::size_t gate_index_;
};

/// Synthesis input was rejected or the end-to-end check failed.
class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catlower
