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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catlower {

enum class GateTag {
  H,
  X,
  Y,
  Z,
  S,
  SDG,
  RX,
  RY,
  RZ,
  CZ,
  CS,
  CRY,
  CCZ,
};

inline constexpr std::size_t kNumGateTags = 13;

inline constexpr std::array<GateTag, kNumGateTags> kAllGateTags = {
    GateTag::H,  GateTag::X,  GateTag::Y,  GateTag::Z,  GateTag::S,
    GateTag::SDG, GateTag::RX, GateTag::RY, GateTag::RZ, GateTag::CZ,
    GateTag::CS, GateTag::CRY, GateTag::CCZ};

/// Number of qubits the gate acts on.
unsigned arity(GateTag tag);
bool is_parameterized(GateTag tag);
/// Canonical (uppercase) name, as used by the text format.
std::string_view tag_name(GateTag tag);
/// Case-insensitive lookup; nullopt for unknown names.
std::optional<GateTag> tag_from_name(std::string_view name);

/**
 * Gate identity. Rotation-type tags (RX, RY, RZ, CRY) carry a finite angle in
 * radians; every other tag carries none.
 */
class GateKind {
 public:
  /// Throws CircuitError if the angle presence does not match the tag or the
  /// angle is not finite.
  explicit GateKind(GateTag tag, std::optional<double> angle = std::nullopt);

  static GateKind h() { return GateKind(GateTag::H); }
  static GateKind x() { return GateKind(GateTag::X); }
  static GateKind y() { return GateKind(GateTag::Y); }
  static GateKind z() { return GateKind(GateTag::Z); }
  static GateKind s() { return GateKind(GateTag::S); }
  static GateKind sdg() { return GateKind(GateTag::SDG); }
  static GateKind rx(double theta) { return GateKind(GateTag::RX, theta); }
  static GateKind ry(double theta) { return GateKind(GateTag::RY, theta); }
  static GateKind rz(double theta) { return GateKind(GateTag::RZ, theta); }
  static GateKind cz() { return GateKind(GateTag::CZ); }
  static GateKind cs() { return GateKind(GateTag::CS); }
  static GateKind cry(double phi) { return GateKind(GateTag::CRY, phi); }
  static GateKind ccz() { return GateKind(GateTag::CCZ); }

  GateTag tag() const { return tag_; }
  const std::optional<double> &angle() const { return angle_; }
  unsigned arity() const { return catlower::arity(tag_); }

  bool operator==(const GateKind &other) const = default;

 private:
  GateTag tag_;
  std::optional<double> angle_;
};

/// A gate applied to concrete qubits. Controls come first, the target last.
class GateApp {
 public:
  /// Throws CircuitError on a wrong operand count or repeated operands.
  GateApp(GateKind kind, std::vector<unsigned> operands);

  const GateKind &kind() const { return kind_; }
  GateTag tag() const { return kind_.tag(); }
  const std::vector<unsigned> &operands() const { return operands_; }

  bool operator==(const GateApp &other) const = default;

 private:
  GateKind kind_;
  std::vector<unsigned> operands_;
};

/// Equality that treats the operands of the symmetric gates CZ and CCZ as a set.
bool semantically_equal(const GateApp &a, const GateApp &b);

/**
 * Ordered gate list over a fixed register. Gate 0 executes first, so an
 * operator product A·B·C is stored as [C, B, A].
 */
class Circuit {
 public:
  explicit Circuit(unsigned num_qubits);
  Circuit(unsigned num_qubits, std::vector<GateApp> gates);

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<GateApp> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends a gate, validating operands against the register width.
  Circuit &add(const GateApp &gate);
  Circuit &add(GateKind kind, std::vector<unsigned> operands) {
    return add(GateApp(std::move(kind), std::move(operands)));
  }
  /// Appends all gates of `other`, whose width must not exceed ours.
  Circuit &append(const Circuit &other);

  bool operator==(const Circuit &other) const = default;

 private:
  unsigned num_qubits_;
  std::vector<GateApp> gates_;
};

/// Named gate-set predicates.
enum class Profile {
  HCCZ,         ///< {H, CCZ}
  HCS,          ///< {H, CS}
  REAL_O2_CCZ,  ///< {H, X, Z, RY, CCZ}
  REAL_O2_CZ,   ///< {H, X, Z, RY, CZ}: the ancilla-free variant with CZ available
  FULL,         ///< every gate kind
};

class GateSetProfile {
 public:
  constexpr explicit GateSetProfile(Profile name) : name_(name) {}

  Profile name() const { return name_; }
  std::string_view label() const;
  bool admits(GateTag tag) const;
  bool admits(const GateKind &kind) const { return admits(kind.tag()); }

  /// Parses a profile label (case-insensitive).
  static std::optional<GateSetProfile> from_label(std::string_view label);

  bool operator==(const GateSetProfile &other) const = default;

 private:
  Profile name_;
};

struct MembershipViolation {
  std::size_t gate_index;
  GateTag tag;
  bool operator==(const MembershipViolation &other) const = default;
};

std::vector<MembershipViolation> check_membership(const Circuit &c,
                                                  const GateSetProfile &p);

/// Per-tag multiset count, indexed by static_cast<size_t>(GateTag).
class GateCounts {
 public:
  std::size_t operator[](GateTag tag) const {
    return counts_[static_cast<std::size_t>(tag)];
  }
  std::size_t &operator[](GateTag tag) {
    return counts_[static_cast<std::size_t>(tag)];
  }
  std::size_t total() const;
  bool operator==(const GateCounts &other) const = default;

 private:
  std::array<std::size_t, kNumGateTags> counts_{};
};

GateCounts gate_counts(const Circuit &c);

/// Reads the line-oriented circuit format. Throws ParseError.
Circuit parse_circuit(std::string_view text);
/// Canonical text: uppercase names, one gate per line, 17 significant digits
/// for angles, no trailing newline.
std::string serialize_circuit(const Circuit &c);

/// "%.17g" formatting shared by every textual output of an angle.
std::string format_angle(double radians);

}  // namespace catlower
