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

#include "catlower/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "catlower/errors.hpp"

namespace catlower {

namespace {

struct TagInfo {
  std::string_view name;
  unsigned arity;
  bool parameterized;
};

constexpr std::array<TagInfo, kNumGateTags> kTagInfo = {{
    {"H", 1, false},
    {"X", 1, false},
    {"Y", 1, false},
    {"Z", 1, false},
    {"S", 1, false},
    {"SDG", 1, false},
    {"RX", 1, true},
    {"RY", 1, true},
    {"RZ", 1, true},
    {"CZ", 2, false},
    {"CS", 2, false},
    {"CRY", 2, true},
    {"CCZ", 3, false},
}};

const TagInfo &info(GateTag tag) {
  return kTagInfo[static_cast<std::size_t>(tag)];
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::toupper(static_cast<unsigned char>(x)) ==
                  std::toupper(static_cast<unsigned char>(y));
         });
}

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<unsigned long> parse_index(std::string_view tok) {
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace

unsigned arity(GateTag tag) { return info(tag).arity; }

bool is_parameterized(GateTag tag) { return info(tag).parameterized; }

std::string_view tag_name(GateTag tag) { return info(tag).name; }

std::optional<GateTag> tag_from_name(std::string_view name) {
  for (GateTag t : kAllGateTags) {
    if (iequals(name, tag_name(t))) return t;
  }
  return std::nullopt;
}

GateKind::GateKind(GateTag tag, std::optional<double> angle)
    : tag_(tag), angle_(angle) {
  if (is_parameterized(tag) && !angle) {
    throw CircuitError(std::string(tag_name(tag)) + " requires an angle");
  }
  if (!is_parameterized(tag) && angle) {
    throw CircuitError(std::string(tag_name(tag)) + " takes no angle");
  }
  if (angle && !std::isfinite(*angle)) {
    throw CircuitError(std::string(tag_name(tag)) + " angle must be finite");
  }
}

GateApp::GateApp(GateKind kind, std::vector<unsigned> operands)
    : kind_(std::move(kind)), operands_(std::move(operands)) {
  if (operands_.size() != kind_.arity()) {
    throw CircuitError(std::string(tag_name(kind_.tag())) + " expects " +
                       std::to_string(kind_.arity()) + " operand(s), got " +
                       std::to_string(operands_.size()));
  }
  for (std::size_t i = 0; i < operands_.size(); ++i) {
    for (std::size_t j = i + 1; j < operands_.size(); ++j) {
      if (operands_[i] == operands_[j]) {
        throw CircuitError(std::string(tag_name(kind_.tag())) +
                           ": duplicate operand " +
                           std::to_string(operands_[i]));
      }
    }
  }
}

bool semantically_equal(const GateApp &a, const GateApp &b) {
  if (a.kind() != b.kind()) return false;
  if (a.tag() == GateTag::CZ || a.tag() == GateTag::CCZ) {
    auto x = a.operands();
    auto y = b.operands();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }
  return a.operands() == b.operands();
}

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw CircuitError("circuit needs at least one qubit");
}

Circuit::Circuit(unsigned num_qubits, std::vector<GateApp> gates)
    : Circuit(num_qubits) {
  gates_.reserve(gates.size());
  for (auto &g : gates) add(g);
}

Circuit &Circuit::add(const GateApp &gate) {
  for (unsigned q : gate.operands()) {
    if (q >= num_qubits_) {
      throw CircuitError("operand " + std::to_string(q) +
                         " out of range for " + std::to_string(num_qubits_) +
                         " qubit(s)");
    }
  }
  gates_.push_back(gate);
  return *this;
}

Circuit &Circuit::append(const Circuit &other) {
  if (other.num_qubits() > num_qubits_) {
    throw CircuitError("appended circuit is wider than the target register");
  }
  for (const auto &g : other.gates()) gates_.push_back(g);
  return *this;
}

std::string_view GateSetProfile::label() const {
  switch (name_) {
    case Profile::HCCZ: return "HCCZ";
    case Profile::HCS: return "HCS";
    case Profile::REAL_O2_CCZ: return "REAL_O2_CCZ";
    case Profile::REAL_O2_CZ: return "REAL_O2_CZ";
    case Profile::FULL: return "FULL";
  }
  return "?";
}

bool GateSetProfile::admits(GateTag tag) const {
  switch (name_) {
    case Profile::HCCZ:
      return tag == GateTag::H || tag == GateTag::CCZ;
    case Profile::HCS:
      return tag == GateTag::H || tag == GateTag::CS;
    case Profile::REAL_O2_CCZ:
      return tag == GateTag::H || tag == GateTag::X || tag == GateTag::Z ||
             tag == GateTag::RY || tag == GateTag::CCZ;
    case Profile::REAL_O2_CZ:
      return tag == GateTag::H || tag == GateTag::X || tag == GateTag::Z ||
             tag == GateTag::RY || tag == GateTag::CZ;
    case Profile::FULL:
      return true;
  }
  return false;
}

std::optional<GateSetProfile> GateSetProfile::from_label(std::string_view label) {
  for (Profile p : {Profile::HCCZ, Profile::HCS, Profile::REAL_O2_CCZ,
                    Profile::REAL_O2_CZ, Profile::FULL}) {
    GateSetProfile gp(p);
    if (iequals(label, gp.label())) return gp;
  }
  return std::nullopt;
}

std::vector<MembershipViolation> check_membership(const Circuit &c,
                                                  const GateSetProfile &p) {
  std::vector<MembershipViolation> out;
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    if (!p.admits(c.gates()[i].kind())) out.push_back({i, c.gates()[i].tag()});
  }
  return out;
}

std::size_t GateCounts::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

GateCounts gate_counts(const Circuit &c) {
  GateCounts counts;
  for (const auto &g : c.gates()) ++counts[g.tag()];
  return counts;
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);  // also drops the '\r' of CRLF input
    if (line.empty()) continue;

    if (!circuit) {
      auto toks = split_ws(line);
      if (toks.size() != 2 || !iequals(toks[0], "qubits")) {
        throw ParseError(line_no, "expected header 'qubits <n>'");
      }
      auto n = parse_index(toks[1]);
      if (!n || *n == 0 || *n > 1024) {
        throw ParseError(line_no, "qubit count must be a positive integer");
      }
      circuit.emplace(static_cast<unsigned>(*n));
      continue;
    }

    // <NAME>[(<angle>)] <q>...
    std::size_t name_end = 0;
    while (name_end < line.size() && line[name_end] != '(' &&
           !std::isspace(static_cast<unsigned char>(line[name_end]))) {
      ++name_end;
    }
    std::string_view name = line.substr(0, name_end);
    std::string_view rest = line.substr(name_end);
    if (iequals(name, "qubits")) {
      throw ParseError(line_no, "duplicate 'qubits' header");
    }
    auto tag = tag_from_name(name);
    if (!tag) {
      throw ParseError(line_no, "unknown gate '" + std::string(name) + "'");
    }

    std::optional<double> angle;
    if (!rest.empty() && rest.front() == '(') {
      auto close = rest.find(')');
      if (close == std::string_view::npos) {
        throw ParseError(line_no, "unterminated angle");
      }
      std::string_view angle_text = trim(rest.substr(1, close - 1));
      rest = rest.substr(close + 1);
      if (!angle_text.empty() && angle_text.front() == '+') {
        angle_text.remove_prefix(1);
      }
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(
          angle_text.data(), angle_text.data() + angle_text.size(), v);
      if (angle_text.empty() || ec != std::errc() ||
          ptr != angle_text.data() + angle_text.size() || !std::isfinite(v)) {
        throw ParseError(line_no, "unparseable angle '" +
                                      std::string(angle_text) + "'");
      }
      angle = v;
    }
    if (is_parameterized(*tag) && !angle) {
      throw ParseError(line_no, std::string(tag_name(*tag)) + " needs an angle");
    }
    if (!is_parameterized(*tag) && angle) {
      throw ParseError(line_no, std::string(tag_name(*tag)) + " takes no angle");
    }

    std::vector<unsigned> operands;
    for (auto tok : split_ws(rest)) {
      auto q = parse_index(tok);
      if (!q) {
        throw ParseError(line_no, "bad qubit index '" + std::string(tok) + "'");
      }
      if (*q >= circuit->num_qubits()) {
        throw ParseError(line_no, "qubit " + std::to_string(*q) +
                                      " out of range (qubits " +
                                      std::to_string(circuit->num_qubits()) +
                                      ")");
      }
      operands.push_back(static_cast<unsigned>(*q));
    }
    try {
      circuit->add(GateKind(*tag, angle), std::move(operands));
    } catch (const CircuitError &e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(0, "missing 'qubits' header");
  return *circuit;
}

std::string format_angle(double radians) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", radians);
  return buf;
}

std::string serialize_circuit(const Circuit &c) {
  std::string out = "qubits " + std::to_string(c.num_qubits());
  for (const auto &g : c.gates()) {
    out += '\n';
    out += tag_name(g.tag());
    if (g.kind().angle()) {
      out += '(';
      out += format_angle(*g.kind().angle());
      out += ')';
    }
    for (unsigned q : g.operands()) {
      out += ' ';
      out += std::to_string(q);
    }
  }
  return out;
}

}  // namespace catlower
