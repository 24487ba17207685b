// Copyright 2026 The qsched Authors
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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsched {

/// Gate vocabulary.
///
/// RZ(t) = exp(-i t Z / 2) and RY(t) = exp(-i t Y / 2). Phase(k) is
/// diag(1, exp(2 pi i / 2^k)); CP(k) puts exp(2 pi i / 2^k) on |11>. The
/// conjugated flag on Phase and CP selects the adjoint.
enum class GateKind : std::uint8_t { H, X, Z, RZ, RY, Phase, CNOT, CP, SWAP, TOFF };

inline constexpr int arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CP:
    case GateKind::SWAP:
      return 2;
    case GateKind::TOFF:
      return 3;
    default:
      return 1;
  }
}

inline constexpr bool is_native(GateKind kind) {
  return kind != GateKind::CP && kind != GateKind::SWAP && kind != GateKind::TOFF;
}

inline std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::X:
      return "X";
    case GateKind::Z:
      return "Z";
    case GateKind::RZ:
      return "RZ";
    case GateKind::RY:
      return "RY";
    case GateKind::Phase:
      return "Phase";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::CP:
      return "CP";
    case GateKind::SWAP:
      return "SWAP";
    case GateKind::TOFF:
      return "TOFF";
  }
  return "?";
}

inline GateKind gate_kind_from_string(std::string_view s) {
  for (GateKind k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::RZ, GateKind::RY,
                     GateKind::Phase, GateKind::CNOT, GateKind::CP, GateKind::SWAP,
                     GateKind::TOFF}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(s) + "'");
}

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> operands;
  double angle = 0.0;
  int k = 0;
  bool conjugated = false;

  bool operator==(const Gate&) const = default;

  bool acts_on(int q) const {
    for (int o : operands) {
      if (o == q) return true;
    }
    return false;
  }
};

/// Throws if the operand list does not fit the kind or leaves [1, n_phys].
inline void validate_gate(const Gate& g, int n_phys) {
  if (static_cast<int>(g.operands.size()) != arity(g.kind)) {
    throw std::invalid_argument(std::string(to_string(g.kind)) + " takes " +
                                std::to_string(arity(g.kind)) + " operand(s), got " +
                                std::to_string(g.operands.size()));
  }
  for (std::size_t i = 0; i < g.operands.size(); ++i) {
    int q = g.operands[i];
    if (q < 1 || q > n_phys) {
      throw std::invalid_argument(std::string(to_string(g.kind)) + " operand " + std::to_string(q) +
                              " outside [1, " + std::to_string(n_phys) + "]");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (g.operands[j] == q) {
        throw std::invalid_argument(std::string(to_string(g.kind)) + " has repeated operand " +
                                    std::to_string(q));
      }
    }
  }
  if ((g.kind == GateKind::Phase || g.kind == GateKind::CP) && g.k < 1) {
    throw std::invalid_argument(std::string(to_string(g.kind)) + " needs k >= 1");
  }
}

inline Gate adjoint(const Gate& g) {
  Gate a = g;
  switch (g.kind) {
    case GateKind::RZ:
    case GateKind::RY:
      a.angle = -g.angle;
      break;
    case GateKind::Phase:
    case GateKind::CP:
      a.conjugated = !g.conjugated;
      break;
    default:
      break;
  }
  return a;
}

namespace gates {

inline Gate h(int q) { return {GateKind::H, {q}}; }
inline Gate x(int q) { return {GateKind::X, {q}}; }
inline Gate z(int q) { return {GateKind::Z, {q}}; }
inline Gate rz(double theta, int q) { return {GateKind::RZ, {q}, theta}; }
inline Gate ry(double theta, int q) { return {GateKind::RY, {q}, theta}; }
inline Gate phase(int k, int q, bool conjugated = false) {
  return {GateKind::Phase, {q}, 0.0, k, conjugated};
}
inline Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}}; }
inline Gate cp(int k, int a, int b, bool conjugated = false) {
  return {GateKind::CP, {a, b}, 0.0, k, conjugated};
}
inline Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}}; }
inline Gate toff(int a, int b, int target) { return {GateKind::TOFF, {a, b, target}}; }

}  // namespace gates

inline std::string describe(const Gate& g) {
  std::string s(to_string(g.kind));
  if (g.kind == GateKind::Phase || g.kind == GateKind::CP) {
    s += "_" + std::to_string(g.k);
    if (g.conjugated) s += "^dag";
  }
  if (g.kind == GateKind::RZ || g.kind == GateKind::RY) s += "(" + std::to_string(g.angle) + ")";
  s += "(";
  for (std::size_t i = 0; i < g.operands.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.operands[i]);
  }
  return s + ")";
}

}  // namespace qsched
