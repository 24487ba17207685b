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

#include <numbers>
#include <stdexcept>
#include <vector>

#include "qsched/circuit.hpp"

namespace qsched {

// Margolus Toffoli uses R = RY(pi/4) = exp(-i pi Y / 8). With the gate order
// below the result is TOFF * D, D = diag(1,1,1,1,1,-1,1,1) over |abt>.
inline constexpr double kMargolusAngle = std::numbers::pi / 4;

inline std::vector<Gate> lower_cp(int k, int a, int b, bool conjugated = false) {
  if (a == b) throw std::invalid_argument("controlled phase needs distinct operands");
  if (k < 1) throw std::invalid_argument("controlled phase needs k >= 1");
  return {gates::cnot(a, b), gates::phase(k + 1, b, !conjugated), gates::cnot(a, b),
          gates::phase(k + 1, a, conjugated), gates::phase(k + 1, b, conjugated)};
}

inline std::vector<Gate> lower_swap(int a, int b) {
  if (a == b) throw std::invalid_argument("swap needs distinct operands");
  return {gates::cnot(a, b), gates::cnot(b, a), gates::cnot(a, b)};
}

inline std::vector<Gate> lower_toffoli(int a, int b, int t) {
  if (a == b || a == t || b == t) throw std::invalid_argument("toffoli needs distinct operands");
  return {gates::ry(kMargolusAngle, t),  gates::cnot(b, t), gates::ry(kMargolusAngle, t),
          gates::cnot(a, t),             gates::ry(-kMargolusAngle, t), gates::cnot(b, t),
          gates::ry(-kMargolusAngle, t)};
}

// CP(k)(a,b) then SWAP(a,b) lowers to
//   CNOT(a,b) P'(b) | CNOT(b,a) CNOT(a,b) P(a) P(b)
// where the bar marks the split between the two gates' slots. The inner
// CNOT(a,b) pair of the naive expansion cancels.
inline std::vector<Gate> lower_fused_cp_head(const Gate& cp) {
  const int a = cp.operands[0], b = cp.operands[1];
  return {gates::cnot(a, b), gates::phase(cp.k + 1, b, !cp.conjugated)};
}

inline std::vector<Gate> lower_fused_swap_tail(const Gate& cp) {
  const int a = cp.operands[0], b = cp.operands[1];
  return {gates::cnot(b, a), gates::cnot(a, b), gates::phase(cp.k + 1, a, cp.conjugated),
          gates::phase(cp.k + 1, b, cp.conjugated)};
}

inline std::vector<Gate> lower_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::CP:
      return lower_cp(g.k, g.operands[0], g.operands[1], g.conjugated);
    case GateKind::SWAP:
      return lower_swap(g.operands[0], g.operands[1]);
    case GateKind::TOFF:
      return lower_toffoli(g.operands[0], g.operands[1], g.operands[2]);
    default:
      return {g};
  }
}

/// Expands CP, SWAP and TOFF into the native set and re-packs each
/// barrier-delimited block ASAP. With `fuse`, a CP directly followed (on both
/// of its qubits) by a SWAP on the same pair is lowered jointly.
inline Circuit lower_circuit(const Circuit& c, bool fuse) {
  const std::vector<Gate> flat = c.gates();
  const std::size_t n = flat.size();
  std::vector<std::ptrdiff_t> partner(n, -1);  // CP index -> fused SWAP index and back
  if (fuse) {
    std::vector<std::ptrdiff_t> next_on(static_cast<std::size_t>(c.n_phys()) + 1, -1);
    for (std::size_t i = n; i-- > 0;) {
      const Gate& g = flat[i];
      if (g.kind == GateKind::CP) {
        const int a = g.operands[0], b = g.operands[1];
        std::ptrdiff_t j = next_on[a];
        if (j >= 0 && j == next_on[b] && flat[j].kind == GateKind::SWAP) {
          partner[i] = j;
          partner[j] = static_cast<std::ptrdiff_t>(i);
        }
      }
      for (int q : g.operands) next_on[q] = static_cast<std::ptrdiff_t>(i);
    }
  }

  Circuit out(c.n_phys());
  const auto& barriers = c.barriers();
  std::size_t b = 0;
  std::size_t idx = 0;
  for (std::size_t m = 0; m <= c.moments().size(); ++m) {
    while (b < barriers.size() && barriers[b] == m) {
      out.append_barrier();
      ++b;
    }
    if (m == c.moments().size()) break;
    for (std::size_t gi = 0; gi < c.moments()[m].size(); ++gi, ++idx) {
      const Gate& g = flat[idx];
      std::vector<Gate> lowered;
      if (partner[idx] >= 0 && g.kind == GateKind::CP) {
        lowered = lower_fused_cp_head(g);
      } else if (partner[idx] >= 0 && g.kind == GateKind::SWAP) {
        lowered = lower_fused_swap_tail(flat[partner[idx]]);
      } else {
        lowered = lower_gate(g);
      }
      for (const Gate& l : lowered) out.append(l);
    }
  }
  return out;
}

inline bool is_native_circuit(const Circuit& c) {
  for (const Moment& m : c.moments()) {
    for (const Gate& g : m) {
      if (!is_native(g.kind)) return false;
    }
  }
  return true;
}

}  // namespace qsched
