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
#include <string>
#include <string_view>
#include <vector>

#include "qsched/circuit.hpp"
#include "qsched/topology.hpp"

namespace qsched {

enum class AlgorithmKind { QFT, JordanWigner, GroverDiffusion };

inline std::string_view to_string(AlgorithmKind a) {
  switch (a) {
    case AlgorithmKind::QFT:
      return "qft";
    case AlgorithmKind::JordanWigner:
      return "jw";
    case AlgorithmKind::GroverDiffusion:
      return "grover";
  }
  return "?";
}

inline AlgorithmKind algorithm_kind_from_string(std::string_view s) {
  if (s == "qft") return AlgorithmKind::QFT;
  if (s == "jw") return AlgorithmKind::JordanWigner;
  if (s == "grover") return AlgorithmKind::GroverDiffusion;
  throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
}

inline constexpr double kDefaultTheta = std::numbers::pi / 4;

struct ParitySpec {
  int n = 1;
  double theta = kDefaultTheta;
  std::vector<int> subset;  // 1-based logical members; empty = all qubits

  bool member(int j) const {
    if (subset.empty()) return j >= 1 && j <= n;
    for (int s : subset) {
      if (s == j) return true;
    }
    return false;
  }

  void validate() const {
    if (n < 1) throw std::invalid_argument("parity rotation needs n >= 1");
    for (int s : subset) {
      if (s < 1 || s > n) {
        throw std::invalid_argument("subset index " + std::to_string(s) + " outside [1, " +
                                    std::to_string(n) + "]");
      }
    }
  }
};

struct GroverSpec {
  int n = 2;
  int k = 1;  // tree depth after padding to 2^k leaves

  static GroverSpec of(int n) {
    if (n < 2) throw std::invalid_argument("Grover diffusion needs n >= 2, got " + std::to_string(n));
    int k = 0;
    while ((1 << k) < n) ++k;
    return {n, k};
  }

  int leaves() const { return 1 << k; }
};

struct ScheduleParams {
  int n = 0;         // data qubits requested
  int n_padded = 0;  // size the construction was run at
  double theta = kDefaultTheta;
  std::vector<int> subset;
  bool restore_order = false;
};

/// A scheduled circuit with its topology and qubit bookkeeping.
///
/// Ancilla -a (see MappingState) starts in |ancilla_init[a-1]>. Padded
/// Grover leaves start in |1>, every other ancilla in |0>.
struct ScheduleResult {
  AlgorithmKind algorithm = AlgorithmKind::QFT;
  Circuit circuit;
  Topology topology;
  MappingState initial_mapping;
  MappingState final_mapping;
  std::vector<int> ancilla_init;
  ScheduleParams params;

  std::vector<int> ancilla_qubits() const {
    std::vector<int> out;
    for (int p = 1; p <= initial_mapping.n_phys(); ++p) {
      if (initial_mapping.is_ancilla(p)) out.push_back(p);
    }
    return out;
  }
};

// Parallel blocks: gates inside a block act on disjoint qubits in the
// schedules below; blocks are separated by barriers.
using Block = std::vector<Gate>;
using Program = std::vector<Block>;

/// Merges `src` into `dst` block by block, aligned at the start.
inline void merge_parallel(Program& dst, const Program& src) {
  if (dst.size() < src.size()) dst.resize(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) dst[i].insert(dst[i].end(), src[i].begin(), src[i].end());
}

inline void append_program(Circuit& c, const Program& p) {
  for (const Block& b : p) {
    if (b.empty()) continue;
    for (const Gate& g : b) c.append(g);
    c.append_barrier();
  }
}

/// half; center; invert(half), each part separated by barriers.
inline Circuit mirrored(const Circuit& half, const Block& center) {
  Circuit c = half;
  c.append_barrier();
  for (const Gate& g : center) c.append(g);
  c.append_circuit(invert(half));
  return c;
}

}  // namespace qsched
