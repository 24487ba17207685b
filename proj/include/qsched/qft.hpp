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

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsched/schedule.hpp"

namespace qsched {

namespace detail {

// Emits blocks while tracking which logical qubit sits where. CP phases are
// read off the tracked labels: CP between x_a and x_b uses k = |a - b| + 1.
class QftEmitter {
 public:
  QftEmitter(int n, bool route) : circuit_(n), mapping_(MappingState::identity(n, n)), route_(route) {}

  void h(int q) { block_.push_back(gates::h(target(q))); }

  void cp(int a, int b) {
    const int k = std::abs(mapping_.label(a) - mapping_.label(b)) + 1;
    block_.push_back(gates::cp(k, target(a), target(b)));
  }

  void swap(int a, int b) {
    if (route_) block_.push_back(gates::swap(a, b));
    pending_swaps_.emplace_back(a, b);
  }

  void end_block() {
    for (const Gate& g : block_) circuit_.append(g);
    if (!block_.empty()) circuit_.append_barrier();
    block_.clear();
    for (auto [a, b] : pending_swaps_) mapping_.apply_swap(a, b);
    pending_swaps_.clear();
  }

  Circuit take() {
    end_block();
    return std::move(circuit_);
  }

 private:
  // Without routing the swaps are virtual and gates address logical qubits.
  int target(int q) const { return route_ ? q : mapping_.label(q); }

  Circuit circuit_;
  MappingState mapping_;
  bool route_;
  Block block_;
  std::vector<std::pair<int, int>> pending_swaps_;
};

inline Circuit qft_linear_circuit(int n, bool route) {
  QftEmitter e(n, route);
  e.h(1);
  e.end_block();
  std::vector<int> seq;
  for (int i = 2; i <= n; ++i) seq.push_back(i);
  for (int i = n - 1; i >= 2; --i) seq.push_back(i);
  for (int i : seq) {
    for (int j = i; j >= 2;) {
      e.cp(j, j - 1);
      j -= 2;
      if (j == 1) e.h(1);
    }
    e.end_block();
    for (int j = i; j >= 2; j -= 2) e.swap(j, j - 1);
    e.end_block();
  }
  e.h(1);
  return e.take();
}

inline int mod2(int x) { return ((x % 2) + 2) % 2; }

inline Circuit qft_ladder_circuit(int n) {
  QftEmitter e(n, true);
  e.h(1);
  e.end_block();
  std::vector<int> seq;
  for (int i = 1; i <= n - 3; i += 2) seq.push_back(i);
  for (int i = n; i >= 2; i -= 2) seq.push_back(i);
  for (int i : seq) {
    const int l = mod2(i + 1);
    const int dir = l == 0 ? 1 : -1;
    // Horizontal (rung) phases.
    for (int j = i; j >= 1; j -= 2) e.cp(j, j + dir);
    e.end_block();
    // Vertical (rail) phases, then the Hadamard on the head of the active column.
    std::vector<std::pair<int, int>> rails;
    int j = i;
    while (j >= 1 && j + 2 * dir >= 1) {
      const int kk = mod2(j + 1);
      rails.emplace_back(j, j + 2 * dir);
      e.cp(j, j + 2 * dir);
      j -= 1 + 2 * kk;
    }
    e.h(mod2(j + 1) + 1);
    e.end_block();
    for (auto [a, b] : rails) e.swap(a, b);
    e.end_block();
  }
  return e.take();
}

// Odd-even transposition sort along `path` until physical path[p] holds the
// label wanted[p]. Returns the SWAP layers.
inline Program route_along_path(const std::vector<int>& path, MappingState m,
                                const std::vector<int>& wanted) {
  const std::size_t len = path.size();
  std::vector<int> key(len);
  auto rank_of = [&](int label) {
    for (std::size_t i = 0; i < len; ++i) {
      if (wanted[i] == label) return static_cast<int>(i);
    }
    throw std::invalid_argument("label missing from routing target");
  };
  for (std::size_t i = 0; i < len; ++i) key[i] = rank_of(m.label(path[i]));
  Program layers;
  for (std::size_t round = 0; round < len + 1; ++round) {
    bool sorted = true;
    for (std::size_t i = 0; i + 1 < len; ++i) sorted = sorted && key[i] < key[i + 1];
    if (sorted) break;
    Block layer;
    for (std::size_t i = round % 2; i + 1 < len; i += 2) {
      if (key[i] > key[i + 1]) {
        std::swap(key[i], key[i + 1]);
        layer.push_back(gates::swap(path[i], path[i + 1]));
      }
    }
    if (!layer.empty()) layers.push_back(std::move(layer));
  }
  return layers;
}

}  // namespace detail

struct QftOptions {
  bool restore_order = false;  // append SWAPs so x_j ends on q_{n+1-j}
};

/// QFT without the trailing qubit-reversal network. The logical circuit
/// therefore implements R*F (R reverses the qubit order); final_mapping
/// records where each x_j ends up.
inline ScheduleResult schedule_qft(TopologyKind topo, int n, QftOptions opts = {}) {
  if (n < 2) throw std::invalid_argument("QFT needs n >= 2, got " + std::to_string(n));
  ScheduleResult r;
  r.algorithm = AlgorithmKind::QFT;
  r.params.n = n;
  r.params.n_padded = n;
  r.params.restore_order = opts.restore_order;
  r.initial_mapping = MappingState::identity(n, n);
  switch (topo) {
    case TopologyKind::Linear:
      r.circuit = detail::qft_linear_circuit(n, true);
      break;
    case TopologyKind::AllToAll:
      r.circuit = detail::qft_linear_circuit(n, false);
      break;
    case TopologyKind::Ladder:
      if (n % 2 != 0) throw std::invalid_argument("ladder QFT needs an even n, got " + std::to_string(n));
      r.circuit = detail::qft_ladder_circuit(n);
      break;
    case TopologyKind::Grid:
      throw std::invalid_argument("QFT has no grid schedule");
  }
  r.topology = build_topology(topo, n);

  if (opts.restore_order) {
    std::vector<int> path;
    if (topo == TopologyKind::Ladder) {
      // Snake through the ladder: 1, 2, 4, 3, 5, 6, 8, 7, ...
      for (int row = 1; row <= n / 2; ++row) {
        const int left = 2 * row - 1, right = 2 * row;
        if (row % 2 == 1) {
          path.push_back(left);
          path.push_back(right);
        } else {
          path.push_back(right);
          path.push_back(left);
        }
      }
    } else {
      for (int q = 1; q <= n; ++q) path.push_back(q);
    }
    const MappingState now = track_mapping(r.initial_mapping, r.circuit);
    std::vector<int> wanted(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) wanted[i] = n + 1 - path[i];
    Program layers;
    if (topo == TopologyKind::AllToAll) {
      // The mapping never changes here, so the reversal is n/2 disjoint swaps.
      MappingState m = now;
      Block layer;
      for (int q = 1; q <= n; ++q) {
        const int want = n + 1 - q;
        if (m.label(q) != want) {
          const int from = m.phys_of(want);
          layer.push_back(gates::swap(q, from));
          m.apply_swap(q, from);
        }
      }
      if (!layer.empty()) layers.push_back(layer);
    } else {
      layers = detail::route_along_path(path, now, wanted);
    }
    r.circuit.append_barrier();
    append_program(r.circuit, layers);
  }
  r.final_mapping = track_mapping(r.initial_mapping, r.circuit);
  return r;
}

}  // namespace qsched
