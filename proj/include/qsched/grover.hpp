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

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsched/schedule.hpp"

namespace qsched {

namespace detail {

inline int pow2(int e) { return 1 << e; }

}  // namespace detail

/// Ascending half of the in-order AND tree on a line of 2^(k+1) - 1 qubits.
/// line[p - 1] is the physical qubit at line position p; leaves sit at odd
/// positions and the root ends at position 2^k.
inline Program grover_line_ascent(const std::vector<int>& line, int k) {
  const int leaves = detail::pow2(k);
  if (static_cast<int>(line.size()) != 2 * leaves - 1) {
    throw std::invalid_argument("line AND tree needs 2^(k+1)-1 qubits");
  }
  auto q = [&](int p) { return line[static_cast<std::size_t>(p - 1)]; };
  Program prog;
  for (int i = 1; i <= k; ++i) {
    for (int m = detail::pow2(i - 1); m > 1; --m) {
      Block layer;
      for (int j = 0; j < detail::pow2(k - i); ++j) {
        const int s = (1 + 2 * j) * detail::pow2(i);
        layer.push_back(gates::swap(q(s - m), q(s - m + 1)));
        layer.push_back(gates::swap(q(s + m), q(s + m - 1)));
      }
      prog.push_back(std::move(layer));
    }
    Block tof;
    for (int j = 0; j < detail::pow2(k - i); ++j) {
      const int s = (1 + 2 * j) * detail::pow2(i);
      tof.push_back(gates::toff(q(s - 1), q(s + 1), q(s)));
    }
    prog.push_back(std::move(tof));
  }
  return prog;
}

struct AndResult {
  Program steps;
  int result = 0;  // physical qubit holding the AND
  int zero = 0;    // physical qubit holding a clean |0>, adjacent to result
};

/// AND of the 2^k leaves on a segment of 2^(k+1) qubits (leaves at odd
/// positions). The extra qubit at the bottom starts in |0> and is walked up,
/// in the gaps of the tree schedule, until a final SWAP parks it right below
/// the root. Root at position 2^k, clean |0> at position 2^k + 1.
inline AndResult and_subroutine(const std::vector<int>& segment, int k) {
  const int leaves = detail::pow2(k);
  const int cells = 2 * leaves;
  if (k < 1 || static_cast<int>(segment.size()) != cells) {
    throw std::invalid_argument("AND segment needs 2^(k+1) qubits with k >= 1");
  }
  auto q = [&](int p) { return segment[static_cast<std::size_t>(p - 1)]; };
  const int root = leaves;
  const int spare = cells;  // content id of the travelling |0>

  // content[p]: id of what sits at position p (ids are starting positions).
  std::vector<int> content(static_cast<std::size_t>(cells) + 1);
  for (int p = 1; p <= cells; ++p) content[p] = p;
  std::set<int> live;
  for (int p = 1; p < cells; ++p) live.insert(p);
  int zpos = cells;

  auto hop = [&](std::set<int> busy, int hops, Block& out) {
    for (int h = 0; h < hops; ++h) {
      const int up = zpos - 1;
      if (zpos <= root + 2 || busy.count(up) || busy.count(zpos) || live.count(content[up])) return;
      std::swap(content[up], content[zpos]);
      out.push_back(gates::swap(q(up), q(zpos)));
      busy.insert(up);
      busy.insert(zpos);
      zpos = up;
    }
  };

  AndResult r;
  for (int i = 1; i <= k; ++i) {
    for (int m = detail::pow2(i - 1); m > 1; --m) {
      Block layer;
      std::set<int> busy;
      for (int j = 0; j < detail::pow2(k - i); ++j) {
        const int s = (1 + 2 * j) * detail::pow2(i);
        for (auto [a, b] : {std::pair{s - m, s - m + 1}, std::pair{s + m, s + m - 1}}) {
          layer.push_back(gates::swap(q(a), q(b)));
          std::swap(content[a], content[b]);
          busy.insert(a);
          busy.insert(b);
          if (content[a] == spare) zpos = a;
          if (content[b] == spare) zpos = b;
        }
      }
      hop(busy, 1, layer);
      r.steps.push_back(std::move(layer));
    }
    Block tof;
    std::set<int> busy;
    for (int j = 0; j < detail::pow2(k - i); ++j) {
      const int s = (1 + 2 * j) * detail::pow2(i);
      if (content[s] != s || !live.count(content[s - 1]) || !live.count(content[s + 1])) {
        throw std::logic_error("AND tree operands misplaced at level " + std::to_string(i));
      }
      tof.push_back(gates::toff(q(s - 1), q(s + 1), q(s)));
      live.erase(content[s - 1]);
      live.erase(content[s + 1]);
      busy.insert({s - 1, s, s + 1});
    }
    if (i == 1) {
      for (int p = 1; p < cells; p += 2) live.erase(p);
    }
    hop(busy, 2, tof);
    r.steps.push_back(std::move(tof));
  }
  if (zpos != root + 2) throw std::logic_error("spare ancilla did not reach the root");
  r.steps.push_back({gates::swap(q(root + 1), q(root + 2))});
  r.result = q(root);
  r.zero = q(root + 1);
  return r;
}

/// Ascending half of the ladder AND tree. col1 holds the 2^k leaves, col2
/// starts in |0>. Returns the steps and the root qubit.
inline std::pair<Program, int> grover_ladder_ascent(const std::vector<int>& col1,
                                                    const std::vector<int>& col2, int k) {
  const int n = detail::pow2(k);
  if (k < 1 || static_cast<int>(col1.size()) != n || static_cast<int>(col2.size()) != n) {
    throw std::invalid_argument("ladder AND tree needs two columns of 2^k qubits");
  }
  auto a = [&](int r) { return col1[static_cast<std::size_t>(r - 1)]; };
  auto b = [&](int r) { return col2[static_cast<std::size_t>(r - 1)]; };
  // The second control sits diagonally from the target; a rung SWAP brings
  // it next to the target and a second one puts it back.
  Block rung, tof;
  for (int r = 1; r < n; r += 2) {
    rung.push_back(gates::swap(a(r + 1), b(r + 1)));
    tof.push_back(gates::toff(a(r), b(r + 1), b(r)));
  }
  Program prog{rung, tof, rung};
  std::vector<int> line(col2.begin(), col2.end() - 1);
  Program rest = grover_line_ascent(line, k - 1);
  prog.insert(prog.end(), rest.begin(), rest.end());
  return {prog, line[static_cast<std::size_t>(detail::pow2(k - 1) - 1)]};
}

struct GroverOptions {
  // Label of each leaf slot in order: 1..n for data, 0 for a padding leaf.
  // Empty = data in slot order, padding last.
  std::vector<int> leaf_labels;
};

namespace detail {

inline MappingState grover_mapping(int n_phys, const std::vector<int>& leaf_slots,
                                   const GroverSpec& spec, const GroverOptions& opts,
                                   std::vector<int>& ancilla_init) {
  std::vector<int> leaf_labels = opts.leaf_labels;
  if (leaf_labels.empty()) {
    for (int i = 1; i <= static_cast<int>(leaf_slots.size()); ++i) leaf_labels.push_back(i <= spec.n ? i : 0);
  }
  if (leaf_labels.size() != leaf_slots.size()) throw std::invalid_argument("leaf label count mismatch");
  std::vector<int> labels(static_cast<std::size_t>(n_phys), 0);
  std::vector<char> pad(static_cast<std::size_t>(n_phys), 0);
  std::set<int> seen;
  for (std::size_t i = 0; i < leaf_slots.size(); ++i) {
    const int l = leaf_labels[i];
    if (l < 0 || l > spec.n || (l > 0 && !seen.insert(l).second)) {
      throw std::invalid_argument("leaf labels must use each of 1..n once");
    }
    labels[static_cast<std::size_t>(leaf_slots[i] - 1)] = l;
    pad[static_cast<std::size_t>(leaf_slots[i] - 1)] = l == 0;
  }
  if (static_cast<int>(seen.size()) != spec.n) throw std::invalid_argument("leaf labels miss data qubits");
  int next = 0;
  ancilla_init.clear();
  for (int p = 0; p < n_phys; ++p) {
    if (labels[static_cast<std::size_t>(p)] == 0) {
      labels[static_cast<std::size_t>(p)] = -(++next);
      ancilla_init.push_back(pad[static_cast<std::size_t>(p)] ? 1 : 0);
    }
  }
  return MappingState(labels);
}

}  // namespace detail

/// Diffusion reflection 1 - 2|1..1><1..1| on n data qubits via a Toffoli
/// AND tree, Z on the root and the mirrored tree. Sizes pad up to 2^k leaves
/// (4^k' on the grid) with leaves held in |1>.
inline ScheduleResult schedule_grover(TopologyKind kind, const GroverSpec& spec, const GroverOptions& opts = {}) {
  if (spec.n < 2 || detail::pow2(spec.k) < spec.n) throw std::invalid_argument("invalid Grover size");
  ScheduleResult r;
  r.algorithm = AlgorithmKind::GroverDiffusion;
  r.params.n = spec.n;

  Program half;
  int root = 0;
  std::vector<int> leaf_slots;

  switch (kind) {
    case TopologyKind::Linear: {
      const int leaves = spec.leaves();
      r.topology = build_topology(kind, 2 * leaves - 1);
      std::vector<int> line;
      for (int q = 1; q <= 2 * leaves - 1; ++q) line.push_back(q);
      for (int i = 1; i <= leaves; ++i) leaf_slots.push_back(2 * i - 1);
      half = grover_line_ascent(line, spec.k);
      root = leaves;
      r.params.n_padded = leaves;
      break;
    }
    case TopologyKind::Ladder: {
      const int leaves = spec.leaves();
      r.topology = build_topology(kind, 2 * leaves);
      std::vector<int> col1, col2;
      for (int row = 1; row <= leaves; ++row) {
        col1.push_back(r.topology.index(row, 1));
        col2.push_back(r.topology.index(row, 2));
      }
      leaf_slots = col1;
      auto [prog, rt] = grover_ladder_ascent(col1, col2, spec.k);
      half = std::move(prog);
      root = rt;
      r.params.n_padded = leaves;
      break;
    }
    case TopologyKind::Grid: {
      // s = 2^h columns of 2s qubits; each column ANDs s leaves.
      const int h = (spec.k + 1) / 2;
      const int s = detail::pow2(h);
      r.topology = build_grid(2 * s, s);
      std::vector<int> results, zeros;
      for (int col = 1; col <= s; ++col) {
        std::vector<int> seg;
        for (int row = 1; row <= 2 * s; ++row) seg.push_back(r.topology.index(row, col));
        for (int i = 1; i <= s; ++i) leaf_slots.push_back(r.topology.index(2 * i - 1, col));
        AndResult a = and_subroutine(seg, h);
        merge_parallel(half, a.steps);
        results.push_back(a.result);
        zeros.push_back(a.zero);
      }
      // The AND results fill row s and clean zeros fill row s+1: a ladder.
      auto [prog, rt] = grover_ladder_ascent(results, zeros, h);
      half.insert(half.end(), prog.begin(), prog.end());
      root = rt;
      r.params.n_padded = s * s;
      break;
    }
    case TopologyKind::AllToAll: {
      const int leaves = spec.leaves();
      r.topology = build_topology(kind, 2 * leaves - 1);
      std::vector<int> live;
      for (int i = 1; i <= leaves; ++i) {
        leaf_slots.push_back(i);
        live.push_back(i);
      }
      int next_anc = leaves + 1;
      while (live.size() > 1) {
        Block tof;
        std::vector<int> up;
        for (std::size_t i = 0; i + 1 < live.size(); i += 2) {
          tof.push_back(gates::toff(live[i], live[i + 1], next_anc));
          up.push_back(next_anc++);
        }
        half.push_back(std::move(tof));
        live = std::move(up);
      }
      root = live.front();
      r.params.n_padded = leaves;
      break;
    }
  }
  if (kind == TopologyKind::Grid && static_cast<int>(leaf_slots.size()) < spec.n) {
    throw std::logic_error("grid leaf count below n");
  }
  GroverSpec padded = spec;
  r.initial_mapping = detail::grover_mapping(r.topology.n_phys(), leaf_slots, padded, opts, r.ancilla_init);
  Circuit c(r.topology.n_phys());
  append_program(c, half);
  r.circuit = mirrored(c, {gates::z(root)});
  r.final_mapping = track_mapping(r.initial_mapping, r.circuit);
  return r;
}

}  // namespace qsched
