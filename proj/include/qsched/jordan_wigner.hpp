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

#include <stdexcept>
#include <string>
#include <vector>

#include "qsched/schedule.hpp"

namespace qsched {

struct ParityResult {
  Program steps;
  int accumulator = 0;
};

/// Occupancy per physical qubit (index 0 unused): true when the qubit holds
/// a partial parity, i.e. it is a member, an ancilla in |0>, or has already
/// received one.
inline std::vector<char> parity_occupancy(const ParitySpec& spec, const MappingState& m) {
  std::vector<char> occ(static_cast<std::size_t>(m.n_phys()) + 1, 0);
  for (int p = 1; p <= m.n_phys(); ++p) {
    const int l = m.label(p);
    occ[p] = l < 0 || spec.member(l);
  }
  return occ;
}

namespace detail {

// Moves the partial parity held at `src` into `dst`. A CNOT when both are
// occupied, a SWAP when only `src` is, nothing when `src` is empty.
inline void merge_into(int src, int dst, Block& step, std::vector<char>& occ) {
  if (!occ[src]) return;
  if (occ[dst]) {
    step.push_back(gates::cnot(src, dst));
  } else {
    step.push_back(gates::swap(src, dst));
    occ[dst] = 1;
    occ[src] = 0;
  }
}

}  // namespace detail

/// Two-ended CNOT staircase over `segment` (a path of physical qubits),
/// leaving the parity of the occupied positions at segment[m + k], with
/// m = floor(s/2) and k = s mod 2 (1-based). `occ` is updated.
inline ParityResult parity_subroutine(const std::vector<int>& segment, std::vector<char>& occ) {
  const int s = static_cast<int>(segment.size());
  if (s < 1) throw std::invalid_argument("parity segment is empty");
  ParityResult r;
  if (s == 1) {
    r.accumulator = segment[0];
    return r;
  }
  auto q = [&](int i) { return segment[static_cast<std::size_t>(i - 1)]; };
  const int m = s / 2, k = s % 2;
  for (int i = 1; i < m; ++i) {
    Block step;
    detail::merge_into(q(i), q(i + 1), step, occ);
    detail::merge_into(q(s - i + 1), q(s - i), step, occ);
    r.steps.push_back(std::move(step));
  }
  {
    Block step;
    detail::merge_into(q(m + 1 + k), q(m + k), step, occ);
    r.steps.push_back(std::move(step));
  }
  if (k == 1) {
    Block step;
    detail::merge_into(q(m), q(m + 1), step, occ);
    r.steps.push_back(std::move(step));
  }
  r.accumulator = q(m + k);
  return r;
}

inline ParityResult parity_subroutine(const std::vector<int>& segment, const ParitySpec& spec,
                                      const MappingState& mapping) {
  std::vector<char> occ = parity_occupancy(spec, mapping);
  return parity_subroutine(segment, occ);
}

struct JwOptions {
  // Physical-to-label placement (see MappingState); empty = identity.
  std::vector<int> placement;
};

namespace detail {

inline ScheduleResult jw_result(const ParitySpec& spec, Topology topo, const JwOptions& opts) {
  ScheduleResult r;
  r.algorithm = AlgorithmKind::JordanWigner;
  r.params.n = spec.n;
  r.params.n_padded = topo.n_phys();
  r.params.theta = spec.theta;
  r.params.subset = spec.subset;
  r.initial_mapping = opts.placement.empty() ? MappingState::identity(topo.n_phys(), spec.n)
                                             : MappingState(opts.placement);
  if (r.initial_mapping.n_phys() != topo.n_phys() || r.initial_mapping.n_data() != spec.n) {
    throw std::invalid_argument("placement must label " + std::to_string(topo.n_phys()) +
                                " physical qubits with " + std::to_string(spec.n) + " data qubits");
  }
  r.ancilla_init.assign(static_cast<std::size_t>(r.initial_mapping.n_ancilla()), 0);
  r.topology = std::move(topo);
  return r;
}

inline void finish_jw(ScheduleResult& r, const Program& half, int rz_target, double theta) {
  Circuit c(r.topology.n_phys());
  append_program(c, half);
  r.circuit = mirrored(c, {gates::rz(theta, rz_target)});
  r.final_mapping = track_mapping(r.initial_mapping, r.circuit);
}

inline std::vector<int> mesh_column(const Topology& t, int col) {
  std::vector<int> out;
  for (int row = 1; row <= t.rows(); ++row) out.push_back(t.index(row, col));
  return out;
}

inline std::vector<int> mesh_row(const Topology& t, int row) {
  std::vector<int> out;
  for (int col = 1; col <= t.cols(); ++col) out.push_back(t.index(row, col));
  return out;
}

}  // namespace detail

/// exp(-i theta/2 Z..Z) over the parity subset. Non-member qubits are routed
/// out of the way with SWAPs; PARITY-dagger undoes every move.
inline ScheduleResult schedule_jw(TopologyKind kind, const ParitySpec& spec, const JwOptions& opts = {}) {
  spec.validate();
  const int n = spec.n;
  switch (kind) {
    case TopologyKind::Linear: {
      ScheduleResult r = detail::jw_result(spec, build_topology(kind, n), opts);
      std::vector<int> seg;
      for (int q = 1; q <= n; ++q) seg.push_back(q);
      auto occ = parity_occupancy(spec, r.initial_mapping);
      ParityResult p = parity_subroutine(seg, occ);
      detail::finish_jw(r, p.steps, p.accumulator, spec.theta);
      return r;
    }
    case TopologyKind::Ladder: {
      ScheduleResult r = detail::jw_result(spec, build_topology(kind, pad_size(kind, n)), opts);
      auto occ = parity_occupancy(spec, r.initial_mapping);
      ParityResult c1 = parity_subroutine(detail::mesh_column(r.topology, 1), occ);
      ParityResult c2 = parity_subroutine(detail::mesh_column(r.topology, 2), occ);
      Program half = c1.steps;
      merge_parallel(half, c2.steps);
      // Rung between the column accumulators: q_{m-k} -> q_{m+1-k}.
      const int m = r.topology.rows();
      const int k = (m + 1) % 2;
      if (c1.accumulator != m - k || c2.accumulator != m + 1 - k) {
        throw std::logic_error("ladder accumulators disagree with the rung indices");
      }
      Block rung;
      detail::merge_into(c1.accumulator, c2.accumulator, rung, occ);
      half.push_back(rung);
      detail::finish_jw(r, half, c2.accumulator, spec.theta);
      return r;
    }
    case TopologyKind::Grid: {
      const int s = isqrt(pad_size(kind, n));
      ScheduleResult r = detail::jw_result(spec, build_topology(kind, s * s), opts);
      auto occ = parity_occupancy(spec, r.initial_mapping);
      Program half;
      int row = 0;
      for (int col = 1; col <= s; ++col) {
        ParityResult pc = parity_subroutine(detail::mesh_column(r.topology, col), occ);
        merge_parallel(half, pc.steps);
        row = (pc.accumulator - 1) / s + 1;
      }
      ParityResult pr = parity_subroutine(detail::mesh_row(r.topology, row), occ);
      half.insert(half.end(), pr.steps.begin(), pr.steps.end());
      const int mm = s * ((s - 1) / 2);
      if (pr.accumulator != mm + (s + 1) / 2) {
        throw std::logic_error("grid accumulator disagrees with the central-row index");
      }
      detail::finish_jw(r, half, pr.accumulator, spec.theta);
      return r;
    }
    case TopologyKind::AllToAll: {
      ScheduleResult r = detail::jw_result(spec, build_topology(kind, n), opts);
      std::vector<int> live;
      for (int p = 1; p <= n; ++p) {
        if (spec.member(r.initial_mapping.label(p))) live.push_back(p);
      }
      Program half;
      while (live.size() > 1) {
        Block step;
        std::vector<int> next;
        for (std::size_t i = 0; i < live.size(); i += 2) {
          if (i + 1 < live.size()) step.push_back(gates::cnot(live[i + 1], live[i]));
          next.push_back(live[i]);
        }
        half.push_back(std::move(step));
        live = std::move(next);
      }
      detail::finish_jw(r, half, live.front(), spec.theta);
      return r;
    }
  }
  throw std::invalid_argument("unknown topology");
}

}  // namespace qsched
