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
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsched/decompose.hpp"
#include "qsched/schedulers.hpp"

namespace qsched {

inline int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

inline bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

inline bool is_power_of_four(int n) { return is_power_of_two(n) && ceil_log2(n) % 2 == 0; }

/// Size a construction actually runs at for a requested n.
inline int padded_size(AlgorithmKind alg, TopologyKind topo, int n) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  switch (alg) {
    case AlgorithmKind::QFT:
      return topo == TopologyKind::Ladder ? pad_size(topo, n) : n;
    case AlgorithmKind::JordanWigner:
      return pad_size(topo, n);
    case AlgorithmKind::GroverDiffusion: {
      const int k = ceil_log2(n);
      return topo == TopologyKind::Grid ? 1 << (2 * ((k + 1) / 2)) : 1 << k;
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

struct Prediction {
  std::optional<int> depth;  // empty where no schedule exists
  int n_eval = 0;            // size the formula was evaluated at
  bool padded() const { return depth.has_value() && n_eval != requested; }
  int requested = 0;
};

/// Closed-form lowered depth, evaluated at the padded size.
inline Prediction predict(AlgorithmKind alg, TopologyKind topo, int n) {
  if (n < 2) throw std::invalid_argument("depth formulas hold for n > 1");
  Prediction p;
  p.requested = n;
  const int m = padded_size(alg, topo, n);
  p.n_eval = m;
  const int lg = ceil_log2(m);
  const int rt = isqrt(m);
  switch (alg) {
    case AlgorithmKind::QFT:
      switch (topo) {
        case TopologyKind::AllToAll: p.depth = 8 * m - 10; break;
        case TopologyKind::Linear: p.depth = 10 * m - 13; break;
        // Formula at the requested n; odd ladders have no schedule.
        case TopologyKind::Ladder: p.depth = 9 * n - 11; p.n_eval = n; break;
        case TopologyKind::Grid: break;
      }
      break;
    case AlgorithmKind::JordanWigner:
      switch (topo) {
        case TopologyKind::AllToAll: p.depth = 2 * lg + 1; break;
        case TopologyKind::Linear: p.depth = m + 1 + m % 2; break;
        case TopologyKind::Ladder: p.depth = m / 2 + 1 + (m / 2) % 2; break;
        case TopologyKind::Grid: p.depth = 2 * rt + 1 + 2 * (rt % 2); break;
      }
      break;
    case AlgorithmKind::GroverDiffusion:
      switch (topo) {
        case TopologyKind::AllToAll: p.depth = 14 * lg + 1; break;
        case TopologyKind::Linear: p.depth = 6 * m + 8 * lg - 5; break;
        case TopologyKind::Ladder: p.depth = 3 * m + 8 * lg + 13; break;
        case TopologyKind::Grid: p.depth = 9 * rt + 8 * lg + 13; break;
      }
      break;
  }
  return p;
}

inline std::optional<int> predicted_depth(AlgorithmKind alg, TopologyKind topo, int n) {
  return predict(alg, topo, n).depth;
}

/// Depth after lowering. CP+SWAP fusion is applied to QFT only.
inline int measure_depth(const ScheduleResult& r) {
  return static_cast<int>(lower_circuit(r.circuit, r.algorithm == AlgorithmKind::QFT).depth());
}

inline int measure_depth(AlgorithmKind alg, TopologyKind topo, int n) {
  return measure_depth(schedule(alg, topo, n));
}

struct SweepRow {
  AlgorithmKind algorithm = AlgorithmKind::QFT;
  TopologyKind topology = TopologyKind::Linear;
  int n = 0;
  int n_phys = 0;
  std::optional<int> predicted;
  std::optional<int> measured;
  std::string discrepancy;
  std::size_t undirected_edges = 0;
  std::size_t ordered_edges = 0;
};

/// Whether a sweep emits a row for (alg, topo, n). Grid rows need a full
/// square (JW) or a power of four (Grover); QFT has no grid schedule.
inline bool sweep_includes(AlgorithmKind alg, TopologyKind topo, int n) {
  if (n < 2) return false;
  if (topo != TopologyKind::Grid) return true;
  switch (alg) {
    case AlgorithmKind::QFT: return false;
    case AlgorithmKind::JordanWigner: return is_perfect_square(n);
    case AlgorithmKind::GroverDiffusion: return is_power_of_four(n);
  }
  return false;
}

inline bool schedulable(AlgorithmKind alg, TopologyKind topo, int n) {
  return !(alg == AlgorithmKind::QFT && topo == TopologyKind::Ladder && n % 2 != 0);
}

inline int physical_qubits(AlgorithmKind alg, TopologyKind topo, int n) {
  const int m = padded_size(alg, topo, n);
  if (alg != AlgorithmKind::GroverDiffusion) return m;
  switch (topo) {
    case TopologyKind::Ladder: return 2 * m;
    case TopologyKind::Grid: return 2 * m;
    default: return 2 * m - 1;
  }
}

inline Topology sweep_topology(AlgorithmKind alg, TopologyKind topo, int n) {
  const int np = physical_qubits(alg, topo, n);
  if (alg == AlgorithmKind::GroverDiffusion && topo == TopologyKind::Grid) {
    const int s = isqrt(np / 2);
    return build_grid(2 * s, s);
  }
  return build_topology(topo, np);
}

namespace detail {

inline void add_note(std::string& s, const std::string& note) {
  if (!s.empty()) s += ';';
  s += note;
}

inline std::string signed_str(int v) { return (v >= 0 ? "+" : "") + std::to_string(v); }

}  // namespace detail

/// Rows ordered by (algorithm, topology, n). With `measure` every row is
/// scheduled and lowered, and the discrepancy column records padding
/// (padded=N), constant offsets within 4 (offset=+d), larger gaps
/// (mismatch=+d), a change of offset from the previous unpadded row of the
/// same series (slope), and unschedulable sizes (unsupported).
inline std::vector<SweepRow> sweep(const std::vector<AlgorithmKind>& algs, const std::vector<TopologyKind>& topos,
                                   int n_min, int n_max, bool measure) {
  std::vector<SweepRow> rows;
  for (AlgorithmKind alg : algs) {
    for (TopologyKind topo : topos) {
      std::optional<int> prev_offset;
      for (int n = std::max(2, n_min); n <= n_max; ++n) {
        if (!sweep_includes(alg, topo, n)) continue;
        SweepRow row;
        row.algorithm = alg;
        row.topology = topo;
        row.n = n;
        const Topology t = sweep_topology(alg, topo, n);
        row.n_phys = t.n_phys();
        row.undirected_edges = t.undirected_edges();
        row.ordered_edges = t.ordered_edges();
        const Prediction p = predict(alg, topo, n);
        row.predicted = p.depth;
        if (p.padded()) detail::add_note(row.discrepancy, "padded=" + std::to_string(p.n_eval));
        if (!schedulable(alg, topo, n)) {
          detail::add_note(row.discrepancy, "unsupported");
        } else if (measure) {
          row.measured = measure_depth(alg, topo, n);
          if (row.predicted) {
            const int off = *row.measured - *row.predicted;
            if (off != 0) {
              detail::add_note(row.discrepancy,
                               (std::abs(off) <= 4 ? "offset=" : "mismatch=") + detail::signed_str(off));
            }
            if (!p.padded()) {
              if (prev_offset && *prev_offset != off) detail::add_note(row.discrepancy, "slope");
              prev_offset = off;
            }
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

inline constexpr const char* kSweepCsvHeader =
    "algorithm,topology,n,n_phys,predicted_depth,measured_depth,discrepancy,undirected_edges,ordered_edges";

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    os << to_string(r.algorithm) << ',' << to_string(r.topology) << ',' << r.n << ',' << r.n_phys << ',';
    if (r.predicted) os << *r.predicted;
    os << ',';
    if (r.measured) os << *r.measured;
    os << ',' << r.discrepancy << ',' << r.undirected_edges << ',' << r.ordered_edges << '\n';
  }
}

}  // namespace qsched
