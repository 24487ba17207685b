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

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsched/gate.hpp"
#include "qsched/topology.hpp"

namespace qsched {

using Moment = std::vector<Gate>;

/// Moments of gates on disjoint qubits, plus barrier positions.
///
/// A barrier at position p means no gate appended afterwards may land in a
/// moment with index < p. append() packs each gate into the earliest moment
/// allowed by its operands and the most recent barrier.
class Circuit {
 public:
  explicit Circuit(int n_phys = 1) : n_phys_(n_phys), frontier_(static_cast<std::size_t>(n_phys) + 1, 0) {
    if (n_phys < 1) throw std::invalid_argument("circuit needs at least one qubit");
  }

  int n_phys() const noexcept { return n_phys_; }
  const std::vector<Moment>& moments() const noexcept { return moments_; }
  const std::vector<std::size_t>& barriers() const noexcept { return barriers_; }
  std::size_t depth() const noexcept { return moments_.size(); }

  std::size_t gate_count() const noexcept {
    std::size_t n = 0;
    for (const auto& m : moments_) n += m.size();
    return n;
  }

  std::vector<Gate> gates() const {
    std::vector<Gate> out;
    out.reserve(gate_count());
    for (const auto& m : moments_) out.insert(out.end(), m.begin(), m.end());
    return out;
  }

  Circuit& append(const Gate& g) {
    validate_gate(g, n_phys_);
    std::size_t pos = floor_;
    for (int q : g.operands) pos = std::max(pos, frontier_[q]);
    if (pos == moments_.size()) moments_.emplace_back();
    moments_[pos].push_back(g);
    for (int q : g.operands) frontier_[q] = pos + 1;
    return *this;
  }

  Circuit& append_barrier() {
    floor_ = moments_.size();
    if (barriers_.empty() || barriers_.back() != floor_) barriers_.push_back(floor_);
    return *this;
  }

  /// Appends `m` verbatim as a new moment after all existing moments.
  Circuit& push_moment(const Moment& m) {
    std::set<int> used;
    for (const Gate& g : m) {
      validate_gate(g, n_phys_);
      for (int q : g.operands) {
        if (!used.insert(q).second) {
          throw std::invalid_argument("moment uses qubit " + std::to_string(q) + " twice");
        }
      }
    }
    if (m.empty()) return *this;
    moments_.push_back(m);
    for (int q : used) frontier_[q] = moments_.size();
    return *this;
  }

  /// Barrier, then the moments of `other` verbatim with its barriers shifted.
  Circuit& append_circuit(const Circuit& other) {
    if (other.n_phys_ != n_phys_) throw std::invalid_argument("circuit size mismatch");
    append_barrier();
    std::size_t b = 0;
    for (std::size_t i = 0; i <= other.moments_.size(); ++i) {
      while (b < other.barriers_.size() && other.barriers_[b] == i) {
        if (i > 0) append_barrier();
        ++b;
      }
      if (i < other.moments_.size()) push_moment(other.moments_[i]);
    }
    return *this;
  }

  bool operator==(const Circuit& o) const {
    return n_phys_ == o.n_phys_ && moments_ == o.moments_ && barriers_ == o.barriers_;
  }

  /// Builds a circuit from explicit moments and barrier positions.
  static Circuit from_moments(int n_phys, const std::vector<Moment>& moments,
                              const std::vector<std::size_t>& barriers) {
    Circuit c(n_phys);
    std::vector<std::size_t> sorted = barriers;
    std::sort(sorted.begin(), sorted.end());
    std::size_t b = 0;
    for (std::size_t i = 0; i <= moments.size(); ++i) {
      while (b < sorted.size() && sorted[b] == i) {
        c.append_barrier();
        ++b;
      }
      if (i < moments.size()) {
        if (moments[i].empty()) throw std::invalid_argument("empty moment at index " + std::to_string(i));
        c.push_moment(moments[i]);
      }
    }
    if (b != sorted.size()) throw std::invalid_argument("barrier position beyond circuit end");
    return c;
  }

 private:
  int n_phys_;
  std::vector<Moment> moments_;
  std::vector<std::size_t> barriers_;
  std::vector<std::size_t> frontier_;
  std::size_t floor_ = 0;
};

inline Circuit& append_asap(Circuit& c, const Gate& g) { return c.append(g); }
inline Circuit& append_barrier(Circuit& c) { return c.append_barrier(); }
inline std::size_t depth(const Circuit& c) { return c.depth(); }

/// Reverses the moments and replaces every gate by its adjoint.
inline Circuit invert(const Circuit& c) {
  const std::size_t d = c.depth();
  std::vector<Moment> moments;
  moments.reserve(d);
  for (std::size_t i = d; i-- > 0;) {
    Moment m;
    m.reserve(c.moments()[i].size());
    for (const Gate& g : c.moments()[i]) m.push_back(adjoint(g));
    moments.push_back(std::move(m));
  }
  std::vector<std::size_t> barriers;
  for (std::size_t p : c.barriers()) barriers.push_back(d - p);
  std::sort(barriers.begin(), barriers.end());
  return Circuit::from_moments(c.n_phys(), moments, barriers);
}

struct Violation {
  std::size_t moment;
  Gate gate;
};

/// Two-qubit gates need an edge; TOFF needs both controls adjacent to the target.
inline std::vector<Violation> validate_connectivity(const Circuit& c, const Topology& t) {
  if (c.n_phys() != t.n_phys()) {
    throw std::invalid_argument("circuit has " + std::to_string(c.n_phys()) +
                                " qubits but topology has " + std::to_string(t.n_phys()));
  }
  std::vector<Violation> out;
  for (std::size_t i = 0; i < c.moments().size(); ++i) {
    for (const Gate& g : c.moments()[i]) {
      bool ok = true;
      if (g.operands.size() == 2) {
        ok = t.adjacent(g.operands[0], g.operands[1]);
      } else if (g.operands.size() == 3) {
        ok = t.adjacent(g.operands[0], g.operands[2]) && t.adjacent(g.operands[1], g.operands[2]);
      }
      if (!ok) out.push_back({i, g});
    }
  }
  return out;
}

/// Physical-to-logical labelling. Positive labels are data qubits x_1..x_n;
/// negative labels -1, -2, ... name individual ancillas.
class MappingState {
 public:
  MappingState() = default;

  explicit MappingState(std::vector<int> labels) : labels_(std::move(labels)) { check(); }

  static MappingState identity(int n_phys, int n_data) {
    if (n_data > n_phys) throw std::invalid_argument("more data qubits than physical qubits");
    std::vector<int> labels(static_cast<std::size_t>(n_phys));
    for (int i = 1; i <= n_phys; ++i) labels[i - 1] = i <= n_data ? i : -(i - n_data);
    return MappingState(std::move(labels));
  }

  int n_phys() const noexcept { return static_cast<int>(labels_.size()); }

  int n_data() const noexcept {
    int n = 0;
    for (int l : labels_) n += l > 0;
    return n;
  }

  int n_ancilla() const noexcept { return n_phys() - n_data(); }

  int label(int phys) const {
    if (phys < 1 || phys > n_phys()) throw std::out_of_range("physical index " + std::to_string(phys));
    return labels_[phys - 1];
  }

  bool is_ancilla(int phys) const { return label(phys) < 0; }

  int phys_of(int label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return static_cast<int>(i) + 1;
    }
    throw std::out_of_range("label " + std::to_string(label) + " not mapped");
  }

  void apply_swap(int a, int b) {
    if (a < 1 || b < 1 || a > n_phys() || b > n_phys()) throw std::out_of_range("swap outside mapping");
    std::swap(labels_[a - 1], labels_[b - 1]);
  }

  const std::vector<int>& labels() const noexcept { return labels_; }

  bool operator==(const MappingState&) const = default;

 private:
  void check() const {
    std::set<int> seen;
    int n_data = 0;
    for (int l : labels_) {
      if (l == 0) throw std::invalid_argument("label 0 is not allowed");
      if (!seen.insert(l).second) throw std::invalid_argument("label " + std::to_string(l) + " repeated");
      n_data += l > 0;
    }
    const int n_anc = static_cast<int>(labels_.size()) - n_data;
    for (int l : labels_) {
      if (l > n_data) throw std::invalid_argument("data labels must be exactly 1..n_data");
      if (l < -n_anc) throw std::invalid_argument("ancilla labels must be exactly -1..-n_ancilla");
    }
  }

  std::vector<int> labels_;
};

inline MappingState track_mapping(MappingState m, const Circuit& c) {
  if (m.n_phys() < c.n_phys()) throw std::invalid_argument("mapping does not cover the circuit");
  for (const Moment& moment : c.moments()) {
    for (const Gate& g : moment) {
      if (g.kind == GateKind::SWAP) m.apply_swap(g.operands[0], g.operands[1]);
    }
  }
  return m;
}

}  // namespace qsched
