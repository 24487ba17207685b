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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsched {

enum class TopologyKind { Linear, Ladder, Grid, AllToAll };

inline std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Linear:
      return "linear";
    case TopologyKind::Ladder:
      return "ladder";
    case TopologyKind::Grid:
      return "grid";
    case TopologyKind::AllToAll:
      return "all";
  }
  return "?";
}

inline TopologyKind topology_kind_from_string(std::string_view s) {
  if (s == "linear") return TopologyKind::Linear;
  if (s == "ladder") return TopologyKind::Ladder;
  if (s == "grid") return TopologyKind::Grid;
  if (s == "all" || s == "alltoall" || s == "all-to-all") return TopologyKind::AllToAll;
  throw std::invalid_argument("unknown topology kind '" + std::string(s) + "'");
}

// Integer square root; returns r with r*r <= n < (r+1)*(r+1).
inline int isqrt(int n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_perfect_square(int n) {
  int r = isqrt(n);
  return r * r == n;
}

/// A hardware coupling graph over physical qubits 1..n_phys.
///
/// Linear, ladder and grid graphs are row-major meshes: a linear array is a
/// single column, a ladder has two columns (odd indices in column 1, even
/// indices in column 2), and a grid is a rows x cols mesh. Edges are stored
/// once as (i, j) with i < j, sorted lexicographically.
class Topology {
 public:
  Topology() = default;

  TopologyKind kind() const noexcept { return kind_; }
  int n_phys() const noexcept { return n_phys_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  std::size_t undirected_edges() const noexcept { return edges_.size(); }
  std::size_t ordered_edges() const noexcept { return 2 * edges_.size(); }

  bool adjacent(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) return false;
    if (kind_ == TopologyKind::AllToAll) return true;
    return adj_[static_cast<std::size_t>(i - 1) * n_phys_ + (j - 1)] != 0;
  }

  /// Physical index of mesh cell (row, col), both 1-based.
  int index(int row, int col) const {
    if (kind_ == TopologyKind::AllToAll) {
      throw std::invalid_argument("all-to-all topology has no mesh coordinates");
    }
    if (row < 1 || row > rows_ || col < 1 || col > cols_) {
      throw std::out_of_range("mesh cell (" + std::to_string(row) + ", " +
                              std::to_string(col) + ") outside " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return (row - 1) * cols_ + col;
  }

  bool operator==(const Topology& o) const {
    return kind_ == o.kind_ && n_phys_ == o.n_phys_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           edges_ == o.edges_;
  }

  static Topology mesh(TopologyKind kind, int rows, int cols) {
    Topology t;
    t.kind_ = kind;
    t.rows_ = rows;
    t.cols_ = cols;
    t.n_phys_ = rows * cols;
    t.adj_.assign(static_cast<std::size_t>(t.n_phys_) * t.n_phys_, 0);
    for (int r = 1; r <= rows; ++r) {
      for (int c = 1; c <= cols; ++c) {
        int q = (r - 1) * cols + c;
        if (c < cols) t.add_edge(q, q + 1);
        if (r < rows) t.add_edge(q, q + cols);
      }
    }
    t.sort_edges();
    return t;
  }

  static Topology complete(int n) {
    Topology t;
    t.kind_ = TopologyKind::AllToAll;
    t.n_phys_ = n;
    t.rows_ = n;
    t.cols_ = 1;
    t.edges_.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) t.edges_.emplace_back(i, j);
    }
    return t;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > n_phys_) {
      throw std::out_of_range("qubit index " + std::to_string(i) + " outside [1, " +
                              std::to_string(n_phys_) + "]");
    }
  }

  void add_edge(int i, int j) {
    edges_.emplace_back(std::min(i, j), std::max(i, j));
    adj_[static_cast<std::size_t>(i - 1) * n_phys_ + (j - 1)] = 1;
    adj_[static_cast<std::size_t>(j - 1) * n_phys_ + (i - 1)] = 1;
  }

  void sort_edges() {
    std::sort(edges_.begin(), edges_.end());
  }

  TopologyKind kind_ = TopologyKind::Linear;
  int n_phys_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;
};

inline Topology build_topology(TopologyKind kind, int n) {
  if (n < 1) throw std::invalid_argument("topology needs at least one qubit, got " + std::to_string(n));
  switch (kind) {
    case TopologyKind::Linear:
      return Topology::mesh(kind, n, 1);
    case TopologyKind::Ladder:
      if (n % 2 != 0) {
        throw std::invalid_argument("ladder needs an even qubit count, got " + std::to_string(n));
      }
      return Topology::mesh(kind, n / 2, 2);
    case TopologyKind::Grid: {
      if (!is_perfect_square(n)) {
        throw std::invalid_argument("grid needs a perfect-square qubit count, got " +
                                    std::to_string(n));
      }
      int s = isqrt(n);
      return Topology::mesh(kind, s, s);
    }
    case TopologyKind::AllToAll:
      return Topology::complete(n);
  }
  throw std::invalid_argument("unknown topology kind");
}

/// Rectangular rows x cols mesh tagged as a grid. The Grover grid schedule
/// uses a 2s x s mesh, which is not square.
inline Topology build_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
  return Topology::mesh(TopologyKind::Grid, rows, cols);
}

inline int pad_size(TopologyKind kind, int n) {
  if (n < 1) throw std::invalid_argument("pad_size needs n >= 1");
  switch (kind) {
    case TopologyKind::Ladder:
      return n + (n % 2);
    case TopologyKind::Grid: {
      int s = isqrt(n);
      if (s * s < n) ++s;
      return s * s;
    }
    default:
      return n;
  }
}

inline bool are_adjacent(const Topology& t, int i, int j) {
  if (i == j) throw std::invalid_argument("adjacency query needs distinct qubits");
  return t.adjacent(i, j);
}

}  // namespace qsched
