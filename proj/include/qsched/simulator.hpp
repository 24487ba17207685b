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

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsched/circuit.hpp"

namespace qsched {

using Complex = std::complex<double>;
using UnitaryMatrix = Eigen::MatrixXcd;

inline constexpr int kDenseQubitCap = 12;
inline constexpr int kStateQubitCap = 20;

// Basis order: physical qubit 1 is the most significant bit.
class StateVector {
 public:
  explicit StateVector(int n_qubits, std::uint64_t basis = 0) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kStateQubitCap) {
      throw std::invalid_argument("statevector supports 1.." + std::to_string(kStateQubitCap) +
                                  " qubits, got " + std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    if (basis >= amps_.size()) throw std::out_of_range("basis index out of range");
    amps_[basis] = 1.0;
  }

  int n_qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const noexcept { return amps_; }
  std::vector<Complex>& amplitudes() noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  std::size_t mask(int q) const {
    if (q < 1 || q > n_) throw std::out_of_range("qubit " + std::to_string(q) + " outside state");
    return std::size_t{1} << (n_ - q);
  }

  double norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  void apply_1q(int q, Complex m00, Complex m01, Complex m10, Complex m11) {
    const std::size_t m = mask(q);
    const std::size_t d = amps_.size();
    for (std::size_t base = 0; base < d; base += 2 * m) {
      for (std::size_t i = base; i < base + m; ++i) {
        const Complex a0 = amps_[i], a1 = amps_[i | m];
        amps_[i] = m00 * a0 + m01 * a1;
        amps_[i | m] = m10 * a0 + m11 * a1;
      }
    }
  }

  void apply_diag(int q, Complex d0, Complex d1) {
    const std::size_t m = mask(q);
    const bool skip0 = d0 == Complex{1.0, 0.0};
    for (std::size_t base = 0; base < amps_.size(); base += 2 * m) {
      for (std::size_t i = base; i < base + m; ++i) {
        if (!skip0) amps_[i] *= d0;
        amps_[i | m] *= d1;
      }
    }
  }

  // Flips `target` on indices where every control bit is set.
  void apply_controlled_x(std::size_t controls, int target) {
    const std::size_t t = mask(target);
    for (std::size_t base = 0; base < amps_.size(); base += 2 * t) {
      for (std::size_t i = base; i < base + t; ++i) {
        if ((i & controls) == controls) std::swap(amps_[i], amps_[i | t]);
      }
    }
  }

 private:
  int n_;
  std::vector<Complex> amps_;
};

inline Complex root_of_unity(int k, bool conjugated) {
  const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, k);
  return std::polar(1.0, conjugated ? -angle : angle);
}

inline void apply_gate(StateVector& s, const Gate& g) {
  validate_gate(g, s.n_qubits());
  const auto& q = g.operands;
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      s.apply_1q(q[0], r, r, r, -r);
      break;
    }
    case GateKind::X:
      s.apply_1q(q[0], 0.0, 1.0, 1.0, 0.0);
      break;
    case GateKind::Z:
      s.apply_diag(q[0], 1.0, -1.0);
      break;
    case GateKind::RZ:
      s.apply_diag(q[0], std::polar(1.0, -g.angle / 2), std::polar(1.0, g.angle / 2));
      break;
    case GateKind::RY: {
      const double c = std::cos(g.angle / 2), sn = std::sin(g.angle / 2);
      s.apply_1q(q[0], c, -sn, sn, c);
      break;
    }
    case GateKind::Phase:
      s.apply_diag(q[0], 1.0, root_of_unity(g.k, g.conjugated));
      break;
    case GateKind::CNOT:
      s.apply_controlled_x(s.mask(q[0]), q[1]);
      break;
    case GateKind::CP: {
      const std::size_t both = s.mask(q[0]) | s.mask(q[1]);
      const Complex ph = root_of_unity(g.k, g.conjugated);
      auto& a = s.amplitudes();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & both) == both) a[i] *= ph;
      }
      break;
    }
    case GateKind::SWAP: {
      const std::size_t ma = s.mask(q[0]), mb = s.mask(q[1]);
      auto& a = s.amplitudes();
      for (std::size_t base = 0; base < a.size(); base += 2 * mb) {
        for (std::size_t i = base; i < base + mb; ++i) {
          if (i & ma) std::swap(a[i], a[(i & ~ma) | mb]);
        }
      }
      break;
    }
    case GateKind::TOFF:
      s.apply_controlled_x(s.mask(q[0]) | s.mask(q[1]), q[2]);
      break;
  }
}

inline StateVector run(const Circuit& c, StateVector s) {
  if (c.n_phys() != s.n_qubits()) throw std::invalid_argument("circuit and state sizes differ");
  for (const Moment& m : c.moments()) {
    for (const Gate& g : m) apply_gate(s, g);
  }
  return s;
}

inline UnitaryMatrix unitary_of(const Circuit& c) {
  if (c.n_phys() > kDenseQubitCap) {
    throw std::invalid_argument("dense unitary capped at " + std::to_string(kDenseQubitCap) +
                                " qubits, circuit has " + std::to_string(c.n_phys()));
  }
  const std::size_t dim = std::size_t{1} << c.n_phys();
  UnitaryMatrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = run(c, StateVector(c.n_phys(), col));
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = s[row];
  }
  return u;
}

// ---- oracles over logical qubits (x_1 is the most significant bit) ----

inline void check_oracle_size(int n, int cap, const char* what) {
  if (n < 1 || n > cap) {
    throw std::invalid_argument(std::string(what) + " oracle supports 1.." + std::to_string(cap) +
                                " qubits, got " + std::to_string(n));
  }
}

inline UnitaryMatrix oracle_qft(int n) {
  check_oracle_size(n, kDenseQubitCap, "QFT");
  const std::size_t dim = std::size_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  UnitaryMatrix u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      const std::size_t e = (j * k) % dim;
      u(j, k) = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(e) / dim);
    }
  }
  return u;
}

/// Permutation reversing the qubit order.
inline std::size_t reverse_bits(std::size_t x, int n) {
  std::size_t r = 0;
  for (int b = 0; b < n; ++b) {
    if (x & (std::size_t{1} << b)) r |= std::size_t{1} << (n - 1 - b);
  }
  return r;
}

inline UnitaryMatrix bit_reversal(int n) {
  const std::size_t dim = std::size_t{1} << n;
  UnitaryMatrix u = UnitaryMatrix::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) u(reverse_bits(x, n), x) = 1.0;
  return u;
}

/// bit_reversal(n) * oracle_qft(n), built by permuting rows.
inline UnitaryMatrix oracle_qft_reversed(int n) {
  const UnitaryMatrix f = oracle_qft(n);
  UnitaryMatrix u(f.rows(), f.cols());
  for (Eigen::Index y = 0; y < f.rows(); ++y) {
    u.row(static_cast<Eigen::Index>(reverse_bits(static_cast<std::size_t>(y), n))) = f.row(y);
  }
  return u;
}

/// exp(-i theta/2) on even member parity, exp(+i theta/2) on odd. `members`
/// lists 1-based logical indices; empty means every qubit.
inline UnitaryMatrix oracle_parity_rotation(int n, const std::vector<int>& members, double theta) {
  check_oracle_size(n, kDenseQubitCap, "parity rotation");
  std::size_t sel = 0;
  if (members.empty()) {
    sel = (std::size_t{1} << n) - 1;
  } else {
    for (int j : members) {
      if (j < 1 || j > n) throw std::out_of_range("parity member " + std::to_string(j));
      sel |= std::size_t{1} << (n - j);
    }
  }
  const std::size_t dim = std::size_t{1} << n;
  UnitaryMatrix u = UnitaryMatrix::Zero(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    const bool odd = std::popcount(b & sel) % 2 == 1;
    u(b, b) = std::polar(1.0, odd ? theta / 2 : -theta / 2);
  }
  return u;
}

inline UnitaryMatrix oracle_grover_diffusion(int n) {
  check_oracle_size(n, kDenseQubitCap, "Grover diffusion");
  const std::size_t dim = std::size_t{1} << n;
  UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
  u(dim - 1, dim - 1) = -1.0;
  return u;
}

// Simulates a block of basis columns at once. Amplitudes are stored row-major
// (basis index, column) so every gate becomes a few wide row operations.
class BatchRunner {
 public:
  BatchRunner(const Circuit& c, std::size_t width) : n_(c.n_phys()), width_(width) {
    for (const Moment& m : c.moments()) {
      for (const Gate& g : m) {
        validate_gate(g, n_);
        ops_.push_back(compile(g));
      }
    }
  }

  std::size_t width() const noexcept { return width_; }

  /// Runs column b from basis state inputs[b]; returns amplitudes laid out
  /// as out[row * width + b].
  const std::vector<Complex>& run(const std::vector<std::size_t>& inputs) {
    const std::size_t dim = std::size_t{1} << n_;
    amps_.assign(dim * width_, Complex{0.0, 0.0});
    for (std::size_t b = 0; b < inputs.size(); ++b) amps_[inputs[b] * width_ + b] = 1.0;
    for (const Op& op : ops_) apply(op, dim);
    return amps_;
  }

 private:
  enum class OpKind { Dense1, Diag1, Phase2, Flip, Swap };
  struct Op {
    OpKind kind;
    std::size_t m0 = 0, m1 = 0;  // target / operand masks
    std::size_t controls = 0;
    Complex u00, u01, u10, u11;  // 2x2 matrix or (d0, d1)
  };

  std::size_t mask(int q) const { return std::size_t{1} << (n_ - q); }

  Op compile(const Gate& g) const {
    const auto& q = g.operands;
    Op op{};
    switch (g.kind) {
      case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        op = {OpKind::Dense1, mask(q[0]), 0, 0, r, r, r, -r};
        break;
      }
      case GateKind::X:
        op = {OpKind::Flip, mask(q[0]), 0, 0, {}, {}, {}, {}};
        break;
      case GateKind::RY: {
        const double c = std::cos(g.angle / 2), sn = std::sin(g.angle / 2);
        op = {OpKind::Dense1, mask(q[0]), 0, 0, c, -sn, sn, c};
        break;
      }
      case GateKind::Z:
        op = {OpKind::Diag1, mask(q[0]), 0, 0, 1.0, {}, {}, -1.0};
        break;
      case GateKind::RZ:
        op = {OpKind::Diag1, mask(q[0]), 0, 0, std::polar(1.0, -g.angle / 2), {}, {}, std::polar(1.0, g.angle / 2)};
        break;
      case GateKind::Phase:
        op = {OpKind::Diag1, mask(q[0]), 0, 0, 1.0, {}, {}, root_of_unity(g.k, g.conjugated)};
        break;
      case GateKind::CP:
        op = {OpKind::Phase2, mask(q[0]) | mask(q[1]), 0, 0, {}, {}, {}, root_of_unity(g.k, g.conjugated)};
        break;
      case GateKind::CNOT:
        op = {OpKind::Flip, mask(q[1]), 0, mask(q[0]), {}, {}, {}, {}};
        break;
      case GateKind::TOFF:
        op = {OpKind::Flip, mask(q[2]), 0, mask(q[0]) | mask(q[1]), {}, {}, {}, {}};
        break;
      case GateKind::SWAP:
        op = {OpKind::Swap, mask(q[0]), mask(q[1]), 0, {}, {}, {}, {}};
        break;
    }
    return op;
  }

  static Complex cmul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
  }

  Complex* row(std::size_t i) { return amps_.data() + i * width_; }

  void scale_row(std::size_t i, Complex f) {
    Complex* r = row(i);
    for (std::size_t b = 0; b < width_; ++b) r[b] = cmul(r[b], f);
  }

  void swap_rows(std::size_t i, std::size_t j) { std::swap_ranges(row(i), row(i) + width_, row(j)); }

  void apply(const Op& op, std::size_t dim) {
    const std::size_t m = op.m0;
    switch (op.kind) {
      case OpKind::Dense1:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & m) continue;
          Complex* r0 = row(i);
          Complex* r1 = row(i | m);
          for (std::size_t b = 0; b < width_; ++b) {
            const Complex a0 = r0[b], a1 = r1[b];
            r0[b] = cmul(op.u00, a0) + cmul(op.u01, a1);
            r1[b] = cmul(op.u10, a0) + cmul(op.u11, a1);
          }
        }
        break;
      case OpKind::Diag1:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & m) {
            scale_row(i, op.u11);
          } else if (op.u00 != Complex{1.0, 0.0}) {
            scale_row(i, op.u00);
          }
        }
        break;
      case OpKind::Phase2:
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & m) == m) scale_row(i, op.u11);
        }
        break;
      case OpKind::Flip:
        for (std::size_t i = 0; i < dim; ++i) {
          if (!(i & m) && (i & op.controls) == op.controls) swap_rows(i, i | m);
        }
        break;
      case OpKind::Swap:
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & m) && !(i & op.m1)) swap_rows(i, (i & ~m) | op.m1);
        }
        break;
    }
  }

  int n_;
  std::size_t width_;
  std::vector<Op> ops_;
  std::vector<Complex> amps_;
};

// ---- equivalence checking ----

enum class EquivalenceFailure { None, Mismatch, AncillaNotRestored };

struct EquivalenceReport {
  bool pass = false;
  EquivalenceFailure failure = EquivalenceFailure::None;
  double max_error = 0.0;
  double ancilla_leakage = 0.0;
  Complex global_phase{1.0, 0.0};
  std::vector<int> final_labels;
};

inline std::string to_string(EquivalenceFailure f) {
  switch (f) {
    case EquivalenceFailure::None:
      return "none";
    case EquivalenceFailure::Mismatch:
      return "unitary mismatch";
    case EquivalenceFailure::AncillaNotRestored:
      return "ancilla not restored";
  }
  return "?";
}

/// Compares `c` with `target`, a unitary over the data labels 1..n_data.
///
/// Data label j enters at in.phys_of(j) and leaves at out.phys_of(j).
/// Ancilla label -a enters in state ancilla_in[a-1] and must leave in that
/// state at out.phys_of(-a). The global phase is fixed on the largest-magnitude
/// target entry. Data basis inputs are simulated in batches of columns.
inline EquivalenceReport check_equivalence(const Circuit& c, const UnitaryMatrix& target,
                                           const MappingState& in, const MappingState& out,
                                           const std::vector<int>& ancilla_in, double tol) {
  const int n = c.n_phys();
  if (in.n_phys() != n || out.n_phys() != n) throw std::invalid_argument("mapping size mismatch");
  const int nd = in.n_data();
  if (out.n_data() != nd) throw std::invalid_argument("mappings disagree on data qubit count");
  const std::size_t ddim = std::size_t{1} << nd;
  if (static_cast<std::size_t>(target.rows()) != ddim || static_cast<std::size_t>(target.cols()) != ddim) {
    throw std::invalid_argument("target dimension does not match the data qubit count");
  }
  if (static_cast<int>(ancilla_in.size()) != in.n_ancilla()) {
    throw std::invalid_argument("ancilla input assignment has wrong length");
  }
  if (n > kStateQubitCap) {
    throw std::invalid_argument("equivalence check capped at " + std::to_string(kStateQubitCap) +
                                " physical qubits, circuit has " + std::to_string(n));
  }

  auto embed = [&](const MappingState& m, std::size_t data_bits) {
    std::size_t idx = 0;
    for (int p = 1; p <= n; ++p) {
      const int l = m.label(p);
      bool bit = l > 0 ? ((data_bits >> (nd - l)) & 1U) != 0 : ancilla_in[-l - 1] != 0;
      if (bit) idx |= std::size_t{1} << (n - p);
    }
    return idx;
  };
  std::vector<std::size_t> out_index(ddim);
  std::vector<char> in_support(std::size_t{1} << n, 0);
  for (std::size_t y = 0; y < ddim; ++y) {
    out_index[y] = embed(out, y);
    in_support[out_index[y]] = 1;
  }

  Eigen::Index r0 = 0, c0 = 0;
  target.cwiseAbs().maxCoeff(&r0, &c0);
  EquivalenceReport rep;
  rep.final_labels = out.labels();
  {
    const StateVector s = run(c, StateVector(n, embed(in, static_cast<std::size_t>(c0))));
    const Complex got = s[out_index[static_cast<std::size_t>(r0)]];
    const Complex want = target(r0, c0);
    rep.global_phase = std::abs(got) > 1e-300 ? (got / want) / std::abs(got / want) : Complex{1.0, 0.0};
  }

  // Wide batches amortize the per-gate row loop; keep a block near 2^22 amplitudes.
  const std::size_t full = std::size_t{1} << n;
  const std::size_t width = std::clamp<std::size_t>((std::size_t{1} << 18) / full, 1, std::min<std::size_t>(ddim, 64));
  BatchRunner runner(c, width);
  std::vector<std::size_t> inputs;
  for (std::size_t x0 = 0; x0 < ddim; x0 += width) {
    const std::size_t cnt = std::min(width, ddim - x0);
    inputs.resize(cnt);
    for (std::size_t b = 0; b < cnt; ++b) inputs[b] = embed(in, x0 + b);
    const std::vector<Complex>& a = runner.run(inputs);
    for (std::size_t b = 0; b < cnt; ++b) {
      const auto x = static_cast<Eigen::Index>(x0 + b);
      for (std::size_t y = 0; y < ddim; ++y) {
        const Complex got = a[out_index[y] * width + b];
        rep.max_error = std::max(rep.max_error,
                                 std::abs(got - rep.global_phase * target(static_cast<Eigen::Index>(y), x)));
      }
      double outside = 0.0;
      for (std::size_t i = 0; i < full; ++i) {
        if (!in_support[i]) outside += std::norm(a[i * width + b]);
      }
      rep.ancilla_leakage = std::max(rep.ancilla_leakage, std::sqrt(outside));
    }
  }
  if (rep.ancilla_leakage > tol) {
    rep.failure = EquivalenceFailure::AncillaNotRestored;
    rep.max_error = std::max(rep.max_error, rep.ancilla_leakage);
  } else if (rep.max_error > tol) {
    rep.failure = EquivalenceFailure::Mismatch;
  }
  rep.pass = rep.failure == EquivalenceFailure::None;
  return rep;
}

}  // namespace qsched
