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

#include "qsched/decompose.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "qsched/simulator.hpp"

namespace qsched {
namespace {

using cd = std::complex<double>;

Circuit from_sequence(int n, const std::vector<Gate>& seq) {
  Circuit c(n);
  for (const Gate& g : seq) c.append(g);
  return c;
}

// max |a - phase * b| with the phase taken from the largest entry of b.
double phase_aligned_error(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const cd ph = a(r, c) / b(r, c);
  return (a - (ph / std::abs(ph)) * b).cwiseAbs().maxCoeff();
}

UnitaryMatrix controlled_phase_matrix(int k) {
  UnitaryMatrix m = UnitaryMatrix::Identity(4, 4);
  m(3, 3) = std::polar(1.0, 2 * std::numbers::pi / std::ldexp(1.0, k));
  return m;
}

// Canonical Toffoli on |a b t> with a the most significant bit.
UnitaryMatrix toffoli_matrix() {
  UnitaryMatrix m = UnitaryMatrix::Zero(8, 8);
  for (int x = 0; x < 8; ++x) m((x & 6) == 6 ? x ^ 1 : x, x) = 1.0;
  return m;
}

TEST(LowerCp, ReconstructsCz) {
  const UnitaryMatrix u = unitary_of(from_sequence(2, lower_cp(1, 1, 2)));
  UnitaryMatrix cz = UnitaryMatrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  EXPECT_LT((u - cz).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LowerCp, MatchesControlledPhaseUpToK6) {
  for (int k = 1; k <= 6; ++k) {
    const UnitaryMatrix u = unitary_of(from_sequence(2, lower_cp(k, 1, 2)));
    EXPECT_LT((u - controlled_phase_matrix(k)).cwiseAbs().maxCoeff(), 1e-12) << "k=" << k;
    const UnitaryMatrix ud = unitary_of(from_sequence(2, lower_cp(k, 1, 2, true)));
    EXPECT_LT((ud - controlled_phase_matrix(k).adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(LowerCp, GateCountsAndDepth) {
  const auto seq = lower_cp(3, 1, 2);
  int cnots = 0, phases = 0;
  for (const Gate& g : seq) {
    cnots += g.kind == GateKind::CNOT;
    phases += g.kind == GateKind::Phase;
  }
  EXPECT_EQ(cnots, 2);
  EXPECT_EQ(phases, 3);
  EXPECT_EQ(from_sequence(2, seq).depth(), 4u);
}

TEST(LowerSwap, PermutationAndSymmetry) {
  const UnitaryMatrix u = unitary_of(from_sequence(2, lower_swap(1, 2)));
  UnitaryMatrix p = UnitaryMatrix::Zero(4, 4);
  p(0, 0) = p(3, 3) = p(1, 2) = p(2, 1) = 1.0;
  EXPECT_LT((u - p).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((u - unitary_of(from_sequence(2, lower_swap(2, 1)))).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(from_sequence(2, lower_swap(1, 2)).depth(), 3u);
  const StateVector s = run(from_sequence(2, lower_swap(1, 2)), StateVector(2, 0b10));
  EXPECT_NEAR(std::abs(s[0b01]), 1.0, 1e-12);
}

TEST(LowerToffoli, MargolusPhaseAtOneZeroOne) {
  const UnitaryMatrix u = unitary_of(from_sequence(3, lower_toffoli(1, 2, 3)));
  UnitaryMatrix d = UnitaryMatrix::Identity(8, 8);
  d(0b101, 0b101) = -1.0;
  EXPECT_LT((u - toffoli_matrix() * d).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(from_sequence(3, lower_toffoli(1, 2, 3)).depth(), 7u);
}

TEST(LowerToffoli, MagnitudesMatchCanonical) {
  const UnitaryMatrix u = unitary_of(from_sequence(3, lower_toffoli(1, 2, 3)));
  EXPECT_LT((u.cwiseAbs() - toffoli_matrix().cwiseAbs()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LowerToffoli, MirroredPairCancelsPhases) {
  // Margolus, a Z on an unrelated qubit, then the adjoint sequence.
  Circuit c(4);
  for (const Gate& g : lower_toffoli(1, 2, 3)) c.append(g);
  c.append(gates::z(4));
  const Circuit half = from_sequence(4, lower_toffoli(1, 2, 3));
  c.append_circuit(invert(half));
  UnitaryMatrix z = UnitaryMatrix::Identity(16, 16);
  for (int x = 0; x < 16; ++x) {
    if (x & 1) z(x, x) = -1.0;
  }
  EXPECT_LT((unitary_of(c) - z).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LowerCircuit, FusedPairDepthFiveVersusSeven) {
  Circuit c(2);
  c.append(gates::cp(2, 1, 2)).append(gates::swap(1, 2));
  const Circuit fused = lower_circuit(c, true), plain = lower_circuit(c, false);
  EXPECT_EQ(fused.depth(), 5u);
  EXPECT_EQ(plain.depth(), 7u);
  EXPECT_LT((unitary_of(fused) - unitary_of(plain)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((unitary_of(fused) - unitary_of(c)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LowerCircuit, FusionNeedsNothingInBetween) {
  Circuit c(3);
  c.append(gates::cp(2, 1, 2)).append(gates::h(2)).append(gates::swap(1, 2));
  EXPECT_EQ(lower_circuit(c, true), lower_circuit(c, false));
  Circuit d(2);
  d.append(gates::cp(2, 1, 2)).append(gates::swap(2, 1));
  EXPECT_EQ(lower_circuit(d, true).depth(), 5u);
  EXPECT_LT((unitary_of(lower_circuit(d, true)) - unitary_of(d)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LowerCircuit, NativeCircuitUnchanged) {
  Circuit c(3);
  c.append(gates::h(1)).append(gates::cnot(1, 2)).append(gates::rz(0.2, 3)).append(gates::phase(3, 2));
  EXPECT_EQ(lower_circuit(c, true), c);
  EXPECT_TRUE(is_native_circuit(lower_circuit(c, false)));
}

TEST(LowerCircuit, PreservesUnitaryOnRandomCircuits) {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> kind(0, 5), q(1, 3), kk(1, 5);
  std::uniform_real_distribution<double> ang(-3.1, 3.1);
  for (int trial = 0; trial < 100; ++trial) {
    Circuit c(3);
    for (int i = 0; i < 12; ++i) {
      int a = q(rng), b = q(rng);
      while (b == a) b = q(rng);
      switch (kind(rng)) {
        case 0: c.append(gates::h(a)); break;
        case 1: c.append(gates::rz(ang(rng), a)); break;
        case 2: c.append(gates::cnot(a, b)); break;
        case 3: c.append(gates::cp(kk(rng), a, b, b % 2 == 0)); break;
        case 4: c.append(gates::swap(a, b)); break;
        default: c.append(gates::cp(kk(rng), a, b)).append(gates::swap(a, b)); break;
      }
      if (i % 4 == 3) c.append_barrier();
    }
    const UnitaryMatrix u = unitary_of(c);
    for (bool fuse : {false, true}) {
      const Circuit l = lower_circuit(c, fuse);
      EXPECT_TRUE(is_native_circuit(l));
      EXPECT_LT(phase_aligned_error(unitary_of(l), u), 1e-9) << "trial " << trial << " fuse " << fuse;
    }
  }
}

TEST(LowerCircuit, ToffoliCircuitsDifferOnlyByDiagonalPhases) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> q(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(4);
    for (int i = 0; i < 6; ++i) {
      int a = q(rng), b = q(rng), t = q(rng);
      while (b == a) b = q(rng);
      while (t == a || t == b) t = q(rng);
      c.append(gates::toff(a, b, t));
    }
    // Toffolis permute basis states, so the lowered circuit must agree in
    // magnitude everywhere and differ from the original by phases of +-1.
    const UnitaryMatrix u = unitary_of(c), l = unitary_of(lower_circuit(c, false));
    EXPECT_LT((u.cwiseAbs() - l.cwiseAbs()).cwiseAbs().maxCoeff(), 1e-9);
    const UnitaryMatrix diag = u.adjoint() * l;
    for (Eigen::Index i = 0; i < diag.rows(); ++i) {
      EXPECT_NEAR(std::abs(std::abs(diag(i, i).real()) - 1.0), 0.0, 1e-9);
    }
  }
}

TEST(LowerCircuit, NoNewQubitPairs) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> kind(0, 2), q(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c(5);
    std::set<std::pair<int, int>> pairs;
    auto allow = [&](int a, int b) { pairs.insert({std::min(a, b), std::max(a, b)}); };
    for (int i = 0; i < 15; ++i) {
      int a = q(rng), b = q(rng), t = q(rng);
      while (b == a) b = q(rng);
      while (t == a || t == b) t = q(rng);
      switch (kind(rng)) {
        case 0: c.append(gates::cp(2, a, b)); allow(a, b); break;
        case 1: c.append(gates::swap(a, b)); allow(a, b); break;
        default: c.append(gates::toff(a, b, t)); allow(a, t); allow(b, t); break;
      }
    }
    for (const Gate& g : lower_circuit(c, true).gates()) {
      if (g.operands.size() == 2) {
        EXPECT_TRUE(pairs.count({std::min(g.operands[0], g.operands[1]), std::max(g.operands[0], g.operands[1])}));
      }
    }
  }
}

TEST(LowerCircuit, KeepsBarrierBlocks) {
  Circuit c(2);
  c.append(gates::h(1)).append_barrier().append(gates::h(2));
  EXPECT_EQ(lower_circuit(c, false).depth(), 2u);
}

TEST(LowerErrors, DistinctOperands) {
  EXPECT_THROW(lower_cp(2, 1, 1), std::invalid_argument);
  EXPECT_THROW(lower_swap(3, 3), std::invalid_argument);
  EXPECT_THROW(lower_toffoli(1, 2, 1), std::invalid_argument);
}

}  // namespace
}  // namespace qsched
