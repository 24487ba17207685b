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

#include "qsched/analyzer.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace qsched {
namespace {

using A = AlgorithmKind;
using T = TopologyKind;

TEST(Predict, Examples) {
  EXPECT_EQ(predicted_depth(A::QFT, T::Linear, 4), 27);
  EXPECT_EQ(predicted_depth(A::JordanWigner, T::Linear, 4), 5);
  EXPECT_EQ(predicted_depth(A::GroverDiffusion, T::Grid, 16), 81);
  EXPECT_FALSE(predicted_depth(A::QFT, T::Grid, 16).has_value());
  EXPECT_EQ(predicted_depth(A::QFT, T::AllToAll, 2), 6);
  EXPECT_EQ(predicted_depth(A::JordanWigner, T::AllToAll, 5), 7);
}

TEST(Predict, PaddingIsReported) {
  const Prediction p = predict(A::JordanWigner, T::Grid, 10);
  EXPECT_TRUE(p.padded());
  EXPECT_EQ(p.n_eval, 16);
  EXPECT_EQ(p.depth, 9);
  EXPECT_FALSE(predict(A::QFT, T::Linear, 7).padded());
  EXPECT_EQ(predict(A::GroverDiffusion, T::Linear, 5).n_eval, 8);
  EXPECT_EQ(predict(A::GroverDiffusion, T::Grid, 5).n_eval, 16);
  EXPECT_THROW(predict(A::QFT, T::Linear, 1), std::invalid_argument);
}

TEST(Predict, PowerHelpers) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(5), 3);
  EXPECT_EQ(ceil_log2(8), 3);
  EXPECT_TRUE(is_power_of_four(16));
  EXPECT_FALSE(is_power_of_four(8));
  EXPECT_FALSE(is_power_of_two(0));
}

TEST(Measure, Examples) {
  EXPECT_EQ(measure_depth(A::JordanWigner, T::Linear, 4), 5);
  EXPECT_EQ(measure_depth(A::QFT, T::Linear, 2), 7);
  EXPECT_EQ(measure_depth(A::GroverDiffusion, T::AllToAll, 4), 29);
}

TEST(Measure, PhysicalQubitsMatchSchedules) {
  for (A a : {A::QFT, A::JordanWigner, A::GroverDiffusion}) {
    for (T t : {T::Linear, T::Ladder, T::Grid, T::AllToAll}) {
      for (int n = 2; n <= 20; ++n) {
        if (!sweep_includes(a, t, n) || !schedulable(a, t, n)) continue;
        const ScheduleResult r = schedule(a, t, n);
        EXPECT_EQ(r.topology.n_phys(), physical_qubits(a, t, n));
        EXPECT_EQ(r.topology.edges(), sweep_topology(a, t, n).edges());
      }
    }
  }
}

TEST(Sweep, QftLinearSmall) {
  const auto rows = sweep({A::QFT}, {T::Linear}, 2, 4, true);
  ASSERT_EQ(rows.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(rows[i].n, i + 2);
    EXPECT_EQ(rows[i].measured, rows[i].predicted);
    EXPECT_TRUE(rows[i].discrepancy.empty());
  }
  EXPECT_EQ(rows[0].measured, 7);
  EXPECT_EQ(rows[1].measured, 17);
  EXPECT_EQ(rows[2].measured, 27);
}

TEST(Sweep, EdgeCounts) {
  const auto rows = sweep({A::QFT}, {T::Linear, T::AllToAll}, 2, 64, false);
  for (const SweepRow& r : rows) {
    const std::size_t n = static_cast<std::size_t>(r.n_phys);
    const std::size_t und = r.topology == T::Linear ? n - 1 : n * (n - 1) / 2;
    EXPECT_EQ(r.undirected_edges, und);
    EXPECT_EQ(r.ordered_edges, 2 * und);
    EXPECT_FALSE(r.measured.has_value());
  }
  const auto ladder = sweep({A::QFT}, {T::Ladder}, 8, 8, false);
  EXPECT_EQ(ladder.at(0).undirected_edges, 10u);
}

TEST(Sweep, GroverLinearQubits) {
  for (const SweepRow& r : sweep({A::GroverDiffusion}, {T::Linear}, 2, 32, false)) {
    EXPECT_EQ(r.n_phys, 2 * padded_size(A::GroverDiffusion, T::Linear, r.n) - 1);
    if (is_power_of_two(r.n)) {
      EXPECT_EQ(r.n_phys, 2 * r.n - 1);
      EXPECT_TRUE(r.discrepancy.empty());
    } else {
      EXPECT_EQ(r.discrepancy.rfind("padded=", 0), 0u);
    }
  }
}

TEST(Sweep, RowSelection) {
  const auto rows = sweep({A::QFT, A::JordanWigner, A::GroverDiffusion}, {T::Grid}, 2, 64, false);
  std::vector<int> jw, gr;
  for (const SweepRow& r : rows) {
    EXPECT_NE(r.algorithm, A::QFT);
    (r.algorithm == A::JordanWigner ? jw : gr).push_back(r.n);
  }
  EXPECT_EQ(jw, (std::vector<int>{4, 9, 16, 25, 36, 49, 64}));
  EXPECT_EQ(gr, (std::vector<int>{4, 16, 64}));
}

TEST(Sweep, DiscrepancyTags) {
  const auto odd = sweep({A::QFT}, {T::Ladder}, 5, 6, true);
  ASSERT_EQ(odd.size(), 2u);
  EXPECT_EQ(odd[0].predicted, 9 * 5 - 11);
  EXPECT_FALSE(odd[0].measured.has_value());
  EXPECT_EQ(odd[0].discrepancy, "unsupported");
  EXPECT_EQ(odd[1].discrepancy, "offset=-1");
  const auto jw = sweep({A::JordanWigner}, {T::Ladder}, 8, 8, true);
  EXPECT_EQ(jw.at(0).discrepancy, "offset=+2");
}

TEST(Sweep, CsvFormat) {
  std::ostringstream os;
  write_sweep_csv(os, sweep({A::JordanWigner}, {T::Linear}, 3, 3, true));
  EXPECT_EQ(os.str(), std::string(kSweepCsvHeader) + "\njw,linear,3,3,5,5,,2,4\n");
}

TEST(Scaling, LadderHalvesLinearParityDepth) {
  double prev = 0.0;
  for (int n : {16, 64, 256}) {
    const double ratio = static_cast<double>(measure_depth(A::JordanWigner, T::Linear, n)) /
                         measure_depth(A::JordanWigner, T::Ladder, n);
    EXPECT_GT(ratio, prev);
    EXPECT_LT(ratio, 2.0);
    prev = ratio;
  }
  EXPECT_GT(prev, 1.9);
}

}  // namespace
}  // namespace qsched
