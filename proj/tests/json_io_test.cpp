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

#include "qsched/json_io.hpp"

#include <gtest/gtest.h>

#include "qsched/decompose.hpp"
#include "qsched/schedulers.hpp"
#include "qsched/verify.hpp"

namespace qsched {
namespace {

void expect_same(const ScheduleResult& a, const ScheduleResult& b) {
  EXPECT_EQ(a.algorithm, b.algorithm);
  EXPECT_EQ(a.circuit.moments(), b.circuit.moments());
  EXPECT_EQ(a.circuit.barriers(), b.circuit.barriers());
  EXPECT_EQ(a.topology.edges(), b.topology.edges());
  EXPECT_EQ(a.topology.kind(), b.topology.kind());
  EXPECT_EQ(a.initial_mapping.labels(), b.initial_mapping.labels());
  EXPECT_EQ(a.final_mapping.labels(), b.final_mapping.labels());
  EXPECT_EQ(a.ancilla_init, b.ancilla_init);
  EXPECT_EQ(a.params.n, b.params.n);
  EXPECT_EQ(a.params.n_padded, b.params.n_padded);
  EXPECT_EQ(a.params.theta, b.params.theta);
  EXPECT_EQ(a.params.subset, b.params.subset);
  EXPECT_EQ(a.params.restore_order, b.params.restore_order);
}

TEST(JsonIo, RoundTripEveryAlgorithm) {
  std::vector<ScheduleResult> cases = {
      schedule(AlgorithmKind::QFT, TopologyKind::Ladder, 6),
      schedule_qft(TopologyKind::Linear, 5, {true}),
      schedule_jw(TopologyKind::Grid, {7, 0.123456789012345678, {2, 5, 7}}),
      schedule(AlgorithmKind::GroverDiffusion, TopologyKind::Grid, 5),
      schedule(AlgorithmKind::GroverDiffusion, TopologyKind::AllToAll, 3),
  };
  for (const ScheduleResult& r : cases) {
    const std::string text = result_to_json(r).dump();
    const ScheduleResult back = result_from_json(Json::parse(text));
    expect_same(r, back);
    EXPECT_EQ(result_to_json(back).dump(), text);
  }
}

TEST(JsonIo, AnglesRoundTripExactly) {
  Circuit c(2);
  c.append(gates::ry(0.1 + 0.2, 1));
  c.append(gates::rz(-3.141592653589793, 2));
  const Circuit back = circuit_from_json(Json::parse(circuit_to_json(c).dump()));
  EXPECT_EQ(back.gates()[0].angle, 0.1 + 0.2);
  EXPECT_EQ(back.gates()[1].angle, -3.141592653589793);
}

TEST(JsonIo, LoweredCircuitRoundTrip) {
  const Circuit low = lower_circuit(schedule_qft(TopologyKind::Linear, 4).circuit, true);
  const Circuit back = circuit_from_json(circuit_to_json(low));
  EXPECT_EQ(back.moments(), low.moments());
}

TEST(JsonIo, DeterministicBytes) {
  const std::string a = result_to_json(schedule(AlgorithmKind::JordanWigner, TopologyKind::Ladder, 8)).dump(2);
  const std::string b = result_to_json(schedule(AlgorithmKind::JordanWigner, TopologyKind::Ladder, 8)).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("{\n  \"algorithm\": \"jw\"", 0), 0u);
}

TEST(JsonIo, ParsedScheduleStillVerifies) {
  const ScheduleResult r = schedule(AlgorithmKind::GroverDiffusion, TopologyKind::Ladder, 3);
  EXPECT_TRUE(verify_schedule(result_from_json(Json::parse(result_to_json(r).dump()))).pass);
}

TEST(JsonIo, GateFields) {
  const Json cp = gate_to_json(gates::cp(3, 1, 2, true));
  EXPECT_EQ(cp.dump(), R"({"kind":"CP","operands":[1,2],"k":3,"conjugated":true})");
  EXPECT_FALSE(gate_to_json(gates::h(1)).contains("angle"));
}

class Malformed : public ::testing::Test {
 protected:
  Json good = result_to_json(schedule(AlgorithmKind::JordanWigner, TopologyKind::Linear, 3));
};

TEST_F(Malformed, MissingKey) {
  good.erase("moments");
  EXPECT_THROW(result_from_json(good), std::invalid_argument);
}

TEST_F(Malformed, WrongType) {
  good["params"]["n"] = "three";
  EXPECT_THROW(result_from_json(good), std::invalid_argument);
}

TEST_F(Malformed, UnknownGateKind) {
  good["moments"][0][0]["kind"] = "CZ";
  EXPECT_THROW(result_from_json(good), std::invalid_argument);
}

TEST_F(Malformed, OperandOutOfRange) {
  good["moments"][0][0]["operands"] = {1, 9};
  EXPECT_THROW(result_from_json(good), std::invalid_argument);
}

TEST_F(Malformed, EdgesDisagreeWithShape) {
  good["topology"]["edges"] = Json::array({{1, 3}});
  EXPECT_THROW(result_from_json(good), std::invalid_argument);
}

TEST_F(Malformed, SizeMismatch) {
  good["n_phys"] = 4;
  EXPECT_THROW(result_from_json(good), std::invalid_argument);
}

TEST_F(Malformed, DataCountMismatch) {
  good["params"]["n"] = 2;
  EXPECT_THROW(result_from_json(good), std::invalid_argument);
}

TEST_F(Malformed, UnknownAlgorithm) {
  good["algorithm"] = "shor";
  EXPECT_THROW(result_from_json(good), std::invalid_argument);
}

}  // namespace
}  // namespace qsched
