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

#include "qsched/decompose.hpp"
#include "qsched/schedule.hpp"
#include "qsched/simulator.hpp"

namespace qsched {

/// Largest data register the verifier will build a target matrix for.
inline constexpr int kVerifyDataCap = kDenseQubitCap;

/// Reference unitary over the data qubits. QFT schedules omit the output
/// reversal, so their reference is bit_reversal * DFT; where each x_j
/// actually lands is left to the mappings.
inline UnitaryMatrix oracle_for(const ScheduleResult& r) {
  const int n = r.params.n;
  switch (r.algorithm) {
    case AlgorithmKind::QFT:
      return oracle_qft_reversed(n);
    case AlgorithmKind::JordanWigner:
      return oracle_parity_rotation(n, r.params.subset, r.params.theta);
    case AlgorithmKind::GroverDiffusion:
      return oracle_grover_diffusion(n);
  }
  throw std::invalid_argument("unknown algorithm");
}

inline void check_verify_caps(const ScheduleResult& r) {
  if (r.params.n > kVerifyDataCap) {
    throw std::invalid_argument("verification capped at " + std::to_string(kVerifyDataCap) +
                                " data qubits, instance has " + std::to_string(r.params.n));
  }
  if (r.circuit.n_phys() > kStateQubitCap) {
    throw std::invalid_argument("verification capped at " + std::to_string(kStateQubitCap) +
                                " physical qubits, instance has " + std::to_string(r.circuit.n_phys()));
  }
}

/// Lowers the schedule (fusing CP+SWAP pairs for QFT) and checks it against
/// its reference unitary.
inline EquivalenceReport verify_schedule(const ScheduleResult& r, double tol = 1e-9) {
  check_verify_caps(r);
  const Circuit lowered = lower_circuit(r.circuit, r.algorithm == AlgorithmKind::QFT);
  return check_equivalence(lowered, oracle_for(r), r.initial_mapping, r.final_mapping, r.ancilla_init, tol);
}

}  // namespace qsched
