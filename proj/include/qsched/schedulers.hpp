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

#include <vector>

#include "qsched/grover.hpp"
#include "qsched/jordan_wigner.hpp"
#include "qsched/qft.hpp"

namespace qsched {

struct ScheduleRequest {
  AlgorithmKind algorithm = AlgorithmKind::QFT;
  TopologyKind topology = TopologyKind::Linear;
  int n = 2;
  double theta = kDefaultTheta;
  std::vector<int> subset;
  bool restore_order = false;
};

inline ScheduleResult schedule(const ScheduleRequest& req) {
  switch (req.algorithm) {
    case AlgorithmKind::QFT:
      if (!req.subset.empty()) throw std::invalid_argument("--subset applies to jw only");
      return schedule_qft(req.topology, req.n, {req.restore_order});
    case AlgorithmKind::JordanWigner:
      if (req.restore_order) throw std::invalid_argument("--restore-order applies to qft only");
      return schedule_jw(req.topology, ParitySpec{req.n, req.theta, req.subset});
    case AlgorithmKind::GroverDiffusion:
      if (req.restore_order) throw std::invalid_argument("--restore-order applies to qft only");
      if (!req.subset.empty()) throw std::invalid_argument("--subset applies to jw only");
      return schedule_grover(req.topology, GroverSpec::of(req.n));
  }
  throw std::invalid_argument("unknown algorithm");
}

inline ScheduleResult schedule(AlgorithmKind alg, TopologyKind topo, int n) {
  ScheduleRequest req;
  req.algorithm = alg;
  req.topology = topo;
  req.n = n;
  return schedule(req);
}

}  // namespace qsched
