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

#include "json.hpp"
#include "qsched/schedule.hpp"

namespace qsched {

using Json = nlohmann::ordered_json;

namespace detail {

// Missing keys, wrong types and out-of-range indices in a document all
// surface as std::invalid_argument.
template <class F>
auto json_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

inline Json gate_to_json(const Gate& g) {
  Json j;
  j["kind"] = std::string(to_string(g.kind));
  j["operands"] = g.operands;
  if (g.kind == GateKind::RZ || g.kind == GateKind::RY) j["angle"] = g.angle;
  if (g.kind == GateKind::Phase || g.kind == GateKind::CP) {
    j["k"] = g.k;
    j["conjugated"] = g.conjugated;
  }
  return j;
}

inline Gate gate_from_json(const Json& j) {
  return detail::json_guard("gate", [&] {
    Gate g;
    g.kind = gate_kind_from_string(j.at("kind").get<std::string>());
    g.operands = j.at("operands").get<std::vector<int>>();
    g.angle = j.value("angle", 0.0);
    g.k = j.value("k", 0);
    g.conjugated = j.value("conjugated", false);
    return g;
  });
}

/// {"n_phys", "moments": [[gate, ...], ...], "barriers": [...]}.
inline Json circuit_to_json(const Circuit& c) {
  Json j;
  j["n_phys"] = c.n_phys();
  Json moments = Json::array();
  for (const Moment& m : c.moments()) {
    Json mj = Json::array();
    for (const Gate& g : m) mj.push_back(gate_to_json(g));
    moments.push_back(std::move(mj));
  }
  j["moments"] = std::move(moments);
  j["barriers"] = c.barriers();
  return j;
}

inline Circuit circuit_from_json(const Json& j) {
  return detail::json_guard("circuit", [&] {
    std::vector<Moment> moments;
    for (const Json& mj : j.at("moments")) {
      Moment m;
      for (const Json& gj : mj) m.push_back(gate_from_json(gj));
      moments.push_back(std::move(m));
    }
    const auto barriers = j.value("barriers", std::vector<std::size_t>{});
    return Circuit::from_moments(j.at("n_phys").get<int>(), moments, barriers);
  });
}

inline Json topology_to_json(const Topology& t) {
  Json j;
  j["kind"] = std::string(to_string(t.kind()));
  j["n_phys"] = t.n_phys();
  if (t.kind() != TopologyKind::AllToAll) {
    j["rows"] = t.rows();
    j["cols"] = t.cols();
  }
  Json edges = Json::array();
  for (auto [a, b] : t.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

inline Topology topology_from_json(const Json& j) {
  return detail::json_guard("topology", [&] {
    const TopologyKind kind = topology_kind_from_string(j.at("kind").get<std::string>());
    const int n = j.at("n_phys").get<int>();
    Topology t = kind == TopologyKind::AllToAll ? Topology::complete(n)
                                                : Topology::mesh(kind, j.at("rows").get<int>(), j.at("cols").get<int>());
    if (t.n_phys() != n) throw std::invalid_argument("topology n_phys disagrees with its shape");
    if (j.contains("edges")) {
      std::vector<std::pair<int, int>> edges;
      for (const Json& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      if (edges != t.edges()) throw std::invalid_argument("topology edges disagree with its shape");
    }
    return t;
  });
}

/// Circuit fields at top level plus topology, mappings, ancilla roles,
/// algorithm tag and parameters.
inline Json result_to_json(const ScheduleResult& r) {
  Json j;
  j["algorithm"] = std::string(to_string(r.algorithm));
  Json p;
  p["n"] = r.params.n;
  p["n_padded"] = r.params.n_padded;
  if (r.algorithm == AlgorithmKind::JordanWigner) {
    p["theta"] = r.params.theta;
    p["subset"] = r.params.subset;
  }
  if (r.algorithm == AlgorithmKind::QFT) p["restore_order"] = r.params.restore_order;
  j["params"] = std::move(p);
  j["topology"] = topology_to_json(r.topology);
  j["initial_mapping"] = r.initial_mapping.labels();
  j["final_mapping"] = r.final_mapping.labels();
  j["ancilla"] = r.ancilla_qubits();
  j["ancilla_init"] = r.ancilla_init;
  const Json circuit = circuit_to_json(r.circuit);
  for (const auto& item : circuit.items()) j[item.key()] = item.value();
  return j;
}

inline ScheduleResult result_from_json(const Json& j) {
  return detail::json_guard("schedule", [&] {
    ScheduleResult r;
    r.algorithm = algorithm_kind_from_string(j.at("algorithm").get<std::string>());
    const Json& p = j.at("params");
    r.params.n = p.at("n").get<int>();
    r.params.n_padded = p.value("n_padded", r.params.n);
    r.params.theta = p.value("theta", kDefaultTheta);
    r.params.subset = p.value("subset", std::vector<int>{});
    r.params.restore_order = p.value("restore_order", false);
    r.topology = topology_from_json(j.at("topology"));
    r.initial_mapping = MappingState(j.at("initial_mapping").get<std::vector<int>>());
    r.final_mapping = MappingState(j.at("final_mapping").get<std::vector<int>>());
    r.ancilla_init = j.value("ancilla_init", std::vector<int>(static_cast<std::size_t>(r.initial_mapping.n_ancilla()), 0));
    r.circuit = circuit_from_json(j);
    if (r.circuit.n_phys() != r.topology.n_phys() || r.initial_mapping.n_phys() != r.topology.n_phys()) {
      throw std::invalid_argument("circuit, topology and mapping sizes disagree");
    }
    if (r.initial_mapping.n_data() != r.params.n) {
      throw std::invalid_argument("mapping data count disagrees with params.n");
    }
    if (static_cast<int>(r.ancilla_init.size()) != r.initial_mapping.n_ancilla()) {
      throw std::invalid_argument("ancilla_init length disagrees with the mapping");
    }
    return r;
  });
}

}  // namespace qsched
