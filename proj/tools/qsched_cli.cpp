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

// qsched: schedule, lower, verify, depth and sweep from the command line.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsched/qsched.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kAlgs = {"qft", "jw", "grover"};
const std::vector<std::string> kTopos = {"linear", "ladder", "grid", "all"};

qsched::Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return qsched::Json::parse(in);
  } catch (const qsched::Json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string dump(const qsched::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity-aware schedules for QFT, Jordan-Wigner strings and Grover diffusion"};
  app.require_subcommand(1);

  qsched::ScheduleRequest req;
  std::string alg_name, topo_name;
  std::string out_path, in_path, csv_path;
  double tol = 1e-9;

  auto* sched = app.add_subcommand("schedule", "Schedule an algorithm on a topology and write JSON");
  sched->add_option("--alg", alg_name, "qft | jw | grover")->required()->check(CLI::IsMember(kAlgs));
  sched->add_option("--topo", topo_name, "linear | ladder | grid | all")->required()->check(CLI::IsMember(kTopos));
  sched->add_option("--n", req.n, "Number of data qubits")->required();
  auto* theta_opt = sched->add_option("--theta", req.theta, "Rotation angle for jw (default pi/4)");
  auto* subset_opt = sched->add_option("--subset", req.subset, "Comma-separated 1-based parity members for jw")
                         ->delimiter(',');
  sched->add_flag("--restore-order", req.restore_order, "Append SWAPs so QFT outputs end in order");
  sched->add_option("--out", out_path, "Output JSON path")->required();

  bool fuse = false, no_fuse = false;
  auto* lower = app.add_subcommand("lower", "Lower a schedule or circuit JSON to native gates");
  lower->add_option("--in", in_path, "Input JSON")->required();
  lower->add_option("--out", out_path, "Output JSON")->required();
  auto* fuse_opt = lower->add_flag("--fuse", fuse, "Fuse CP+SWAP pairs (default for qft schedules)");
  lower->add_flag("--no-fuse", no_fuse, "Never fuse")->excludes(fuse_opt);

  auto* verify = app.add_subcommand("verify", "Check a schedule JSON against its reference unitary");
  verify->add_option("--in", in_path, "Schedule JSON")->required();
  verify->add_option("--tol", tol, "Elementwise tolerance")->check(CLI::PositiveNumber);

  auto* depth = app.add_subcommand("depth", "Predicted and measured lowered depth");
  depth->add_option("--alg", alg_name)->required()->check(CLI::IsMember(kAlgs));
  depth->add_option("--topo", topo_name)->required()->check(CLI::IsMember(kTopos));
  depth->add_option("--n", req.n)->required();

  std::vector<std::string> alg_names, topo_names;
  int n_max = 0, n_min = 2;
  bool measure = false;
  auto* sweep = app.add_subcommand("sweep", "Depth and connection counts over a range of n as CSV");
  sweep->add_option("--alg", alg_names, "Comma-separated algorithms (default all)")
      ->delimiter(',')
      ->check(CLI::IsMember(kAlgs));
  sweep->add_option("--topo", topo_names, "Comma-separated topologies (default all)")
      ->delimiter(',')
      ->check(CLI::IsMember(kTopos));
  sweep->add_option("--n-min", n_min, "Smallest n")->check(CLI::Range(2, 1 << 12));
  sweep->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::Range(2, 1 << 12));
  sweep->add_option("--csv", csv_path, "Output CSV path")->required();
  sweep->add_flag("--measure", measure, "Also schedule and lower every row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!alg_name.empty()) req.algorithm = qsched::algorithm_kind_from_string(alg_name);
    if (!topo_name.empty()) req.topology = qsched::topology_kind_from_string(topo_name);
    if (*sched) {
      if (*theta_opt && req.algorithm != qsched::AlgorithmKind::JordanWigner) {
        throw std::invalid_argument("--theta applies to jw only");
      }
      if (*subset_opt && req.algorithm != qsched::AlgorithmKind::JordanWigner) {
        throw std::invalid_argument("--subset applies to jw only");
      }
      const qsched::ScheduleResult r = qsched::schedule(req);
      write_text(out_path, dump(qsched::result_to_json(r)));
      std::cout << "wrote " << out_path << ": " << r.circuit.n_phys() << " physical qubits, depth "
                << r.circuit.depth() << " before lowering\n";
      return kExitOk;
    }
    if (*lower) {
      const qsched::Json j = read_json(in_path);
      if (j.contains("algorithm")) {
        qsched::ScheduleResult r = qsched::result_from_json(j);
        const bool f = fuse || (!no_fuse && r.algorithm == qsched::AlgorithmKind::QFT);
        r.circuit = qsched::lower_circuit(r.circuit, f);
        write_text(out_path, dump(qsched::result_to_json(r)));
        std::cout << "lowered depth " << r.circuit.depth() << "\n";
      } else {
        const qsched::Circuit c = qsched::lower_circuit(qsched::circuit_from_json(j), fuse);
        write_text(out_path, dump(qsched::circuit_to_json(c)));
        std::cout << "lowered depth " << c.depth() << "\n";
      }
      return kExitOk;
    }
    if (*verify) {
      const qsched::Json j = read_json(in_path);
      if (!j.contains("algorithm")) throw std::invalid_argument("verify needs a schedule file with an algorithm tag");
      const qsched::ScheduleResult r = qsched::result_from_json(j);
      const qsched::EquivalenceReport rep = qsched::verify_schedule(r, tol);
      std::cout << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n"
                << "failure: " << qsched::to_string(rep.failure) << "\n"
                << "max_error: " << rep.max_error << "\n"
                << "ancilla_leakage: " << rep.ancilla_leakage << "\n"
                << "global_phase: " << rep.global_phase.real() << (rep.global_phase.imag() < 0 ? "" : "+")
                << rep.global_phase.imag() << "i\n"
                << "final_mapping: " << qsched::Json(rep.final_labels).dump() << "\n"
                << "tolerance: " << tol << "\n";
      return rep.pass ? kExitOk : kExitVerifyFailed;
    }
    if (*depth) {
      const auto pred = qsched::predicted_depth(req.algorithm, req.topology, req.n);
      const int measured = qsched::measure_depth(req.algorithm, req.topology, req.n);
      std::cout << "predicted: " << (pred ? std::to_string(*pred) : std::string("-")) << "\n"
                << "measured: " << measured << "\n";
      return kExitOk;
    }
    if (*sweep) {
      if (n_min > n_max) throw std::invalid_argument("--n-min exceeds --n-max");
      if (alg_names.empty()) alg_names = kAlgs;
      if (topo_names.empty()) topo_names = kTopos;
      std::vector<qsched::AlgorithmKind> algs;
      std::vector<qsched::TopologyKind> topos;
      for (const auto& a : alg_names) algs.push_back(qsched::algorithm_kind_from_string(a));
      for (const auto& t : topo_names) topos.push_back(qsched::topology_kind_from_string(t));
      const auto rows = qsched::sweep(algs, topos, n_min, n_max, measure);
      std::ostringstream os;
      qsched::write_sweep_csv(os, rows);
      write_text(csv_path, os.str());
      std::cout << "wrote " << rows.size() << " rows to " << csv_path << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
