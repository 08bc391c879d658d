// Copyright 2026 The hcp Authors
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcp/harness.hpp"
#include "hcp/hologram.hpp"
#include "hcp/oracle.hpp"
#include "hcp/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitFailure = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hcp::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return hcp::parse_graph_text(text.str());
}

// "A..B" or a single "A".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected A..B");
  }
}

int run_solve(const std::string& file, int start, const std::string& mode, bool trace,
              const std::string& tie, bool parallel) {
  const hcp::Graph g = load_graph(file);
  if (start < 1 || start > g.order()) {
    throw UsageError("--start must be in 1.." + std::to_string(g.order()));
  }
  hcp::SolveOptions options;
  options.tie_break = tie == "desc" ? hcp::TieBreak::kDescending : hcp::TieBreak::kAscending;
  options.record_trace = trace;
  options.parallel_levels = parallel;

  nlohmann::ordered_json out;
  out["mode"] = mode;
  if (mode == "path") {
    const hcp::PathOutcome path = hcp::solve_path(g, options);
    out["traceable"] = path.traceable;
    out["path"] = path.traceable ? nlohmann::ordered_json(path.path) : nlohmann::ordered_json(nullptr);
  } else {
    const hcp::SolveOutcome outcome = hcp::solve_cycle(g, start, options);
    for (const std::string& line : outcome.trace) std::cout << line << '\n';
    out["start"] = start;
    out["verdict"] = hcp::to_string(outcome.verdict);
    out["cycle"] = outcome.cycle ? nlohmann::ordered_json(*outcome.cycle) : nlohmann::ordered_json(nullptr);
    out["cm_calls"] = outcome.stats.cm_calls;
    out["max_singleton_iterations"] = outcome.stats.max_singleton_iterations;
  }
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int run_oracle(const std::string& file, bool count) {
  const hcp::Graph g = load_graph(file);
  const auto cycle = hcp::oracle_hamiltonian_cycle(g, 1);
  nlohmann::ordered_json out;
  out["verdict"] = hcp::to_string(cycle ? hcp::Verdict::kHamiltonian : hcp::Verdict::kNonHamiltonian);
  out["cycle"] = cycle ? nlohmann::ordered_json(*cycle) : nlohmann::ordered_json(nullptr);
  if (count) out["cycles"] = hcp::oracle_count_cycles(g, 1);
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int run_sweep(const std::string& range, const hcp::SweepOptions& options, const std::string& path) {
  const auto [from, to] = parse_range(range);
  if (from < 1 || to < from) throw UsageError("bad range '" + range + "'");
  if (to > 6 && !options.allow_large) throw UsageError("n > 6 needs --allow-large");
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  const auto reports = hcp::sweep(from, to, options, [&](const hcp::GraphVerdictRecord& r) {
    out << hcp::to_json_line(r) << '\n';
  });
  const std::string summary = hcp::summary_json_line(reports, options.timing);
  out << summary << '\n';
  std::cout << summary << '\n';
  return hcp::combine(reports).invalid_cycle == 0 ? kExitOk : kExitFailure;
}

int run_golden(const std::string& id, bool print) {
  const std::vector<std::string> ids = id == "all" ? hcp::golden_ids() : std::vector<std::string>{id};
  bool ok = true;
  for (const std::string& each : ids) {
    hcp::GoldenResult result;
    try {
      result = hcp::golden_trace(each);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (print) {
      for (const std::string& line : result.transcript) std::cout << line << '\n';
    }
    std::cout << (result.pass ? "PASS " : "FAIL ") << each << " (" << result.checked << "/"
              << result.expected << " lines)\n";
    if (!result.pass) std::cout << result.divergence << '\n';
    ok = ok && result.pass;
  }
  return ok ? kExitOk : kExitFailure;
}

int run_hologram(const std::string& file, const std::string& dot, int start) {
  const hcp::Graph g = load_graph(file);
  if (start < 1 || start > g.order()) {
    throw UsageError("--start must be in 1.." + std::to_string(g.order()));
  }
  const hcp::Hologram h = hcp::build_hologram(g, start);
  std::ofstream out(dot);
  if (!out) throw UsageError("cannot write '" + dot + "'");
  out << hcp::hologram_to_dot(h);
  nlohmann::ordered_json info;
  info["vertices"] = h.vertex_count();
  info["edges"] = h.edge_count();
  info["levels"] = h.levels();
  std::cout << info.dump() << '\n';
  return kExitOk;
}

int run_probe(const std::vector<int>& ns, double min_seconds) {
  for (int n : ns) {
    if (n < 3) throw UsageError("--complete values must be >= 3");
  }
  const hcp::ProbeResult result = hcp::scaling_probe(ns, min_seconds);
  for (const hcp::ProbeRow& row : result.rows) std::cout << hcp::to_json_line(row) << '\n';
  nlohmann::ordered_json summary;
  summary["summary"] = true;
  summary["slope"] = result.rows.size() >= 2 ? nlohmann::ordered_json(result.slope) : nlohmann::ordered_json(nullptr);
  std::cout << summary.dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian cycle search over path holograms"};
  app.require_subcommand(1);

  std::string file;
  int start = 1;
  std::string mode = "cycle";
  bool trace = false;
  std::string tie = "asc";
  bool parallel = false;
  auto* solve = app.add_subcommand("solve", "Decide Hamiltonicity and print a cycle or path");
  solve->add_option("file", file, "Edge list or graph6 file")->required();
  solve->add_option("--start", start, "Initial vertex");
  solve->add_option("--mode", mode)->check(CLI::IsMember({"cycle", "path"}));
  solve->add_flag("--trace", trace, "Print every path-set update");
  solve->add_option("--tie-break", tie)->check(CLI::IsMember({"asc", "desc"}));
  solve->add_flag("--parallel", parallel, "Fill each level with the OpenMP kernel");

  bool count = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force Hamiltonicity");
  oracle->add_option("file", file)->required();
  oracle->add_flag("--count", count, "Also count directed Hamiltonian cycles from vertex 1");

  std::string range;
  std::string out_path;
  hcp::SweepOptions sweep_options;
  bool serial = false;
  auto* sweep = app.add_subcommand("sweep", "Compare solver and oracle on all connected graphs");
  sweep->add_option("--n", range, "Order range A..B")->required();
  sweep->add_option("--jobs", sweep_options.jobs, "Worker threads (0 = default)");
  sweep->add_option("--out", out_path, "JSON-lines report")->required();
  sweep->add_flag("--allow-large", sweep_options.allow_large, "Permit n = 7");
  sweep->add_flag("--timing", sweep_options.timing, "Record runtimes (report no longer reproducible)");
  sweep->add_flag("--serial", serial, "Use the serial reference loop");

  std::string example;
  bool print = false;
  auto* golden = app.add_subcommand("golden", "Replay a worked example against its transcript");
  golden->add_option("example-id", example, "ex1, ex2, ex3-cm, ex4, ex5e or all")->required();
  golden->add_flag("--print", print, "Print the replayed transcript");

  std::string dot;
  auto* hologram = app.add_subcommand("hologram", "Export the path hologram as Graphviz");
  hologram->add_option("file", file)->required();
  hologram->add_option("--dot", dot)->required();
  hologram->add_option("--start", start);

  std::vector<int> complete;
  double min_seconds = 0.05;
  auto* probe = app.add_subcommand("probe", "Runtime scaling on complete graphs");
  probe->add_option("--complete", complete, "Orders, e.g. 5,10,15")->required()->delimiter(',');
  probe->add_option("--min-seconds", min_seconds, "Minimum measuring time per order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return run_solve(file, start, mode, trace, tie, parallel);
    if (*oracle) return run_oracle(file, count);
    if (*sweep) {
      sweep_options.parallel = !serial;
      return run_sweep(range, sweep_options, out_path);
    }
    if (*golden) return run_golden(example, print);
    if (*hologram) return run_hologram(file, dot, start);
    if (*probe) return run_probe(complete, min_seconds);
  } catch (const UsageError& e) {
    std::cerr << "hcp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hcp::ParseError& e) {
    std::cerr << "hcp: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hcp: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitUsage;
}
