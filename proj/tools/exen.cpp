// Copyright 2026 The exen Authors
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

// exen: extended-energy calculator and bound verifier.
//
//   exen compute --family path:3
//   exen verify --exhaustive 5 --bounds all --pairs
//   exen sweep --exhaustive 6 --out results/
//   exen catalog --json

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exen/bounds.hpp"
#include "exen/energy.hpp"
#include "exen/errors.hpp"
#include "exen/families.hpp"
#include "exen/graph.hpp"
#include "exen/oracle.hpp"
#include "exen/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 0;
  double tol_eq = 1e-7;
  double tol_viol = 1e-9;
  int threads = 0;
};

struct ComputeOptions {
  std::string g6;
  std::string edgelist;
  std::string family;
  std::optional<int> vertex;
  std::vector<std::string> bounds{"all"};
};

struct SweepOptions {
  std::string corpus;
  std::string family;
  int exhaustive = 0;
  int n_min = 1;
  bool random = false;
  std::vector<int> orders;
  std::vector<double> probabilities;
  int samples = 0;
  std::vector<std::string> bounds{"all"};
  bool pairs = false;
  bool connected_only = false;
  std::size_t witness_limit = 64;
  bool progress = false;
  std::string out;
};

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EXEN_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

exen::Tolerances TolerancesFrom(const GlobalOptions& g) {
  return exen::Tolerances{g.tol_eq, g.tol_viol};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int RunCompute(const GlobalOptions& g, const ComputeOptions& o) {
  const int sources = !o.g6.empty() + !o.edgelist.empty() + !o.family.empty();
  if (sources != 1) {
    std::cerr << "compute: give exactly one of --g6, --edgelist, --family\n";
    return kExitParse;
  }
  exen::ReportDocument doc;
  std::optional<exen::Graph> graph;
  if (!o.g6.empty()) {
    graph = exen::parse_graph6(o.g6);
    doc.input = {{"kind", "graph6"}, {"value", o.g6}};
  } else if (!o.edgelist.empty()) {
    graph = exen::parse_edge_list(ReadFile(o.edgelist));
    doc.input = {{"kind", "edgelist"}, {"value", o.edgelist}};
  } else {
    graph = exen::families::from_spec(o.family);
    doc.input = {{"kind", "family"}, {"value", o.family}};
  }
  if (o.vertex && (*o.vertex < 0 || *o.vertex >= graph->order())) {
    std::cerr << "compute: --vertex " << *o.vertex << " out of range for n = " << graph->order()
              << "\n";
    return kExitParse;
  }

  const exen::BoundContext ctx(*graph);
  doc.graph6 = exen::serialize_graph6(*graph);
  doc.energy = ctx.report();
  for (exen::BoundCheck& c :
       exen::evaluate_bounds(exen::select_bounds(o.bounds), ctx, TolerancesFrom(g))) {
    if (o.vertex && c.vertex && *c.vertex != *o.vertex) continue;
    doc.checks.push_back(std::move(c));
  }
  std::cout << exen::to_json(doc).dump(2) << "\n";
  return kExitOk;
}

exen::SweepConfig ConfigFrom(const GlobalOptions& g, const SweepOptions& o) {
  exen::SweepConfig cfg;
  const int sources = !o.corpus.empty() + !o.family.empty() + (o.exhaustive > 0) + o.random;
  if (sources != 1) {
    throw std::invalid_argument(
        "give exactly one of --corpus, --family, --exhaustive N, --random");
  }
  if (!o.corpus.empty()) {
    cfg.mode = exen::SweepMode::kCorpus;
    cfg.corpus_path = o.corpus;
  } else if (!o.family.empty()) {
    cfg.mode = exen::SweepMode::kList;
    cfg.graphs.push_back(exen::families::from_spec(o.family));
  } else if (o.exhaustive > 0) {
    cfg.mode = exen::SweepMode::kExhaustive;
    cfg.n_min = o.n_min;
    cfg.n_max = o.exhaustive;
  } else {
    cfg.mode = exen::SweepMode::kRandom;
    cfg.random_orders = o.orders;
    cfg.probabilities = o.probabilities;
    cfg.samples = o.samples;
    if (o.orders.empty() || o.probabilities.empty() || o.samples <= 0) {
      throw std::invalid_argument("--random needs --n, --p and --samples");
    }
  }
  cfg.seed = g.seed;
  cfg.bounds = o.bounds;
  cfg.connected_only = o.connected_only;
  cfg.complement_pairs = o.pairs;
  cfg.tolerances = TolerancesFrom(g);
  cfg.threads = ResolveThreads(g.threads);
  cfg.witness_limit = o.witness_limit;
  if (o.progress || (cfg.mode == exen::SweepMode::kExhaustive && cfg.n_max >= 7)) {
    cfg.progress = [last = std::uint64_t{0}](std::uint64_t done, std::uint64_t total) mutable {
      if (done < total && done - last < total / 100) return;
      last = done;
      std::fprintf(stderr, "\r%llu / %llu graphs", static_cast<unsigned long long>(done),
                   static_cast<unsigned long long>(total));
      if (done == total) std::fputc('\n', stderr);
      std::fflush(stderr);
    };
  }
  return cfg;
}

int ExitFor(const exen::SweepSummary& s) {
  if (s.errors > 0 || s.consistency.failures > 0) return kExitNumeric;
  if (s.violations() > 0) return kExitViolation;
  return kExitOk;
}

exen::ReportDocument SweepDocument(const exen::SweepConfig& cfg, exen::SweepSummary summary) {
  exen::ReportDocument doc;
  doc.input = exen::to_json(cfg);
  doc.sweep = std::move(summary);
  return doc;
}

void ReportRuntime(const exen::SweepSummary& s) {
  std::fprintf(stderr, "%llu graphs in %.2f s, %llu violations\n",
               static_cast<unsigned long long>(s.graphs_processed), s.runtime_seconds,
               static_cast<unsigned long long>(s.violations()));
}

int RunVerify(const GlobalOptions& g, const SweepOptions& o) {
  const exen::SweepConfig cfg = ConfigFrom(g, o);
  exen::SweepSummary summary = exen::run_sweep(cfg);
  ReportRuntime(summary);
  const int code = ExitFor(summary);
  std::cout << exen::to_json(SweepDocument(cfg, std::move(summary))).dump(2) << "\n";
  return code;
}

int RunSweep(const GlobalOptions& g, const SweepOptions& o) {
  const exen::SweepConfig cfg = ConfigFrom(g, o);
  std::filesystem::create_directories(o.out);
  exen::SweepSummary summary = exen::run_sweep(cfg);
  ReportRuntime(summary);
  const int code = ExitFor(summary);
  const std::filesystem::path dir(o.out);
  {
    std::ofstream csv(dir / "slacks.csv", std::ios::binary);
    csv << exen::slacks_csv(summary);
    if (!csv) throw std::runtime_error("cannot write " + (dir / "slacks.csv").string());
  }
  std::ofstream json(dir / "summary.json", std::ios::binary);
  json << exen::to_json(SweepDocument(cfg, std::move(summary))).dump(2) << "\n";
  if (!json) throw std::runtime_error("cannot write " + (dir / "summary.json").string());
  return code;
}

int RunCatalog(const GlobalOptions& g) {
  if (g.json) {
    std::cout << exen::catalog_json().dump(2) << "\n";
  } else {
    std::cout << exen::catalog_text();
  }
  return kExitOk;
}

void AddSweepOptions(CLI::App* cmd, SweepOptions& o) {
  cmd->add_option("--corpus", o.corpus, "graph6 file, one graph per line");
  cmd->add_option("--family", o.family, "single family graph, e.g. cycle:5");
  cmd->add_option("--exhaustive", o.exhaustive, "all labeled graphs with n_min <= n <= N")
      ->check(CLI::Range(1, exen::kMaxExhaustiveOrder));
  cmd->add_option("--n-min", o.n_min, "smallest order for --exhaustive")
      ->check(CLI::Range(1, exen::kMaxExhaustiveOrder));
  cmd->add_flag("--random", o.random, "G(n, p) samples");
  cmd->add_option("--n", o.orders, "orders for --random")->delimiter(',');
  cmd->add_option("--p", o.probabilities, "edge probabilities for --random")->delimiter(',');
  cmd->add_option("--samples", o.samples, "samples per (n, p)");
  cmd->add_option("--bounds", o.bounds, "bound ids, 'all', or prefix patterns like dominance:*")
      ->delimiter(',');
  cmd->add_flag("--pairs", o.pairs, "also check (G, complement) bounds");
  cmd->add_flag("--connected-only", o.connected_only, "skip disconnected graphs");
  cmd->add_option("--witness-limit", o.witness_limit, "equality witnesses kept per bound");
  cmd->add_flag("--progress", o.progress, "progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended adjacency energy of graphs: values, bounds, and sweeps"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_flag("--json", global.json, "JSON output where text is the default");
  app.add_option("--seed", global.seed, "seed for random sweeps");
  app.add_option("--tol-eq", global.tol_eq, "relative equality tolerance");
  app.add_option("--tol-viol", global.tol_viol, "relative violation tolerance");
  app.add_option("--threads", global.threads, "worker threads (default: EXEN_THREADS or 1)");

  ComputeOptions compute;
  CLI::App* compute_cmd = app.add_subcommand("compute", "energies and bound checks for one graph");
  compute_cmd->add_option("--g6", compute.g6, "graph6 string");
  compute_cmd->add_option("--edgelist", compute.edgelist, "edge-list file");
  compute_cmd->add_option("--family", compute.family, "family spec, e.g. star:4");
  compute_cmd->add_option("--vertex", compute.vertex, "only this vertex for per-vertex bounds");
  compute_cmd->add_option("--bounds", compute.bounds, "bound ids or patterns")->delimiter(',');

  SweepOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check bounds over a graph stream");
  AddSweepOptions(verify_cmd, verify);

  SweepOptions sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run a sweep and write summary.json and slacks.csv");
  AddSweepOptions(sweep_cmd, sweep);
  sweep_cmd->add_option("--out", sweep.out, "output directory")->required();

  app.add_subcommand("catalog", "list every registered bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (compute_cmd->parsed()) return RunCompute(global, compute);
    if (verify_cmd->parsed()) return RunVerify(global, verify);
    if (sweep_cmd->parsed()) return RunSweep(global, sweep);
    return RunCatalog(global);
  } catch (const exen::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
