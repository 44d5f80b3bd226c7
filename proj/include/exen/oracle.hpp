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

#ifndef EXEN_ORACLE_HPP_
#define EXEN_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "exen/bounds.hpp"
#include "exen/graph.hpp"

// Brute-force sweeps: every selected bound plus a battery of decomposition
// consistency checks over exhaustive, random, or file-supplied graph streams.
namespace exen {

enum class SweepMode { kExhaustive, kRandom, kCorpus, kList };

std::string_view to_string(SweepMode mode);

struct SweepConfig {
  SweepMode mode = SweepMode::kExhaustive;
  // Exhaustive range; n_max <= 7.
  int n_min = 1;
  int n_max = 6;
  // Random mode: `samples` graphs for every (order, probability) combination.
  std::vector<int> random_orders;
  std::vector<double> probabilities;
  int samples = 0;
  std::uint64_t seed = 0;
  // Corpus mode: graph6 file, one graph per line, '#' lines skipped.
  std::string corpus_path;
  // List mode.
  std::vector<Graph> graphs;

  std::vector<std::string> bounds{"all"};
  bool connected_only = false;
  // Enables graph-pair (G, complement) bounds.
  bool complement_pairs = false;
  Tolerances tolerances;
  int threads = 1;
  // Equality witnesses kept per bound (those with the smallest sequence
  // indices).
  std::size_t witness_limit = 64;
  // Invoked with (graphs done, graphs total) from worker threads, serialized.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// A graph (and vertex, for per-vertex bounds) in the sweep sequence.
struct Witness {
  std::uint64_t index = 0;
  std::string graph6;
  std::optional<int> vertex;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct BoundTally {
  std::string bound_id;
  std::uint64_t holds = 0;
  std::uint64_t equality = 0;
  std::uint64_t violated = 0;
  std::uint64_t not_applicable = 0;
  // Minimum slack over applicable checks; NaN when none applied.
  double worst_slack = std::numeric_limits<double>::quiet_NaN();
  std::optional<Witness> worst;
  std::vector<Witness> equality_witnesses;
  // Only counted for bounds with a stated equality family.
  std::uint64_t equality_outside_family = 0;
  std::uint64_t family_not_equal = 0;
  std::vector<Witness> outside_family_examples;
  std::vector<Witness> violation_examples;

  std::uint64_t evaluations() const { return holds + equality + violated + not_applicable; }
};

// Largest deviations observed by the per-graph consistency checks.
struct ConsistencyTally {
  double eig_orthogonality = 0.0;
  double eig_reconstruction = 0.0;
  // |sum_i eps_i - eps| and |sum_i eps_ex_i - eps_ex|.
  double vertex_sum = 0.0;
  // Row and column sums of q against 1; q entries below 0 count too.
  double weight_sums = 0.0;
  // |sum_r q_ir |eta_r| - eps_ex_i|.
  double weight_energy = 0.0;
  // Most negative vertex energy (0 if none negative).
  double min_vertex_energy = 0.0;
  double component_locality = 0.0;
  std::uint64_t regular_graphs = 0;
  // Regular graphs whose A_ex differed from A in any entry.
  std::uint64_t regular_collapse_mismatch = 0;
  double regular_energy_gap = 0.0;
  std::uint64_t bidegree_graphs = 0;
  std::uint64_t bidegree_matrix_mismatch = 0;
  double bidegree_energy_gap = 0.0;
  std::uint64_t forgotten_mismatch = 0;
  // Energies of the degree-sorted relabeling against the original.
  double relabel_energy_gap = 0.0;

  std::uint64_t failures = 0;
  std::vector<std::string> failure_examples;
};

struct SweepSummary {
  SweepMode mode = SweepMode::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t graphs_processed = 0;
  // Graphs skipped by connected_only.
  std::uint64_t graphs_skipped = 0;
  std::vector<BoundTally> bounds;
  ConsistencyTally consistency;
  std::uint64_t errors = 0;
  std::vector<std::string> error_examples;
  // Wall-clock time; reported separately from the deterministic summary.
  double runtime_seconds = 0.0;

  std::uint64_t violations() const;
  const BoundTally* find(std::string_view bound_id) const;
  bool passed() const { return violations() == 0 && consistency.failures == 0 && errors == 0; }
};

inline constexpr int kMaxExhaustiveOrder = 7;

// 2^(n(n-1)/2).
std::uint64_t labeled_count(int n);
// Calls `visit` with every labeled graph on n vertices in increasing edge-mask
// order (see Graph::FromUpperMask). Requires 1 <= n <= 7.
void enumerate_labeled(int n, const std::function<void(const Graph&)>& visit);

// Reads a graph6 corpus. Throws std::runtime_error if the file cannot be
// opened and ParseError (offset = 1-based line) on a malformed line.
std::vector<Graph> read_corpus(const std::string& path);

// Throws std::invalid_argument on an invalid configuration.
SweepSummary run_sweep(const SweepConfig& config);

// Every equality instance of `bound_id` in an exhaustive configuration,
// without the witness cap.
std::vector<Witness> find_equality_witnesses(SweepConfig config, const std::string& bound_id);

struct IdentitySummary {
  std::uint64_t s_identity_graphs = 0;
  double s_identity_residual = 0.0;
  double s_precursor_residual = 0.0;
  std::uint64_t polar_samples = 0;
  double polar_reconstruction = 0.0;
  double polar_orthogonality = 0.0;
  std::uint64_t kronecker_samples = 0;
  double kronecker_residual = 0.0;
  std::uint64_t von_neumann_samples = 0;
  double von_neumann_min_slack = 0.0;
  std::uint64_t am_qm_samples = 0;
  // Most negative gap (0 if none).
  double am_qm_min_gap = 0.0;
  // Constant tuples with a gap above the equality tolerance, plus
  // non-constant tuples with a gap inside it.
  std::uint64_t am_qm_equality_mismatch = 0;

  bool passed() const;
};

// S-identity on all connected labeled graphs with 2 <= n <= 5 and 20 random
// connected graphs with n <= 10; polar factors of 200 random symmetric
// matrices (n <= 8, some singular); 100 Kronecker/vec triples; 100 Von
// Neumann samples; 1000 AM-QM tuples. Only config.seed is used.
IdentitySummary identity_suite(const SweepConfig& config);

}  // namespace exen

#endif  // EXEN_ORACLE_HPP_
