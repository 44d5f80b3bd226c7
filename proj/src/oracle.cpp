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

#include "exen/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "exen/errors.hpp"
#include "exen/families.hpp"
#include "exen/identities.hpp"
#include "exen/random.hpp"
#include "exen/structure.hpp"

namespace exen {

std::string_view to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::kExhaustive: return "exhaustive-labeled";
    case SweepMode::kRandom: return "random-gnp";
    case SweepMode::kCorpus: return "corpus-file";
    case SweepMode::kList: return "list";
  }
  return "";
}

std::uint64_t SweepSummary::violations() const {
  std::uint64_t v = 0;
  for (const BoundTally& t : bounds) v += t.violated;
  return v;
}

const BoundTally* SweepSummary::find(std::string_view bound_id) const {
  for (const BoundTally& t : bounds) {
    if (t.bound_id == bound_id) return &t;
  }
  return nullptr;
}

std::uint64_t labeled_count(int n) {
  if (n < 1 || n > kMaxExhaustiveOrder) {
    throw std::invalid_argument("labeled enumeration supports 1 <= n <= 7");
  }
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void enumerate_labeled(int n, const std::function<void(const Graph&)>& visit) {
  const std::uint64_t count = labeled_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) visit(Graph::FromUpperMask(n, mask));
}

std::vector<Graph> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file '" + path + "'");
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return out;
}

namespace {

constexpr double kSumTolerance = 1e-9;
constexpr double kOrthogonalityTolerance = 1e-10;
constexpr double kReconstructionTolerance = 1e-9;
constexpr double kNonnegativityFloor = -1e-12;
constexpr double kRelabelTolerance = 1e-8;
constexpr std::size_t kExampleLimit = 16;
constexpr std::uint64_t kChunk = 256;

bool WitnessLess(const Witness& a, const Witness& b) {
  return std::tie(a.index, a.vertex) < std::tie(b.index, b.vertex);
}

// Keeps the `limit` smallest witnesses; compacts lazily.
void AddCapped(std::vector<Witness>& list, Witness w, std::size_t limit) {
  if (limit == 0) return;
  list.push_back(std::move(w));
  if (list.size() >= 2 * limit && list.size() > 64) {
    std::sort(list.begin(), list.end(), WitnessLess);
    list.resize(limit);
  }
}

void FinishCapped(std::vector<Witness>& list, std::size_t limit) {
  std::sort(list.begin(), list.end(), WitnessLess);
  if (list.size() > limit) list.resize(limit);
}

using Example = std::pair<std::uint64_t, std::string>;

void AddExample(std::vector<Example>& list, std::uint64_t index, std::string text) {
  list.emplace_back(index, std::move(text));
  if (list.size() >= 4 * kExampleLimit) {
    std::sort(list.begin(), list.end());
    list.resize(kExampleLimit);
  }
}

// Per-worker accumulator. Merging is commutative, so the final summary does
// not depend on how indices were distributed.
struct Partial {
  std::uint64_t processed = 0;
  std::uint64_t skipped = 0;
  std::vector<BoundTally> bounds;
  ConsistencyTally consistency;
  std::vector<Example> consistency_examples;
  std::uint64_t errors = 0;
  std::vector<Example> error_examples;
};

void MaxInto(double& into, double value) { into = std::max(into, value); }

// Index space of a sweep.
class Source {
 public:
  explicit Source(const SweepConfig& cfg) : cfg_(cfg) {
    switch (cfg.mode) {
      case SweepMode::kExhaustive:
        if (cfg.n_min < 1 || cfg.n_max > kMaxExhaustiveOrder || cfg.n_min > cfg.n_max) {
          throw std::invalid_argument("exhaustive mode needs 1 <= n_min <= n_max <= 7");
        }
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
          offsets_.push_back(total_);
          total_ += labeled_count(n);
        }
        break;
      case SweepMode::kRandom:
        if (cfg.random_orders.empty() || cfg.probabilities.empty() || cfg.samples < 0) {
          throw std::invalid_argument("random mode needs orders, probabilities and samples");
        }
        for (int n : cfg.random_orders) {
          if (n < 1) throw std::invalid_argument("random mode: order must be at least 1");
        }
        for (double p : cfg.probabilities) {
          if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability outside [0, 1]");
        }
        total_ = static_cast<std::uint64_t>(cfg.random_orders.size()) * cfg.probabilities.size() *
                 cfg.samples;
        break;
      case SweepMode::kCorpus:
        owned_ = read_corpus(cfg.corpus_path);
        total_ = owned_.size();
        break;
      case SweepMode::kList:
        total_ = cfg.graphs.size();
        break;
    }
  }

  std::uint64_t total() const { return total_; }

  Graph at(std::uint64_t index) const {
    switch (cfg_.mode) {
      case SweepMode::kExhaustive: {
        std::size_t k = offsets_.size() - 1;
        while (offsets_[k] > index) --k;
        return Graph::FromUpperMask(cfg_.n_min + static_cast<int>(k), index - offsets_[k]);
      }
      case SweepMode::kRandom: {
        const std::uint64_t combo = index / cfg_.samples;
        const std::size_t np = cfg_.probabilities.size();
        const int n = cfg_.random_orders[combo / np];
        const double p = cfg_.probabilities[combo % np];
        return families::random_gnp(n, p, stream_seed(cfg_.seed, index));
      }
      case SweepMode::kCorpus:
        return owned_[index];
      case SweepMode::kList:
        return cfg_.graphs[index];
    }
    return Graph(1);
  }

 private:
  const SweepConfig& cfg_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Graph> owned_;
  std::uint64_t total_ = 0;
};

class GraphChecker {
 public:
  GraphChecker(const SweepConfig& cfg, std::vector<std::string> ids)
      : cfg_(cfg), ids_(std::move(ids)) {}

  void Process(std::uint64_t index, const Graph& g, Partial& out) const {
    if (cfg_.connected_only && !is_connected(g)) {
      ++out.skipped;
      return;
    }
    ++out.processed;
    try {
      BoundContext ctx(g);
      CheckConsistency(index, ctx, out);
      const std::string g6 = serialize_graph6(g);
      for (std::size_t k = 0; k < ids_.size(); ++k) {
        for (const BoundCheck& c : evaluate_bound(ids_[k], ctx, cfg_.tolerances)) {
          Tally(index, g6, c, out.bounds[k]);
        }
      }
    } catch (const std::exception& e) {
      ++out.errors;
      AddExample(out.error_examples, index, serialize_graph6(g) + ": " + e.what());
    }
  }

 private:
  void Tally(std::uint64_t index, const std::string& g6, const BoundCheck& c,
             BoundTally& t) const {
    auto witness = [&] { return Witness{index, g6, c.vertex}; };
    switch (c.status) {
      case Status::kHolds: ++t.holds; break;
      case Status::kEquality:
        ++t.equality;
        AddCapped(t.equality_witnesses, witness(), cfg_.witness_limit);
        break;
      case Status::kViolated:
        ++t.violated;
        AddCapped(t.violation_examples, witness(), kExampleLimit);
        break;
      case Status::kNotApplicable: ++t.not_applicable; return;
    }
    if (c.in_family) {
      const bool eq = c.status == Status::kEquality;
      if (eq && !*c.in_family) {
        ++t.equality_outside_family;
        AddCapped(t.outside_family_examples, witness(), kExampleLimit);
      } else if (!eq && *c.in_family) {
        ++t.family_not_equal;
      }
    }
    const bool worse = !t.worst || c.slack < t.worst_slack ||
                       (c.slack == t.worst_slack &&
                        std::tie(index, c.vertex) < std::tie(t.worst->index, t.worst->vertex));
    if (worse) {
      t.worst_slack = c.slack;
      t.worst = witness();
    }
  }

  void Fail(std::uint64_t index, const Graph& g, const std::string& what, double value,
            Partial& out) const {
    ++out.consistency.failures;
    char buf[48];
    std::snprintf(buf, sizeof buf, " = %.3g", value);
    AddExample(out.consistency_examples, index, serialize_graph6(g) + ": " + what + buf);
  }

  void CheckConsistency(std::uint64_t index, const BoundContext& ctx, Partial& out) const {
    const Graph& g = ctx.graph();
    const EnergyAnalysis& a = ctx.analysis();
    const EnergyReport& r = a.report;
    ConsistencyTally& t = out.consistency;
    auto check = [&](double& slot, double value, double limit, const char* what) {
      MaxInto(slot, value);
      if (!(value <= limit)) Fail(index, g, what, value, out);
    };

    auto eigen = [&](const SymmetricMatrix& m, const EigenDecomposition& eig) {
      check(t.eig_orthogonality, orthogonality_residual(eig.vectors), kOrthogonalityTolerance,
            "eigenvector orthogonality");
      check(t.eig_reconstruction, reconstruction_residual(m, eig) / (1.0 + m.matrix().max_abs()),
            kReconstructionTolerance, "eigen reconstruction");
    };
    eigen(a.adjacency, a.adjacency_eig);
    eigen(a.extended, a.extended_eig);

    auto sum = [](const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); };
    check(t.vertex_sum, std::abs(sum(r.vertex_energies) - r.ordinary_energy), kSumTolerance,
          "vertex energy sum");
    check(t.vertex_sum, std::abs(sum(r.extended_vertex_energies) - r.extended_energy),
          kSumTolerance, "extended vertex energy sum");

    double min_energy = 0.0;
    for (double x : r.vertex_energies) min_energy = std::min(min_energy, x);
    for (double x : r.extended_vertex_energies) min_energy = std::min(min_energy, x);
    t.min_vertex_energy = std::min(t.min_vertex_energy, min_energy);
    if (min_energy < kNonnegativityFloor) Fail(index, g, "negative vertex energy", min_energy, out);

    const VertexEnergyDecomposition d = vertex_weight_decomposition(a.extended_eig);
    const int n = g.order();
    double weight_dev = 0.0;
    double energy_dev = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      double col = 0.0;
      for (int k = 0; k < n; ++k) {
        row += d.weights(i, k);
        col += d.weights(k, i);
        if (d.weights(i, k) < 0.0) weight_dev = std::max(weight_dev, -d.weights(i, k));
      }
      weight_dev = std::max({weight_dev, std::abs(row - 1.0), std::abs(col - 1.0)});
      energy_dev = std::max(energy_dev, std::abs(d.vertex_energy(i) - r.extended_vertex_energies[i]));
    }
    check(t.weight_sums, weight_dev, kSumTolerance, "weight matrix stochasticity");
    check(t.weight_energy, energy_dev, kSumTolerance, "weighted vertex energy");

    check(t.component_locality, component_locality_residual(g, r), kSumTolerance,
          "component locality");

    const DegreeProfile& p = ctx.profile();
    if (p.forgotten != forgotten_index_by_edges(g)) {
      ++t.forgotten_mismatch;
      Fail(index, g, "forgotten index formulas disagree", double(p.forgotten), out);
    }

    if (p.regular()) {
      ++t.regular_graphs;
      if (!(a.extended == a.adjacency)) {
        ++t.regular_collapse_mismatch;
        Fail(index, g, "regular graph with A_ex != A", 1.0, out);
      }
      check(t.regular_energy_gap, std::abs(r.extended_energy - r.ordinary_energy), kSumTolerance,
            "regular energy collapse");
    } else if (auto s = BidegreeScale(g)) {
      ++t.bidegree_graphs;
      if (!(a.extended.matrix() == *s * a.adjacency.matrix())) {
        ++t.bidegree_matrix_mismatch;
        Fail(index, g, "bi-degree graph with A_ex != s A", *s, out);
      }
      check(t.bidegree_energy_gap, std::abs(r.extended_energy - *s * r.ordinary_energy),
            kSumTolerance, "bi-degree energy scaling");
    }

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
    if (!std::is_sorted(perm.begin(), perm.end())) {
      const EnergyReport other = energy_report(relabel(g, perm));
      check(t.relabel_energy_gap,
            std::max(std::abs(other.ordinary_energy - r.ordinary_energy),
                     std::abs(other.extended_energy - r.extended_energy)),
            kRelabelTolerance, "relabeling invariance");
    }
  }

  // s = (a/b + b/a) / 2 when every edge joins a degree-a vertex to a
  // degree-b vertex with a != b.
  static std::optional<double> BidegreeScale(const Graph& g) {
    if (g.size() == 0) return std::nullopt;
    const Edge& first = g.edges().front();
    const int a = std::min(g.degree(first.u), g.degree(first.v));
    const int b = std::max(g.degree(first.u), g.degree(first.v));
    if (a == b) return std::nullopt;
    for (const Edge& e : g.edges()) {
      if (std::min(g.degree(e.u), g.degree(e.v)) != a ||
          std::max(g.degree(e.u), g.degree(e.v)) != b) {
        return std::nullopt;
      }
    }
    const double x = a;
    const double y = b;
    return 0.5 * (x / y + y / x);
  }

  const SweepConfig& cfg_;
  std::vector<std::string> ids_;
};

void MergeTally(BoundTally& into, BoundTally&& from, std::size_t witness_limit) {
  into.holds += from.holds;
  into.equality += from.equality;
  into.violated += from.violated;
  into.not_applicable += from.not_applicable;
  into.equality_outside_family += from.equality_outside_family;
  into.family_not_equal += from.family_not_equal;
  if (from.worst) {
    const bool take = !into.worst || from.worst_slack < into.worst_slack ||
                      (from.worst_slack == into.worst_slack && WitnessLess(*from.worst, *into.worst));
    if (take) {
      into.worst_slack = from.worst_slack;
      into.worst = std::move(from.worst);
    }
  }
  auto append = [](std::vector<Witness>& a, std::vector<Witness>& b, std::size_t limit) {
    a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    FinishCapped(a, limit);
  };
  append(into.equality_witnesses, from.equality_witnesses, witness_limit);
  append(into.outside_family_examples, from.outside_family_examples, kExampleLimit);
  append(into.violation_examples, from.violation_examples, kExampleLimit);
}

void MergeConsistency(ConsistencyTally& into, const ConsistencyTally& from) {
  MaxInto(into.eig_orthogonality, from.eig_orthogonality);
  MaxInto(into.eig_reconstruction, from.eig_reconstruction);
  MaxInto(into.vertex_sum, from.vertex_sum);
  MaxInto(into.weight_sums, from.weight_sums);
  MaxInto(into.weight_energy, from.weight_energy);
  into.min_vertex_energy = std::min(into.min_vertex_energy, from.min_vertex_energy);
  MaxInto(into.component_locality, from.component_locality);
  into.regular_graphs += from.regular_graphs;
  into.regular_collapse_mismatch += from.regular_collapse_mismatch;
  MaxInto(into.regular_energy_gap, from.regular_energy_gap);
  into.bidegree_graphs += from.bidegree_graphs;
  into.bidegree_matrix_mismatch += from.bidegree_matrix_mismatch;
  MaxInto(into.bidegree_energy_gap, from.bidegree_energy_gap);
  into.forgotten_mismatch += from.forgotten_mismatch;
  MaxInto(into.relabel_energy_gap, from.relabel_energy_gap);
  into.failures += from.failures;
}

std::vector<std::string> Finish(std::vector<Example> list) {
  std::sort(list.begin(), list.end());
  if (list.size() > kExampleLimit) list.resize(kExampleLimit);
  std::vector<std::string> out;
  for (auto& [index, text] : list) out.push_back("#" + std::to_string(index) + " " + text);
  return out;
}

BoundTally NamedTally(const std::string& id) {
  BoundTally t;
  t.bound_id = id;
  return t;
}

std::vector<std::string> SelectedIds(const SweepConfig& cfg) {
  std::vector<std::string> ids;
  for (std::string& id : select_bounds(cfg.bounds)) {
    if (cfg.complement_pairs || find_bound(id)->scope != Scope::kPair) ids.push_back(std::move(id));
  }
  if (ids.empty()) {
    throw std::invalid_argument("the selected bounds need complement pairs enabled");
  }
  return ids;
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> ids = SelectedIds(config);
  const Source source(config);
  const GraphChecker checker(config, ids);
  const std::uint64_t total = source.total();
  const int workers = static_cast<int>(
      std::clamp<std::uint64_t>(config.threads < 1 ? 1 : config.threads, 1,
                                std::max<std::uint64_t>(1, (total + kChunk - 1) / kChunk)));

  std::vector<Partial> partials(workers);
  for (Partial& p : partials) {
    for (const std::string& id : ids) p.bounds.push_back(NamedTally(id));
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;

  auto work = [&](Partial& part) {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= total) break;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) checker.Process(i, source.at(i), part);
      const std::uint64_t finished = done.fetch_add(end - begin) + (end - begin);
      if (config.progress) {
        std::lock_guard lock(progress_mutex);
        config.progress(finished, total);
      }
    }
  };
  if (workers == 1) {
    work(partials[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(partials[w]));
    for (std::thread& t : pool) t.join();
  }

  SweepSummary summary;
  summary.mode = config.mode;
  summary.seed = config.seed;
  for (const std::string& id : ids) summary.bounds.push_back(NamedTally(id));
  std::vector<Example> consistency_examples;
  std::vector<Example> error_examples;
  for (Partial& p : partials) {
    summary.graphs_processed += p.processed;
    summary.graphs_skipped += p.skipped;
    summary.errors += p.errors;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      MergeTally(summary.bounds[k], std::move(p.bounds[k]), config.witness_limit);
    }
    MergeConsistency(summary.consistency, p.consistency);
    consistency_examples.insert(consistency_examples.end(), p.consistency_examples.begin(),
                                p.consistency_examples.end());
    error_examples.insert(error_examples.end(), p.error_examples.begin(), p.error_examples.end());
  }
  summary.consistency.failure_examples = Finish(std::move(consistency_examples));
  summary.error_examples = Finish(std::move(error_examples));
  summary.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::vector<Witness> find_equality_witnesses(SweepConfig config, const std::string& bound_id) {
  if (config.mode != SweepMode::kExhaustive) {
    throw std::invalid_argument("equality witnesses need an exhaustive configuration");
  }
  const BoundInfo* info = find_bound(bound_id);
  if (info == nullptr) throw std::invalid_argument("unknown bound id: " + bound_id);
  config.bounds = {bound_id};
  config.complement_pairs = config.complement_pairs || info->scope == Scope::kPair;
  config.witness_limit = std::numeric_limits<std::size_t>::max();
  SweepSummary s = run_sweep(config);
  return std::move(s.bounds.front().equality_witnesses);
}

// ---------------------------------------------------------------------------
// Identity suite.

bool IdentitySummary::passed() const {
  return s_identity_residual <= 1e-8 && s_precursor_residual <= 1e-12 &&
         polar_reconstruction <= 1e-8 && polar_orthogonality <= 1e-10 &&
         kronecker_residual <= 1e-10 && von_neumann_min_slack >= -1e-9 && am_qm_min_gap >= -1e-12 &&
         am_qm_equality_mismatch == 0;
}

namespace {

Matrix RandomMatrix(std::mt19937_64& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = uniform(rng, -1.0, 1.0);
  }
  return m;
}

SymmetricMatrix RandomSymmetric(std::mt19937_64& rng, int n) {
  SymmetricMatrix s(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) s.set(i, j, uniform(rng, -1.0, 1.0));
  }
  return s;
}

// Y diag(signs) Y^T with Y of shape n x rank; singular when rank < n.
SymmetricMatrix LowRankSymmetric(std::mt19937_64& rng, int n, int rank, bool psd) {
  const Matrix y = RandomMatrix(rng, n, rank);
  std::vector<double> signs(rank, 1.0);
  if (!psd) {
    for (double& s : signs) s = rng() & 1 ? 1.0 : -1.0;
  }
  const Matrix m = y * Matrix::Diagonal(signs) * y.transpose();
  SymmetricMatrix s(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
  }
  return s;
}

double MaxDiff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

void SIdentity(IdentitySummary& out, const Graph& g) {
  const SIdentityResult r = verify_s_identity(g);
  if (!r.applicable) return;
  ++out.s_identity_graphs;
  MaxInto(out.s_identity_residual, r.residual);
  MaxInto(out.s_precursor_residual, r.precursor_residual);
}

}  // namespace

IdentitySummary identity_suite(const SweepConfig& config) {
  IdentitySummary out;

  for (int n = 2; n <= 5; ++n) {
    enumerate_labeled(n, [&](const Graph& g) {
      if (is_connected(g)) SIdentity(out, g);
    });
  }
  std::mt19937_64 graph_rng(stream_seed(config.seed, 1));
  for (int found = 0; found < 20;) {
    const int n = uniform_int(graph_rng, 2, 10);
    const Graph g = families::random_gnp(n, 0.5, graph_rng());
    if (!is_connected(g)) continue;
    SIdentity(out, g);
    ++found;
  }

  std::mt19937_64 rng(stream_seed(config.seed, 2));
  for (int k = 0; k < 200; ++k) {
    const int n = uniform_int(rng, 1, 8);
    const SymmetricMatrix x =
        k % 4 == 3 ? LowRankSymmetric(rng, n, uniform_int(rng, 0, n - 1), false)
                   : RandomSymmetric(rng, n);
    const OrthogonalFactor u = polar_factor(x);
    MaxInto(out.polar_reconstruction, polar_reconstruction_residual(x, u));
    MaxInto(out.polar_orthogonality, orthogonality_residual(u.matrix()));
    ++out.polar_samples;
  }

  rng.seed(stream_seed(config.seed, 3));
  for (int k = 0; k < 100; ++k) {
    const Matrix x1 = RandomMatrix(rng, 3, 3);
    const Matrix x2 = RandomMatrix(rng, 3, 3);
    const Matrix x3 = RandomMatrix(rng, 3, 3);
    const Matrix x4 = RandomMatrix(rng, 3, 3);
    double r = (kronecker(x1, x2) * kronecker(x3, x4) - kronecker(x1 * x3, x2 * x4)).max_abs();

    std::vector<double> dx(3), dy(3), ix(3), iy(3);
    for (int i = 0; i < 3; ++i) {
      dx[i] = uniform(rng, 0.5, 2.0) * (rng() & 1 ? 1.0 : -1.0);
      dy[i] = uniform(rng, 0.5, 2.0) * (rng() & 1 ? 1.0 : -1.0);
      ix[i] = 1.0 / dx[i];
      iy[i] = 1.0 / dy[i];
    }
    const Matrix kd = kronecker(Matrix::Diagonal(dx), Matrix::Diagonal(dy));
    const Matrix ki = kronecker(Matrix::Diagonal(ix), Matrix::Diagonal(iy));
    r = std::max(r, (kd * ki - Matrix::Identity(9)).max_abs());

    const std::vector<double> v2 = vec(x2);
    r = std::max(r, MaxDiff(vec(x1 * x2 * x3), kronecker(x3.transpose(), x1) * v2));

    const std::vector<double> v1 = vec(x1);
    std::vector<double> sum(v1.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = v1[i] + v2[i];
    r = std::max(r, MaxDiff(vec(x1 + x2), sum));

    MaxInto(out.kronecker_residual, r);
    ++out.kronecker_samples;
  }

  rng.seed(stream_seed(config.seed, 4));
  out.von_neumann_min_slack = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100; ++k) {
    const SymmetricMatrix x1 = RandomSymmetric(rng, 5);
    const SymmetricMatrix x2 = LowRankSymmetric(rng, 5, uniform_int(rng, 1, 5), true);
    out.von_neumann_min_slack = std::min(out.von_neumann_min_slack, von_neumann_slack(x1, x2));
    ++out.von_neumann_samples;
  }

  rng.seed(stream_seed(config.seed, 5));
  constexpr double kEqualityTolerance = 1e-12;
  for (int k = 0; k < 1000; ++k) {
    const int r = uniform_int(rng, 1, 10);
    std::vector<double> t(r);
    if (k % 10 == 0) {
      std::fill(t.begin(), t.end(), uniform(rng, 0.0, 5.0));
    } else {
      for (double& x : t) x = uniform(rng, 0.0, 5.0);
    }
    const bool constant = std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
    const double gap = am_qm_gap(t);
    out.am_qm_min_gap = std::min(out.am_qm_min_gap, gap);
    const double scale = 1.0 + std::sqrt(r * std::accumulate(t.begin(), t.end(), 0.0));
    if (constant != (std::abs(gap) <= kEqualityTolerance * scale)) ++out.am_qm_equality_mismatch;
    ++out.am_qm_samples;
  }
  return out;
}

}  // namespace exen
