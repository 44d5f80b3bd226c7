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

#include "exen/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace exen {

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

Json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  return round_significant(x);
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double Real(const Json& j) { return j.is_null() ? kNaN : j.get<double>(); }

Json Reals(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(json_number(x));
  return a;
}

std::vector<double> RealsFrom(const Json& j) {
  std::vector<double> v;
  for (const Json& x : j) v.push_back(Real(x));
  return v;
}

Json Witnesses(const std::vector<Witness>& list) {
  Json a = Json::array();
  for (const Witness& w : list) a.push_back(to_json(w));
  return a;
}

std::vector<Witness> WitnessesFrom(const Json& j) {
  std::vector<Witness> out;
  for (const Json& w : j) out.push_back(witness_from_json(w));
  return out;
}

}  // namespace

Json to_json(const EnergyReport& r) {
  Json j;
  j["ordinary_energy"] = json_number(r.ordinary_energy);
  j["extended_energy"] = json_number(r.extended_energy);
  j["adjacency_spectral_radius"] = json_number(r.adjacency_spectral_radius);
  j["extended_spectral_radius"] = json_number(r.extended_spectral_radius);
  j["spectrum"] = Reals(r.spectrum);
  j["extended_spectrum"] = Reals(r.extended_spectrum);
  j["vertex_energies"] = Reals(r.vertex_energies);
  j["extended_vertex_energies"] = Reals(r.extended_vertex_energies);
  return j;
}

EnergyReport energy_report_from_json(const Json& j) {
  EnergyReport r;
  r.ordinary_energy = Real(j.at("ordinary_energy"));
  r.extended_energy = Real(j.at("extended_energy"));
  r.adjacency_spectral_radius = Real(j.at("adjacency_spectral_radius"));
  r.extended_spectral_radius = Real(j.at("extended_spectral_radius"));
  r.spectrum = RealsFrom(j.at("spectrum"));
  r.extended_spectrum = RealsFrom(j.at("extended_spectrum"));
  r.vertex_energies = RealsFrom(j.at("vertex_energies"));
  r.extended_vertex_energies = RealsFrom(j.at("extended_vertex_energies"));
  return r;
}

Json to_json(const BoundCheck& c) {
  Json j;
  j["bound_id"] = c.bound_id;
  j["scope"] = to_string(c.scope);
  if (c.vertex) j["vertex"] = *c.vertex;
  j["lhs"] = json_number(c.lhs);
  j["rhs"] = json_number(c.rhs);
  j["slack"] = json_number(c.slack);
  j["status"] = to_string(c.status);
  j["witness_note"] = c.witness_note;
  j["anchor"] = c.anchor;
  j["in_family"] = c.in_family ? Json(*c.in_family) : Json(nullptr);
  return j;
}

BoundCheck bound_check_from_json(const Json& j) {
  BoundCheck c;
  c.bound_id = j.at("bound_id").get<std::string>();
  const auto scope = scope_from_string(j.at("scope").get<std::string>());
  const auto status = status_from_string(j.at("status").get<std::string>());
  if (!scope || !status) throw std::invalid_argument("bound check: unknown scope or status");
  c.scope = *scope;
  c.status = *status;
  if (j.contains("vertex")) c.vertex = j.at("vertex").get<int>();
  c.lhs = Real(j.at("lhs"));
  c.rhs = Real(j.at("rhs"));
  c.slack = Real(j.at("slack"));
  c.witness_note = j.at("witness_note").get<std::string>();
  c.anchor = j.at("anchor").get<std::string>();
  if (!j.at("in_family").is_null()) c.in_family = j.at("in_family").get<bool>();
  return c;
}

Json to_json(const Witness& w) {
  Json j;
  j["index"] = w.index;
  j["graph6"] = w.graph6;
  if (w.vertex) j["vertex"] = *w.vertex;
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.index = j.at("index").get<std::uint64_t>();
  w.graph6 = j.at("graph6").get<std::string>();
  if (j.contains("vertex")) w.vertex = j.at("vertex").get<int>();
  return w;
}

Json to_json(const SweepConfig& c) {
  Json j;
  j["mode"] = to_string(c.mode);
  switch (c.mode) {
    case SweepMode::kExhaustive:
      j["n_min"] = c.n_min;
      j["n_max"] = c.n_max;
      break;
    case SweepMode::kRandom: {
      j["orders"] = c.random_orders;
      j["probabilities"] = Reals(c.probabilities);
      j["samples"] = c.samples;
      j["seed"] = c.seed;
      break;
    }
    case SweepMode::kCorpus:
      j["corpus"] = c.corpus_path;
      break;
    case SweepMode::kList:
      j["graphs"] = c.graphs.size();
      break;
  }
  j["bounds"] = c.bounds;
  j["connected_only"] = c.connected_only;
  j["complement_pairs"] = c.complement_pairs;
  j["tol_eq"] = json_number(c.tolerances.equality);
  j["tol_viol"] = json_number(c.tolerances.violation);
  j["witness_limit"] = c.witness_limit;
  return j;
}

Json to_json(const SweepSummary& s, bool include_runtime) {
  Json j;
  j["mode"] = to_string(s.mode);
  j["seed"] = s.seed;
  j["graphs_processed"] = s.graphs_processed;
  j["graphs_skipped"] = s.graphs_skipped;
  j["passed"] = s.passed();
  j["violations"] = s.violations();
  Json bounds = Json::array();
  for (const BoundTally& t : s.bounds) {
    Json b;
    b["bound_id"] = t.bound_id;
    b["evaluations"] = t.evaluations();
    b["holds"] = t.holds;
    b["equality"] = t.equality;
    b["violated"] = t.violated;
    b["not_applicable"] = t.not_applicable;
    b["worst_slack"] = json_number(t.worst_slack);
    b["worst_witness"] = t.worst ? to_json(*t.worst) : Json(nullptr);
    b["equality_outside_family"] = t.equality_outside_family;
    b["family_not_equal"] = t.family_not_equal;
    b["equality_witnesses"] = Witnesses(t.equality_witnesses);
    b["outside_family_examples"] = Witnesses(t.outside_family_examples);
    b["violation_examples"] = Witnesses(t.violation_examples);
    bounds.push_back(std::move(b));
  }
  j["bounds"] = std::move(bounds);

  const ConsistencyTally& c = s.consistency;
  Json k;
  k["failures"] = c.failures;
  k["eig_orthogonality"] = json_number(c.eig_orthogonality);
  k["eig_reconstruction"] = json_number(c.eig_reconstruction);
  k["vertex_sum"] = json_number(c.vertex_sum);
  k["weight_sums"] = json_number(c.weight_sums);
  k["weight_energy"] = json_number(c.weight_energy);
  k["min_vertex_energy"] = json_number(c.min_vertex_energy);
  k["component_locality"] = json_number(c.component_locality);
  k["regular_graphs"] = c.regular_graphs;
  k["regular_collapse_mismatch"] = c.regular_collapse_mismatch;
  k["regular_energy_gap"] = json_number(c.regular_energy_gap);
  k["bidegree_graphs"] = c.bidegree_graphs;
  k["bidegree_matrix_mismatch"] = c.bidegree_matrix_mismatch;
  k["bidegree_energy_gap"] = json_number(c.bidegree_energy_gap);
  k["forgotten_mismatch"] = c.forgotten_mismatch;
  k["relabel_energy_gap"] = json_number(c.relabel_energy_gap);
  k["failure_examples"] = c.failure_examples;
  j["consistency"] = std::move(k);

  j["errors"] = s.errors;
  j["error_examples"] = s.error_examples;
  if (include_runtime) j["runtime_seconds"] = json_number(s.runtime_seconds);
  return j;
}

SweepSummary sweep_summary_from_json(const Json& j) {
  SweepSummary s;
  const std::string mode = j.at("mode").get<std::string>();
  bool known = false;
  for (SweepMode m : {SweepMode::kExhaustive, SweepMode::kRandom, SweepMode::kCorpus,
                      SweepMode::kList}) {
    if (to_string(m) == mode) {
      s.mode = m;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("sweep summary: unknown mode '" + mode + "'");
  s.seed = j.at("seed").get<std::uint64_t>();
  s.graphs_processed = j.at("graphs_processed").get<std::uint64_t>();
  s.graphs_skipped = j.at("graphs_skipped").get<std::uint64_t>();
  for (const Json& b : j.at("bounds")) {
    BoundTally t;
    t.bound_id = b.at("bound_id").get<std::string>();
    t.holds = b.at("holds").get<std::uint64_t>();
    t.equality = b.at("equality").get<std::uint64_t>();
    t.violated = b.at("violated").get<std::uint64_t>();
    t.not_applicable = b.at("not_applicable").get<std::uint64_t>();
    t.worst_slack = Real(b.at("worst_slack"));
    if (!b.at("worst_witness").is_null()) t.worst = witness_from_json(b.at("worst_witness"));
    t.equality_outside_family = b.at("equality_outside_family").get<std::uint64_t>();
    t.family_not_equal = b.at("family_not_equal").get<std::uint64_t>();
    t.equality_witnesses = WitnessesFrom(b.at("equality_witnesses"));
    t.outside_family_examples = WitnessesFrom(b.at("outside_family_examples"));
    t.violation_examples = WitnessesFrom(b.at("violation_examples"));
    s.bounds.push_back(std::move(t));
  }
  const Json& k = j.at("consistency");
  ConsistencyTally& c = s.consistency;
  c.failures = k.at("failures").get<std::uint64_t>();
  c.eig_orthogonality = Real(k.at("eig_orthogonality"));
  c.eig_reconstruction = Real(k.at("eig_reconstruction"));
  c.vertex_sum = Real(k.at("vertex_sum"));
  c.weight_sums = Real(k.at("weight_sums"));
  c.weight_energy = Real(k.at("weight_energy"));
  c.min_vertex_energy = Real(k.at("min_vertex_energy"));
  c.component_locality = Real(k.at("component_locality"));
  c.regular_graphs = k.at("regular_graphs").get<std::uint64_t>();
  c.regular_collapse_mismatch = k.at("regular_collapse_mismatch").get<std::uint64_t>();
  c.regular_energy_gap = Real(k.at("regular_energy_gap"));
  c.bidegree_graphs = k.at("bidegree_graphs").get<std::uint64_t>();
  c.bidegree_matrix_mismatch = k.at("bidegree_matrix_mismatch").get<std::uint64_t>();
  c.bidegree_energy_gap = Real(k.at("bidegree_energy_gap"));
  c.forgotten_mismatch = k.at("forgotten_mismatch").get<std::uint64_t>();
  c.relabel_energy_gap = Real(k.at("relabel_energy_gap"));
  c.failure_examples = k.at("failure_examples").get<std::vector<std::string>>();
  s.errors = j.at("errors").get<std::uint64_t>();
  s.error_examples = j.at("error_examples").get<std::vector<std::string>>();
  if (j.contains("runtime_seconds")) s.runtime_seconds = Real(j.at("runtime_seconds"));
  return s;
}

Json to_json(const IdentitySummary& s) {
  Json j;
  j["passed"] = s.passed();
  j["s_identity_graphs"] = s.s_identity_graphs;
  j["s_identity_residual"] = json_number(s.s_identity_residual);
  j["s_precursor_residual"] = json_number(s.s_precursor_residual);
  j["polar_samples"] = s.polar_samples;
  j["polar_reconstruction"] = json_number(s.polar_reconstruction);
  j["polar_orthogonality"] = json_number(s.polar_orthogonality);
  j["kronecker_samples"] = s.kronecker_samples;
  j["kronecker_residual"] = json_number(s.kronecker_residual);
  j["von_neumann_samples"] = s.von_neumann_samples;
  j["von_neumann_min_slack"] = json_number(s.von_neumann_min_slack);
  j["am_qm_samples"] = s.am_qm_samples;
  j["am_qm_min_gap"] = json_number(s.am_qm_min_gap);
  j["am_qm_equality_mismatch"] = s.am_qm_equality_mismatch;
  return j;
}

Json to_json(const ReportDocument& d) {
  Json j;
  j["schema_version"] = d.schema_version;
  j["indexing"] = "0-based";
  j["input"] = d.input;
  if (d.graph6) j["graph6"] = *d.graph6;
  if (d.energy) j["energy"] = to_json(*d.energy);
  Json checks = Json::array();
  for (const BoundCheck& c : d.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  if (d.sweep) j["sweep"] = to_json(*d.sweep);
  return j;
}

ReportDocument report_document_from_json(const Json& j) {
  ReportDocument d;
  d.schema_version = j.at("schema_version").get<std::string>();
  if (d.schema_version != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version '" + d.schema_version + "'");
  }
  d.input = j.at("input");
  if (j.contains("graph6")) d.graph6 = j.at("graph6").get<std::string>();
  if (j.contains("energy")) d.energy = energy_report_from_json(j.at("energy"));
  for (const Json& c : j.at("checks")) d.checks.push_back(bound_check_from_json(c));
  if (j.contains("sweep")) d.sweep = sweep_summary_from_json(j.at("sweep"));
  return d;
}

Json catalog_json() {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["count"] = bound_catalog().size();
  Json list = Json::array();
  for (const BoundInfo& b : bound_catalog()) {
    Json e;
    e["bound_id"] = b.id;
    e["scope"] = to_string(b.scope);
    e["sense"] = to_string(b.sense);
    e["formula"] = b.formula;
    e["precondition"] = b.precondition;
    e["anchor"] = b.anchor;
    e["equality_family"] = b.equality_family;
    list.push_back(std::move(e));
  }
  j["bounds"] = std::move(list);
  return j;
}

std::string catalog_text() {
  std::ostringstream out;
  out << bound_catalog().size() << " bounds\n";
  for (const BoundInfo& b : bound_catalog()) {
    out << "\n" << b.id << "  [" << to_string(b.scope) << ", " << to_string(b.sense) << "]\n";
    out << "  formula:      " << b.formula << "\n";
    out << "  precondition: " << b.precondition << "\n";
    out << "  anchor:       " << b.anchor << "\n";
    if (!b.equality_family.empty()) out << "  equality:     " << b.equality_family << "\n";
  }
  return out.str();
}

std::string slacks_csv(const SweepSummary& s) {
  std::string out = "bound_id,worst_slack,witness_g6,equality_count\n";
  for (const BoundTally& t : s.bounds) {
    out += t.bound_id + ",";
    if (!std::isnan(t.worst_slack)) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", t.worst_slack);
      out += buf;
    }
    out += ",";
    if (t.worst) out += t.worst->graph6;
    out += "," + std::to_string(t.equality) + "\n";
  }
  return out;
}

}  // namespace exen
