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

#ifndef EXEN_BOUNDS_HPP_
#define EXEN_BOUNDS_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exen/energy.hpp"
#include "exen/graph.hpp"

// Energy inequalities as uniform checks. Every bound has a stable string id,
// a catalog entry, and an evaluator producing BoundCheck records.
namespace exen {

enum class Scope { kVertex, kGraph, kPair };
enum class Status { kHolds, kEquality, kViolated, kNotApplicable };
// kUpper: lhs <= rhs, slack = rhs - lhs. kLower: lhs >= rhs, slack = lhs - rhs.
enum class Sense { kUpper, kLower };

std::string_view to_string(Scope scope);
std::string_view to_string(Status status);
std::string_view to_string(Sense sense);
std::optional<Scope> scope_from_string(std::string_view s);
std::optional<Status> status_from_string(std::string_view s);

struct Tolerances {
  // Scaled by (1 + |rhs|).
  double equality = 1e-7;
  double violation = 1e-9;
};

// kViolated if slack < -violation (scaled); otherwise kEquality if
// |slack| <= equality (scaled); otherwise kHolds. The violation test runs
// first, so a slack inside both bands is reported as violated.
Status classify(double slack, double rhs, const Tolerances& tol);

struct BoundCheck {
  std::string bound_id;
  Scope scope = Scope::kGraph;
  // Set for per-vertex checks.
  std::optional<int> vertex;
  // NaN where a side is undefined (not-applicable checks).
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  Status status = Status::kNotApplicable;
  std::string witness_note;
  std::string anchor;
  // Membership of the graph (or vertex) in the bound's stated equality
  // family; nullopt when no family is stated or the check is not applicable.
  std::optional<bool> in_family;
};

struct BoundInfo {
  std::string id;
  Scope scope;
  Sense sense;
  std::string formula;
  std::string precondition;
  std::string anchor;
  // Stated equality family; empty when none is stated.
  std::string equality_family;
};

// All registered bounds in a fixed order. Dominance comparisons have ids
// "dominance:<new>_vs_<old>".
const std::vector<BoundInfo>& bound_catalog();
const BoundInfo* find_bound(std::string_view id);

// Expands ids, "all", and trailing-'*' prefix patterns ("dominance:*") into
// catalog ids in catalog order. Throws std::invalid_argument on a pattern
// that matches nothing.
std::vector<std::string> select_bounds(std::span<const std::string> patterns);

// Per-graph evaluation state: degree profile, one shared energy analysis, and
// a lazily built context for the complement. Not thread-safe; use one
// context per worker.
class BoundContext {
 public:
  explicit BoundContext(Graph g);
  BoundContext(Graph g, EnergyAnalysis analysis);
  ~BoundContext();
  BoundContext(const BoundContext&) = delete;
  BoundContext& operator=(const BoundContext&) = delete;

  const Graph& graph() const { return graph_; }
  const DegreeProfile& profile() const { return profile_; }
  const EnergyAnalysis& analysis() const { return analysis_; }
  const EnergyReport& report() const { return analysis_.report; }
  bool connected() const { return connected_; }
  const BoundContext& complement() const;

 private:
  Graph graph_;
  DegreeProfile profile_;
  EnergyAnalysis analysis_;
  bool connected_;
  mutable std::unique_ptr<BoundContext> complement_;
};

// Ratio factor (Dmax/Dmin + Dmin/Dmax) / 2. Exactly 1 on regular graphs,
// edgeless ones included; nullopt when delta_min = 0 < delta_max.
std::optional<double> degree_ratio_factor(const DegreeProfile& p);

// Throws std::invalid_argument for an unknown id.
std::vector<BoundCheck> evaluate_bound(std::string_view id, const BoundContext& ctx,
                                       const Tolerances& tol = {});
// Concatenated results of evaluate_bound over `ids`.
std::vector<BoundCheck> evaluate_bounds(std::span<const std::string> ids, const BoundContext& ctx,
                                        const Tolerances& tol = {});

// Named entry points over the catalog.
std::vector<BoundCheck> check_vertex_upper_star(const BoundContext& ctx, const Tolerances& tol = {});
std::vector<BoundCheck> check_vertex_upper_forgotten(const BoundContext& ctx,
                                                     const Tolerances& tol = {});
std::vector<BoundCheck> check_vertex_lower(const BoundContext& ctx, const Tolerances& tol = {});
// (left, right): eps <= eps_ex <= factor * eps.
std::pair<BoundCheck, BoundCheck> check_sandwich(const BoundContext& ctx, const Tolerances& tol = {});
// (left, right): lambda_1 <= eta_1 <= factor * lambda_1.
std::pair<BoundCheck, BoundCheck> check_spectral_radius_sandwich(const BoundContext& ctx,
                                                                 const Tolerances& tol = {});
BoundCheck check_global_upper(std::string_view id, const BoundContext& ctx,
                              const Tolerances& tol = {});
BoundCheck check_ng(std::string_view id, const BoundContext& ctx, const Tolerances& tol = {});
BoundCheck check_dominance(std::string_view id, const BoundContext& ctx,
                           const Tolerances& tol = {});

}  // namespace exen

#endif  // EXEN_BOUNDS_HPP_
