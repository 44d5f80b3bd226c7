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

#include "exen/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

#include "exen/structure.hpp"

namespace exen {

std::string_view to_string(Scope scope) {
  switch (scope) {
    case Scope::kVertex: return "per-vertex";
    case Scope::kGraph: return "whole-graph";
    case Scope::kPair: return "graph-pair";
  }
  return "";
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kHolds: return "holds";
    case Status::kEquality: return "equality";
    case Status::kViolated: return "violated";
    case Status::kNotApplicable: return "not-applicable";
  }
  return "";
}

std::string_view to_string(Sense sense) { return sense == Sense::kUpper ? "upper" : "lower"; }

std::optional<Scope> scope_from_string(std::string_view s) {
  for (Scope x : {Scope::kVertex, Scope::kGraph, Scope::kPair}) {
    if (to_string(x) == s) return x;
  }
  return std::nullopt;
}

std::optional<Status> status_from_string(std::string_view s) {
  for (Status x : {Status::kHolds, Status::kEquality, Status::kViolated, Status::kNotApplicable}) {
    if (to_string(x) == s) return x;
  }
  return std::nullopt;
}

Status classify(double slack, double rhs, const Tolerances& tol) {
  const double scale = 1.0 + std::abs(rhs);
  if (slack < -tol.violation * scale) return Status::kViolated;
  if (std::abs(slack) <= tol.equality * scale) return Status::kEquality;
  return Status::kHolds;
}

std::optional<double> degree_ratio_factor(const DegreeProfile& p) {
  if (p.delta_min == p.delta_max) return 1.0;
  if (p.delta_min == 0) return std::nullopt;
  const double a = p.delta_max;
  const double b = p.delta_min;
  return 0.5 * (a / b + b / a);
}

BoundContext::BoundContext(Graph g) : BoundContext(g, analyze_energy(g)) {}

BoundContext::BoundContext(Graph g, EnergyAnalysis analysis)
    : graph_(std::move(g)),
      profile_(degree_profile(graph_)),
      analysis_(std::move(analysis)),
      connected_(is_connected(graph_)) {}

BoundContext::~BoundContext() = default;

const BoundContext& BoundContext::complement() const {
  if (!complement_) complement_ = std::make_unique<BoundContext>(exen::complement(graph_));
  return *complement_;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// A formula value, or the reason it is undefined.
struct Value {
  std::optional<double> value;
  std::string reason;

  static Value Of(double v) { return {v, {}}; }
  static Value Missing(std::string why) { return {std::nullopt, std::move(why)}; }
};

// ---------------------------------------------------------------------------
// Closed-form right-hand sides. All of them depend only on the degree
// profile, so dominance comparisons reuse them directly.

const char kIsolated[] = "delta_min = 0";
const char kMixedIsolated[] = "delta_min = 0 < delta_max";
const char kComplementIsolated[] = "complement has an isolated vertex (delta_max = n - 1)";

Value Factor(const DegreeProfile& p) {
  if (auto c = degree_ratio_factor(p)) return Value::Of(*c);
  return Value::Missing(kMixedIsolated);
}

Value DasI(const DegreeProfile& p) {
  const Value c = Factor(p);
  if (!c.value) return c;
  return Value::Of(*c.value * std::sqrt(2.0 * p.order() * p.edge_count));
}

Value DasII(const DegreeProfile& p) {
  if (p.delta_min < 1) return Value::Missing(kIsolated);
  const double c = *degree_ratio_factor(p);
  const double d = p.delta_min;
  return Value::Of(std::sqrt(2.0 * c) *
                   std::sqrt(p.order() * static_cast<double>(p.forgotten) / (2.0 * d * d)));
}

Value NewStarSum(const DegreeProfile& p) {
  if (p.order() < 2) return Value::Missing("n < 2");
  const Value c = Factor(p);
  if (!c.value) return c;
  const double inner = (p.order() - 2.0) * (2.0 * p.edge_count - p.delta_min - p.delta_max);
  return Value::Of(*c.value *
                   (std::sqrt(inner) + std::sqrt(double(p.delta_min)) +
                    std::sqrt(double(p.delta_max))));
}

Value NewForgotten(const DegreeProfile& p) {
  if (p.delta_min < 1) return Value::Missing(kIsolated);
  const double n = p.order();
  const double d = p.delta_min;
  return Value::Of(std::sqrt(n * p.forgotten / (2.0 * d * d) + n * p.edge_count));
}

Value KoolenMoulton(const DegreeProfile& p) {
  const double n = p.order();
  const double two_e = 2.0 * p.edge_count;
  if (two_e < n) return Value::Missing("2e < n");
  if (p.delta_min < 1) return Value::Missing(kIsolated);
  const double c = *degree_ratio_factor(p);
  const double avg = two_e / n;
  return Value::Of(c * (avg + std::sqrt(p.n_hat() * (two_e - avg * avg))));
}

Value Mm22(const DegreeProfile& p) {
  if (p.order() < 2) return Value::Missing("n < 2");
  if (p.delta_min < 1) return Value::Missing(kIsolated);
  const double c = *degree_ratio_factor(p);
  const double n = p.order();
  const double gap = std::sqrt(double(p.delta_max)) - std::sqrt(double(p.delta_min));
  return Value::Of(c * std::sqrt(2.0 * n * p.edge_count - 0.5 * n * gap * gap));
}

Value NOnly(const DegreeProfile& p) {
  const Value c = Factor(p);
  if (!c.value) return c;
  const double n = p.order();
  return Value::Of(n / 4.0 * (2.0 * *c.value) * (1.0 + std::sqrt(n)));
}

Value WangNOnly(const DegreeProfile& p) {
  if (p.order() < 9) return Value::Missing("n < 9");
  if (p.delta_min < 1) return Value::Missing(kIsolated);
  const double c2 = 2.0 * *degree_ratio_factor(p);
  const double n = p.order();
  return Value::Of(n / 8.0 * (1.0 + std::sqrt(n)) * c2 * c2);
}

// No isolated vertex in G or its complement.
std::optional<std::string> PairDegreeGap(const DegreeProfile& p) {
  if (p.delta_min < 1) return std::string(kIsolated);
  if (p.delta_max > p.order() - 2) return std::string(kComplementIsolated);
  return std::nullopt;
}

Value NgSumSplit(const DegreeProfile& p) {
  if (auto why = PairDegreeGap(p)) return Value::Missing(*why);
  const double n = p.order();
  const double nh = p.n_hat();
  const double e = p.edge_count;
  const double hi = nh - p.delta_min;
  const double lo = nh - p.delta_max;
  const double c_bar = 0.5 * (hi / lo + lo / hi);
  return Value::Of(*degree_ratio_factor(p) * std::sqrt(2.0 * n * e) +
                   c_bar * std::sqrt(n * n * nh - 2.0 * n * e));
}

Value NgSumDouble(const DegreeProfile& p) {
  if (auto why = PairDegreeGap(p)) return Value::Missing(*why);
  return Value::Of(2.0 * *degree_ratio_factor(p) * std::sqrt(2.0 * p.order() * p.edge_count));
}

Value NgWang(const DegreeProfile& p) {
  if (auto why = PairDegreeGap(p)) return Value::Missing(*why);
  const double nh = p.n_hat();
  const double dM = p.delta_max;
  const double dm = p.delta_min;
  const double x = dM * (nh - dm) / (dm * (nh - dM));
  return Value::Of(std::sqrt(2.0 * p.order() * p.edge_count) * std::sqrt(x * x + 1.0 / (x * x) + 2.0));
}

Value NgRadiusWang(const DegreeProfile& p) {
  if (p.delta_max < 1) return Value::Missing("delta_max = 0");
  if (p.delta_min > p.order() - 2) return Value::Missing("delta_min = n - 1 (complement edgeless)");
  const double n = p.order();
  const double nh = p.n_hat();
  double f_bar = 0.0;
  for (int d : p.degrees) f_bar += std::pow(nh - d, 3);
  const double dM = p.delta_max;
  const double gap = nh - p.delta_min;
  return Value::Of(p.forgotten / (n * dM * dM) + f_bar / (n * gap * gap));
}

// ---------------------------------------------------------------------------
// Check construction.

BoundCheck Make(const BoundInfo& info, double lhs, double rhs, const Tolerances& tol) {
  BoundCheck c;
  c.bound_id = info.id;
  c.scope = info.scope;
  c.anchor = info.anchor;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = info.sense == Sense::kUpper ? rhs - lhs : lhs - rhs;
  c.status = classify(c.slack, rhs, tol);
  return c;
}

BoundCheck NotApplicable(const BoundInfo& info, std::string reason, double lhs = kNaN) {
  BoundCheck c;
  c.bound_id = info.id;
  c.scope = info.scope;
  c.anchor = info.anchor;
  c.lhs = lhs;
  c.rhs = kNaN;
  c.slack = kNaN;
  c.status = Status::kNotApplicable;
  c.witness_note = std::move(reason);
  return c;
}

BoundCheck FromValue(const BoundInfo& info, double lhs, const Value& rhs, const Tolerances& tol) {
  if (!rhs.value) return NotApplicable(info, rhs.reason, lhs);
  return Make(info, lhs, *rhs.value, tol);
}

void AppendNote(BoundCheck& c, std::string_view text) {
  if (text.empty()) return;
  if (!c.witness_note.empty()) c.witness_note += "; ";
  c.witness_note += text;
}

// Records family membership; the family label goes into the note only for
// equality cases, where it classifies the witness.
void Classify(BoundCheck& c, std::optional<std::string> family_label) {
  if (c.status == Status::kNotApplicable) return;
  c.in_family = family_label.has_value();
  if (c.status != Status::kEquality) return;
  AppendNote(c, family_label ? *family_label : "outside stated family");
}

std::string SrgLabel(const SrgParameters& s) {
  return "srg(" + std::to_string(s.n) + "," + std::to_string(s.k) + "," +
         std::to_string(s.lambda) + "," + std::to_string(s.mu) + ")";
}

std::optional<std::string> RegularLabel(const Graph& g) {
  if (is_regular(g)) return "regular";
  return std::nullopt;
}

std::optional<std::string> RegularOrCompleteBipartite(const Graph& g) {
  if (is_regular(g)) return "regular";
  if (auto parts = complete_bipartite_parts(g)) {
    return "complete bipartite K_{" + std::to_string(parts->first) + "," +
           std::to_string(parts->second) + "}";
  }
  return std::nullopt;
}

std::optional<std::string> EdgelessOrMatching(const Graph& g) {
  if (g.size() == 0) return "edgeless";
  if (is_perfect_matching(g)) return "(n/2)K2";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Evaluators.

using Evaluator =
    std::function<std::vector<BoundCheck>(const BoundInfo&, const BoundContext&, const Tolerances&)>;

std::vector<BoundCheck> One(BoundCheck c) { return {std::move(c)}; }

std::vector<BoundCheck> VertexUpperStar(const BoundInfo& info, const BoundContext& ctx,
                                        const Tolerances& tol) {
  const Graph& g = ctx.graph();
  const auto c = degree_ratio_factor(ctx.profile());
  std::vector<BoundCheck> out;
  for (int i = 0; i < g.order(); ++i) {
    const double lhs = ctx.report().extended_vertex_energies[i];
    BoundCheck check = c ? Make(info, lhs, *c * std::sqrt(double(g.degree(i))), tol)
                         : NotApplicable(info, kMixedIsolated, lhs);
    check.vertex = i;
    std::optional<std::string> label;
    if (is_star_center(g, i)) {
      label = g.degree(i) == 0 ? "isolated vertex (degenerate star)" : "star center";
    }
    Classify(check, label);
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<BoundCheck> VertexUpperForgotten(const BoundInfo& info, const BoundContext& ctx,
                                             const Tolerances& tol) {
  const Graph& g = ctx.graph();
  const DegreeProfile& p = ctx.profile();
  std::vector<BoundCheck> out;
  for (int i = 0; i < g.order(); ++i) {
    const double lhs = ctx.report().extended_vertex_energies[i];
    BoundCheck check;
    if (p.delta_min < 1) {
      check = NotApplicable(info, kIsolated, lhs);
    } else {
      std::int64_t neighbour_squares = 0;
      for (Vertex j : g.neighbors(i)) {
        neighbour_squares += static_cast<std::int64_t>(g.degree(j)) * g.degree(j);
      }
      const double d = g.degree(i);
      const double four_dm2 = 4.0 * p.delta_min * p.delta_min;
      const double rhs = std::sqrt(neighbour_squares / four_dm2 + d * d * d / four_dm2 + d / 2.0);
      check = Make(info, lhs, rhs, tol);
    }
    check.vertex = i;
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<BoundCheck> VertexLower(const BoundInfo& info, const BoundContext& ctx,
                                    const Tolerances& tol) {
  const Graph& g = ctx.graph();
  const DegreeProfile& p = ctx.profile();
  std::optional<std::string> family;
  if (auto parts = complete_bipartite_parts(g);
      parts && parts->first == p.delta_max && parts->second == p.delta_max) {
    family = "K_{" + std::to_string(p.delta_max) + "," + std::to_string(p.delta_max) + "}";
  }
  std::vector<BoundCheck> out;
  for (int i = 0; i < g.order(); ++i) {
    const double lhs = ctx.report().extended_vertex_energies[i];
    BoundCheck check;
    if (p.edge_count == 0) {
      check = NotApplicable(info, "e = 0", lhs);
    } else if (p.delta_min < 1) {
      check = NotApplicable(info, kIsolated, lhs);
    } else {
      const double k = *degree_ratio_factor(p) * p.delta_max;
      check = Make(info, lhs, g.degree(i) / k, tol);
      check.witness_note = "k=" + Num(k);
      Classify(check, family);
    }
    check.vertex = i;
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<BoundCheck> SandwichLeft(const BoundInfo& info, const BoundContext& ctx,
                                     const Tolerances& tol) {
  const EnergyReport& r = ctx.report();
  BoundCheck c = Make(info, r.extended_energy, r.ordinary_energy, tol);
  Classify(c, RegularLabel(ctx.graph()));
  return One(std::move(c));
}

std::vector<BoundCheck> SandwichRight(const BoundInfo& info, const BoundContext& ctx,
                                      const Tolerances& tol) {
  const EnergyReport& r = ctx.report();
  const auto c = degree_ratio_factor(ctx.profile());
  if (!c) return One(NotApplicable(info, kMixedIsolated, r.extended_energy));
  BoundCheck check = Make(info, r.extended_energy, *c * r.ordinary_energy, tol);
  Classify(check, RegularOrCompleteBipartite(ctx.graph()));
  return One(std::move(check));
}

std::vector<BoundCheck> RadiusLeft(const BoundInfo& info, const BoundContext& ctx,
                                   const Tolerances& tol) {
  const EnergyReport& r = ctx.report();
  BoundCheck c = Make(info, r.extended_spectral_radius, r.adjacency_spectral_radius, tol);
  Classify(c, RegularLabel(ctx.graph()));
  return One(std::move(c));
}

std::vector<BoundCheck> RadiusRight(const BoundInfo& info, const BoundContext& ctx,
                                    const Tolerances& tol) {
  const EnergyReport& r = ctx.report();
  const auto c = degree_ratio_factor(ctx.profile());
  if (!c) return One(NotApplicable(info, kMixedIsolated, r.extended_spectral_radius));
  BoundCheck check =
      Make(info, r.extended_spectral_radius, *c * r.adjacency_spectral_radius, tol);
  Classify(check, RegularOrCompleteBipartite(ctx.graph()));
  return One(std::move(check));
}

// Whole-graph upper bound on eps_ex with a closed-form right-hand side and an
// optional stated equality family.
Evaluator GlobalUpper(Value (*rhs)(const DegreeProfile&),
                      std::optional<std::string> (*family)(const BoundContext&)) {
  return [rhs, family](const BoundInfo& info, const BoundContext& ctx, const Tolerances& tol) {
    BoundCheck c = FromValue(info, ctx.report().extended_energy, rhs(ctx.profile()), tol);
    if (family) Classify(c, family(ctx));
    return One(std::move(c));
  };
}

std::optional<std::string> MatchingOrEdgeless(const BoundContext& ctx) {
  return EdgelessOrMatching(ctx.graph());
}

std::optional<std::string> MatchingOnly(const BoundContext& ctx) {
  if (is_perfect_matching(ctx.graph())) return "(n/2)K2";
  return std::nullopt;
}

std::optional<std::string> KoolenMoultonFamily(const BoundContext& ctx) {
  const Graph& g = ctx.graph();
  if (is_perfect_matching(g)) return "(n/2)K2";
  if (g.size() == static_cast<long>(g.order()) * (g.order() - 1) / 2) return "complete";
  if (auto s = strongly_regular_parameters(g)) {
    const double n = s->n;
    const double target = s->k * (n - s->k) / (n - 1.0);
    if (s->lambda == s->mu && std::abs((s->k - s->mu) - target) <= 1e-9 * (1.0 + target)) {
      return SrgLabel(*s);
    }
  }
  return std::nullopt;
}

// srg(n, n/2 + sqrt(n)/2, n/4 + sqrt(n)/2, n/4 + sqrt(n)/2). K_4 matches
// with mu vacuous (no non-adjacent pairs).
std::optional<std::string> NOnlyFamily(const BoundContext& ctx) {
  const Graph& g = ctx.graph();
  const double n = g.order();
  const double r = std::sqrt(n);
  const double k = n / 2 + r / 2;
  const double lm = n / 4 + r / 2;
  auto near = [](double a, double b) { return std::abs(a - b) < 1e-9; };
  if (auto s = strongly_regular_parameters(g)) {
    if (near(s->k, k) && near(s->lambda, lm) && near(s->mu, lm)) return SrgLabel(*s);
  } else if (g.order() > 1 && g.size() == static_cast<long>(g.order()) * (g.order() - 1) / 2 &&
             near(n - 1, k) && near(n - 2, lm)) {
    return "complete graph K_" + std::to_string(g.order()) + " (mu vacuous)";
  }
  return std::nullopt;
}

std::string NHatNote(const BoundContext& ctx) {
  return "n_hat=" + std::to_string(ctx.profile().n_hat());
}

// eps_ex(G) >= eps_ex(complement), with the violation tolerance absorbing
// eigensolver noise on self-complementary graphs.
bool EnergyOrdered(const BoundContext& ctx, const Tolerances& tol) {
  const double a = ctx.report().extended_energy;
  const double b = ctx.complement().report().extended_energy;
  return a >= b - tol.violation * (1.0 + b);
}

double PairEnergy(const BoundContext& ctx) {
  return ctx.report().extended_energy + ctx.complement().report().extended_energy;
}

double PairRadius(const BoundContext& ctx) {
  return ctx.report().extended_spectral_radius + ctx.complement().report().extended_spectral_radius;
}

std::vector<BoundCheck> NgSumSplitEval(const BoundInfo& info, const BoundContext& ctx,
                                       const Tolerances& tol) {
  BoundCheck c = FromValue(info, PairEnergy(ctx), NgSumSplit(ctx.profile()), tol);
  AppendNote(c, NHatNote(ctx));
  return One(std::move(c));
}

std::vector<BoundCheck> NgSumDoubleEval(const BoundInfo& info, const BoundContext& ctx,
                                        const Tolerances& tol) {
  const double lhs = PairEnergy(ctx);
  if (auto why = PairDegreeGap(ctx.profile())) {
    BoundCheck c = NotApplicable(info, *why, lhs);
    AppendNote(c, NHatNote(ctx));
    return One(std::move(c));
  }
  if (!EnergyOrdered(ctx, tol)) {
    BoundCheck c = NotApplicable(info, "eps_ex(G) < eps_ex(complement)", lhs);
    AppendNote(c, NHatNote(ctx));
    return One(std::move(c));
  }
  BoundCheck c = FromValue(info, lhs, NgSumDouble(ctx.profile()), tol);
  AppendNote(c, NHatNote(ctx));
  return One(std::move(c));
}

std::vector<BoundCheck> NgWangEval(const BoundInfo& info, const BoundContext& ctx,
                                   const Tolerances& tol) {
  const double lhs = PairEnergy(ctx);
  const DegreeProfile& p = ctx.profile();
  std::vector<std::string> failed;
  if (!ctx.connected()) failed.push_back("G disconnected");
  if (p.delta_min < 1) failed.push_back("G has an isolated vertex");
  if (p.delta_max > p.order() - 2) failed.push_back("complement has an isolated vertex");
  if (!EnergyOrdered(ctx, tol)) failed.push_back("eps_ex(G) < eps_ex(complement)");
  if (!failed.empty()) {
    std::string why;
    for (const auto& f : failed) why += (why.empty() ? "" : ", ") + f;
    BoundCheck c = NotApplicable(info, why, lhs);
    AppendNote(c, NHatNote(ctx));
    return One(std::move(c));
  }
  BoundCheck c = FromValue(info, lhs, NgWang(p), tol);
  AppendNote(c, NHatNote(ctx));
  return One(std::move(c));
}

std::optional<std::string> BothConnected(const BoundContext& ctx) {
  if (!ctx.connected()) return "G disconnected";
  if (!ctx.complement().connected()) return "complement disconnected";
  return std::nullopt;
}

std::vector<BoundCheck> NgRadiusLowerEval(const BoundInfo& info, const BoundContext& ctx,
                                          const Tolerances& tol) {
  const double lhs = PairRadius(ctx);
  BoundCheck c = BothConnected(ctx) ? NotApplicable(info, *BothConnected(ctx), lhs)
                                    : Make(info, lhs, ctx.profile().n_hat(), tol);
  AppendNote(c, NHatNote(ctx));
  return One(std::move(c));
}

std::vector<BoundCheck> NgRadiusWangEval(const BoundInfo& info, const BoundContext& ctx,
                                         const Tolerances& tol) {
  BoundCheck c = FromValue(info, PairRadius(ctx), NgRadiusWang(ctx.profile()), tol);
  Classify(c, RegularLabel(ctx.graph()));
  AppendNote(c, NHatNote(ctx));
  return One(std::move(c));
}

std::vector<BoundCheck> NgEnergyLowerEval(const BoundInfo& info, const BoundContext& ctx,
                                          const Tolerances& tol) {
  const double lhs = PairEnergy(ctx);
  BoundCheck c = BothConnected(ctx) ? NotApplicable(info, *BothConnected(ctx), lhs)
                                    : Make(info, lhs, 2.0 * ctx.profile().n_hat(), tol);
  AppendNote(c, NHatNote(ctx));
  return One(std::move(c));
}

// Formula-level comparison of two right-hand sides. For upper bounds lhs is
// the new bound and rhs the old one; for the lower pair lhs is the new bound.
Evaluator Dominance(Value (*new_rhs)(const DegreeProfile&),
                    Value (*old_rhs)(const DegreeProfile&)) {
  return [new_rhs, old_rhs](const BoundInfo& info, const BoundContext& ctx,
                            const Tolerances& tol) {
    const Value a = new_rhs(ctx.profile());
    const Value b = old_rhs(ctx.profile());
    if (!a.value) return One(NotApplicable(info, a.reason));
    if (!b.value) return One(NotApplicable(info, b.reason));
    return One(Make(info, *a.value, *b.value, tol));
  };
}

Value NHat(const DegreeProfile& p) {
  if (p.delta_max < 1) return Value::Missing("delta_max = 0");
  if (p.delta_min > p.order() - 2) return Value::Missing("delta_min = n - 1 (complement edgeless)");
  return Value::Of(p.n_hat());
}

Value NOnlyLarge(const DegreeProfile& p) {
  if (p.order() < 9) return Value::Missing("n < 9");
  if (p.delta_min < 1) return Value::Missing(kIsolated);
  return NOnly(p);
}

struct Entry {
  BoundInfo info;
  Evaluator eval;
};

const std::vector<Entry>& Registry() {
  static const std::vector<Entry> registry = [] {
    const auto S = Scope::kVertex;
    const auto G = Scope::kGraph;
    const auto P = Scope::kPair;
    const auto U = Sense::kUpper;
    const auto L = Sense::kLower;
    std::vector<Entry> r;
    auto add = [&r](BoundInfo info, Evaluator eval) {
      r.push_back({std::move(info), std::move(eval)});
    };

    add({"vertex_upper_star", S, U, "eps_ex_i <= c * sqrt(d_i)",
         "delta_min >= 1, or G edgeless", "Theorem ubexvertex",
         "component of i is a star centered at i"},
        VertexUpperStar);
    add({"vertex_upper_forgotten", S, U,
         "eps_ex_i <= sqrt(sum_{j~i} d_j^2 / (4 dm^2) + d_i^3 / (4 dm^2) + d_i / 2)",
         "delta_min >= 1", "Theorem ubdvertexfth", ""},
        VertexUpperForgotten);
    add({"vertex_lower", S, L, "eps_ex_i >= d_i / k, k = c * dM", "e > 0 and delta_min >= 1",
         "vertex lower bound theorem (eps_ex_i >= d_i/k)", "G is K_{dM,dM}"},
        VertexLower);
    add({"sandwich_left", G, L, "eps_ex >= eps", "none", "relation AAexRelation (left)",
         "regular"},
        SandwichLeft);
    add({"sandwich_right", G, U, "eps_ex <= c * eps", "delta_min >= 1, or G edgeless",
         "relation AAexRelation (right)", "regular or complete bipartite"},
        SandwichRight);
    add({"radius_left", G, L, "eta_1 >= lambda_1", "none", "Lemma lbdsprth (left)", "regular"},
        RadiusLeft);
    add({"radius_right", G, U, "eta_1 <= c * lambda_1", "delta_min >= 1, or G edgeless",
         "Lemma lbdsprth (right)", "complete bipartite or regular"},
        RadiusRight);
    add({"das_i", G, U, "eps_ex <= c * sqrt(2ne)", "delta_min >= 1, or G edgeless",
         "Lemma dg17ubd (i), Theorem mcbdex", "edgeless or (n/2)K2"},
        GlobalUpper(DasI, MatchingOrEdgeless));
    add({"das_ii", G, U, "eps_ex <= sqrt(2c) * sqrt(nF / (2 dm^2))", "delta_min >= 1",
         "Lemma dg17ubd (ii)", ""},
        GlobalUpper(DasII, nullptr));
    add({"new_star_sum", G, U, "eps_ex <= c * (sqrt((n-2)(2e-dm-dM)) + sqrt(dm) + sqrt(dM))",
         "n >= 2 and (delta_min >= 1, or G edgeless)", "Theorem ubtexenergy, Theorem ub3ex",
         "edgeless or (n/2)K2"},
        GlobalUpper(NewStarSum, MatchingOrEdgeless));
    add({"new_forgotten", G, U, "eps_ex <= sqrt(nF / (2 dm^2) + ne)", "delta_min >= 1",
         "Theorem ubdexfth", ""},
        GlobalUpper(NewForgotten, nullptr));
    add({"koolen_moulton_ex", G, U, "eps_ex <= c * (2e/n + sqrt(n_hat (2e - (2e/n)^2)))",
         "2e >= n and delta_min >= 1", "Theorem kmex",
         "(n/2)K2, K_n, or srg with nontrivial eigenvalues +-sqrt((2e - (2e/n)^2) / n_hat)"},
        GlobalUpper(KoolenMoulton, KoolenMoultonFamily));
    add({"mm22_ex", G, U, "eps_ex <= c * sqrt(2ne - (n/2)(sqrt(dM) - sqrt(dm))^2)",
         "n >= 2 and delta_min >= 1", "Theorem ub4ex", "(n/2)K2"},
        GlobalUpper(Mm22, MatchingOnly));
    add({"n_only_ex", G, U, "eps_ex <= (n/4) * 2c * (1 + sqrt(n))",
         "delta_min >= 1, or G edgeless", "Theorem ub5ex",
         "srg(n, n/2 + sqrt(n)/2, n/4 + sqrt(n)/2, n/4 + sqrt(n)/2)"},
        GlobalUpper(NOnly, NOnlyFamily));
    add({"wang_n_only", G, U, "eps_ex <= (n/8) * (1 + sqrt(n)) * (2c)^2",
         "n >= 9 and delta_min >= 1", "Lemma ubdexthn1", ""},
        GlobalUpper(WangNOnly, nullptr));
    add({"ng_sum_split", P, U,
         "eps_ex(G) + eps_ex(Gc) <= c sqrt(2ne) + c_bar sqrt(n^2 n_hat - 2ne)",
         "no isolated vertices in G and complement", "Theorem ubexnorgod", ""},
        NgSumSplitEval);
    add({"ng_sum_double", P, U, "eps_ex(G) + eps_ex(Gc) <= 2c * sqrt(2ne)",
         "no isolated vertices in G and complement; eps_ex(G) >= eps_ex(complement)",
         "Theorem ubexnorgod2", ""},
        NgSumDoubleEval);
    add({"ng_wang", P, U,
         "eps_ex(G) + eps_ex(Gc) <= sqrt(2ne) * sqrt(X^2 + X^-2 + 2), "
         "X = dM (n_hat - dm) / (dm (n_hat - dM))",
         "G connected; no isolated vertices in G and complement; "
         "eps_ex(G) >= eps_ex(complement)",
         "Lemma ubexnorgod1", ""},
        NgWangEval);
    add({"ng_radius_lower", P, L, "eta_1(G) + eta_1(Gc) >= n_hat", "G and complement connected",
         "Theorem lbdngsr1", ""},
        NgRadiusLowerEval);
    add({"ng_radius_wang", P, L,
         "eta_1(G) + eta_1(Gc) >= F / (n dM^2) + F_bar / (n (n_hat - dm)^2)",
         "delta_max >= 1 and delta_min <= n - 2", "Lemma lbdngsr",
         "regular (stated as sufficient)"},
        NgRadiusWangEval);
    add({"ng_energy_lower", P, L, "eps_ex(G) + eps_ex(Gc) >= 2 n_hat",
         "G and complement connected", "Theorem norgad3", ""},
        NgEnergyLowerEval);

    add({"dominance:new_star_sum_vs_das_i", G, U, "new_star_sum rhs <= das_i rhs",
         "n >= 2 and (delta_min >= 1, or G edgeless)", "remark after Theorem ubtexenergy", ""},
        Dominance(NewStarSum, DasI));
    add({"dominance:new_forgotten_vs_das_ii", G, U, "new_forgotten rhs <= das_ii rhs",
         "delta_min >= 1", "remark after Theorem ubdexfth", ""},
        Dominance(NewForgotten, DasII));
    add({"dominance:n_only_ex_vs_wang_n_only", G, U, "n_only_ex rhs <= wang_n_only rhs",
         "n >= 9 and delta_min >= 1", "remark after Lemma ubdexthn1", ""},
        Dominance(NOnlyLarge, WangNOnly));
    add({"dominance:ng_sum_double_vs_ng_wang", P, U, "ng_sum_double rhs <= ng_wang rhs",
         "no isolated vertices in G and complement", "remark after Theorem ubexnorgod2", ""},
        Dominance(NgSumDouble, NgWang));
    add({"dominance:ng_radius_lower_vs_ng_radius_wang", P, L,
         "n_hat >= ng_radius_wang rhs", "delta_max >= 1 and delta_min <= n - 2",
         "remark after Theorem lbdngsr1", ""},
        Dominance(NHat, NgRadiusWang));
    return r;
  }();
  return registry;
}

const Entry& Lookup(std::string_view id) {
  for (const Entry& e : Registry()) {
    if (e.info.id == id) return e;
  }
  throw std::invalid_argument("unknown bound id: " + std::string(id));
}

BoundCheck Single(std::string_view id, Scope scope, const BoundContext& ctx,
                  const Tolerances& tol) {
  const Entry& e = Lookup(id);
  if (e.info.scope != scope) {
    throw std::invalid_argument("bound " + std::string(id) + " has scope " +
                                std::string(to_string(e.info.scope)));
  }
  return e.eval(e.info, ctx, tol).front();
}

}  // namespace

const std::vector<BoundInfo>& bound_catalog() {
  static const std::vector<BoundInfo> catalog = [] {
    std::vector<BoundInfo> out;
    for (const Entry& e : Registry()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

const BoundInfo* find_bound(std::string_view id) {
  for (const BoundInfo& b : bound_catalog()) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

std::vector<std::string> select_bounds(std::span<const std::string> patterns) {
  std::vector<bool> picked(bound_catalog().size(), false);
  for (const std::string& pat : patterns) {
    bool any = false;
    for (std::size_t k = 0; k < bound_catalog().size(); ++k) {
      const std::string& id = bound_catalog()[k].id;
      bool match = pat == "all" || id == pat;
      if (!match && !pat.empty() && pat.back() == '*') {
        match = std::string_view(id).starts_with(std::string_view(pat).substr(0, pat.size() - 1));
      }
      if (match) picked[k] = any = true;
    }
    if (!any) throw std::invalid_argument("no bound matches '" + pat + "'");
  }
  std::vector<std::string> out;
  for (std::size_t k = 0; k < picked.size(); ++k) {
    if (picked[k]) out.push_back(bound_catalog()[k].id);
  }
  return out;
}

std::vector<BoundCheck> evaluate_bound(std::string_view id, const BoundContext& ctx,
                                       const Tolerances& tol) {
  const Entry& e = Lookup(id);
  return e.eval(e.info, ctx, tol);
}

std::vector<BoundCheck> evaluate_bounds(std::span<const std::string> ids, const BoundContext& ctx,
                                        const Tolerances& tol) {
  std::vector<BoundCheck> out;
  for (const std::string& id : ids) {
    auto part = evaluate_bound(id, ctx, tol);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<BoundCheck> check_vertex_upper_star(const BoundContext& ctx, const Tolerances& tol) {
  return evaluate_bound("vertex_upper_star", ctx, tol);
}

std::vector<BoundCheck> check_vertex_upper_forgotten(const BoundContext& ctx,
                                                     const Tolerances& tol) {
  return evaluate_bound("vertex_upper_forgotten", ctx, tol);
}

std::vector<BoundCheck> check_vertex_lower(const BoundContext& ctx, const Tolerances& tol) {
  return evaluate_bound("vertex_lower", ctx, tol);
}

std::pair<BoundCheck, BoundCheck> check_sandwich(const BoundContext& ctx, const Tolerances& tol) {
  return {evaluate_bound("sandwich_left", ctx, tol).front(),
          evaluate_bound("sandwich_right", ctx, tol).front()};
}

std::pair<BoundCheck, BoundCheck> check_spectral_radius_sandwich(const BoundContext& ctx,
                                                                 const Tolerances& tol) {
  return {evaluate_bound("radius_left", ctx, tol).front(),
          evaluate_bound("radius_right", ctx, tol).front()};
}

BoundCheck check_global_upper(std::string_view id, const BoundContext& ctx,
                              const Tolerances& tol) {
  if (id.starts_with("dominance:")) throw std::invalid_argument("not a bound: " + std::string(id));
  return Single(id, Scope::kGraph, ctx, tol);
}

BoundCheck check_ng(std::string_view id, const BoundContext& ctx, const Tolerances& tol) {
  if (!id.starts_with("ng_")) throw std::invalid_argument("not a pair bound: " + std::string(id));
  return Single(id, Scope::kPair, ctx, tol);
}

BoundCheck check_dominance(std::string_view id, const BoundContext& ctx, const Tolerances& tol) {
  if (!id.starts_with("dominance:")) {
    throw std::invalid_argument("not a dominance pair: " + std::string(id));
  }
  const Entry& e = Lookup(id);
  return e.eval(e.info, ctx, tol).front();
}

}  // namespace exen
