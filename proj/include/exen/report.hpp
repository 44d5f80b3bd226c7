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

#ifndef EXEN_REPORT_HPP_
#define EXEN_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "exen/bounds.hpp"
#include "exen/energy.hpp"
#include "exen/oracle.hpp"
#include "json.hpp"

// JSON / CSV / text serialization. Real numbers are rounded to 12
// significant digits; NaN becomes null.
namespace exen {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

double round_significant(double x, int digits = 12);
Json json_number(double x);

Json to_json(const EnergyReport& r);
EnergyReport energy_report_from_json(const Json& j);

Json to_json(const BoundCheck& c);
BoundCheck bound_check_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const SweepConfig& c);
// Runtime is omitted unless requested so that identical sweeps serialize to
// identical bytes.
Json to_json(const SweepSummary& s, bool include_runtime = false);
SweepSummary sweep_summary_from_json(const Json& j);

Json to_json(const IdentitySummary& s);

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  // e.g. {"kind": "graph6", "value": "A_"} or a sweep configuration.
  Json input = Json::object();
  std::optional<std::string> graph6;
  std::optional<EnergyReport> energy;
  std::vector<BoundCheck> checks;
  std::optional<SweepSummary> sweep;
};

Json to_json(const ReportDocument& d);
// Throws nlohmann::json::exception on a malformed document and
// std::invalid_argument on an unsupported schema_version.
ReportDocument report_document_from_json(const Json& j);

Json catalog_json();
std::string catalog_text();

// Columns bound_id,worst_slack,witness_g6,equality_count.
std::string slacks_csv(const SweepSummary& s);

}  // namespace exen

#endif  // EXEN_REPORT_HPP_
