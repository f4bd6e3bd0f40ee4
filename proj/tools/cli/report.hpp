// Copyright 2026 The Zeroscope Authors.
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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zeroscope/statistics.hpp"

namespace zeroscope::cli {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv };

/// Everything a subcommand writes.  `details` holds the subcommand-specific
/// tables (degree sweep, truncation rows, Wick checks).
struct RunReport {
  std::string command;
  Json config = Json::object();
  std::uint64_t seed = 0;
  std::vector<int> substreams{0};
  std::vector<std::uint64_t> trial_ids;
  std::vector<double> values;
  int failed_trials = 0;
  Summary summary;
  Json details = Json::object();
  std::string version;
  std::string timestamp;
};

/// Field-for-field; NaN equals NaN.
bool operator==(const RunReport& a, const RunReport& b);

Json summary_to_json(const Summary& s);
Summary summary_from_json(const Json& j);

Json to_json(const RunReport& r);
RunReport from_json(const Json& j);

/// Pretty JSON with doubles in shortest round-trip form (std::to_chars) and
/// NaN / infinity as null.
std::string dump(const Json& j);

/// JSON: the whole report.  CSV: header `trial,value` and one row per trial.
std::string serialize_report(const RunReport& r, Format format);
/// Report without per_trial, written next to a CSV file.
std::string serialize_sidecar(const RunReport& r);

/// Inverse of serialize_report(r, kJson).  Throws kInvalidArgument.
RunReport parse_report(std::string_view text);
/// Inverse of the CSV pair.
RunReport parse_csv_report(std::string_view csv, std::string_view sidecar);

/// Writes to a temporary file in the same directory, then renames it over
/// `path`.  Throws kIoError.
void write_atomic(const std::string& path, std::string_view content);

/// UTC, ISO 8601 to the second.
std::string utc_timestamp();

}  // namespace zeroscope::cli
