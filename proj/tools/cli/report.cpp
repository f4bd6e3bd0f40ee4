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

#include "report.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>

#include "zeroscope/error.hpp"

namespace zeroscope::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool same(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same(*a, *b);
}

double number(const Json& j) { return j.is_null() ? kNaN : j.get<double>(); }

void append_double(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

bool is_flat(const Json& j) {
  if (!j.is_structured()) return true;
  if (j.size() > 8) return false;
  for (const auto& v : j) {
    if (v.is_structured()) return false;
  }
  return true;
}

void write(const Json& j, int indent, std::string& out) {
  switch (j.type()) {
    case Json::value_t::number_float:
      append_double(out, j.get<double>());
      return;
    case Json::value_t::object:
    case Json::value_t::array: {
      const bool obj = j.is_object();
      if (j.empty()) {
        out += obj ? "{}" : "[]";
        return;
      }
      const bool flat = is_flat(j);
      const std::string pad(flat ? 0 : indent + 2, ' ');
      out += obj ? '{' : '[';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) {
          out += '\n';
          out += pad;
        }
        if (obj) {
          out += Json(it.key()).dump();
          out += ": ";
        }
        write(*it, indent + 2, out);
      }
      if (!flat) {
        out += '\n';
        out.append(indent, ' ');
      }
      out += obj ? '}' : ']';
      return;
    }
    default:
      out += j.dump();
  }
}

Json head_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["version"] = r.version;
  j["config"] = r.config;
  j["seeds"] = {{"master", r.seed}, {"substreams", r.substreams}};
  return j;
}

void tail_json(const RunReport& r, Json& j) {
  j["failed_trials"] = r.failed_trials;
  j["summary"] = summary_to_json(r.summary);
  j["details"] = r.details;
  j["timestamp"] = r.timestamp;
}

void read_head_tail(const Json& j, RunReport& r) {
  r.command = j.at("command").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.config = j.at("config");
  r.seed = j.at("seeds").at("master").get<std::uint64_t>();
  r.substreams = j.at("seeds").at("substreams").get<std::vector<int>>();
  r.failed_trials = j.at("failed_trials").get<int>();
  r.summary = summary_from_json(j.at("summary"));
  r.details = j.at("details");
  r.timestamp = j.at("timestamp").get<std::string>();
}

[[noreturn]] void bad_report(const std::exception& e) {
  throw Error(ErrorCode::kInvalidArgument, std::string("malformed report: ") + e.what());
}

}  // namespace

bool operator==(const RunReport& a, const RunReport& b) {
  if (a.command != b.command || a.config != b.config || a.seed != b.seed ||
      a.substreams != b.substreams || a.trial_ids != b.trial_ids ||
      a.failed_trials != b.failed_trials || a.details != b.details || a.version != b.version ||
      a.timestamp != b.timestamp || a.values.size() != b.values.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!same(a.values[i], b.values[i])) return false;
  }
  const Summary& s = a.summary;
  const Summary& t = b.summary;
  for (int k = 0; k < 4; ++k) {
    if (!same(s.central_moments[k], t.central_moments[k])) return false;
  }
  return s.count == t.count && same(s.mean, t.mean) && same(s.variance, t.variance) &&
         same(s.ks, t.ks) && same(s.ks_midpoint, t.ks_midpoint) && same(s.skewness, t.skewness) &&
         same(s.kurtosis_excess, t.kurtosis_excess) && same(s.slope, t.slope) &&
         same(s.slope_stderr, t.slope_stderr);
}

Json summary_to_json(const Summary& s) {
  Json j;
  j["count"] = s.count;
  j["mean"] = s.mean;
  j["var"] = s.variance;
  Json m;
  for (int k = 0; k < 4; ++k) m[std::to_string(k + 3)] = s.central_moments[k];
  j["moments"] = m;
  j["ks_distance"] = s.ks;
  j["ks_midpoint"] = s.ks_midpoint;
  j["skew"] = s.skewness;
  j["kurt_excess"] = s.kurtosis_excess;
  if (s.slope) j["slope"] = *s.slope;
  if (s.slope_stderr) j["slope_stderr"] = *s.slope_stderr;
  return j;
}

Summary summary_from_json(const Json& j) {
  Summary s;
  s.count = j.at("count").get<std::size_t>();
  s.mean = number(j.at("mean"));
  s.variance = number(j.at("var"));
  for (int k = 0; k < 4; ++k) s.central_moments[k] = number(j.at("moments").at(std::to_string(k + 3)));
  s.ks = number(j.at("ks_distance"));
  s.ks_midpoint = number(j.at("ks_midpoint"));
  s.skewness = number(j.at("skew"));
  s.kurtosis_excess = number(j.at("kurt_excess"));
  if (j.contains("slope")) s.slope = number(j.at("slope"));
  if (j.contains("slope_stderr")) s.slope_stderr = number(j.at("slope_stderr"));
  return s;
}

Json to_json(const RunReport& r) {
  Json j = head_json(r);
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    rows.push_back({{"trial", r.trial_ids[i]}, {"value", r.values[i]}});
  }
  j["per_trial"] = std::move(rows);
  tail_json(r, j);
  return j;
}

RunReport from_json(const Json& j) {
  RunReport r;
  try {
    read_head_tail(j, r);
    for (const auto& row : j.at("per_trial")) {
      r.trial_ids.push_back(row.at("trial").get<std::uint64_t>());
      r.values.push_back(number(row.at("value")));
    }
  } catch (const Json::exception& e) {
    bad_report(e);
  }
  return r;
}

std::string dump(const Json& j) {
  std::string out;
  write(j, 0, out);
  out += '\n';
  return out;
}

std::string serialize_report(const RunReport& r, Format format) {
  if (r.trial_ids.size() != r.values.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one trial id per value");
  }
  if (format == Format::kJson) return dump(to_json(r));
  std::string out = "trial,value\n";
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    out += std::to_string(r.trial_ids[i]);
    out += ',';
    if (std::isnan(r.values[i])) {
      out += "nan";
    } else {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, r.values[i]);
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_sidecar(const RunReport& r) {
  Json j = head_json(r);
  tail_json(r, j);
  return dump(j);
}

RunReport parse_report(std::string_view text) {
  try {
    return from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    bad_report(e);
  }
}

RunReport parse_csv_report(std::string_view csv, std::string_view sidecar) {
  RunReport r;
  try {
    read_head_tail(Json::parse(sidecar), r);
  } catch (const Json::exception& e) {
    bad_report(e);
  }
  std::size_t pos = csv.find('\n');
  if (csv.substr(0, pos) != "trial,value") {
    throw Error(ErrorCode::kInvalidArgument, "CSV header must be 'trial,value'");
  }
  while (pos != std::string_view::npos && pos + 1 < csv.size()) {
    const std::size_t start = pos + 1;
    pos = csv.find('\n', start);
    const std::string_view line = csv.substr(start, pos - start);
    const std::size_t comma = line.find(',');
    std::uint64_t id = 0;
    double v = 0.0;
    const auto a = std::from_chars(line.data(), line.data() + comma, id);
    const auto b = std::from_chars(line.data() + comma + 1, line.data() + line.size(), v);
    if (comma == std::string_view::npos || a.ec != std::errc{} || b.ec != std::errc{} ||
        b.ptr != line.data() + line.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad CSV row '" + std::string(line) + "'");
    }
    r.trial_ids.push_back(id);
    r.values.push_back(v);
  }
  return r;
}

void write_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error(ErrorCode::kIoError, "cannot rename onto " + path + ": " + ec.message());
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace zeroscope::cli
