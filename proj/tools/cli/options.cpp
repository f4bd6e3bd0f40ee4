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

#include "options.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "zeroscope/error.hpp"

namespace zeroscope::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": not an integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::kIoError, "cannot read config file " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int number = 0;
  while (std::getline(f, line)) {
    ++number;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto eq = s.find('=');
    const std::string_view key = eq == std::string_view::npos ? s : trim(s.substr(0, eq));
    if (eq == std::string_view::npos || key.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  path + ":" + std::to_string(number) + ": expected key=value");
    }
    std::string k(key);
    if (k.starts_with("--")) k.erase(0, 2);
    if (std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.first == k; })) {
      throw Error(ErrorCode::kInvalidArgument, path + ": repeated key '" + k + "'");
    }
    entries.emplace_back(std::move(k), std::string(trim(s.substr(eq + 1))));
  }
  return entries;
}

std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw Error(ErrorCode::kInvalidArgument, "--config needs a path");
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].starts_with("--config=")) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (!path) return args;
  if (args.size() < 2 || args[1].starts_with("-")) {
    throw Error(ErrorCode::kInvalidArgument, "the subcommand must come first when --config is used");
  }
  std::vector<std::string> injected;
  for (const auto& [key, value] : read_config_file(*path)) {
    if (key == "config") throw Error(ErrorCode::kInvalidArgument, "config files cannot nest");
    if (key.size() == 1) {
      injected.push_back("-" + key);
      injected.push_back(value);
    } else {
      injected.push_back("--" + key + "=" + value);
    }
  }
  args.insert(args.begin() + 2, injected.begin(), injected.end());
  return args;
}

int resolve_threads(std::optional<int> flag) {
  int threads = 0;
  if (flag) {
    threads = *flag;
  } else if (const char* env = std::getenv("ZEROSCOPE_THREADS"); env != nullptr && *env != '\0') {
    threads = parse_int(trim(env), "ZEROSCOPE_THREADS");
  } else {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  if (threads < 1) throw Error(ErrorCode::kInvalidArgument, "thread count must be >= 1");
  return threads;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(trim(text.substr(start, comma - start)), "list"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace zeroscope::cli
