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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zeroscope::cli {

/// Flat `key=value` lines; blank lines and lines starting with '#' are
/// skipped.  Throws kIoError or kInvalidArgument (malformed or repeated key).
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// Removes `--config PATH` from args and inserts the file's entries as
/// `--key=value` (or `-k value` for one-letter keys) right after the
/// subcommand, so later command-line flags take precedence.
std::vector<std::string> expand_config(std::vector<std::string> args);

/// --threads if given, else ZEROSCOPE_THREADS, else the hardware concurrency.
/// Throws kInvalidArgument for values below 1.
int resolve_threads(std::optional<int> flag);

/// "64,128,256" -> {64, 128, 256}.  Throws kInvalidArgument.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace zeroscope::cli
