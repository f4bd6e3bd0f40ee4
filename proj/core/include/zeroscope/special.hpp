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

namespace zeroscope {

/// Real dilogarithm Li_2(x) = sum_{k>=1} x^k / k^2 for -1 <= x <= 1.
double dilog(double x);

/// sum_{k=1}^{n} x^k / k^2; nullopt means the full series (dilog).
double dilog_partial(double x, std::optional<int> n);

double zeta3();

}  // namespace zeroscope
