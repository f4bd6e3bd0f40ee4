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

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "zeroscope/error.hpp"
#include "zeroscope/sampler.hpp"
#include "zeroscope/statistics.hpp"

namespace zeroscope {
namespace {

constexpr double kResidualCertificate = 1e-8;

struct TrialOutcome {
  bool ok = false;
  bool full_count = false;
  std::vector<double> values;
};

TrialOutcome run_trial(const CampaignConfig& config, std::uint64_t trial) {
  TrialOutcome out;
  const Model& model = config.model;
  ZeroSet zs;
  try {
    const SeedPath seed{config.seed, trial, 0};
    if (model.dimension() == 2) {
      const SectionSample p = sample_section(model, seed);
      const SectionSample q = sample_section(model, seed.with_substream(1));
      zs = common_zeros(p, q);
      out.full_count = zs.size() == zs.degree_expected;
      // Boundary-degenerate draws (lost or extra solutions) are excluded.
      if (zs.size() + zs.at_infinity != zs.degree_expected || zs.dropped > 0) return out;
    } else {
      zs = zeros_of(sample_section(model, seed));
    }
  } catch (const Error& e) {
    if (!e.is_numerical()) throw;
    return out;
  }
  if (!(zs.max_residual <= kResidualCertificate)) return out;
  out.values.reserve(config.statistics.size());
  for (const auto& s : config.statistics) {
    out.values.push_back(s.kind == StatisticKind::kSmooth
                             ? smooth_statistic(zs, s.phi, model.dimension())
                             : static_cast<double>(numerical_statistic(zs, s.region)));
  }
  out.ok = true;
  return out;
}

}  // namespace

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (!failed.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  if (config.statistics.empty()) throw Error(ErrorCode::kInvalidArgument, "no statistic requested");
  std::vector<TrialOutcome> outcomes(config.trials);
  parallel_for(outcomes.size(), config.threads,
               [&](std::size_t t) { outcomes[t] = run_trial(config, t); });

  CampaignResult result;
  result.trials = config.trials;
  result.reports.resize(config.statistics.size());
  for (std::size_t s = 0; s < config.statistics.size(); ++s) {
    result.reports[s].statistic = config.statistics[s].label();
  }
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    if (outcomes[t].full_count) ++result.full_count_trials;
    if (!outcomes[t].ok) {
      ++result.failed_trials;
      continue;
    }
    for (std::size_t s = 0; s < result.reports.size(); ++s) {
      result.reports[s].values.push_back(outcomes[t].values[s]);
      result.reports[s].trial_ids.push_back(t);
    }
  }
  for (auto& r : result.reports) {
    r.failed_trials = result.failed_trials;
    r.summary = summarize(r.values);
  }
  if (result.failed_trials * 100 > config.trials) {
    throw Error(ErrorCode::kSolverFailureRate,
                std::to_string(result.failed_trials) + " of " + std::to_string(config.trials) +
                    " trials failed");
  }
  return result;
}

}  // namespace zeroscope
