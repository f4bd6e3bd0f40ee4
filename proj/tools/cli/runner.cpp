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

#include "runner.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <numeric>

#include <CLI11.hpp>

#include "options.hpp"
#include "zeroscope/chaos.hpp"
#include "zeroscope/error.hpp"
#include "zeroscope/gaussian.hpp"
#include "zeroscope/kernels.hpp"
#include "zeroscope/sampler.hpp"
#include "zeroscope/solver.hpp"
#include "zeroscope/statistics.hpp"
#include "zeroscope/version.hpp"
#include "zeroscope/wick.hpp"

namespace zeroscope::cli {
namespace {

constexpr double kWickTolerance = 1e-10;
constexpr double kRhoTolerance = 1e-10;
constexpr double kBergmanTolerance = 1e-9;
constexpr double kFieldCovSigmas = 5.0;
constexpr int kFieldCovChunk = 1000;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); }

ModelKind model_kind(const std::string& name) {
  const auto kind = parse_model_kind(name);
  if (!kind) invalid("unknown model '" + name + "'");
  return *kind;
}

Model make_model(const RunConfig& c, int degree) {
  const ModelKind kind = model_kind(c.model);
  return c.domain_radius ? Model(kind, degree, *c.domain_radius) : Model(kind, degree);
}

// Fills the subcommand-dependent defaults.
RunConfig resolved(RunConfig c) {
  const std::string& s = c.subcommand;
  if (c.model.empty()) c.model = s == "kernel-scaling" ? "all" : s == "intersect" ? "product" : "elliptic";
  if (c.degree == 0) c.degree = s == "field-cov" ? 10 : s == "chaos" ? 128 : 0;
  if (c.degrees.empty() && s == "kernel-scaling") c.degrees = "10,100";
  if (c.trials == 0) {
    c.trials = s == "field-cov" ? 100000 : s == "chaos" ? 4000 : s == "intersect" ? 500 : 1000;
  }
  if (s == "intersect" && c.stat.empty()) c.stat = "numerical";
  if (c.stat.empty()) c.stat = "smooth";
  if (c.region.empty()) c.region = c.model == "product" ? "pdisk:0:1:0:1" : "disk:0:1";
  return c;
}

StatisticSpec statistic_of(const RunConfig& c) {
  return c.stat == "smooth" ? StatisticSpec::smooth(parse_test_function(c.phi))
                            : StatisticSpec::numerical(parse_region(c.region));
}

Json point_json(const ChartPoint& p, int dimension) {
  Json j = Json::array({p.z.real(), p.z.imag()});
  if (dimension == 2) {
    j.push_back(p.w.real());
    j.push_back(p.w.imag());
  }
  return j;
}

RunReport new_report(const RunConfig& c) {
  RunReport r;
  r.command = c.subcommand;
  r.seed = c.seed;
  r.version = kVersion;
  r.timestamp = utc_timestamp();
  return r;
}

void fill_from(RunReport& r, const ExperimentReport& e) {
  r.values = e.values;
  r.trial_ids = e.trial_ids;
  r.failed_trials = e.failed_trials;
  r.summary = e.summary;
}

void set_checks(RunReport& r, bool passed) { r.details["checks_passed"] = passed; }

// ---------------------------------------------------------------------------

RunReport wick_verify(const RunConfig& c) {
  RunReport r = new_report(c);
  r.config = {{"max_order", c.max_order}, {"max_vertices", c.max_vertices}, {"matrices", c.matrices},
              {"seed", c.seed}};
  Json rows = Json::array();
  bool passed = true;
  double worst = 0.0;
  std::uint64_t row = 0;
  for (int p = 1; p <= c.max_vertices; ++p) {
    std::vector<CMatrix> mats;
    for (int m = 0; m < c.matrices; ++m) {
      mats.push_back(random_correlation_matrix(p, SeedPath{c.seed, static_cast<std::uint64_t>(p),
                                                           static_cast<std::uint64_t>(m)}));
    }
    // All tuples of positive entries with total <= max_order, lexicographic.
    std::vector<int> alphas(p, 1);
    auto advance = [&]() {
      for (int k = p - 1; k >= 0; --k) {
        ++alphas[k];
        if (std::accumulate(alphas.begin(), alphas.end(), 0) <= c.max_order) return true;
        alphas[k] = 1;
      }
      return false;
    };
    if (p > c.max_order) break;
    do {
      double diff = 0.0;
      for (const auto& rho : mats) {
        diff = std::max(diff, std::abs(wick::wick_moment(alphas, rho) -
                                       wick::wick_moment_isserlis(alphas, rho)));
      }
      const std::size_t count = wick::count_diagrams(alphas);
      Json j = {{"alphas", alphas}, {"diagram_count", count}, {"max_abs_diff", diff}};
      bool ok = diff <= kWickTolerance;
      if (p == 1) ok = ok && count == 0;
      if (p == 2) {
        std::int64_t expected = 0;
        if (alphas[0] == alphas[1]) {
          std::int64_t fact = 1;
          for (int k = 2; k <= alphas[0]; ++k) fact *= k;
          expected = fact * fact;
        }
        j["expected_count"] = expected;
        ok = ok && static_cast<std::int64_t>(count) == expected;
      }
      j["ok"] = ok;
      passed = passed && ok;
      worst = std::max(worst, diff);
      rows.push_back(std::move(j));
      r.trial_ids.push_back(row++);
      r.values.push_back(diff);
    } while (advance());
  }
  r.summary = summarize(r.values);
  r.details["tuples"] = std::move(rows);
  r.details["max_abs_diff"] = worst;
  r.details["tolerance"] = kWickTolerance;
  set_checks(r, passed);
  return r;
}

RunReport kernel_scaling(const RunConfig& c) {
  RunReport r = new_report(c);
  const std::vector<int> degrees = parse_int_list(c.degrees);
  r.config = {{"model", c.model}, {"degrees", degrees}, {"b", c.b}};
  if (c.domain_radius) r.config["domain_radius"] = *c.domain_radius;
  std::vector<std::string> models;
  if (c.model == "all") {
    models = {"elliptic", "flat", "hyperbolic", "product"};
  } else {
    models = {c.model};
  }
  // Scaled probes |u| <= 3 on a half-unit lattice.
  std::vector<cplx> local;
  for (int a = -6; a <= 6; ++a) {
    for (int b = -6; b <= 6; ++b) {
      const cplx u(0.5 * a, 0.5 * b);
      if (std::abs(u) <= 3.0) local.push_back(u);
    }
  }
  Json rows = Json::array();
  bool passed = true;
  std::uint64_t row = 0;
  for (const auto& name : models) {
    RunConfig mc = c;
    mc.model = name;
    for (int n : degrees) {
      const Model model = make_model(mc, n);
      const auto grid = probe_grid(model, 6);
      const double closed = bergman_closed_form(model);
      double bergman_dev = 0.0;
      double rho_dev = 0.0;
      for (const auto& x : grid) {
        bergman_dev = std::max(bergman_dev, std::abs(bergman(model, x) - closed) / closed);
        for (const auto& y : grid) rho_dev = std::max(rho_dev, std::abs(rho(model, x, y) - rho_basis_sum(model, x, y)));
      }
      Json j = {{"model", name},
                {"N", n},
                {"bergman_closed_form", closed},
                {"bergman_max_rel_dev", bergman_dev},
                {"rho_max_abs_dev", rho_dev}};
      bool ok = bergman_dev <= kBergmanTolerance && rho_dev <= kRhoTolerance;
      if (model.dimension() == 1) {
        double deficit = 0.0;
        for (const cplx& u : local) {
          for (const cplx& v : local) deficit = std::max(deficit, scaling_deficit(model, {u, {}}, {v, {}}));
        }
        j["scaling_deficit"] = deficit;
        if (model.kind() == ModelKind::kFlat) ok = ok && deficit <= 1e-12;
      } else {
        j["scaling_deficit"] = nullptr;
      }
      j["offdiag_decay"] = offdiag_decay(model, c.b);
      j["ok"] = ok;
      passed = passed && ok;
      rows.push_back(std::move(j));
      r.trial_ids.push_back(row++);
      r.values.push_back(rho_dev);
    }
  }
  r.summary = summarize(r.values);
  r.details["rows"] = std::move(rows);
  set_checks(r, passed);
  return r;
}

RunReport field_cov(const RunConfig& c) {
  RunReport r = new_report(c);
  r.config = {{"model", c.model}, {"N", c.degree}, {"trials", c.trials}, {"pairs", c.pairs}, {"seed", c.seed}};
  if (c.domain_radius) r.config["domain_radius"] = *c.domain_radius;
  const Model model = make_model(c, c.degree);
  const auto grid = probe_grid(model, 4);
  const std::size_t n = grid.size();
  std::vector<std::pair<ChartPoint, ChartPoint>> pairs;
  for (int i = 0; i < c.pairs; ++i) {
    const std::size_t a = static_cast<std::size_t>(i) % n;
    std::size_t b = (3 * static_cast<std::size_t>(i) + 5) % n;
    if (b == a) b = (a + 1) % n;
    pairs.emplace_back(grid[a], grid[b]);
  }
  const int chunks = (c.trials + kFieldCovChunk - 1) / kFieldCovChunk;
  std::vector<std::vector<cplx>> partial(chunks, std::vector<cplx>(pairs.size()));
  parallel_for(chunks, resolve_threads(c.threads), [&](std::size_t k) {
    const int end = std::min<int>(c.trials, static_cast<int>(k + 1) * kFieldCovChunk);
    for (int t = static_cast<int>(k) * kFieldCovChunk; t < end; ++t) {
      const SectionSample s = sample_section(model, SeedPath{c.seed, static_cast<std::uint64_t>(t), 0});
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        partial[k][i] += s.eval_field(pairs[i].first) * std::conj(s.eval_field(pairs[i].second));
      }
    }
  });
  const double t = c.trials;
  const double tolerance = kFieldCovSigmas / std::sqrt(t);
  Json rows = Json::array();
  bool passed = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    cplx sum{};
    for (const auto& part : partial) sum += part[i];
    const cplx empirical = sum / t;
    const cplx exact = rho(model, pairs[i].first, pairs[i].second);
    const double dev = std::abs(empirical - exact);
    passed = passed && dev <= tolerance;
    rows.push_back({{"x", point_json(pairs[i].first, model.dimension())},
                    {"y", point_json(pairs[i].second, model.dimension())},
                    {"rho", {exact.real(), exact.imag()}},
                    {"empirical", {empirical.real(), empirical.imag()}},
                    {"abs_dev", dev}});
    r.trial_ids.push_back(i);
    r.values.push_back(dev * std::sqrt(t));
  }
  r.summary = summarize(r.values);
  r.details["pairs"] = std::move(rows);
  r.details["tolerance"] = tolerance;
  set_checks(r, passed);
  return r;
}

Json campaign_config(const RunConfig& c) {
  Json j = {{"model", c.model}, {"N", c.degree}, {"trials", c.trials}, {"stat", c.stat}};
  if (c.stat == "smooth") {
    j["phi"] = parse_test_function(c.phi).spec();
  } else {
    j["region"] = format_region(parse_region(c.region));
  }
  j["seed"] = c.seed;
  if (c.domain_radius) j["domain_radius"] = *c.domain_radius;
  return j;
}

// Predicted mean of the statistic for single-variable models.
std::optional<double> predicted_mean(const Model& model, const StatisticSpec& spec) {
  if (model.dimension() != 1) return std::nullopt;
  if (spec.kind == StatisticKind::kSmooth) return deterministic_term(model, spec.phi);
  return model.degree() / std::numbers::pi * omega_area(model, spec.region);
}

RunReport clt(const RunConfig& c) {
  RunReport r = new_report(c);
  r.config = campaign_config(c);
  const Model model = make_model(c, c.degree);
  const StatisticSpec spec = statistic_of(c);
  if (model.dimension() == 2) r.substreams = {0, 1};
  CampaignConfig cc{model, c.trials, c.seed, {spec}, resolve_threads(c.threads)};
  const CampaignResult res = run_campaign(cc);
  fill_from(r, res.reports[0]);
  r.details["statistic"] = spec.label();
  if (const auto m = predicted_mean(model, spec)) r.details["predicted_mean"] = *m;
  if (model.dimension() == 2) {
    r.details["expected_count"] = 2 * c.degree * c.degree;
    r.details["full_count_trials"] = res.full_count_trials;
    r.details["full_count_fraction"] = static_cast<double>(res.full_count_trials) / c.trials;
  }
  return r;
}

RunReport variance(const RunConfig& c) {
  RunReport r = new_report(c);
  const std::vector<int> degrees = parse_int_list(c.degrees);
  Json config = campaign_config(c);
  config.erase("N");
  config["degrees"] = degrees;
  if (c.oracle) config["oracle"] = true;
  r.config = std::move(config);
  const StatisticSpec spec = statistic_of(c);
  const int threads = resolve_threads(c.threads);
  std::vector<double> xs, vars;
  Json rows = Json::array();
  CampaignResult last;
  for (int n : degrees) {
    const Model model = make_model(c, n);
    if (model.dimension() == 2) r.substreams = {0, 1};
    CampaignConfig cc{model, c.trials, c.seed, {spec}, threads};
    last = run_campaign(cc);
    const Summary& s = last.reports[0].summary;
    Json j = {{"N", n}, {"failed_trials", last.failed_trials}, {"summary", summary_to_json(s)}};
    if (c.oracle) j["oracle_var"] = variance_oracle_smooth(model, spec.phi);
    rows.push_back(std::move(j));
    xs.push_back(n);
    vars.push_back(s.variance);
  }
  const SlopeFit fit = variance_exponent_fit(xs, vars);
  fill_from(r, last.reports[0]);
  r.summary.slope = fit.slope;
  r.summary.slope_stderr = fit.stderr_slope;
  r.details["statistic"] = spec.label();
  r.details["degrees"] = std::move(rows);
  r.details["intercept"] = fit.intercept;
  r.details["per_trial_degree"] = degrees.back();
  return r;
}

RunReport chaos(const RunConfig& c) {
  RunReport r = new_report(c);
  const std::vector<int> orders = parse_int_list(c.orders);
  r.config = {{"model", c.model}, {"N", c.degree},       {"trials", c.trials},
              {"phi", parse_test_function(c.phi).spec()}, {"orders", orders},
              {"density", c.density}, {"seed", c.seed}};
  if (c.domain_radius) r.config["domain_radius"] = *c.domain_radius;
  const Model model = make_model(c, c.degree);
  const TestFunction phi = parse_test_function(c.phi);
  const FluctuationGrid grid = make_fluctuation_grid(model, phi, c.density);
  std::vector<TruncatedLogEvaluator> evals;
  for (int n : orders) evals.emplace_back(n);
  std::vector<std::vector<double>> per_trial(c.trials);
  parallel_for(per_trial.size(), resolve_threads(c.threads), [&](std::size_t t) {
    per_trial[t] = truncated_statistics(sample_section(model, SeedPath{c.seed, t, 0}), evals, grid);
  });
  std::vector<std::vector<double>> columns(orders.size(), std::vector<double>(c.trials));
  std::vector<double> full(c.trials);
  for (int t = 0; t < c.trials; ++t) {
    for (std::size_t k = 0; k < orders.size(); ++k) columns[k][t] = per_trial[t][k];
    full[t] = per_trial[t].back();
    r.trial_ids.push_back(t);
  }
  const TruncationTable table = tabulate_truncation(orders, columns, full);
  r.values = full;
  r.summary = summarize(full);
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"n", row.n},
                    {"var_truncated", row.var_truncated},
                    {"var_rest", row.var_rest},
                    {"cross_term", row.cross_term},
                    {"cross_stderr", row.cross_stderr},
                    {"decomposition_gap", row.decomposition_gap},
                    {"gap_stderr", row.gap_stderr},
                    {"delta", row.delta}});
  }
  r.details["rows"] = std::move(rows);
  r.details["var_full"] = table.var_full;
  r.details["grid_nodes"] = grid.nodes.size();
  r.details["deterministic"] = grid.deterministic;
  return r;
}

}  // namespace

void validate(const RunConfig& raw) {
  const RunConfig c = resolved(raw);
  const std::string& s = c.subcommand;
  if (c.threads && *c.threads < 1) invalid("--threads must be >= 1");
  resolve_threads(c.threads);
  if (s == "wick-verify") {
    if (c.max_order < 1 || c.max_order > wick::kMaxDiagramOrder) invalid("--max-order must be in [1, 8]");
    if (c.max_vertices < 1 || c.max_vertices > 6) invalid("--max-vertices must be in [1, 6]");
    if (c.matrices < 1) invalid("--matrices must be >= 1");
    return;
  }
  if (s == "kernel-scaling") {
    if (c.model != "all") model_kind(c.model);
    for (int n : parse_int_list(c.degrees)) {
      if (n < 2) invalid("degrees must be >= 2");
    }
    if (!(c.b > 0.0)) invalid("--b must be positive");
    return;
  }
  const ModelKind kind = model_kind(c.model);
  if (c.trials < 1) invalid("--trials must be >= 1");
  if (c.stat != "smooth" && c.stat != "numerical") invalid("--stat must be smooth or numerical");
  if (c.stat == "smooth" || s == "chaos") parse_test_function(c.phi);
  if (c.stat == "numerical") {
    const RegionSpec region = parse_region(c.region);
    const bool pd = std::holds_alternative<ProductDisks>(region);
    if (pd != (kind == ModelKind::kProductElliptic2)) {
      invalid("product models take pdisk regions, single-variable models the others");
    }
  }
  auto check_degree = [&](int n) {
    if (n < 1) invalid("degree must be >= 1");
    if (kind == ModelKind::kProductElliptic2 && (s == "clt" || s == "variance" || s == "intersect") &&
        n > kMaxBivariateDegree) {
      invalid("product-model zeros need N <= " + std::to_string(kMaxBivariateDegree));
    }
  };
  if (s == "variance") {
    if (c.degrees.empty()) invalid("--degrees is required");
    const std::vector<int> degrees = parse_int_list(c.degrees);
    if (degrees.size() < 4) invalid("--degrees needs at least four values");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      check_degree(degrees[i]);
      if (i > 0 && degrees[i] <= degrees[i - 1]) invalid("--degrees must increase");
    }
    if (c.oracle && (c.stat != "smooth" || kind == ModelKind::kProductElliptic2)) {
      invalid("--oracle needs a smooth statistic on a single-variable model");
    }
    if (c.trials < 2) invalid("--trials must be >= 2");
    return;
  }
  if (c.degree == 0) invalid("-N must be >= 1");
  check_degree(c.degree);
  if (s == "field-cov") {
    if (c.pairs < 1) invalid("--pairs must be >= 1");
  } else if (s == "chaos") {
    if (kind == ModelKind::kProductElliptic2) invalid("chaos needs a single-variable model");
    for (int n : parse_int_list(c.orders)) {
      if (n < 1 || n > kMaxTruncationOrder) invalid("orders must be in [1, 30]");
    }
    if (!(c.density > 0.0)) invalid("--density must be positive");
    if (c.trials < 2) invalid("--trials must be >= 2");
  } else if (s == "intersect") {
    if (kind != ModelKind::kProductElliptic2) invalid("intersect needs --model product");
  } else if (s != "clt") {
    invalid("unknown subcommand '" + s + "'");
  }
}

RunReport execute(const RunConfig& raw) {
  validate(raw);
  const RunConfig c = resolved(raw);
  const std::string& s = c.subcommand;
  if (s == "wick-verify") return wick_verify(c);
  if (s == "kernel-scaling") return kernel_scaling(c);
  if (s == "field-cov") return field_cov(c);
  if (s == "variance") return variance(c);
  if (s == "chaos") return chaos(c);
  return clt(c);  // clt, intersect
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.model.clear();
  cfg.stat.clear();
  std::string format = "json";
  int threads = 0;

  CLI::App app{"Simulation and exact-calculus lab for zeros of Gaussian random sections", "zeroscope"};
  app.set_version_flag("--version", std::string(kVersion));
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.add_option("--config", "flat key=value file; command-line flags take precedence");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    sub->add_option("--threads", threads, "worker threads (default: ZEROSCOPE_THREADS or all cores)");
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto model_opts = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "elliptic, flat, hyperbolic or product");
    sub->add_option("--domain-radius", cfg.domain_radius, "chart radius for flat / hyperbolic");
  };
  auto stat_opts = [&](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "number of trials");
    sub->add_option("--stat", cfg.stat, "smooth or numerical");
    sub->add_option("--phi", cfg.phi, "test function: gauss:c:s, poly4:c:R, const:v, affine:a:b");
    sub->add_option("--region", cfg.region, "disk:c:r, annulus:c:r1:r2, square:c:h, pdisk:c1:r1:c2:r2");
  };

  auto* wick = app.add_subcommand("wick-verify", "Wick formula against Isserlis expansion");
  wick->add_option("--max-order", cfg.max_order, "largest total Wick order")->capture_default_str();
  wick->add_option("--max-vertices", cfg.max_vertices, "largest number of vertices")->capture_default_str();
  wick->add_option("--matrices", cfg.matrices, "random correlation matrices per size")->capture_default_str();
  common(wick);

  auto* ks = app.add_subcommand("kernel-scaling", "Kernel closed forms, scaling deficit, off-diagonal decay");
  ks->add_option("--model", cfg.model, "a model name or 'all'");
  ks->add_option("--domain-radius", cfg.domain_radius, "chart radius for flat / hyperbolic");
  ks->add_option("--degrees", cfg.degrees, "comma separated degrees (default 10,100)");
  ks->add_option("--b", cfg.b, "off-diagonal distance factor")->capture_default_str();
  common(ks);

  auto* fc = app.add_subcommand("field-cov", "Empirical field covariance against rho");
  model_opts(fc);
  fc->add_option("-N,--degree", cfg.degree, "degree (default 10)");
  fc->add_option("--trials", cfg.trials, "number of draws (default 100000)");
  fc->add_option("--pairs", cfg.pairs, "point pairs")->capture_default_str();
  common(fc);

  auto* clt_cmd = app.add_subcommand("clt", "Monte Carlo distribution of one linear statistic");
  model_opts(clt_cmd);
  clt_cmd->add_option("-N,--degree", cfg.degree, "degree")->required();
  stat_opts(clt_cmd);
  common(clt_cmd);

  auto* var = app.add_subcommand("variance", "Variance against degree and its log-log slope");
  model_opts(var);
  var->add_option("--degrees", cfg.degrees, "comma separated degrees, at least four")->required();
  stat_opts(var);
  var->add_flag("--oracle", cfg.oracle, "add the quadrature variance for smooth statistics");
  common(var);

  auto* ch = app.add_subcommand("chaos", "Chaos truncation table of the smooth statistic");
  model_opts(ch);
  ch->add_option("-N,--degree", cfg.degree, "degree (default 128)");
  ch->add_option("--trials", cfg.trials, "number of trials (default 4000)");
  ch->add_option("--phi", cfg.phi, "test function")->capture_default_str();
  ch->add_option("--orders", cfg.orders, "comma separated truncation orders")->capture_default_str();
  ch->add_option("--density", cfg.density, "grid nodes per correlation length")->capture_default_str();
  common(ch);

  auto* inter = app.add_subcommand("intersect", "Common zeros of two sections on CP1 x CP1");
  inter->add_option("--model", cfg.model, "product (the only choice)");
  inter->add_option("-N,--degree", cfg.degree, "degree, at most 10")->required();
  stat_opts(inter);
  common(inter);

  try {
    std::vector<std::string> expanded = expand_config(args);
    std::vector<std::string> rev(expanded.rbegin(), expanded.rend() - 1);
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(kVersion) + "\n" : app.help());
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kIoError ? kExitNumerical : kExitValidation;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (app.get_subcommands().front()->count("--threads") > 0) cfg.threads = threads;
  cfg.format = format == "csv" ? Format::kCsv : Format::kJson;

  try {
    validate(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  RunReport report;
  try {
    report = execute(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_numerical() || e.code() == ErrorCode::kIoError ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }

  try {
    const std::string body = serialize_report(report, cfg.format);
    if (cfg.out.empty()) {
      out << body;
    } else {
      write_atomic(cfg.out, body);
      if (cfg.format == Format::kCsv) write_atomic(cfg.out + ".summary.json", serialize_sidecar(report));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  if (report.values.empty()) {
    err << "error: no successful trials\n";
    return kExitValidation;
  }
  if (report.details.contains("checks_passed") && !report.details["checks_passed"].get<bool>()) {
    err << "error: internal consistency checks failed (see details)\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace zeroscope::cli
