#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linehyp/constructions.hpp"
#include "linehyp/tangent_sweep.hpp"

namespace linehyp {

enum class MetricKind { kTEdgeCount, kTotalEdgeCount, kMaxLineDegree, kZoneComplexity, kLeqTZoneComplexity };

struct Metric {
  MetricKind kind = MetricKind::kTotalEdgeCount;
  int t = 3;  // ignored by totalEdgeCount and zoneComplexity
};

/// "tEdgeCount(3)", "totalEdgeCount", "maxLineDegree(3)", "zoneComplexity", "leqTZoneComplexity(2)".
std::string metric_name(const Metric& m);
Metric parse_metric(const std::string& name);

/// Random query lines in general position with respect to the scene lines,
/// with ids following the largest scene line id.
std::vector<Line> random_query_lines(const Scene& scene, int count, std::uint64_t seed);

/// Metric value of one scene. Zone metrics average over `queries` random query lines.
double evaluate_metric(const Metric& m, const Scene& scene, std::uint64_t seed, int queries = 5);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root-mean-square residual in log space
};

/// Least-squares fit of log(y) = slope * log(x) + intercept.
LogLogFit fit_log_log(std::span<const double> xs, std::span<const double> ys);

struct GrowthCell {
  int n = 0;
  std::uint64_t seed = 0;
  std::optional<double> value;
  std::string error;
};

struct GrowthReport {
  std::string metric_name;
  std::string generator;
  std::vector<int> sizes;
  std::vector<GrowthCell> cells;  // sorted by (n, seed)
  std::vector<double> means;      // per size, over successful cells
  LogLogFit fit;
};

/// Cells (n, base.seed + i) for i < seeds are evaluated in parallel. A cell
/// whose generation fails records the error and is skipped by the fit. For
/// random-discs with base.m == 0 each cell uses m = 3n discs.
GrowthReport run_growth_experiment(const Metric& metric, const GeneratorSpec& base, std::span<const int> sizes,
                                   int seeds, unsigned threads = 0);

/// CSV projection: one row per cell, columns metric,n,seed,value,error.
std::string growth_csv(const GrowthReport& r);

struct SeedRange {
  int n_min = 4;
  int n_max = 9;
  int seeds = 20;
  std::uint64_t seed = 0;
};

struct VerifyCase {
  int n = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string check;
  std::vector<VerifyCase> cases;
  bool pass = false;
};

/// Incircle-family counts on margin-validated random lines for every (n, seed).
VerifyReport verify_aronov_range(const SeedRange& r);
/// Zone complexity of `queries` random query lines against the tight bound.
VerifyReport verify_zone_range(const SeedRange& r, int queries = 5);
/// Shrink, interval, change-bound and coverage checks on random disc scenes with m = 3n.
VerifyReport verify_sweep_range(const SeedRange& r);

}  // namespace linehyp
