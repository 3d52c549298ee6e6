#include "linehyp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "linehyp/hypergraph.hpp"
#include "rng.hpp"

namespace linehyp {

using detail::Rng;

std::string metric_name(const Metric& m) {
  const std::string t = "(" + std::to_string(m.t) + ")";
  switch (m.kind) {
    case MetricKind::kTEdgeCount: return "tEdgeCount" + t;
    case MetricKind::kTotalEdgeCount: return "totalEdgeCount";
    case MetricKind::kMaxLineDegree: return "maxLineDegree" + t;
    case MetricKind::kZoneComplexity: return "zoneComplexity";
    case MetricKind::kLeqTZoneComplexity: return "leqTZoneComplexity" + t;
  }
  return "?";
}

Metric parse_metric(const std::string& name) {
  const auto open = name.find('(');
  const std::string base = name.substr(0, open);
  Metric m;
  if (open != std::string::npos) {
    if (name.back() != ')') throw Error(ErrorCode::kInvalidArgument, "bad metric '" + name + "'");
    try {
      std::size_t used = 0;
      const std::string arg = name.substr(open + 1, name.size() - open - 2);
      m.t = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad metric parameter in '" + name + "'");
    }
    if (m.t < 1) throw Error(ErrorCode::kInvalidArgument, "metric parameter must be positive");
  }
  const bool has_t = open != std::string::npos;
  if (base == "tEdgeCount" && has_t) {
    m.kind = MetricKind::kTEdgeCount;
  } else if (base == "totalEdgeCount" && !has_t) {
    m.kind = MetricKind::kTotalEdgeCount;
  } else if (base == "maxLineDegree" && has_t) {
    m.kind = MetricKind::kMaxLineDegree;
  } else if (base == "zoneComplexity" && !has_t) {
    m.kind = MetricKind::kZoneComplexity;
  } else if (base == "leqTZoneComplexity" && has_t) {
    m.kind = MetricKind::kLeqTZoneComplexity;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown metric '" + name + "'");
  }
  return m;
}

std::vector<Line> random_query_lines(const Scene& scene, int count, std::uint64_t seed) {
  Rng rng(Rng::mix(seed ^ 0x9e7a11e5ULL));
  std::vector<Point> vertices;
  const double sin_min = std::sin(scene.margins.min_angle);
  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < scene.lines.size(); ++j) {
      vertices.push_back(line_line_intersection(scene.lines[i], scene.lines[j], 0.0));
    }
  }
  LineId next = 0;
  for (const Line& l : scene.lines) next = std::max(next, l.id + 1);
  std::vector<Line> out;
  for (int q = 0; q < count; ++q) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      const double theta = rng.uniform(0.0, M_PI);
      const double offset = rng.uniform(-0.5, 0.5);
      const Line cand = make_line(next + q, std::cos(theta), std::sin(theta), offset);
      bool ok = true;
      for (const Line& l : scene.lines) {
        if (std::abs(l.a * cand.b - cand.a * l.b) <= sin_min) {
          ok = false;
          break;
        }
      }
      for (std::size_t v = 0; ok && v < vertices.size(); ++v) {
        if (std::abs(signed_distance(vertices[v], cand)) <= scene.margins.min_separation) ok = false;
      }
      if (ok) {
        out.push_back(cand);
        placed = true;
      }
    }
    if (!placed) throw Error(ErrorCode::kGenerationRetriesExhausted, "could not place a query line");
  }
  return out;
}

double evaluate_metric(const Metric& m, const Scene& scene, std::uint64_t seed, int queries) {
  if (m.kind == MetricKind::kZoneComplexity || m.kind == MetricKind::kLeqTZoneComplexity) {
    if (queries < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one query line");
    const std::vector<Line> qs = random_query_lines(scene, queries, seed);
    std::vector<Point> extra;
    for (const Line& q : qs) {
      const auto c = query_crossings(scene.lines, q, scene.margins.min_angle);
      extra.insert(extra.end(), c.begin(), c.end());
    }
    const Arrangement arr = Arrangement::build(scene.lines, extra, scene.margins);
    double sum = 0.0;
    for (const Line& q : qs) {
      const ZoneReport z = m.kind == MetricKind::kZoneComplexity ? zone(arr, q) : leq_t_zone(arr, q, m.t);
      sum += static_cast<double>(z.total_complexity);
    }
    return sum / static_cast<double>(qs.size());
  }
  const Hypergraph h = build_hypergraph(scene, {.validate = false});
  switch (m.kind) {
    case MetricKind::kTEdgeCount: {
      const auto hist = h.size_histogram();
      const auto it = hist.find(m.t);
      return it == hist.end() ? 0.0 : static_cast<double>(it->second);
    }
    case MetricKind::kTotalEdgeCount:
      return static_cast<double>(h.edges().size());
    case MetricKind::kMaxLineDegree: {
      long long best = 0;
      for (LineId v : h.vertex_ids()) best = std::max(best, degree_count(h, v, m.t));
      return static_cast<double>(best);
    }
    default:
      break;
  }
  return 0.0;
}

LogLogFit fit_log_log(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "log-log fit needs at least two matching points");
  }
  const auto k = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) throw Error(ErrorCode::kInvalidArgument, "log-log fit needs positive data");
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]));
    sx += lx.back();
    sy += ly.back();
    sxx += lx.back() * lx.back();
    sxy += lx.back() * ly.back();
  }
  const double denom = k * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) throw Error(ErrorCode::kInvalidArgument, "log-log fit needs distinct x values");
  LogLogFit fit;
  fit.slope = (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / k;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.slope * lx[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / k);
  return fit;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace

GrowthReport run_growth_experiment(const Metric& metric, const GeneratorSpec& base, std::span<const int> sizes,
                                   int seeds, unsigned threads) {
  if (sizes.size() < 4) throw Error(ErrorCode::kInvalidArgument, "growth experiments need at least 4 sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw Error(ErrorCode::kInvalidArgument, "sizes must be strictly increasing");
  }
  if (seeds < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one seed");

  GrowthReport report;
  report.metric_name = metric_name(metric);
  report.generator = generator_kind_name(base.kind);
  report.sizes.assign(sizes.begin(), sizes.end());
  for (int n : sizes) {
    for (int s = 0; s < seeds; ++s) report.cells.push_back({n, base.seed + static_cast<std::uint64_t>(s), {}, {}});
  }
  parallel_for(report.cells.size(), threads, [&](std::size_t i) {
    GrowthCell& cell = report.cells[i];
    GeneratorSpec spec = base;
    spec.n = cell.n;
    spec.seed = cell.seed;
    if (spec.kind == GeneratorKind::kRandomDiscs && spec.m == 0) spec.m = 3 * cell.n;
    try {
      cell.value = evaluate_metric(metric, generate(spec), cell.seed);
    } catch (const Error& e) {
      cell.error = e.what();
    }
  });

  std::vector<double> xs, ys;
  for (int n : sizes) {
    double sum = 0.0;
    int count = 0;
    for (const auto& c : report.cells) {
      if (c.n == n && c.value) {
        sum += *c.value;
        ++count;
      }
    }
    const double mean = count > 0 ? sum / count : 0.0;
    report.means.push_back(mean);
    if (count > 0 && mean > 0.0) {
      xs.push_back(n);
      ys.push_back(mean);
    }
  }
  if (xs.size() < 4) {
    throw Error(ErrorCode::kInvalidArgument, "fewer than 4 sizes produced positive metric values");
  }
  report.fit = fit_log_log(xs, ys);
  return report;
}

std::string growth_csv(const GrowthReport& r) {
  std::string out = "metric,n,seed,value,error\n";
  char buf[64];
  for (const auto& c : r.cells) {
    out += r.metric_name + "," + std::to_string(c.n) + "," + std::to_string(c.seed) + ",";
    if (c.value) {
      std::snprintf(buf, sizeof buf, "%.17g", *c.value);
      out += buf;
    }
    std::string err = c.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    out += "," + err + "\n";
  }
  return out;
}

namespace {

template <typename Check>
VerifyReport verify_range(const std::string& name, const SeedRange& r, Check&& check) {
  if (r.n_min > r.n_max || r.seeds < 1) throw Error(ErrorCode::kInvalidArgument, "empty verification range");
  VerifyReport report;
  report.check = name;
  for (int n = r.n_min; n <= r.n_max; ++n) {
    for (int s = 0; s < r.seeds; ++s) report.cases.push_back({n, r.seed + static_cast<std::uint64_t>(s), false, {}});
  }
  parallel_for(report.cases.size(), 0, [&](std::size_t i) {
    VerifyCase& c = report.cases[i];
    try {
      check(c);
    } catch (const Error& e) {
      c.pass = false;
      c.detail = e.what();
    }
  });
  report.pass = std::all_of(report.cases.begin(), report.cases.end(), [](const VerifyCase& c) { return c.pass; });
  return report;
}

}  // namespace

VerifyReport verify_aronov_range(const SeedRange& r) {
  return verify_range("aronov", r, [](VerifyCase& c) {
    const Scene lines = gen_random_lines(c.n, c.seed);
    const AronovReport a = verify_aronov(lines.lines, lines.margins);
    c.pass = a.pass;
    if (!a.pass) {
      c.detail = "total " + std::to_string(a.total_observed) + " of " + std::to_string(a.total_expected);
    }
  });
}

VerifyReport verify_zone_range(const SeedRange& r, int queries) {
  return verify_range("zone", r, [queries](VerifyCase& c) {
    const Scene scene = gen_random_lines(c.n, c.seed);
    const std::vector<Line> qs = random_query_lines(scene, queries, c.seed);
    std::vector<Point> extra;
    for (const Line& q : qs) {
      const auto x = query_crossings(scene.lines, q, scene.margins.min_angle);
      extra.insert(extra.end(), x.begin(), x.end());
    }
    const Arrangement arr = Arrangement::build(scene.lines, extra, scene.margins);
    c.pass = true;
    long long worst = 0;
    for (const Line& q : qs) worst = std::max(worst, zone(arr, q).total_complexity);
    if (worst > zone_bound(c.n)) c.pass = false;
    c.detail = "max zone " + std::to_string(worst) + " bound " + std::to_string(zone_bound(c.n));
  });
}

VerifyReport verify_sweep_range(const SeedRange& r) {
  return verify_range("sweep", r, [](VerifyCase& c) {
    const Scene scene = gen_random_disc_scene(c.n, 3 * c.n, c.seed, 0.05, 0.4);
    const ShrinkFamilyResult shrunk = shrink_family(scene);
    const AuditReport audit = total_hyperedge_audit(shrunk.scene);
    c.pass = audit.ok();
    c.detail = "covered " + std::to_string(audit.covered_edges) + " trivial " + std::to_string(audit.trivial_edges) +
               " of " + std::to_string(audit.total_edges);
  });
}

}  // namespace linehyp
