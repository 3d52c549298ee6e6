#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "linehyp/hypergraph.hpp"

namespace linehyp {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> edge_masks(const Hypergraph& h) {
  const auto& ids = h.vertex_ids();
  std::vector<Mask> out;
  out.reserve(h.edges().size());
  for (const auto& e : h.edges()) {
    Mask m = 0;
    for (LineId v : e) {
      const auto pos = std::lower_bound(ids.begin(), ids.end(), v) - ids.begin();
      m |= Mask{1} << pos;
    }
    out.push_back(m);
  }
  return out;
}

// Packs the bits of `value` selected by `subset` into the low bits.
std::uint32_t compress(Mask value, Mask subset) {
  std::uint32_t out = 0;
  int bit = 0;
  while (subset) {
    const Mask low = subset & (~subset + 1);
    if (value & low) out |= 1u << bit;
    ++bit;
    subset &= subset - 1;
  }
  return out;
}

bool shattered(const std::vector<Mask>& edges, Mask subset, std::vector<char>& seen) {
  const int k = std::popcount(subset);
  const std::size_t need = std::size_t{1} << k;
  if (edges.size() < need) return false;
  seen.assign(need, 0);
  std::size_t found = 0;
  for (Mask e : edges) {
    const std::uint32_t trace = compress(e, subset);
    if (!seen[trace]) {
      seen[trace] = 1;
      if (++found == need) return true;
    }
  }
  return false;
}

// Calls fn(mask) for every k-subset of n bits in lexicographic order; stops when fn returns true.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  for (;;) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    if (fn(m)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

long long delaunay_edges(const std::vector<Mask>& edges, Mask subset, std::vector<Mask>& scratch) {
  scratch.clear();
  for (Mask e : edges) {
    const Mask t = e & subset;
    if (std::popcount(t) == 2) scratch.push_back(t);
  }
  std::sort(scratch.begin(), scratch.end());
  return std::unique(scratch.begin(), scratch.end()) - scratch.begin();
}

}  // namespace

bool is_shattered(const Hypergraph& h, std::span<const LineId> subset) {
  std::vector<Hyperedge> traces;
  std::vector<LineId> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  for (const auto& e : h.edges()) {
    Hyperedge t;
    std::set_intersection(e.begin(), e.end(), s.begin(), s.end(), std::back_inserter(t));
    traces.push_back(std::move(t));
  }
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  return s.size() < 63 && traces.size() == (std::size_t{1} << s.size());
}

VcReport vc_dimension(const Hypergraph& h, const VcOptions& options) {
  const auto& ids = h.vertex_ids();
  const int n = static_cast<int>(ids.size());
  if (n > 64) {
    throw Error(ErrorCode::kInvalidArgument, "exhaustive VC-dimension supports at most 64 vertices");
  }
  if (options.cap < 1 || options.cap > 20) throw Error(ErrorCode::kInvalidArgument, "cap must be in [1, 20]");
  const auto edges = edge_masks(h);
  VcReport report;

  // The empty set is shattered as soon as there is at least one edge.
  std::vector<char> seen;
  Mask best = 0;
  for (int k = 1; k <= std::min(options.cap, n); ++k) {
    Mask found = 0;
    const bool any = for_each_subset(n, k, [&](Mask m) {
      if (shattered(edges, m, seen)) {
        found = m;
        return true;
      }
      return false;
    });
    if (!any) break;
    best = found;
    report.vc_dimension = k;
    if (k == options.cap) report.cap_exceeded = true;
  }
  for (int i = 0; i < n; ++i) {
    if (best & (Mask{1} << i)) report.shattered_witness.push_back(ids[i]);
  }

  std::vector<Mask> scratch;
  const auto consider = [&](Mask subset) {
    const long long e = delaunay_edges(edges, subset, scratch);
    const long long v = std::popcount(subset);
    if (e * report.delaunay_denominator > report.delaunay_numerator * v) {
      report.delaunay_numerator = e;
      report.delaunay_denominator = v;
    }
  };
  if (n <= options.exhaustive_limit) {
    report.delaunay_exact = true;
    for (Mask m = 1; m < (Mask{1} << n); ++m) consider(m);
  } else {
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.sampled_subsets; ++i) {
      const Mask m = n == 64 ? rng() : rng() & ((Mask{1} << n) - 1);
      if (m) consider(m);
    }
    // Always include the full set and the shattered witness.
    consider(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);
    if (best) consider(best);
  }
  const long long g = std::gcd(report.delaunay_numerator, report.delaunay_denominator);
  if (g > 1) {
    report.delaunay_numerator /= g;
    report.delaunay_denominator /= g;
  }
  if (report.delaunay_numerator == 0) report.delaunay_denominator = 1;
  return report;
}

}  // namespace linehyp
