#include "linehyp/linehyp.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "linehyp/json_io.hpp"

struct lh_scene {
  linehyp::Scene scene;
};
struct lh_arrangement {
  linehyp::Arrangement arr;
};
struct lh_hypergraph {
  linehyp::Hypergraph h;
};

namespace {

thread_local std::string g_last_error;

lh_status fail(lh_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
lh_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const linehyp::Error& e) {
    return fail(static_cast<lh_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LH_ERR_INTERNAL, e.what());
  }
}

#define LH_REQUIRE(cond, msg) \
  if (!(cond)) return fail(LH_ERR_INVALID_ARGUMENT, msg)

linehyp::SeedRange range(int n_min, int n_max, int seeds, unsigned long long seed) {
  return {n_min, n_max, seeds, seed};
}

lh_status report(const linehyp::VerifyReport& r, char** out_json) {
  *out_json = copy_string(linehyp::to_json(r));
  if (r.pass) return LH_OK;
  return fail(LH_VERIFICATION_FAILED, r.check + " verification failed");
}

}  // namespace

extern "C" {

const char* lh_last_error(void) { return g_last_error.c_str(); }

const char* lh_status_name(lh_status status) {
  switch (status) {
    case LH_OK: return "Ok";
    case LH_ERR_IO: return "IoError";
    case LH_ERR_INTERNAL: return "InternalError";
    case LH_VERIFICATION_FAILED: return "VerificationFailed";
    default: return linehyp::error_code_name(static_cast<linehyp::ErrorCode>(status));
  }
}

void lh_string_free(char* s) { std::free(s); }

lh_status lh_scene_from_json(const char* json, lh_scene** out) {
  LH_REQUIRE(json != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new lh_scene{linehyp::scene_from_json(json)};
    return LH_OK;
  });
}

lh_status lh_scene_load(const char* path, lh_scene** out) {
  LH_REQUIRE(path != nullptr && out != nullptr, "null argument");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(LH_ERR_IO, std::string("cannot read ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return lh_scene_from_json(buf.str().c_str(), out);
}

lh_status lh_scene_to_json(const lh_scene* scene, char** out_json) {
  LH_REQUIRE(scene != nullptr && out_json != nullptr, "null argument");
  return guarded([&] {
    *out_json = copy_string(linehyp::scene_to_json(scene->scene));
    return LH_OK;
  });
}

size_t lh_scene_line_count(const lh_scene* scene) { return scene ? scene->scene.lines.size() : 0; }
size_t lh_scene_shape_count(const lh_scene* scene) { return scene ? scene->scene.shapes.size() : 0; }
void lh_scene_free(lh_scene* scene) { delete scene; }

lh_status lh_generate(const char* spec_json, lh_scene** out) {
  LH_REQUIRE(spec_json != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new lh_scene{linehyp::generate(linehyp::generator_spec_from_json(spec_json))};
    return LH_OK;
  });
}

lh_status lh_validate(const lh_scene* scene, char** out_json) {
  LH_REQUIRE(scene != nullptr && out_json != nullptr, "null argument");
  return guarded([&] {
    const auto gp = linehyp::validate_general_position(scene->scene);
    const auto family = linehyp::validate_pseudo_disc_family(scene->scene.shapes, scene->scene.margins);
    *out_json = copy_string(linehyp::to_json(gp, family));
    if (gp.valid() && family.valid()) return LH_OK;
    return fail(LH_VERIFICATION_FAILED, "scene is not valid");
  });
}

lh_status lh_incircles(const lh_scene* scene, lh_scene** out) {
  LH_REQUIRE(scene != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new lh_scene{linehyp::incircle_family(scene->scene.lines, scene->scene.margins)};
    return LH_OK;
  });
}

lh_status lh_arrangement_build(const lh_scene* scene, lh_arrangement** out) {
  LH_REQUIRE(scene != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new lh_arrangement{linehyp::build_arrangement(scene->scene.lines, scene->scene.margins)};
    return LH_OK;
  });
}

lh_status lh_arrangement_stats(const lh_arrangement* arr, char** out_json) {
  LH_REQUIRE(arr != nullptr && out_json != nullptr, "null argument");
  return guarded([&] {
    *out_json = copy_string(linehyp::to_json(arr->arr.stats()));
    return LH_OK;
  });
}

void lh_arrangement_free(lh_arrangement* arr) { delete arr; }

lh_status lh_zone(const lh_scene* scene, double a, double b, double c, int t, char** out_json) {
  LH_REQUIRE(scene != nullptr && out_json != nullptr, "null argument");
  LH_REQUIRE(t >= 1, "t must be at least 1");
  return guarded([&] {
    const auto& s = scene->scene;
    if (a == 0.0 && b == 0.0) throw linehyp::Error(linehyp::ErrorCode::kInvalidArgument, "query with a = b = 0");
    linehyp::LineId id = static_cast<linehyp::LineId>(s.lines.size());
    const linehyp::Line q = linehyp::make_line(id, a, b, c);
    const auto extra = linehyp::query_crossings(s.lines, q, s.margins.min_angle);
    const auto arr = linehyp::Arrangement::build(s.lines, extra, s.margins);
    *out_json = copy_string(linehyp::to_json(linehyp::leq_t_zone(arr, q, t)));
    return LH_OK;
  });
}

lh_status lh_hypergraph_build(const lh_scene* scene, int validate, lh_hypergraph** out) {
  LH_REQUIRE(scene != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new lh_hypergraph{linehyp::build_hypergraph(scene->scene, {.validate = validate != 0})};
    return LH_OK;
  });
}

lh_status lh_hypergraph_to_json(const lh_hypergraph* h, char** out_json) {
  LH_REQUIRE(h != nullptr && out_json != nullptr, "null argument");
  return guarded([&] {
    *out_json = copy_string(linehyp::to_json(h->h));
    return LH_OK;
  });
}

size_t lh_hypergraph_edge_count(const lh_hypergraph* h) { return h ? h->h.edges().size() : 0; }
void lh_hypergraph_free(lh_hypergraph* h) { delete h; }

lh_status lh_count_by_size(const lh_hypergraph* h, char** out_json) {
  LH_REQUIRE(h != nullptr && out_json != nullptr, "null argument");
  return guarded([&] {
    *out_json = copy_string(linehyp::histogram_to_json(linehyp::count_by_size(h->h)));
    return LH_OK;
  });
}

lh_status lh_degree(const lh_hypergraph* h, int line, int t, long long* out_degree) {
  LH_REQUIRE(h != nullptr && out_degree != nullptr, "null argument");
  return guarded([&] {
    *out_degree = linehyp::degree_count(h->h, line, t);
    return LH_OK;
  });
}

lh_status lh_delaunay(const lh_hypergraph* h, char** out_json) {
  LH_REQUIRE(h != nullptr && out_json != nullptr, "null argument");
  return guarded([&] {
    const auto g = linehyp::delaunay_graph(h->h);
    *out_json = copy_string(linehyp::to_json(g));
    if (linehyp::planarity_check(g)) return LH_OK;
    return fail(LH_VERIFICATION_FAILED, "Delaunay graph is not planar");
  });
}

lh_status lh_vc(const lh_hypergraph* h, int cap, unsigned long long seed, char** out_json) {
  LH_REQUIRE(h != nullptr && out_json != nullptr, "null argument");
  LH_REQUIRE(cap >= 1, "cap must be at least 1");
  return guarded([&] {
    linehyp::VcOptions options;
    options.cap = cap;
    options.seed = seed;
    const auto r = linehyp::vc_dimension(h->h, options);
    *out_json = copy_string(linehyp::to_json(r));
    if (r.cap_exceeded) return fail(LH_ERR_CAP_EXCEEDED, "a shattered set of the cap size exists");
    return LH_OK;
  });
}

lh_status lh_cell_graph(const lh_scene* scene, int pivot, char** out_json) {
  LH_REQUIRE(scene != nullptr && out_json != nullptr, "null argument");
  return guarded([&] {
    *out_json = copy_string(linehyp::to_json(linehyp::three_hyperedge_cell_graph(scene->scene, pivot)));
    return LH_OK;
  });
}

lh_status lh_shrink(const lh_scene* scene, lh_scene** out, char** out_report_json) {
  LH_REQUIRE(scene != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    auto r = linehyp::shrink_family(scene->scene);
    if (out_report_json != nullptr) *out_report_json = copy_string(linehyp::to_json(r));
    *out = new lh_scene{std::move(r.scene)};
    return LH_OK;
  });
}

lh_status lh_audit(const lh_scene* shrunk, char** out_json) {
  LH_REQUIRE(shrunk != nullptr && out_json != nullptr, "null argument");
  return guarded([&] {
    const auto r = linehyp::total_hyperedge_audit(shrunk->scene);
    *out_json = copy_string(linehyp::to_json(r));
    if (r.ok()) return LH_OK;
    return fail(LH_VERIFICATION_FAILED, "audit failed");
  });
}

lh_status lh_verify_aronov(int n_min, int n_max, int seeds, unsigned long long seed, char** out_json) {
  LH_REQUIRE(out_json != nullptr, "null argument");
  return guarded([&] { return report(linehyp::verify_aronov_range(range(n_min, n_max, seeds, seed)), out_json); });
}

lh_status lh_verify_zone(int n_min, int n_max, int seeds, unsigned long long seed, int queries, char** out_json) {
  LH_REQUIRE(out_json != nullptr, "null argument");
  return guarded(
      [&] { return report(linehyp::verify_zone_range(range(n_min, n_max, seeds, seed), queries), out_json); });
}

lh_status lh_verify_sweep(int n_min, int n_max, int seeds, unsigned long long seed, char** out_json) {
  LH_REQUIRE(out_json != nullptr, "null argument");
  return guarded([&] { return report(linehyp::verify_sweep_range(range(n_min, n_max, seeds, seed)), out_json); });
}

lh_status lh_growth(const char* metric, const char* spec_json, const int* sizes, size_t size_count, int seeds,
                    char** out_json, char** out_csv) {
  LH_REQUIRE(metric != nullptr && spec_json != nullptr && sizes != nullptr && out_json != nullptr, "null argument");
  return guarded([&] {
    const auto r = linehyp::run_growth_experiment(linehyp::parse_metric(metric),
                                                  linehyp::generator_spec_from_json(spec_json),
                                                  std::span<const int>(sizes, size_count), seeds);
    *out_json = copy_string(linehyp::to_json(r));
    if (out_csv != nullptr) *out_csv = copy_string(linehyp::growth_csv(r));
    return LH_OK;
  });
}

lh_status lh_render_svg(const lh_scene* scene, const char* options_json, char** out_svg) {
  LH_REQUIRE(scene != nullptr && out_svg != nullptr, "null argument");
  return guarded([&] {
    const auto options = options_json != nullptr ? linehyp::svg_options_from_json(options_json) : linehyp::SvgOptions{};
    *out_svg = copy_string(linehyp::render_svg(scene->scene, options));
    return LH_OK;
  });
}

}  // extern "C"
