#include "sepchoose/sepchoose.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include "sepchoose/adversary.hpp"
#include "sepchoose/colorers.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/formulas.hpp"
#include "sepchoose/json_io.hpp"
#include "sepchoose/random_lists.hpp"
#include "sepchoose/solver.hpp"
#include "sepchoose/sweep.hpp"

using namespace sepchoose;

struct sc_graph {
  std::shared_ptr<const Graph> g;
};

struct sc_lists {
  ListAssignment L;
};

struct sc_certificate {
  Certificate cert;
};

namespace {

thread_local std::string last_error;

sc_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
      return SC_INVALID_ARGUMENT;
    case ErrorCode::regime:
      return SC_REGIME;
    case ErrorCode::parse:
      return SC_PARSE;
    case ErrorCode::budget_exhausted:
      return SC_BUDGET;
    case ErrorCode::precondition:
      return SC_NO_COLORING;
    case ErrorCode::io:
      return SC_IO;
    case ErrorCode::internal:
      return SC_INTERNAL;
  }
  return SC_INTERNAL;
}

template <typename F>
sc_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return SC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SC_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SC_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_string(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

template <typename T>
void need(const T* p, const char* what) {
  if (!p) fail(ErrorCode::invalid_argument, std::string(what) + " must not be null");
}

SolveOptions solve_options(uint64_t budget) {
  SolveOptions o;
  if (budget) o.budget = budget;
  return o;
}

void put_formula(const FormulaResult& r, int* value, char** regime) {
  need(value, "value");
  *value = r.value;
  set_string(regime, r.regime);
}

}  // namespace

extern "C" {

const char* sc_last_error(void) { return last_error.c_str(); }

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK:
      return "ok";
    case SC_INVALID_ARGUMENT:
      return "invalid argument";
    case SC_REGIME:
      return "outside the supported regime";
    case SC_PARSE:
      return "parse error";
    case SC_BUDGET:
      return "search budget exhausted";
    case SC_NO_COLORING:
      return "no coloring";
    case SC_IO:
      return "i/o error";
    case SC_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void sc_string_free(char* s) { std::free(s); }

uint64_t sc_default_budget(void) { return default_budget(); }

sc_status sc_graph_cycle(int n, sc_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sc_graph{std::make_shared<const Graph>(build_cycle(n))};
  });
}

sc_status sc_graph_path(int n, sc_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sc_graph{std::make_shared<const Graph>(build_path(n))};
  });
}

sc_status sc_graph_flower(int p, int k, sc_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sc_graph{std::make_shared<const Graph>(build_flower(p, k))};
  });
}

sc_status sc_graph_identify(const sc_graph* g1, int v1, const sc_graph* g2, int v2, sc_graph** out) {
  return guarded([&] {
    need(g1, "g1");
    need(g2, "g2");
    need(out, "out");
    *out = new sc_graph{std::make_shared<const Graph>(identify_vertices(*g1->g, v1, *g2->g, v2))};
  });
}

sc_status sc_graph_from_json(const char* json, sc_graph** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new sc_graph{std::make_shared<const Graph>(graph_from_json(parse_json(json)))};
  });
}

sc_status sc_graph_to_json(const sc_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(graph_to_json(*g->g).dump());
  });
}

sc_status sc_graph_order(const sc_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->g->order();
  });
}

sc_status sc_graph_girth(const sc_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    auto gi = girth(*g->g);
    *out = gi ? *gi : -1;
  });
}

void sc_graph_free(sc_graph* g) { delete g; }

sc_status sc_lists_from_json(const sc_graph* g, const char* json, int a, sc_lists** out) {
  return guarded([&] {
    need(g, "graph");
    need(json, "json");
    need(out, "out");
    std::optional<int> bound;
    if (a >= 0) bound = a;
    *out = new sc_lists{lists_from_json(parse_json(json), g->g, bound)};
  });
}

sc_status sc_lists_to_json(const sc_lists* lists, char** out) {
  return guarded([&] {
    need(lists, "lists");
    need(out, "out");
    *out = dup_string(lists_to_json(lists->L).dump());
  });
}

sc_status sc_lists_separation(const sc_lists* lists, int* out) {
  return guarded([&] {
    need(lists, "lists");
    need(out, "out");
    *out = separation(lists->L);
  });
}

sc_status sc_lists_random(const sc_graph* g, int a, int c, uint64_t seed, int precolored, int b, sc_lists** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    std::mt19937_64 rng(seed);
    RandomListOptions ro;
    if (precolored >= 0) {
      if (!g->g->has_vertex(precolored)) fail(ErrorCode::invalid_argument, "precolored vertex out of range");
      ro.precolored = precolored;
      ro.b = b;
    }
    *out = new sc_lists{random_separating_lists(g->g, a, c, rng, ro)};
  });
}

void sc_lists_free(sc_lists* lists) { delete lists; }

sc_status sc_sep_cycle(int n, int a, int b, int* value, char** regime) {
  return guarded([&] { put_formula(sep_cycle(n, a, b), value, regime); });
}

sc_status sc_fsep_cycle(int n, int a, int b, int* value, char** regime) {
  return guarded([&] { put_formula(fsep_cycle(n, a, b), value, regime); });
}

sc_status sc_fsep_min_with_triangle(int n, int a, int b, int* value, char** regime) {
  return guarded([&] { put_formula(fsep_min_with_triangle(n, a, b), value, regime); });
}

sc_status sc_fsep_cactus(const sc_graph* g, int a, int b, int* value, char** regime) {
  return guarded([&] {
    need(g, "graph");
    put_formula(fsep_cactus(*g->g, a, b), value, regime);
  });
}

sc_status sc_fsep_outerplanar_bounds(int girth, int a, int b, int* lower, int* upper) {
  return guarded([&] {
    need(lower, "lower");
    need(upper, "upper");
    auto [lo, hi] = fsep_outerplanar_bounds(girth, a, b);
    *lower = lo.value;
    *upper = hi.value;
  });
}

sc_status sc_c_threshold(int n, int a, int b, long long* num, long long* den, long long* floor_value, char** regime) {
  return guarded([&] {
    auto t = c_threshold(n, a, b);
    if (num) *num = t.value.numerator();
    if (den) *den = t.value.denominator();
    if (floor_value) *floor_value = t.floor;
    set_string(regime, t.regime);
  });
}

sc_status sc_solve_lists(const sc_lists* lists, int b, int free, uint64_t budget, int* colorable, char** result_json) {
  return guarded([&] {
    need(lists, "lists");
    need(colorable, "colorable");
    auto opts = solve_options(budget);
    auto out = free ? free_color_with_lists(lists->L, b, opts) : color_with_lists(lists->L, b, opts);
    if (out.verdict == Verdict::unknown)
      fail(ErrorCode::budget_exhausted, "budget exhausted after " + std::to_string(out.nodes_explored) + " nodes");
    *colorable = out.colorable() ? 1 : 0;
    Json j{{"colorable", out.colorable()}, {"nodes_explored", out.nodes_explored}};
    if (out.witness) j["coloring"] = coloring_to_json(*out.witness);
    set_string(result_json, j.dump());
  });
}

sc_status sc_decide(const sc_graph* g, int a, int b, int c, int free, uint64_t budget, int* choosable,
                    char** counterexample_json) {
  return guarded([&] {
    need(g, "graph");
    need(choosable, "choosable");
    auto out = decide_choosable(*g->g, a, b, c, free != 0, solve_options(budget));
    if (out.verdict == Verdict::unknown)
      fail(ErrorCode::budget_exhausted, "budget exhausted after " + std::to_string(out.nodes_explored) + " nodes");
    *choosable = out.choosable() ? 1 : 0;
    if (counterexample_json) *counterexample_json = out.counterexample ? dup_string(lists_to_json(*out.counterexample).dump()) : nullptr;
  });
}

sc_status sc_compute_sep(const sc_graph* g, int a, int b, int free, uint64_t budget, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = compute_sep(*g->g, a, b, free != 0, solve_options(budget));
  });
}

sc_status sc_adversary(const char* family, const sc_adversary_params* params, sc_certificate** out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    std::string fam = family;
    if (fam == "fig1") {
      *out = new sc_certificate{fig1_fixture()};
      return;
    }
    need(params, "params");
    const auto& p = *params;
    bool auto_variant = !p.variant || !*p.variant;
    if (fam == "small-ratio") {
      *out = new sc_certificate{gen_sep_small_ratio(p.n, p.b, p.k)};
    } else if (fam == "odd-cycle") {
      *out = new sc_certificate{gen_sep_odd_cycle(p.p, p.b, p.alpha)};
    } else if (fam == "path") {
      auto variant = auto_variant ? path_variant_for(p.n, p.a, p.b) : path_variant_from_string(p.variant);
      auto ends = (!p.endpoints || !*p.endpoints) ? Endpoints::equal : endpoints_from_string(p.endpoints);
      auto cert = gen_path_family(p.n, p.a, p.b, variant, ends);
      *out = new sc_certificate{p.glue ? glue_path_to_cycle(cert) : cert};
    } else if (fam == "c3") {
      auto variant = auto_variant ? triangle_variant_for(p.a, p.b) : triangle_variant_from_string(p.variant);
      *out = new sc_certificate{gen_c3_family(p.a, p.b, variant)};
    } else if (fam == "flower") {
      *out = new sc_certificate{gen_flower(p.p, p.a, p.b)};
    } else {
      fail(ErrorCode::invalid_argument,
           "unknown family '" + fam + "' (expected small-ratio, odd-cycle, path, c3, flower or fig1)");
    }
  });
}

sc_status sc_certificate_from_json(const char* json, sc_certificate** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new sc_certificate{certificate_from_json(parse_json(json))};
  });
}

sc_status sc_certificate_to_json(const sc_certificate* cert, char** out) {
  return guarded([&] {
    need(cert, "certificate");
    need(out, "out");
    *out = dup_string(certificate_to_json(cert->cert).dump(2));
  });
}

sc_status sc_certificate_verify(const sc_certificate* cert, uint64_t budget, int* status, char** message) {
  return guarded([&] {
    need(cert, "certificate");
    need(status, "status");
    auto rep = verify_certificate(cert->cert, solve_options(budget));
    *status = rep.status == VerifyStatus::pass ? 0 : rep.status == VerifyStatus::refuted ? 1 : 2;
    set_string(message, rep.message);
  });
}

void sc_certificate_free(sc_certificate* cert) { delete cert; }

sc_status sc_color(const sc_lists* lists, const char* strategy, int b, int k, char** result_json) {
  return guarded([&] {
    need(lists, "lists");
    need(strategy, "strategy");
    need(result_json, "result_json");
    std::string s = strategy;
    const auto& L = lists->L;
    ColoringResult res;
    if (s == "greedy") {
      res = greedy_cycle(L, b);
    } else if (s == "lift") {
      res = lift_cycle(L, b, k).result;
    } else if (s == "path") {
      res = path_color_precolored(L, b);
    } else if (s == "cycle") {
      res = cycle_color_precolored(L, b);
    } else if (s == "cactus") {
      res = cactus_free_color(L, b);
    } else if (s == "outerplanar") {
      res = outerplanar_color(L, b);
    } else if (s == "exact") {
      res.plan.strategy = "exact";
      res.coloring = exact_colorer(L, b);
    } else {
      fail(ErrorCode::invalid_argument,
           "unknown strategy '" + s + "' (expected greedy, lift, path, cycle, cactus, outerplanar or exact)");
    }
    *result_json = dup_string(coloring_result_to_json(res).dump(2));
  });
}

sc_status sc_sweep(int n_max, int a_max, int b_max, uint64_t budget, unsigned workers, char** csv, int* rows, int* verified,
                   int* mismatches) {
  return guarded([&] {
    SweepOptions so;
    so.budget = budget;
    so.workers = workers;
    auto table = sweep(n_max, a_max, b_max, so);
    auto sum = summarize(table);
    if (rows) *rows = sum.rows;
    if (verified) *verified = sum.verified;
    if (mismatches) *mismatches = sum.mismatches;
    set_string(csv, sweep_csv(table));
  });
}

}  // extern "C"
