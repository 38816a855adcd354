#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/solver.hpp"

using namespace sepchoose;

namespace {

struct SmallGraph {
  std::string name;
  Graph g;
  int a_max;
};

std::vector<SmallGraph> small_graphs() {
  return {
      {"K2", build_path(2), 3},
      {"P3", build_path(3), 3},
      {"P4", build_path(4), 2},
      {"C3", build_cycle(3), 3},
      {"C4", build_cycle(4), 2},
      {"K4", build_complete(4), 2},
      {"star", Graph(4, {{0, 1}, {0, 2}, {0, 3}}), 2},
      {"paw", Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), 2},
  };
}

ListAssignment random_lists(const Graph& g, int b, std::mt19937_64& rng) {
  std::vector<ColorSet> lists;
  int universe = 2 + static_cast<int>(rng() % 5);
  for (int v = 0; v < g.order(); ++v) {
    int size = b + static_cast<int>(rng() % 3);
    ColorSet s;
    while (static_cast<int>(s.size()) < size) s.insert(static_cast<Color>(rng() % static_cast<unsigned>(universe + size)));
    lists.push_back(s);
  }
  return ListAssignment(g, lists, 0);
}

}  // namespace

TEST_CASE("property: color_with_lists agrees with brute force and returns the lex-least witness") {
  std::mt19937_64 rng(2024);
  auto graphs = small_graphs();
  graphs.push_back({"C5", build_cycle(5), 0});
  graphs.push_back({"flower", build_flower(3, 2), 0});
  for (int trial = 0; trial < 1500; ++trial) {
    const auto& sg = graphs[trial % graphs.size()];
    int b = 1 + static_cast<int>(rng() % 2);
    ListAssignment L = random_lists(sg.g, b, rng);
    bool expected = oracle::colorable(L, b);
    SolveOutcome out = color_with_lists(L, b);
    REQUIRE(out.verdict != Verdict::unknown);
    CHECK_MESSAGE(out.colorable() == expected, sg.name);
    if (out.colorable()) {
      REQUIRE(out.witness.has_value());
      CHECK(is_valid_coloring(L, *out.witness, b));
      // The brute force walks vertices in order and subsets lexicographically, so its
      // first success is the lex-least coloring.
      std::vector<std::vector<std::vector<int>>> options;
      for (const auto& l : oracle::plain_lists(L)) options.push_back(oracle::subsets(l, b));
      BColoring first;
      std::function<bool(int)> rec = [&](int v) {
        if (v == L.graph().order()) return true;
        for (const auto& s : options[static_cast<std::size_t>(v)]) {
          ColorSet cs = ColorSet::from_vector(s);
          bool ok = true;
          for (Vertex u : L.graph().neighbors(v))
            if (u < v && !first[static_cast<std::size_t>(u)].disjoint(cs)) ok = false;
          if (!ok) continue;
          first.push_back(cs);
          if (rec(v + 1)) return true;
          first.pop_back();
        }
        return false;
      };
      REQUIRE(rec(0));
      CHECK(*out.witness == first);
    }
  }
}

TEST_CASE("free_color_with_lists forces precolored vertices and checks their size") {
  Graph c3 = build_cycle(3);
  ListAssignment L(c3, {{1}, {1, 2}, {2, 3}}, 2, {0});
  SolveOutcome out = free_color_with_lists(L, 1);
  REQUIRE(out.colorable());
  CHECK(*out.witness == BColoring{{1}, {2}, {3}});
  ListAssignment wrong(c3, {{1, 4}, {1, 2}, {2, 3}}, 2, {0});
  CHECK_THROWS_AS(free_color_with_lists(wrong, 1), Error);
}

TEST_CASE("extend_coloring keeps fixed sets") {
  Graph c4 = build_cycle(4);
  ListAssignment L(c4, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}, 2);
  std::vector<std::optional<ColorSet>> fixed(4);
  fixed[1] = ColorSet{1};
  SolveOutcome out = extend_coloring(L, 1, fixed);
  REQUIRE(out.colorable());
  CHECK((*out.witness)[1] == ColorSet{1});
  CHECK((*out.witness)[0] == ColorSet{2});
  fixed[2] = ColorSet{1};
  CHECK(extend_coloring(L, 1, fixed).verdict == Verdict::no);
}

TEST_CASE("budget exhaustion is reported as unknown, never as a verdict") {
  SolveOptions opts;
  opts.budget = 1;
  SolveOutcome out = decide_choosable(build_cycle(5), 4, 2, 2, false, opts);
  CHECK(out.verdict == Verdict::unknown);
  CHECK_THROWS_AS(compute_sep(build_cycle(5), 4, 2, false, opts), Error);
  try {
    compute_sep(build_cycle(5), 4, 2, false, opts);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exhausted);
  }
}

TEST_CASE("canonical enumeration counts") {
  auto count = [](const Graph& g, int a, int c, EnumerateOptions opts = {}) {
    return enumerate_canonical(g, a, 1, c, std::nullopt, [](const TraceMultiset&) { return true; }, opts);
  };
  // K2 with 2-lists: one shared color or none (2-separating adds the identical pair).
  CHECK(count(build_path(2), 2, 1) == 2);
  CHECK(count(build_path(2), 2, 2) == 3);

  // Against brute force: distinct trace multisets among all assignments over a large palette.
  struct Case {
    Graph g;
    int a;
    int c;
  };
  std::vector<Case> cases{{build_cycle(3), 2, 1}, {build_cycle(3), 2, 2}, {build_path(3), 2, 2},
                          {build_cycle(4), 2, 1}, {build_path(4), 2, 1}, {build_complete(4), 2, 1}};
  for (const auto& cs : cases) {
    auto edges = oracle::plain_edges(cs.g);
    std::set<std::map<Trace, int>> seen;
    oracle::for_each_assignment(cs.g.order(), cs.a, 1, std::nullopt, [&](const oracle::Lists& lists) {
      if (oracle::separation(edges, lists) > cs.c) return true;
      std::vector<ColorSet> sets;
      for (const auto& l : lists) sets.push_back(ColorSet::from_vector(l));
      seen.insert(canonicalize(ListAssignment(cs.g, sets, cs.a)).counts);
      return true;
    });
    std::set<std::map<Trace, int>> produced;
    std::uint64_t n = enumerate_canonical(cs.g, cs.a, 1, cs.c, std::nullopt, [&](const TraceMultiset& t) {
      produced.insert(t.counts);
      return true;
    });
    CHECK(n == seen.size());
    CHECK(produced == seen);
  }
}

TEST_CASE("property: decide_choosable and compute_sep agree with brute-force enumeration") {
  for (const auto& sg : small_graphs()) {
    auto edges = oracle::plain_edges(sg.g);
    for (int a = 1; a <= sg.a_max; ++a) {
      for (int b = 1; b <= a; ++b) {
        for (bool free : {false, true}) {
          int expected = oracle::sep(sg.g.order(), edges, a, b, free);
          CAPTURE(sg.name);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(free);
          CHECK(compute_sep(sg.g, a, b, free) == expected);
          for (int c = 0; c <= a; ++c) {
            for (bool dominance : {true, false}) {
              SolveOptions opts;
              opts.dominance = dominance;
              SolveOutcome out = decide_choosable(sg.g, a, b, c, free, opts);
              REQUIRE(out.verdict != Verdict::unknown);
              CHECK(out.choosable() == (c <= expected));
              if (!out.choosable()) {
                REQUIRE(out.counterexample.has_value());
                const ListAssignment& ce = *out.counterexample;
                CHECK(separation(ce) <= c);
                CHECK_FALSE(oracle::colorable(ce, b));
              }
            }
            if (sg.g.cycle_order()) {
              SolveOptions sym;
              sym.symmetry = true;
              CHECK(decide_choosable(sg.g, a, b, c, free, sym).choosable() == (c <= expected));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("worker count does not change verdicts or counterexamples") {
  for (int c = 0; c <= 4; ++c) {
    SolveOptions one;
    SolveOptions four;
    four.workers = 4;
    SolveOutcome x = decide_choosable(build_cycle(5), 4, 2, c, false, one);
    SolveOutcome y = decide_choosable(build_cycle(5), 4, 2, c, false, four);
    CHECK(x.verdict == y.verdict);
    if (x.counterexample && y.counterexample) CHECK(x.counterexample->lists() == y.counterexample->lists());
  }
}
