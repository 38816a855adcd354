#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/list_assign.hpp"
#include "sepchoose/random_lists.hpp"

using namespace sepchoose;

TEST_CASE("color set algebra") {
  ColorSet x{1, 3, 70};
  ColorSet y{3, 4, 70};
  CHECK(x.size() == 3);
  CHECK(x.contains(70));
  CHECK_FALSE(x.contains(2));
  CHECK(x.intersection_size(y) == 2);
  CHECK((x & y) == ColorSet{3, 70});
  CHECK((x | y).size() == 4);
  CHECK((x - y) == ColorSet{1});
  CHECK(x.members() == std::vector<Color>{1, 3, 70});
  CHECK(x.bound() == 71);
  CHECK(ColorSet{1, 2} < ColorSet{1, 3});
  x.erase(70);
  CHECK(x == ColorSet{1, 3});
  CHECK(ColorSet{1}.is_subset_of(x));
}

TEST_CASE("separation and coloring validity") {
  Graph c3 = build_cycle(3);
  ListAssignment L(c3, {{1, 2}, {2, 3}, {3, 1}}, 2);
  CHECK(separation(L) == 1);
  CHECK(is_valid_coloring(L, {{1}, {2}, {3}}, 1));
  CHECK_FALSE(is_valid_coloring(L, {{1}, {2}, {1}}, 1));
  CHECK_FALSE(is_valid_coloring(L, {{1}, {3}, {3}}, 1));
  CHECK(coloring_violation(L, {{1, 2}, {3}, {3}}, 1).has_value());
  CHECK(separation(ListAssignment(build_path(1), {{1}}, 1)) == 0);
}

TEST_CASE("size convention") {
  Graph c3 = build_cycle(3);
  ListAssignment L(c3, {{1}, {1, 2}, {2, 3}}, 2, {0});
  CHECK_FALSE(L.size_violation(1).has_value());
  CHECK(L.size_violation(2).has_value());
  CHECK(L.precolored_vertex() == 0);
  ListAssignment bad(c3, {{1, 2, 3}, {1, 2}, {2, 3}}, 2);
  CHECK(bad.size_violation(1).has_value());
}

TEST_CASE("amplitude on a path matches the definition") {
  Graph p3 = build_path(3);
  // Color 1 occurs at both ends: independent, counts twice.
  ListAssignment L(p3, {{1}, {2}, {1}}, 1);
  CHECK(amplitude_sigma(L) == 3);
  ListAssignment M(p3, {{1}, {1}, {1}}, 1);
  CHECK(amplitude_sigma(M) == 2);
  CHECK(amplitude_sigma(M, 1, 2) == 1);
  CHECK_FALSE(amplitude_condition(M, 1));
  auto v = amplitude_violation(M, 1);
  REQUIRE(v.has_value());
  CHECK(v->sigma < v->demand);
}

TEST_CASE("property: separation, amplitude and validity agree with brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    int a = 1 + static_cast<int>(rng() % 3);
    int c = static_cast<int>(rng() % static_cast<unsigned>(a + 1));
    auto g = std::make_shared<const Graph>(build_path(n));
    ListAssignment L = random_separating_lists(g, a, c, rng);
    CHECK(separation(L) <= c);
    CHECK(L.size_violation(1) == std::nullopt);
    auto edges = oracle::plain_edges(*g);
    auto lists = oracle::plain_lists(L);
    CHECK(separation(L) == oracle::separation(edges, lists));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    CHECK(amplitude_sigma(L) == oracle::sigma(edges, lists, order));
    for (int b = 1; b <= a; ++b) CHECK(amplitude_condition(L, b) == oracle::amplitude_condition(edges, lists, order, b));
  }
}

TEST_CASE("property: random lists respect cap and sizes on cycles with a precolored vertex") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    int a = 2 + static_cast<int>(rng() % 6);
    int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(a));
    int c = static_cast<int>(rng() % static_cast<unsigned>(a + 1));
    RandomListOptions opts;
    opts.precolored = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    opts.b = b;
    ListAssignment L = random_separating_lists(std::make_shared<const Graph>(build_cycle(n)), a, c, rng, opts);
    CHECK(separation(L) <= c);
    CHECK(L.size_violation(b) == std::nullopt);
  }
}

TEST_CASE("canonicalize and realize round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto g = std::make_shared<const Graph>(build_cycle(n));
    ListAssignment L = random_separating_lists(g, 3, 2, rng);
    TraceMultiset t = canonicalize(L);
    ListAssignment R = realize(t, g, 3);
    CHECK(canonicalize(R) == t);
    CHECK(separation(R) == separation(L));
    ColorSet all;
    for (const auto& l : L.lists()) all = all | l;
    CHECK(t.total_colors() == static_cast<int>(all.size()));
  }
}
