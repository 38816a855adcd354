#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sepchoose/adversary.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/formulas.hpp"

using namespace sepchoose;

TEST_CASE("sep_cycle known values") {
  CHECK(sep_cycle(3, 5, 2).value == 4);
  CHECK(sep_cycle(5, 7, 3).value == 6);
  CHECK(sep_cycle(5, 9, 4).value == 7);
  CHECK(sep_cycle(5, 9, 4).regime == "odd-middle");
  CHECK(sep_cycle(3, 7, 3).value == 5);
  CHECK(sep_cycle(4, 2, 1).value == 2);
  CHECK_THROWS_AS(sep_cycle(3, 1, 2), Error);
  CHECK_THROWS_AS(sep_cycle(2, 2, 1), Error);
  CHECK_THROWS_AS(sep_cycle(4, 2, 0), Error);
}

TEST_CASE("c_threshold in exact arithmetic") {
  Threshold t = c_threshold(4, 9, 4);
  CHECK(t.value == Rational(15, 4));
  CHECK(t.floor == 3);
  CHECK(t.regime == "low");
  for (int n = 3; n <= 9; ++n)
    for (int b = 1; b <= 5; ++b) CHECK(c_threshold(n, b, b).floor == 0);
  CHECK(c_threshold(5, 9, 4).floor == 4);
  CHECK(c_threshold(5, 9, 4).regime == "middle");
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(floor_of(Rational(7, 2)) == 3);
}

TEST_CASE("fsep_cycle known values") {
  CHECK(fsep_cycle(4, 9, 4).value == 3);
  CHECK(fsep_cycle(5, 9, 4).value == 4);
  CHECK(fsep_cycle(3, 2, 1).value == 1);
  for (int b = 1; b <= 5; ++b) CHECK(fsep_cycle(3, 3 * b, b).value == 3 * b);
}

TEST_CASE("fsep_min_with_triangle known values") {
  CHECK(fsep_min_with_triangle(5, 12, 6).value == 4);
  CHECK(fsep_min_with_triangle(4, 9, 4).value == 3);
  for (int b = 1; b <= 4; ++b) CHECK(fsep_min_with_triangle(5, 3 * b, b).value == 3 * b);
  CHECK(fsep_monotone_check(4, 9, 4));
  for (int b = 1; b <= 4; ++b) CHECK(fsep_monotone_check(6, b, b));
}

TEST_CASE("property: the five-piece minimum equals the minimum of the two cycle values") {
  for (int n = 4; n <= 12; ++n)
    for (int b = 1; b <= 4; ++b)
      for (int a = b; a <= 4 * b; ++a) {
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(fsep_min_with_triangle(n, a, b).value == std::min(fsep_cycle(3, a, b).value, fsep_cycle(n, a, b).value));
        CHECK(fsep_monotone_check(n, a, b));
        CHECK(fsep_cycle(n, a, b).value <= sep_cycle(n, a, b).value);
        CHECK(sep_lower_bound(a, b) <= sep_cycle(n, a, b).value);
      }
}

TEST_CASE("fsep_cactus") {
  CHECK(fsep_cactus(fig1_fixture().graph(), 2, 1).value == 0);
  CHECK(fsep_cactus(build_flower(3, 2), 2, 1).value == 1);
  Graph amalgam = identify_vertices(build_cycle(3), 0, build_cycle(5), 0);
  CHECK(fsep_cactus(amalgam, 12, 6).value == fsep_cycle(5, 12, 6).value);
  CHECK(fsep_cactus(amalgam, 12, 6).value == 4);
  CHECK(fsep_cactus(build_cycle(6), 5, 2).value == fsep_cycle(6, 5, 2).value);
  CHECK_THROWS_AS(fsep_cactus(build_path(4), 2, 1), Error);
  CHECK_THROWS_AS(fsep_cactus(build_complete(4), 2, 1), Error);
}

TEST_CASE("fsep_outerplanar_bounds") {
  auto [lo, hi] = fsep_outerplanar_bounds(5, 9, 4);
  CHECK(lo.value == 3);
  CHECK(hi.value == 4);
  CHECK_FALSE(lo.exact);
  auto [lo2, hi2] = fsep_outerplanar_bounds(5, 3, 1);
  CHECK(lo2.value == 3);
  CHECK(hi2.value == 3);
  CHECK(lo2.exact);
  for (int g = 5; g <= 9; ++g) {
    auto [l, h] = fsep_outerplanar_bounds(g, 3, 3);
    CHECK(l.value == 0);
    CHECK(h.value == 0);
  }
  try {
    fsep_outerplanar_bounds(4, 9, 4);
    FAIL("expected a regime error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::regime);
  }
}

TEST_CASE("property: closed forms match brute-force enumeration on the smallest cycles") {
  struct Cell {
    int n, a;
  };
  for (Cell cell : {Cell{3, 1}, Cell{3, 2}, Cell{3, 3}, Cell{4, 1}, Cell{4, 2}}) {
    Graph g = build_cycle(cell.n);
    auto edges = oracle::plain_edges(g);
    for (int b = 1; b <= cell.a; ++b) {
      CAPTURE(cell.n);
      CAPTURE(cell.a);
      CAPTURE(b);
      CHECK(oracle::sep(cell.n, edges, cell.a, b, false) == sep_cycle(cell.n, cell.a, b).value);
      CHECK(oracle::sep(cell.n, edges, cell.a, b, true) == fsep_cycle(cell.n, cell.a, b).value);
    }
  }
}
