// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sepchoose/adversary.hpp"
#include "sepchoose/colorers.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/formulas.hpp"
#include "sepchoose/json_io.hpp"
#include "sepchoose/random_lists.hpp"
#include "sepchoose/solver.hpp"

using namespace sepchoose;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string cell(int n, int a, int b) {
  return "(n=" + std::to_string(n) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
}

ListAssignment random_rooted(const Graph& g, int a, int b, int c, std::mt19937_64& rng) {
  RandomListOptions opts;
  opts.precolored = static_cast<Vertex>(rng() % static_cast<unsigned>(g.order()));
  opts.b = b;
  return random_separating_lists(std::make_shared<const Graph>(g), a, c, rng, opts);
}

// Re-checks a certificate the way the verify command does: serialize, parse, verify.
VerifyReport verify_via_json(const Certificate& cert) {
  return verify_certificate(certificate_from_json(parse_json(certificate_to_json(cert).dump())));
}

// Formula and exact oracle agree on every small cycle.
Outcome ac1() {
  Outcome o;
  auto start = Clock::now();
  int cells = 0;
  int c4_sep = -1;
  for (int n = 3; n <= 5; ++n)
    for (int b = 1; b <= 2; ++b)
      for (int a = b; a <= std::min(3 * b, 6); ++a) {
        Graph g = build_cycle(n);
        int sep = compute_sep(g, a, b, false);
        int fsep = compute_sep(g, a, b, true);
        ++cells;
        if (sep != sep_cycle(n, a, b).value)
          o.fail("sep" + cell(n, a, b) + " oracle " + std::to_string(sep) + " formula " +
                 std::to_string(sep_cycle(n, a, b).value));
        if (fsep != fsep_cycle(n, a, b).value)
          o.fail("fsep" + cell(n, a, b) + " oracle " + std::to_string(fsep) + " formula " +
                 std::to_string(fsep_cycle(n, a, b).value));
        if (n == 4 && a == 2 && b == 1) c4_sep = sep;
      }
  // The two competing statements for this cell are 1 and 2; the oracle must pick one.
  if (c4_sep != 1 && c4_sep != 2) o.fail("sep(C4,2,1) = " + std::to_string(c4_sep) + " matches neither stated value");
  double t = seconds_since(start);
  if (t >= 600) o.fail("runtime " + std::to_string(t) + " s exceeds 10 minutes");
  o.detail << cells << " cells x {sep, fsep} exact; sep(C4,2,1) = " << c4_sep << " (closed form "
           << sep_cycle(4, 2, 1).value << ", the competing value 1 is rejected); " << t << " s";
  return o;
}

struct OddDatapoint {
  int n, a, b, c;
  int p, alpha;
  int k;  // lift amount over the base (n*alpha, p*alpha, n*alpha)
};

// Odd-cycle datapoints: both directions.
Outcome ac2() {
  Outcome o;
  auto start = Clock::now();
  std::mt19937_64 rng(2);
  const std::vector<OddDatapoint> points{
      {3, 5, 2, 4, 1, 1, 1}, {3, 7, 3, 5, 1, 1, 2}, {5, 7, 3, 6, 2, 1, 1}, {5, 9, 4, 7, 2, 1, 2}};
  int colored = 0;
  for (const auto& d : points) {
    if (sep_cycle(d.n, d.a, d.b).value != d.c) o.fail("closed form disagrees at " + cell(d.n, d.a, d.b));
    // Lifting the base ((2p+1)alpha, p alpha, (2p+1)alpha) by k reaches (a, b, c).
    int a0 = d.n * d.alpha, b0 = d.p * d.alpha, c0 = d.n * d.alpha;
    if (a0 + 2 * d.k != d.a || b0 + d.k != d.b || c0 + d.k != d.c) o.fail("lift parameters inconsistent");
    auto g = std::make_shared<const Graph>(build_cycle(d.n));
    for (int trial = 0; trial < 1000; ++trial) {
      ListAssignment L = random_separating_lists(g, d.a, d.c, rng);
      try {
        LiftResult r = lift_cycle(L, d.b, d.k);
        if (!is_valid_coloring(L, r.result.coloring, d.b)) o.fail("invalid lifted coloring at " + cell(d.n, d.a, d.b));
        ++colored;
      } catch (const Error& e) {
        o.fail(std::string("lift failed at ") + cell(d.n, d.a, d.b) + ": " + e.what());
      }
    }
    Certificate cert = gen_sep_odd_cycle(d.p, d.b, d.alpha);
    if (cert.a != d.a || cert.c != d.c + 1) o.fail("certificate parameters at " + cell(d.n, d.a, d.b));
    VerifyReport rep = verify_via_json(cert);
    if (rep.status != VerifyStatus::pass) o.fail("certificate " + cell(d.n, d.a, d.b) + ": " + rep.message);
  }
  double t = seconds_since(start);
  if (t >= 300) o.fail("runtime exceeds 5 minutes");
  o.detail << "sep(C3,5,2)=4 sep(C3,7,3)=5 sep(C5,7,3)=6 sep(C5,9,4)=7; " << colored
           << " lifted colorings valid, 4 certificates uncolorable at c+1; " << t << " s";
  return o;
}

// Free-separation datapoints on C4 and C5 at (9,4).
Outcome ac3() {
  Outcome o;
  auto start = Clock::now();
  struct Point {
    int n, c;
    PathVariant variant;
  };
  std::mt19937_64 rng(3);
  int colored = 0;
  double worst_verify = 0;
  for (Point pt : {Point{4, 3, PathVariant::case1}, Point{5, 4, PathVariant::case2b}}) {
    if (fsep_cycle(pt.n, 9, 4).value != pt.c) o.fail("closed form disagrees at n=" + std::to_string(pt.n));
    if (path_variant_for(pt.n, 9, 4) != pt.variant) o.fail("unexpected path variant at n=" + std::to_string(pt.n));
    Certificate cyc = glue_path_to_cycle(gen_path_family(pt.n, 9, 4, pt.variant, Endpoints::equal));
    if (cyc.c != pt.c + 1) o.fail("certificate separation at n=" + std::to_string(pt.n));
    auto v0 = Clock::now();
    VerifyReport rep = verify_via_json(cyc);
    double tv = seconds_since(v0);
    worst_verify = std::max(worst_verify, tv);
    if (rep.status != VerifyStatus::pass) o.fail("glued certificate n=" + std::to_string(pt.n) + ": " + rep.message);
    if (tv >= 1.0) o.fail("oracle took " + std::to_string(tv) + " s at n=" + std::to_string(pt.n));

    Graph g = build_cycle(pt.n);
    for (int trial = 0; trial < 10000; ++trial) {
      ListAssignment L = random_rooted(g, 9, 4, pt.c, rng);
      try {
        ColoringResult r = cycle_color_precolored(L, 4);
        if (!is_valid_coloring(L, r.coloring, 4)) o.fail("invalid coloring on C" + std::to_string(pt.n));
        ++colored;
      } catch (const Error& e) {
        o.fail("cycle colorer failed on C" + std::to_string(pt.n) + ": " + e.what());
      }
    }
  }
  o.detail << "fsep(C4,9,4)=3 fsep(C5,9,4)=4; glued certificates uncolorable (slowest " << worst_verify << " s); "
           << colored << "/20000 random precolored instances colored; " << seconds_since(start) << " s";
  return o;
}

// Every family over the grid: verified, separation exactly c, amplitude equal to the closed form.
Outcome ac4() {
  Outcome o;
  auto start = Clock::now();
  int certs = 0, sigma_checked = 0, adjusted = 0, skipped = 0;
  auto check = [&](const Certificate& cert, std::optional<int> expected_sigma, const std::string& label) {
    ++certs;
    if (separation(cert.lists) != cert.c) o.fail(label + ": separation " + std::to_string(separation(cert.lists)));
    VerifyReport rep = verify_via_json(cert);
    if (rep.status != VerifyStatus::pass) o.fail(label + ": " + rep.message);
    if (expected_sigma) {
      ++sigma_checked;
      int s = amplitude_sigma(cert.lists);
      if (s != *expected_sigma || cert.sigma_closed_form != expected_sigma)
        o.fail(label + ": amplitude " + std::to_string(s) + " expected " + std::to_string(*expected_sigma));
    }
  };

  for (int n = 3; n <= 8; ++n)
    for (int b = 1; b <= 4; ++b)
      for (int k = 0; k < b; ++k)
        check(gen_sep_small_ratio(n, b, k), n / 2 + n * (b - 1),
              "small-ratio n=" + std::to_string(n) + " b=" + std::to_string(b) + " k=" + std::to_string(k));

  for (int p = 1; 2 * p + 1 <= 8; ++p)
    for (int b = 1; b <= 4; ++b)
      for (int alpha = 0; p * alpha <= b - 1; ++alpha)
        check(gen_sep_odd_cycle(p, b, alpha), (2 * p + 1) * b - 1,
              "odd-cycle p=" + std::to_string(p) + " b=" + std::to_string(b) + " alpha=" + std::to_string(alpha));

  for (int n = 4; n <= 8; ++n)
    for (int b = 1; b <= 4; ++b)
      for (int a = b; a * n < 2 * (n + 1) * b; ++a) {
        if (a == 1) {
          ++skipped;
          continue;
        }
        int c = static_cast<int>(c_threshold(n, a, b).floor) + 1;
        std::string regime = c_threshold(n, a, b).regime;
        std::vector<std::pair<PathVariant, int>> variants;
        if (regime == "low") variants.emplace_back(PathVariant::case1, (n - 1) * (a - c) + 2 * b - c);
        if (regime == "middle" && a >= 2 * c) variants.emplace_back(PathVariant::case2a, (n - 1) * a - (n - 2) * c);
        if (regime == "middle" && a == 2 * c - 1)
          variants.emplace_back(PathVariant::case2b, n % 2 == 1 ? n * c - (n + 1) / 2 : n * c - n / 2);
        if (variants.empty()) {
          o.fail("no path variant covers " + cell(n, a, b));
          continue;
        }
        for (auto [v, sigma] : variants) {
          for (Endpoints e : {Endpoints::equal, Endpoints::disjoint}) {
            Certificate path = gen_path_family(n, a, b, v, e);
            std::string label = std::string("path-") + to_string(v) + "-" + to_string(e) + cell(n, a, b);
            check(path, sigma, label);
            if (e == Endpoints::equal) check(glue_path_to_cycle(path), std::nullopt, label + "-glued");
          }
        }
      }

  for (int b = 1; b <= 4; ++b)
    for (int a = b; a < 3 * b; ++a) {
      if (a == 1) {
        ++skipped;
        continue;
      }
      TriangleVariant v = triangle_variant_for(a, b);
      Certificate cert = gen_c3_family(a, b, v);
      int c = cert.c;
      // The layout with Σ = 2a - c needs b <= 2c: with |L1| = b and both overlaps at most c,
      // at least b - 2c colors of L1 add to |L2 ∪ L3| >= 2a - c.
      int sigma = 2 * a - c;
      if (b > 2 * c) {
        sigma = 2 * a - 3 * c + b;
        ++adjusted;
      }
      check(cert, sigma, std::string("c3-") + to_string(v) + cell(3, a, b));
    }

  for (int p = 3; p <= 8; ++p)
    for (int b = 1; b <= 4; ++b)
      for (int a = std::max(b, 2); (p == 3 ? a < 3 * b : a * p < 2 * (p + 1) * b); ++a) {
        Certificate f = gen_flower(p, a, b);
        check(f, std::nullopt, "flower" + cell(p, a, b));
      }

  check(fig1_fixture(), std::nullopt, "fig1");

  o.detail << certs << " certificates verified, " << sigma_checked << " amplitudes equal to closed forms (" << adjusted
           << " triangle cells use b + 2a - 3c where b > 2c), " << skipped << " cells with a = b = 1 outside the layouts; "
           << seconds_since(start) << " s";
  return o;
}

// Amplitude condition on paths versus exact colorability.
Outcome ac5() {
  Outcome o;
  auto start = Clock::now();
  std::uint64_t exhaustive = 0;
  for (int n = 1; n <= 10; ++n)
    for (int a = 1; n * a <= 10; ++a) {
      auto g = std::make_shared<const Graph>(build_path(n));
      enumerate_canonical(*g, a, 1, a, std::nullopt, [&](const TraceMultiset& t) {
        ListAssignment L = realize(t, g, a);
        for (int b = 1; b <= a; ++b) {
          ++exhaustive;
          bool amp = amplitude_condition(L, b);
          bool exact = color_with_lists(L, b).colorable();
          if (amp != exact) o.fail("canonical path" + cell(n, a, b) + " amplitude " + std::to_string(amp));
        }
        return true;
      });
    }
  std::mt19937_64 rng(5);
  int random = 0, colorable = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    int b = 1 + static_cast<int>(rng() % 3);
    int palette = b + 2 + static_cast<int>(rng() % 6);
    std::vector<ColorSet> lists;
    for (int v = 0; v < n; ++v) {
      int size = b + static_cast<int>(rng() % 3);
      ColorSet s;
      while (static_cast<int>(s.size()) < std::min(size, palette)) s.insert(static_cast<Color>(rng() % static_cast<unsigned>(palette)));
      lists.push_back(s);
    }
    ListAssignment L(build_path(n), lists, 0);
    bool amp = amplitude_condition(L, b);
    bool exact = color_with_lists(L, b).colorable();
    ++random;
    colorable += exact ? 1 : 0;
    if (amp != exact) o.fail("random path n=" + std::to_string(n) + " b=" + std::to_string(b));
  }
  o.detail << exhaustive << " canonical (instance, b) pairs with n*a <= 10 and " << random << " random paths ("
           << colorable << " colorable); " << seconds_since(start) << " s";
  return o;
}

// Triangle-minimum closed form and monotonicity over the grid.
Outcome ac6() {
  Outcome o;
  int cells = 0;
  for (int n = 4; n <= 12; ++n)
    for (int b = 1; b <= 4; ++b)
      for (int a = b; a <= 4 * b; ++a) {
        ++cells;
        FormulaResult m = fsep_min_with_triangle(n, a, b);
        FormulaResult t = fsep_cycle(3, a, b);
        FormulaResult c = fsep_cycle(n, a, b);
        if (!fsep_monotone_check(n, a, b)) o.fail("monotonicity" + cell(n, a, b));
        if (m.value != std::min(t.value, c.value)) o.fail("minimum" + cell(n, a, b));
        bool branch_ok = true;
        if (m.regime == "triangle-low" || m.regime == "triangle-middle") {
          branch_ok = t.regime == m.regime && m.value == t.value;
        } else if (m.regime == "cycle-low") {
          branch_ok = c.regime == "low" && m.value == c.value;
        } else if (m.regime == "cycle-middle") {
          branch_ok = c.regime == "middle" && m.value == c.value;
        } else if (m.regime == "high") {
          branch_ok = m.value == a && t.value == a && c.value == a;
        } else {
          branch_ok = false;
        }
        if (!branch_ok) o.fail("branch " + m.regime + cell(n, a, b));
      }
  o.detail << cells << " cells, monotone and branch-for-branch equal";
  return o;
}

// Lift invariants on random cycles.
Outcome ac7() {
  Outcome o;
  auto start = Clock::now();
  std::mt19937_64 rng(7);
  int done = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 3 + trial % 6;
    int b = 1 + static_cast<int>(rng() % 3);
    int a = b + static_cast<int>(rng() % (2 * static_cast<unsigned>(b) + 1));
    int k = 1 + static_cast<int>(rng() % 2);
    int c = sep_cycle(n, a, b).value;
    auto g = std::make_shared<const Graph>(build_cycle(n));
    ListAssignment L = random_separating_lists(g, a + 2 * k, c + k, rng);
    try {
      LiftResult r = lift_cycle(L, b + k, k);
      for (const auto& l : r.reduced.lists())
        if (static_cast<int>(l.size()) < a) o.fail("reduced list below a" + cell(n, a, b));
      if (separation(r.reduced) > c) o.fail("reduced separation above c" + cell(n, a, b));
      if (!is_valid_coloring(L, r.result.coloring, b + k)) o.fail("invalid coloring" + cell(n, a, b));
      ++done;
    } catch (const Error& e) {
      o.fail(std::string("lift failed") + cell(n, a, b) + ": " + e.what());
    }
  }
  o.detail << done << "/1000 lifts with |L'(x)| >= a, separation(L') <= c and valid colorings; " << seconds_since(start)
           << " s";
  return o;
}

// The two-cycle fixture end to end.
Outcome ac8() {
  Outcome o;
  Certificate fig = fig1_fixture();
  VerifyReport rep = verify_via_json(fig);
  if (rep.status != VerifyStatus::pass) o.fail("fixture: " + rep.message);
  if (separation(fig.lists) != 1) o.fail("fixture separation");
  int fc = fsep_cactus(fig.graph(), 2, 1).value;
  if (fc != 0) o.fail("fsep_cactus = " + std::to_string(fc));
  if (compute_sep(fig.graph(), 2, 1, true) != 0) o.fail("oracle fsep of the fixture graph");
  Certificate flower = gen_flower(4, 2, 1);
  VerifyReport frep = verify_via_json(flower);
  if (frep.status != VerifyStatus::pass) o.fail("flower: " + frep.message);
  std::mt19937_64 rng(8);
  int colored = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ListAssignment L = random_rooted(flower.graph(), 2, 1, 0, rng);
    try {
      if (is_valid_coloring(L, cactus_free_color(L, 1).coloring, 1)) ++colored;
      else o.fail("invalid cactus coloring");
    } catch (const Error& e) {
      o.fail(std::string("cactus colorer failed: ") + e.what());
    }
  }
  o.detail << "fixture uncolorable, fsep_cactus = " << fc << ", flower(4,2,1) uncolorable, " << colored
           << "/1000 0-separating instances colored";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "formula-oracle grid equality", ac1},
      {"AC2", "odd-cycle datapoints", ac2},
      {"AC3", "free-separation datapoints", ac3},
      {"AC4", "certificate suite", ac4},
      {"AC5", "amplitude equivalence on paths", ac5},
      {"AC6", "triangle minimum and monotonicity", ac6},
      {"AC7", "lift invariants", ac7},
      {"AC8", "two-cycle fixture end to end", ac8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s | %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.str().c_str());
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
