#include "sepchoose/formulas.hpp"

#include <algorithm>

#include "sepchoose/error.hpp"

namespace sepchoose {

namespace {

void check_ab(int a, int b) {
  if (b < 1) fail(ErrorCode::invalid_argument, "b must be at least 1");
  if (b > a) fail(ErrorCode::invalid_argument, "b must not exceed a (got a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
}

void check_cycle(int n) {
  if (n < 3) fail(ErrorCode::invalid_argument, "cycle length must be at least 3");
}

Rational q(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace

long long floor_of(const Rational& r) {
  long long num = r.numerator(), den = r.denominator();
  long long f = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --f;
  return f;
}

FormulaResult sep_cycle(int n, int a, int b) {
  check_cycle(n);
  check_ab(a, b);
  if (n % 2 == 0) {
    if (a < 2 * b) return {a - b, "even-low"};
    return {a, "even-high"};
  }
  int p = (n - 1) / 2;
  if (a < 2 * b) return {a - b, "odd-low"};
  // 2b <= a <= 2b + b/p, compared as p*a <= 2bp + b.
  if (static_cast<long long>(p) * a <= static_cast<long long>(2) * b * p + b)
    return {b + (p + 1) * (a - 2 * b), "odd-middle"};
  return {a, "odd-high"};
}

Threshold c_threshold(int n, int a, int b) {
  check_cycle(n);
  check_ab(a, b);
  Threshold t;
  Rational ra = q(a), rb = q(b);
  if (ra < q(2 * n - 1, n - 1) * rb) {
    t.value = q(n - 1, n) * (ra - rb);
    t.regime = "low";
  } else if (ra < q(2 * (n + 1), n) * rb) {
    t.value = q(n - 1, n - 2) * (ra - rb) - q(2, n - 2) * rb;
    t.regime = "middle";
  } else {
    t.value = ra;
    t.regime = "high";
  }
  t.floor = floor_of(t.value);
  return t;
}

FormulaResult fsep_cycle(int n, int a, int b) {
  check_cycle(n);
  check_ab(a, b);
  if (n == 3) {
    Rational ra = q(a), rb = q(b);
    if (ra < q(7, 4) * rb) return {static_cast<int>(floor_of(q(2, 3) * (ra - rb))), "triangle-low"};
    if (a < 3 * b) return {2 * a - 3 * b, "triangle-middle"};
    return {a, "triangle-high"};
  }
  auto t = c_threshold(n, a, b);
  return {static_cast<int>(t.floor), t.regime};
}

FormulaResult fsep_min_with_triangle(int n, int a, int b) {
  if (n < 4) fail(ErrorCode::invalid_argument, "the comparison with the triangle needs n >= 4");
  check_ab(a, b);
  Rational ra = q(a), rb = q(b);
  if (ra < q(7, 4) * rb) return {static_cast<int>(floor_of(q(2, 3) * (ra - rb))), "triangle-low"};
  if (ra <= q(2 * n + 1, n + 1) * rb || (q(2 * n + 2, n) * rb <= ra && a < 3 * b))
    return {2 * a - 3 * b, "triangle-middle"};
  if (ra < q(2 * n - 1, n - 1) * rb) return {static_cast<int>(floor_of(q(n - 1, n) * (ra - rb))), "cycle-low"};
  if (ra < q(2 * n + 2, n) * rb)
    return {static_cast<int>(floor_of(q(n - 1, n - 2) * (ra - rb) - q(2, n - 2) * rb)), "cycle-middle"};
  return {a, "high"};
}

bool fsep_monotone_check(int n, int a, int b) {
  if (n < 4) fail(ErrorCode::invalid_argument, "monotonicity holds from n = 4 on");
  return fsep_cycle(n, a, b).value <= fsep_cycle(n + 1, a, b).value;
}

FormulaResult fsep_cactus(const Graph& g, int a, int b) {
  check_ab(a, b);
  if (!g.connected()) fail(ErrorCode::invalid_argument, "cactus must be connected");
  if (!is_cactus(g)) fail(ErrorCode::invalid_argument, "graph is not a cactus");
  auto gi = girth(g);
  if (!gi) fail(ErrorCode::regime, "the cactus formula needs a cycle (forests have infinite girth)");
  auto longer = shortest_cycle_above_3(g);
  auto tag = [](const std::string& prefix, FormulaResult r) {
    r.regime = prefix + r.regime;
    return r;
  };
  if (*gi >= 4 || !longer) return tag("girth:", fsep_cycle(*gi, a, b));
  int l = *longer;
  Rational ra = q(a), rb = q(b);
  if (q(2 * l + 1, l + 1) * rb < ra && ra < q(2 * l + 2, l) * rb) return tag("longer-cycle:", fsep_cycle(l, a, b));
  return tag("triangle:", fsep_cycle(3, a, b));
}

std::pair<FormulaResult, FormulaResult> fsep_outerplanar_bounds(int g, int a, int b) {
  if (g < 5) fail(ErrorCode::regime, "outerplanar bounds need girth g >= 5 (got " + std::to_string(g) + ")");
  check_ab(a, b);
  auto lower = fsep_cycle(g - 1, a, b);
  auto upper = fsep_cycle(g, a, b);
  bool exact = lower.value == upper.value;
  lower.exact = exact;
  upper.exact = exact;
  return {lower, upper};
}

int sep_lower_bound(int a, int b) {
  check_ab(a, b);
  return a - b;
}

}  // namespace sepchoose
