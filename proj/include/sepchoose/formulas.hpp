#pragma once

#include <string>
#include <utility>

#include <boost/rational.hpp>

#include "sepchoose/graph.hpp"

namespace sepchoose {

using Rational = boost::rational<long long>;

/// A closed-form value together with the label of the piece that produced it.
struct FormulaResult {
  int value = 0;
  std::string regime;
  bool exact = true;
};

/// sep(C_n,a,b). Regimes: even-low, even-high, odd-low, odd-middle, odd-high.
FormulaResult sep_cycle(int n, int a, int b);

struct Threshold {
  Rational value;
  long long floor = 0;
  /// low, middle or high.
  std::string regime;
};

/// The piecewise threshold c(n,a,b) in exact arithmetic.
Threshold c_threshold(int n, int a, int b);

/// fsep(C_n,a,b). Regimes for n >= 4: low, middle, high; for n = 3:
/// triangle-low, triangle-middle, triangle-high.
FormulaResult fsep_cycle(int n, int a, int b);

/// min(fsep(C_3,a,b), fsep(C_n,a,b)) from its five-piece closed form (n >= 4).
/// Regimes: triangle-low, triangle-middle, cycle-low, cycle-middle, high.
FormulaResult fsep_min_with_triangle(int n, int a, int b);

/// fsep(C_n,a,b) <= fsep(C_{n+1},a,b).
bool fsep_monotone_check(int n, int a, int b);

/// fsep of a connected cactus with at least one cycle. The regime is prefixed with
/// "girth:", "longer-cycle:" or "triangle:" to name the cycle length that decided it.
FormulaResult fsep_cactus(const Graph& g, int a, int b);

/// (fsep(C_{g-1},a,b), fsep(C_g,a,b)) for outerplanar graphs of girth g >= 5.
std::pair<FormulaResult, FormulaResult> fsep_outerplanar_bounds(int g, int a, int b);

/// The universal lower bound a - b on sep(C_n,a,b).
int sep_lower_bound(int a, int b);

/// Largest integer not exceeding r.
long long floor_of(const Rational& r);

}  // namespace sepchoose
