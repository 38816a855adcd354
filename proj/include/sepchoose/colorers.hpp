#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sepchoose/list_assign.hpp"

namespace sepchoose {

/// How a coloring was produced: the strategy label (greedy, lift, path-amplitude,
/// cycle-cut, cactus, outerplanar) and one line per decision, in order.
struct ColoringPlan {
  std::string strategy;
  std::vector<std::string> trace;
};

struct ColoringResult {
  BColoring coloring;
  ColoringPlan plan;
};

/// Colors a cycle with the lexicographically least b-subset of L(x) \ L(x+) at every x.
/// Throws Error(precondition) when some difference has fewer than b colors.
ColoringResult greedy_cycle(const ListAssignment& L, int b);

/// A colorer for an arbitrary list assignment (lists may have different sizes).
using BaseColorer = std::function<BColoring(const ListAssignment&, int b)>;

/// Exact solver used as a colorer; throws Error(precondition) when no coloring exists.
BColoring exact_colorer(const ListAssignment& L, int b);

struct LiftResult {
  ColoringResult result;
  /// The reduced lists L' handed to the base colorer.
  ListAssignment reduced;
  int a_base = 0;
  int c_base = 0;
};

/// Colors a cycle with b colors per vertex by first giving each x k colors from
/// L(x) \ L(x+), then reducing to lists of size >= a-2k with separation <= c-k and
/// coloring those with b-k colors by `base`. a and c are read off L.
LiftResult lift_cycle(const ListAssignment& L, int b, int k, const BaseColorer& base = exact_colorer);

/// Colors a path whose precolored vertices keep their whole list, trying b-subsets in
/// lexicographic order along the path order and pruning with the amplitude condition
/// on the remaining suffix. Throws Error(precondition) when no coloring exists.
ColoringResult path_color_precolored(const ListAssignment& L, int b);

/// Cycle with one precolored vertex r: cut at r into a path with both ends precolored
/// by L(r). Triangles go to the exact solver.
ColoringResult cycle_color_precolored(const ListAssignment& L, int b);

/// Cactus with one precolored vertex: blocks are colored outward from r, cycles via
/// cycle_color_precolored and bridges greedily.
ColoringResult cactus_free_color(const ListAssignment& L, int b);

/// Outerplanar graph with a face list and one precolored vertex: faces are colored in
/// BFS order of the weak dual, each face after the first as a path between the two
/// ends of the edge it shares with an already colored face.
ColoringResult outerplanar_color(const ListAssignment& L, int b);

}  // namespace sepchoose
