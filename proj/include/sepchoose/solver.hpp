#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "sepchoose/list_assign.hpp"

namespace sepchoose {

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

/// Node budget used when no explicit budget is given; SEPCHOOSE_BUDGET overrides it.
std::uint64_t default_budget();

struct SolveOptions {
  std::uint64_t budget = default_budget();
  /// Worker threads used to fan out enumeration subtrees. Results do not depend on it.
  unsigned workers = 1;
  /// Quotient by rotations/reflections when the graph carries a cycle order.
  bool symmetry = false;
  /// Refine the witness to the lexicographically least coloring (vertex order, then color order).
  bool lex_least_witness = true;
  /// Skip list assignments in which two colors with disjoint adjacent traces could be
  /// merged without breaking the separation cap (the merged assignment is harder).
  bool dominance = true;
};

struct SolveOutcome {
  /// For coloring queries: colorable. For choosability queries: choosable.
  Verdict verdict = Verdict::unknown;
  std::optional<BColoring> witness;
  std::optional<ListAssignment> counterexample;
  std::uint64_t nodes_explored = 0;

  bool colorable() const { return verdict == Verdict::yes; }
  bool choosable() const { return verdict == Verdict::yes; }
};

/// Exact (L,b)-colorability by backtracking.
SolveOutcome color_with_lists(const ListAssignment& L, int b, const SolveOptions& opts = {});

/// Same, with the precolored vertices forced to their whole list (which must have size b).
SolveOutcome free_color_with_lists(const ListAssignment& L, int b, const SolveOptions& opts = {});

/// Exact extension of a partial coloring. Entries of `fixed` that are set must be
/// b-subsets of the corresponding lists and are kept as they are.
SolveOutcome extend_coloring(const ListAssignment& L, int b, const std::vector<std::optional<ColorSet>>& fixed,
                             const SolveOptions& opts = {});

struct EnumerateOptions {
  /// Only traces inducing connected subgraphs. Colors with a disconnected trace can be
  /// split per component without changing sizes, separation or colorability.
  bool connected_traces_only = false;
  /// Only assignments that no cap-respecting merge of two colors dominates.
  bool maximal_only = false;
  /// Quotient by the dihedral group of the cycle order (stabilizer of the precolored vertex).
  bool symmetry = false;
};

/// Every trace multiset with vertex sums a (b at `precolored`) and edge sums at most c,
/// i.e. every c-separating list assignment up to color relabeling. `visit` returns false
/// to stop early. Returns the number of multisets visited.
std::uint64_t enumerate_canonical(const Graph& g, int a, int b, int c, std::optional<Vertex> precolored,
                                  const std::function<bool(const TraceMultiset&)>& visit,
                                  const EnumerateOptions& opts = {});

/// (a,b,c)-choosability (free=false) or free-choosability (free=true). A "no" verdict
/// comes with a counterexample; "unknown" means the budget ran out.
SolveOutcome decide_choosable(const Graph& g, int a, int b, int c, bool free, const SolveOptions& opts = {});

/// sep(G,a,b) or fsep(G,a,b). Throws Error(budget_exhausted) when undecided.
int compute_sep(const Graph& g, int a, int b, bool free, const SolveOptions& opts = {});

}  // namespace sepchoose
