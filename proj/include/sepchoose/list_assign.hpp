#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepchoose/color_set.hpp"
#include "sepchoose/graph.hpp"

namespace sepchoose {

/// One list per vertex plus the size bound a. Precolored vertices carry lists of
/// size b (their color set is forced). Usually there is at most one; path
/// instances with two forced end-vertices use two.
class ListAssignment {
 public:
  ListAssignment(std::shared_ptr<const Graph> graph, std::vector<ColorSet> lists, int a,
                 std::vector<Vertex> precolored = {});
  ListAssignment(const Graph& graph, std::vector<ColorSet> lists, int a, std::vector<Vertex> precolored = {})
      : ListAssignment(std::make_shared<const Graph>(graph), std::move(lists), a, std::move(precolored)) {}

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const std::vector<ColorSet>& lists() const { return lists_; }
  const ColorSet& list(Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
  int a() const { return a_; }
  const std::vector<Vertex>& precolored() const { return precolored_; }
  bool is_precolored(Vertex v) const;
  /// The precolored vertex when there is exactly one.
  std::optional<Vertex> precolored_vertex() const;

  /// Sizes follow the convention: a everywhere, b at precolored vertices.
  /// Returns a description of the first violation.
  std::optional<std::string> size_violation(int b) const;

  ListAssignment with_lists(std::vector<ColorSet> lists) const { return {graph_, std::move(lists), a_, precolored_}; }

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<ColorSet> lists_;
  int a_;
  std::vector<Vertex> precolored_;
};

/// phi: one color set per vertex.
using BColoring = std::vector<ColorSet>;

/// Max over edges of |L(u) ∩ L(v)|; 0 for edgeless graphs.
int separation(const ListAssignment& L);
int separation(const Graph& g, const std::vector<ColorSet>& lists);

bool is_valid_coloring(const ListAssignment& L, const BColoring& phi, int b);
/// Why phi fails, if it does.
std::optional<std::string> coloring_violation(const ListAssignment& L, const BColoring& phi, int b);

/// Σ_{i,j}(L): sum over colors of the independence number of the color's
/// occurrence pattern inside the subgraph induced by x_i..x_j (1-based, along the
/// graph's path or cycle order). Complete graphs without an order use vertex ids.
int amplitude_sigma(const ListAssignment& L, int i, int j);
int amplitude_sigma(const ListAssignment& L);

/// A sub-structure whose amplitude is too small: vertices (as an interval of the
/// path order, or a vertex subset for complete graphs), Σ and the demand b|H|.
struct AmplitudeViolation {
  std::vector<Vertex> vertices;
  int first = 0;  // 1-based interval bounds for paths, 0 otherwise
  int last = 0;
  int sigma = 0;
  int demand = 0;
};

/// Paths (PathOrder) and complete graphs only.
std::optional<AmplitudeViolation> amplitude_violation(const ListAssignment& L, int b);
bool amplitude_condition(const ListAssignment& L, int b);
/// Minimum over intervals of Σ_{i,j} - b(j-i+1) for a sequence of lists along a path.
/// Negative iff the amplitude condition fails. Empty sequences give 0.
int path_amplitude_slack(const std::vector<ColorSet>& lists_in_order, int b, int* worst_i = nullptr, int* worst_j = nullptr);

/// Sorted vertex set.
using Trace = std::vector<Vertex>;

/// Colors grouped by trace (the vertices whose lists contain them), with multiplicities.
struct TraceMultiset {
  std::map<Trace, int> counts;

  int total_colors() const;
  friend bool operator==(const TraceMultiset&, const TraceMultiset&) = default;
};

TraceMultiset canonicalize(const ListAssignment& L);
/// Fresh color ids 0,1,2,... handed out per trace copy in trace order.
ListAssignment realize(const TraceMultiset& t, std::shared_ptr<const Graph> graph, int a,
                       std::vector<Vertex> precolored = {});

}  // namespace sepchoose
