#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace sepchoose {

using Vertex = int;
/// Undirected edge stored with first < second.
using Edge = std::pair<Vertex, Vertex>;
/// Length of a shortest cycle; std::nullopt stands for the infinite girth of a forest.
using Girth = std::optional<int>;

struct Block {
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;  // sorted

  bool is_edge() const { return edges.size() == 1; }
  /// True when the block is a single cycle (as many edges as vertices, at least 3).
  bool is_cycle() const { return vertices.size() >= 3 && edges.size() == vertices.size(); }
};

struct BlockTree {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // sorted

  /// Every block is a single edge or a cycle.
  bool is_cactus() const;
};

/// Finite simple undirected graph over vertices 0..n-1 with optional structural
/// annotations. Immutable once built: the `with_*` members return annotated copies
/// after validating the annotation against the edge set.
class Graph {
 public:
  Graph() = default;
  /// Throws on loops, duplicate edges and out-of-range endpoints.
  explicit Graph(int n, const std::vector<Edge>& edges = {});

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool adjacent(Vertex u, Vertex v) const;
  bool connected() const;
  bool is_complete() const { return static_cast<long>(edges_.size()) == static_cast<long>(n_) * (n_ - 1) / 2; }

  const std::optional<std::vector<Vertex>>& cycle_order() const { return cycle_order_; }
  const std::optional<std::vector<Vertex>>& path_order() const { return path_order_; }
  const std::optional<std::vector<std::vector<Vertex>>>& faces() const { return faces_; }
  const std::optional<BlockTree>& block_tree() const { return block_tree_; }

  /// The order must list every vertex once and the edges must be exactly its consecutive pairs plus the wrap pair.
  Graph with_cycle_order(std::vector<Vertex> order) const;
  /// The order must list every vertex once and the edges must be exactly its consecutive pairs.
  Graph with_path_order(std::vector<Vertex> order) const;
  /// Every face must be a cycle of the graph, every edge must lie on at most two faces
  /// and the face-adjacency graph must be a tree.
  Graph with_faces(std::vector<std::vector<Vertex>> faces) const;
  /// Blocks must partition the edge set and each must be an edge or a cycle.
  Graph with_block_tree(BlockTree tree) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::optional<std::vector<Vertex>> cycle_order_;
  std::optional<std::vector<Vertex>> path_order_;
  std::optional<std::vector<std::vector<Vertex>>> faces_;
  std::optional<BlockTree> block_tree_;
};

Edge make_edge(Vertex u, Vertex v);

/// C_n with CycleOrder x_1..x_n = 0..n-1 and a single face.
Graph build_cycle(int n);
/// P_n with PathOrder x_1..x_n = 0..n-1.
Graph build_path(int n);
/// K_n (no annotations).
Graph build_complete(int n);
/// k copies of C_p sharing the hub vertex 0. Copy i occupies vertices
/// 1+i(p-1) .. (i+1)(p-1) in cycle order; block tree and faces are populated.
Graph build_flower(int p, int k);

/// Disjoint union of g1 and g2 with v2 merged into v1. Vertices of g1 keep their ids;
/// the remaining vertices of g2 follow in their original order. Faces and block trees
/// are carried over when present on both sides.
Graph identify_vertices(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

/// Image of each vertex of g2 inside identify_vertices(g1, v1, g2, v2).
std::vector<Vertex> identify_vertices_map(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

Girth girth(const Graph& g);
/// Shortest cycle of length at least 4, if any.
std::optional<int> shortest_cycle_above_3(const Graph& g);
/// Lengths of all cycles when g is a cactus (one per cycle block).
std::vector<int> cactus_cycle_lengths(const Graph& g);

/// One vertex per face, one edge per pair of faces sharing a graph edge.
/// Throws when the graph carries no face list or the result is not a tree.
Graph weak_dual(const Graph& g);

/// Biconnected blocks and cut vertices of a connected graph.
BlockTree block_decomposition(const Graph& g, bool require_cactus = false);
bool is_cactus(const Graph& g);

}  // namespace sepchoose
