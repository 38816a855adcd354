#include "sepchoose/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "sepchoose/error.hpp"

namespace sepchoose {

namespace {

std::string edge_str(const Edge& e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; }

void require_permutation(const std::vector<Vertex>& order, int n, const char* what) {
  if (static_cast<int>(order.size()) != n)
    fail(ErrorCode::invalid_argument, std::string(what) + " must list all " + std::to_string(n) + " vertices");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      fail(ErrorCode::invalid_argument, std::string(what) + " is not a permutation of the vertices");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// Union-find over small integer ids.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[static_cast<std::size_t>(x)] = y;
    return true;
  }
};

// Face adjacency pairs; throws when a face is not a cycle or an edge lies on three faces.
std::vector<std::pair<int, int>> face_adjacency(const Graph& g, const std::vector<std::vector<Vertex>>& faces) {
  std::map<Edge, std::vector<int>> on_faces;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.size() < 3) fail(ErrorCode::invalid_argument, "face " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<Vertex> distinct(face.begin(), face.end());
    if (distinct.size() != face.size()) fail(ErrorCode::invalid_argument, "face " + std::to_string(f) + " repeats a vertex");
    for (std::size_t i = 0; i < face.size(); ++i) {
      Vertex u = face[i];
      Vertex v = face[(i + 1) % face.size()];
      if (!g.has_vertex(u) || !g.has_vertex(v) || !g.adjacent(u, v))
        fail(ErrorCode::invalid_argument, "face " + std::to_string(f) + " is not a cycle of the graph");
      on_faces[make_edge(u, v)].push_back(static_cast<int>(f));
    }
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& [e, fs] : on_faces) {
    if (fs.size() > 2) fail(ErrorCode::invalid_argument, "edge " + edge_str(e) + " lies on more than two faces");
    if (fs.size() == 2) {
      auto p = std::minmax(fs[0], fs[1]);
      if (!pairs.insert({p.first, p.second}).second)
        fail(ErrorCode::invalid_argument, "two faces share more than one edge");
    }
  }
  return {pairs.begin(), pairs.end()};
}

}  // namespace

Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

bool BlockTree::is_cactus() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.is_edge() || b.is_cycle(); });
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) fail(ErrorCode::invalid_argument, "vertex count must be nonnegative");
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) fail(ErrorCode::invalid_argument, "edge " + edge_str({u, v}) + " out of range");
    if (u == v) fail(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(u));
    Edge e = make_edge(u, v);
    if (!seen.insert(e).second) fail(ErrorCode::invalid_argument, "duplicate edge " + edge_str(e));
  }
  edges_.assign(seen.begin(), seen.end());
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph Graph::with_cycle_order(std::vector<Vertex> order) const {
  require_permutation(order, n_, "cycle order");
  if (n_ < 3) fail(ErrorCode::invalid_argument, "a cycle order needs at least 3 vertices");
  if (edges_.size() != static_cast<std::size_t>(n_)) fail(ErrorCode::invalid_argument, "cycle order does not match the edge count");
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!adjacent(order[i], order[(i + 1) % order.size()]))
      fail(ErrorCode::invalid_argument, "cycle order pair " + edge_str({order[i], order[(i + 1) % order.size()]}) + " is not an edge");
  }
  Graph g = *this;
  g.cycle_order_ = std::move(order);
  return g;
}

Graph Graph::with_path_order(std::vector<Vertex> order) const {
  require_permutation(order, n_, "path order");
  if (edges_.size() + 1 != static_cast<std::size_t>(n_)) fail(ErrorCode::invalid_argument, "path order does not match the edge count");
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!adjacent(order[i], order[i + 1]))
      fail(ErrorCode::invalid_argument, "path order pair " + edge_str({order[i], order[i + 1]}) + " is not an edge");
  }
  Graph g = *this;
  g.path_order_ = std::move(order);
  return g;
}

Graph Graph::with_faces(std::vector<std::vector<Vertex>> faces) const {
  auto pairs = face_adjacency(*this, faces);
  // Each 2-connected piece contributes a tree; several pieces give a forest.
  Dsu dsu(faces.size());
  for (auto [f1, f2] : pairs) {
    if (!dsu.unite(f1, f2)) fail(ErrorCode::invalid_argument, "face adjacency contains a cycle");
  }
  Graph g = *this;
  g.faces_ = std::move(faces);
  return g;
}

Graph Graph::with_block_tree(BlockTree tree) const {
  std::set<Edge> covered;
  for (const auto& b : tree.blocks) {
    for (const auto& e : b.edges) {
      Edge m = make_edge(e.first, e.second);
      if (!adjacent(m.first, m.second)) fail(ErrorCode::invalid_argument, "block edge " + edge_str(m) + " is not an edge");
      if (!covered.insert(m).second) fail(ErrorCode::invalid_argument, "blocks overlap on edge " + edge_str(m));
    }
  }
  if (covered.size() != edges_.size()) fail(ErrorCode::invalid_argument, "blocks do not cover every edge");
  if (!tree.is_cactus()) fail(ErrorCode::invalid_argument, "block tree has a block that is neither an edge nor a cycle");
  Graph g = *this;
  g.block_tree_ = std::move(tree);
  return g;
}

Graph build_cycle(int n) {
  if (n < 3) fail(ErrorCode::invalid_argument, "a cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return Graph(n, edges).with_cycle_order(order).with_faces({order});
}

Graph build_path(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "a path needs n >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return Graph(n, edges).with_path_order(order);
}

Graph build_complete(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "K_n needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph build_flower(int p, int k) {
  if (p < 3) fail(ErrorCode::invalid_argument, "flower petals need p >= 3, got " + std::to_string(p));
  if (k < 1) fail(ErrorCode::invalid_argument, "flower needs k >= 1 petals, got " + std::to_string(k));
  int n = k * (p - 1) + 1;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> faces;
  BlockTree tree;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> cyc{0};
    for (int j = 0; j < p - 1; ++j) cyc.push_back(1 + i * (p - 1) + j);
    Block block;
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      Edge e = make_edge(cyc[j], cyc[(j + 1) % cyc.size()]);
      edges.push_back(e);
      block.edges.push_back(e);
    }
    block.vertices = cyc;
    std::sort(block.vertices.begin(), block.vertices.end());
    tree.blocks.push_back(std::move(block));
    faces.push_back(std::move(cyc));
  }
  if (k >= 2) tree.cut_vertices = {0};
  Graph g(n, edges);
  if (k == 1) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    g = g.with_cycle_order(order);
  }
  return g.with_faces(std::move(faces)).with_block_tree(std::move(tree));
}

std::vector<Vertex> identify_vertices_map(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (!g1.has_vertex(v1)) fail(ErrorCode::invalid_argument, "vertex " + std::to_string(v1) + " not in first graph");
  if (!g2.has_vertex(v2)) fail(ErrorCode::invalid_argument, "vertex " + std::to_string(v2) + " not in second graph");
  std::vector<Vertex> map(static_cast<std::size_t>(g2.order()));
  int next = g1.order();
  for (Vertex u = 0; u < g2.order(); ++u) map[static_cast<std::size_t>(u)] = (u == v2) ? v1 : next++;
  return map;
}

Graph identify_vertices(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  auto map = identify_vertices_map(g1, v1, g2, v2);
  auto m = [&](Vertex u) { return map[static_cast<std::size_t>(u)]; };
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.push_back(make_edge(m(u), m(v)));
  Graph out(g1.order() + g2.order() - 1, edges);

  if (g1.faces() && g2.faces()) {
    auto faces = *g1.faces();
    for (auto face : *g2.faces()) {
      for (auto& v : face) v = m(v);
      faces.push_back(std::move(face));
    }
    out = out.with_faces(std::move(faces));
  }
  if (g1.block_tree() && g2.block_tree()) {
    BlockTree tree = *g1.block_tree();
    for (auto block : g2.block_tree()->blocks) {
      for (auto& e : block.edges) e = make_edge(m(e.first), m(e.second));
      for (auto& v : block.vertices) v = m(v);
      std::sort(block.vertices.begin(), block.vertices.end());
      tree.blocks.push_back(std::move(block));
    }
    std::set<Vertex> cuts(tree.cut_vertices.begin(), tree.cut_vertices.end());
    for (Vertex c : g2.block_tree()->cut_vertices) cuts.insert(m(c));
    if (g1.degree(v1) > 0 && g2.degree(v2) > 0) cuts.insert(v1);
    tree.cut_vertices.assign(cuts.begin(), cuts.end());
    out = out.with_block_tree(std::move(tree));
  }
  return out;
}

Girth girth(const Graph& g) {
  int best = -1;
  int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        auto wi = static_cast<std::size_t>(w);
        if (dist[wi] < 0) {
          dist[wi] = dist[static_cast<std::size_t>(u)] + 1;
          parent[wi] = u;
          q.push(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          int len = dist[static_cast<std::size_t>(u)] + dist[wi] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<int> cactus_cycle_lengths(const Graph& g) {
  auto tree = block_decomposition(g, true);
  std::vector<int> lengths;
  for (const auto& b : tree.blocks)
    if (b.is_cycle()) lengths.push_back(static_cast<int>(b.vertices.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::optional<int> shortest_cycle_above_3(const Graph& g) {
  if (g.connected() && is_cactus(g)) {
    for (int len : cactus_cycle_lengths(g))
      if (len >= 4) return len;
    return std::nullopt;
  }
  // General graphs: simple cycle enumeration rooted at the smallest vertex, pruned by the best length so far.
  int n = g.order();
  int best = -1;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::function<void(Vertex, Vertex, int)> dfs = [&](Vertex root, Vertex u, int len) {
    if (best >= 0 && len >= best) return;
    for (Vertex w : g.neighbors(u)) {
      if (w == root && len >= 4) {
        best = len;
        return;
      }
      if (w <= root || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      dfs(root, w, len + 1);
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(s, s, 1);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  if (best < 0) return std::nullopt;
  return best;
}

Graph weak_dual(const Graph& g) {
  if (!g.faces()) fail(ErrorCode::invalid_argument, "weak dual needs a face list");
  const auto& faces = *g.faces();
  auto pairs = face_adjacency(g, faces);
  std::vector<Edge> edges(pairs.begin(), pairs.end());
  Graph dual(static_cast<int>(faces.size()), edges);
  if (!faces.empty() && (!dual.connected() || dual.size() + 1 != faces.size()))
    fail(ErrorCode::invalid_argument, "face adjacency is not a tree (invalid outerplanar annotation)");
  return dual;
}

BlockTree block_decomposition(const Graph& g, bool require_cactus) {
  if (!g.connected()) fail(ErrorCode::invalid_argument, "block decomposition needs a connected graph");
  int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  std::set<Vertex> cuts;
  BlockTree tree;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    auto ui = static_cast<std::size_t>(u);
    disc[ui] = low[ui] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      auto wi = static_cast<std::size_t>(w);
      if (w == parent) continue;
      if (disc[wi] < 0) {
        ++children;
        stack.push_back(make_edge(u, w));
        dfs(w, u);
        low[ui] = std::min(low[ui], low[wi]);
        if (low[wi] >= disc[ui]) {
          if (parent >= 0 || children > 1) cuts.insert(u);
          Block block;
          Edge target = make_edge(u, w);
          std::set<Vertex> vs;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.edges.push_back(e);
            vs.insert(e.first);
            vs.insert(e.second);
            if (e == target) break;
          }
          std::sort(block.edges.begin(), block.edges.end());
          block.vertices.assign(vs.begin(), vs.end());
          tree.blocks.push_back(std::move(block));
        }
      } else if (disc[wi] < disc[ui]) {
        stack.push_back(make_edge(u, w));
        low[ui] = std::min(low[ui], disc[wi]);
      }
    }
  };
  if (n > 0) dfs(0, -1);
  // A root with several DFS children is a cut vertex; fix up via block membership counts.
  std::map<Vertex, int> membership;
  for (const auto& b : tree.blocks)
    for (Vertex v : b.vertices) ++membership[v];
  cuts.clear();
  for (auto [v, count] : membership)
    if (count > 1) cuts.insert(v);
  tree.cut_vertices.assign(cuts.begin(), cuts.end());
  std::sort(tree.blocks.begin(), tree.blocks.end(),
            [](const Block& x, const Block& y) { return x.edges.front() < y.edges.front(); });
  if (require_cactus && !tree.is_cactus()) fail(ErrorCode::invalid_argument, "graph is not a cactus");
  return tree;
}

bool is_cactus(const Graph& g) { return g.connected() && block_decomposition(g).is_cactus(); }

}  // namespace sepchoose
