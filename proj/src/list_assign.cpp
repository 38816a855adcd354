#include "sepchoose/list_assign.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sepchoose/error.hpp"

namespace sepchoose {

ListAssignment::ListAssignment(std::shared_ptr<const Graph> graph, std::vector<ColorSet> lists, int a,
                               std::vector<Vertex> precolored)
    : graph_(std::move(graph)), lists_(std::move(lists)), a_(a), precolored_(std::move(precolored)) {
  if (!graph_) fail(ErrorCode::invalid_argument, "list assignment needs a graph");
  if (static_cast<int>(lists_.size()) != graph_->order())
    fail(ErrorCode::invalid_argument, "expected " + std::to_string(graph_->order()) + " lists, got " +
                                          std::to_string(lists_.size()));
  if (a_ < 0) fail(ErrorCode::invalid_argument, "list size bound must be nonnegative");
  std::sort(precolored_.begin(), precolored_.end());
  precolored_.erase(std::unique(precolored_.begin(), precolored_.end()), precolored_.end());
  for (Vertex r : precolored_)
    if (!graph_->has_vertex(r)) fail(ErrorCode::invalid_argument, "precolored vertex " + std::to_string(r) + " out of range");
}

bool ListAssignment::is_precolored(Vertex v) const {
  return std::binary_search(precolored_.begin(), precolored_.end(), v);
}

std::optional<Vertex> ListAssignment::precolored_vertex() const {
  if (precolored_.size() == 1) return precolored_.front();
  return std::nullopt;
}

std::optional<std::string> ListAssignment::size_violation(int b) const {
  for (Vertex v = 0; v < graph_->order(); ++v) {
    auto want = static_cast<std::size_t>(is_precolored(v) ? b : a_);
    if (list(v).size() != want)
      return "list of vertex " + std::to_string(v) + " has " + std::to_string(list(v).size()) + " colors, expected " +
             std::to_string(want);
  }
  return std::nullopt;
}

int separation(const Graph& g, const std::vector<ColorSet>& lists) {
  std::size_t best = 0;
  for (auto [u, v] : g.edges())
    best = std::max(best, lists[static_cast<std::size_t>(u)].intersection_size(lists[static_cast<std::size_t>(v)]));
  return static_cast<int>(best);
}

int separation(const ListAssignment& L) { return separation(L.graph(), L.lists()); }

std::optional<std::string> coloring_violation(const ListAssignment& L, const BColoring& phi, int b) {
  const auto& g = L.graph();
  if (static_cast<int>(phi.size()) != g.order()) return std::string("coloring does not cover every vertex");
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& s = phi[static_cast<std::size_t>(v)];
    if (static_cast<int>(s.size()) != b)
      return "vertex " + std::to_string(v) + " received " + std::to_string(s.size()) + " colors, expected " + std::to_string(b);
    if (!s.is_subset_of(L.list(v))) return "vertex " + std::to_string(v) + " uses a color outside its list";
  }
  for (auto [u, v] : g.edges()) {
    if (!phi[static_cast<std::size_t>(u)].disjoint(phi[static_cast<std::size_t>(v)]))
      return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has a shared color";
  }
  return std::nullopt;
}

bool is_valid_coloring(const ListAssignment& L, const BColoring& phi, int b) { return !coloring_violation(L, phi, b); }

namespace {

// Independence number of the occurrence pattern of one color along a path.
int path_alpha(const std::vector<char>& present) {
  int alpha = 0;
  bool prev_picked = false;
  for (char p : present) {
    bool pick = p && !prev_picked;
    alpha += pick ? 1 : 0;
    prev_picked = pick;
  }
  return alpha;
}

int cycle_alpha(const std::vector<char>& present) {
  auto n = present.size();
  auto gap = std::find(present.begin(), present.end(), 0);
  if (gap == present.end()) return static_cast<int>(n / 2);
  // Rotate so the pattern starts right after a vertex lacking the color.
  std::vector<char> rotated;
  auto start = static_cast<std::size_t>(gap - present.begin());
  for (std::size_t k = 1; k <= n; ++k) rotated.push_back(present[(start + k) % n]);
  return path_alpha(rotated);
}

std::vector<Vertex> ordered_vertices(const ListAssignment& L, bool& is_cycle) {
  const auto& g = L.graph();
  is_cycle = false;
  if (g.path_order()) return *g.path_order();
  if (g.cycle_order()) {
    is_cycle = true;
    return *g.cycle_order();
  }
  if (g.is_complete()) {
    std::vector<Vertex> ids(static_cast<std::size_t>(g.order()));
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
  }
  fail(ErrorCode::invalid_argument, "amplitude needs a path order, a cycle order or a complete graph");
}

}  // namespace

int amplitude_sigma(const ListAssignment& L, int i, int j) {
  bool is_cycle = false;
  auto order = ordered_vertices(L, is_cycle);
  int n = static_cast<int>(order.size());
  if (i < 1 || j > n || i > j) fail(ErrorCode::invalid_argument, "amplitude interval out of range");
  std::vector<Vertex> window(order.begin() + (i - 1), order.begin() + j);
  ColorSet all;
  for (Vertex v : window) all = all | L.list(v);
  bool complete = L.graph().is_complete();
  bool whole_cycle = is_cycle && static_cast<int>(window.size()) == n && !complete;
  int sigma = 0;
  for (Color k : all.members()) {
    if (complete) {
      sigma += 1;
      continue;
    }
    std::vector<char> present;
    for (Vertex v : window) present.push_back(L.list(v).contains(k) ? 1 : 0);
    sigma += whole_cycle ? cycle_alpha(present) : path_alpha(present);
  }
  return sigma;
}

int amplitude_sigma(const ListAssignment& L) { return amplitude_sigma(L, 1, L.graph().order()); }

int path_amplitude_slack(const std::vector<ColorSet>& lists, int b, int* worst_i, int* worst_j) {
  // Dense relabeling keeps the per-color greedy state in a flat vector.
  std::unordered_map<Color, int> dense;
  std::vector<std::vector<int>> seq;
  for (const auto& l : lists) {
    std::vector<int> row;
    for (Color c : l.members()) {
      auto [it, inserted] = dense.emplace(c, static_cast<int>(dense.size()));
      row.push_back(it->second);
    }
    seq.push_back(std::move(row));
  }
  int m = static_cast<int>(seq.size());
  std::vector<int> last(dense.size());
  int best = 0;
  bool have = false;
  for (int i = 0; i < m; ++i) {
    std::fill(last.begin(), last.end(), -2);
    int sigma = 0;
    for (int j = i; j < m; ++j) {
      for (int k : seq[static_cast<std::size_t>(j)]) {
        if (last[static_cast<std::size_t>(k)] != j - 1) {
          last[static_cast<std::size_t>(k)] = j;
          ++sigma;
        }
      }
      int slack = sigma - b * (j - i + 1);
      if (!have || slack < best) {
        best = slack;
        have = true;
        if (worst_i) *worst_i = i;
        if (worst_j) *worst_j = j;
      }
    }
  }
  return best;
}

std::optional<AmplitudeViolation> amplitude_violation(const ListAssignment& L, int b) {
  const auto& g = L.graph();
  if (g.path_order()) {
    const auto& order = *g.path_order();
    std::vector<ColorSet> seq;
    for (Vertex v : order) seq.push_back(L.list(v));
    int wi = 0, wj = 0;
    int slack = path_amplitude_slack(seq, b, &wi, &wj);
    if (slack >= 0) return std::nullopt;
    AmplitudeViolation out;
    out.vertices.assign(order.begin() + wi, order.begin() + wj + 1);
    out.first = wi + 1;
    out.last = wj + 1;
    out.demand = b * (wj - wi + 1);
    out.sigma = out.demand + slack;
    return out;
  }
  if (g.is_complete()) {
    int n = g.order();
    if (n > 20) fail(ErrorCode::invalid_argument, "amplitude check on complete graphs is limited to 20 vertices");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      ColorSet all;
      std::vector<Vertex> vs;
      for (int v = 0; v < n; ++v) {
        if (mask & (1u << v)) {
          all = all | L.list(v);
          vs.push_back(v);
        }
      }
      int demand = b * static_cast<int>(vs.size());
      int sigma = static_cast<int>(all.size());
      if (sigma < demand) return AmplitudeViolation{vs, 0, 0, sigma, demand};
    }
    return std::nullopt;
  }
  fail(ErrorCode::invalid_argument, "amplitude condition is implemented for paths and complete graphs only");
}

bool amplitude_condition(const ListAssignment& L, int b) { return !amplitude_violation(L, b); }

int TraceMultiset::total_colors() const {
  int total = 0;
  for (const auto& [t, m] : counts) total += m;
  return total;
}

TraceMultiset canonicalize(const ListAssignment& L) {
  std::map<Color, Trace> traces;
  for (Vertex v = 0; v < L.graph().order(); ++v)
    for (Color c : L.list(v).members()) traces[c].push_back(v);
  TraceMultiset out;
  for (const auto& [c, t] : traces) ++out.counts[t];
  return out;
}

ListAssignment realize(const TraceMultiset& t, std::shared_ptr<const Graph> graph, int a, std::vector<Vertex> precolored) {
  std::vector<ColorSet> lists(static_cast<std::size_t>(graph->order()));
  Color next = 0;
  for (const auto& [trace, mult] : t.counts) {
    for (int copy = 0; copy < mult; ++copy, ++next) {
      for (Vertex v : trace) {
        if (!graph->has_vertex(v)) fail(ErrorCode::invalid_argument, "trace mentions vertex outside the graph");
        lists[static_cast<std::size_t>(v)].insert(next);
      }
    }
  }
  return ListAssignment(std::move(graph), std::move(lists), a, std::move(precolored));
}

}  // namespace sepchoose
