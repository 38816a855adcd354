#include "sepchoose/colorers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "sepchoose/error.hpp"
#include "sepchoose/solver.hpp"

namespace sepchoose {

namespace {

std::string vname(Vertex v) { return "v" + std::to_string(v); }

// Calls f on the b-subsets of `set` in lexicographic order until f returns true.
template <typename F>
bool for_each_b_subset(const ColorSet& set, int b, F&& f) {
  auto items = set.members();
  int m = static_cast<int>(items.size());
  if (b < 0 || b > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(b));
  for (int i = 0; i < b; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    ColorSet s;
    for (int i : idx) s.insert(items[static_cast<std::size_t>(i)]);
    if (f(s)) return true;
    int i = b - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - b + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < b; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

const std::vector<Vertex>& require_cycle_order(const ListAssignment& L) {
  if (!L.graph().cycle_order()) fail(ErrorCode::invalid_argument, "this colorer needs a cycle");
  return *L.graph().cycle_order();
}

void validate(const ListAssignment& L, const BColoring& phi, int b, const std::string& strategy) {
  if (auto why = coloring_violation(L, phi, b)) fail(ErrorCode::internal, strategy + " produced an invalid coloring: " + *why);
}

Vertex single_precolored(const ListAssignment& L, int b) {
  auto r = L.precolored_vertex();
  if (!r) fail(ErrorCode::invalid_argument, "this colorer needs exactly one precolored vertex");
  if (static_cast<int>(L.list(*r).size()) != b)
    fail(ErrorCode::invalid_argument, "precolored vertex must have a list of size b");
  return *r;
}

SolveOptions fast_exact() {
  SolveOptions o;
  o.lex_least_witness = false;
  return o;
}

}  // namespace

BColoring exact_colorer(const ListAssignment& L, int b) {
  auto out = L.precolored().empty() ? color_with_lists(L, b, fast_exact()) : free_color_with_lists(L, b, fast_exact());
  if (out.verdict == Verdict::unknown) fail(ErrorCode::budget_exhausted, "exact colorer ran out of budget");
  if (out.verdict == Verdict::no) fail(ErrorCode::precondition, "no (L,b)-coloring exists");
  return *out.witness;
}

ColoringResult greedy_cycle(const ListAssignment& L, int b) {
  const auto& order = require_cycle_order(L);
  std::size_t n = order.size();
  ColoringResult res;
  res.plan.strategy = "greedy";
  res.coloring.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    Vertex x = order[i], next = order[(i + 1) % n];
    ColorSet diff = L.list(x) - L.list(next);
    if (static_cast<int>(diff.size()) < b)
      fail(ErrorCode::precondition, "|L(" + vname(x) + ") \\ L(" + vname(next) + ")| = " + std::to_string(diff.size()) +
                                        " < b = " + std::to_string(b));
    res.coloring[static_cast<std::size_t>(x)] = first_members(diff, static_cast<std::size_t>(b));
    res.plan.trace.push_back(vname(x) + " <- " + res.coloring[static_cast<std::size_t>(x)].to_string() + " from L(" +
                             vname(x) + ")\\L(" + vname(next) + ")");
  }
  validate(L, res.coloring, b, "greedy");
  return res;
}

LiftResult lift_cycle(const ListAssignment& L, int b, int k, const BaseColorer& base) {
  const auto& order = require_cycle_order(L);
  if (k < 0 || k > b) fail(ErrorCode::invalid_argument, "lift needs 0 <= k <= b");
  std::size_t n = order.size();
  int a_total = static_cast<int>(L.list(order.front()).size());
  for (Vertex v : order) a_total = std::min(a_total, static_cast<int>(L.list(v).size()));
  int c_total = separation(L);
  int a_base = a_total - 2 * k;
  int c_base = std::max(0, c_total - k);
  if (a_base < 0) fail(ErrorCode::precondition, "lists are shorter than 2k");

  ColoringResult res;
  res.plan.strategy = "lift";
  std::vector<ColorSet> phi(n), reduced_lists(static_cast<std::size_t>(L.graph().order()));
  for (std::size_t i = 0; i < n; ++i) {
    Vertex x = order[i], next = order[(i + 1) % n];
    ColorSet diff = L.list(x) - L.list(next);
    if (static_cast<int>(diff.size()) < k)
      fail(ErrorCode::precondition, "|L(" + vname(x) + ") \\ L(" + vname(next) + ")| < k");
    phi[i] = first_members(diff, static_cast<std::size_t>(k));
    res.plan.trace.push_back("lift " + vname(x) + " <- " + phi[i].to_string());
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vertex x = order[i], next = order[(i + 1) % n];
    ColorSet inter = L.list(x) & L.list(next);
    std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(k), inter.size());
    ColorSet s = inter & phi[(i + 1) % n];
    for (Color col : (inter - s).members()) {
      if (s.size() >= want) break;
      s.insert(col);
    }
    reduced_lists[static_cast<std::size_t>(x)] = L.list(x) - phi[i] - s;
    res.plan.trace.push_back("drop " + vname(x) + " " + s.to_string());
  }
  ListAssignment reduced(L.graph_ptr(), reduced_lists, a_base);
  for (Vertex v : order)
    if (static_cast<int>(reduced.list(v).size()) < a_base)
      fail(ErrorCode::internal, "reduced list of " + vname(v) + " is shorter than " + std::to_string(a_base));
  if (separation(reduced) > c_base) fail(ErrorCode::internal, "reduced lists exceed separation " + std::to_string(c_base));

  BColoring psi = base(reduced, b - k);
  if (auto why = coloring_violation(reduced, psi, b - k))
    fail(ErrorCode::internal, "base colorer returned an invalid coloring: " + *why);
  res.coloring.assign(static_cast<std::size_t>(L.graph().order()), {});
  for (std::size_t i = 0; i < n; ++i) {
    Vertex x = order[i];
    res.coloring[static_cast<std::size_t>(x)] = phi[i] | psi[static_cast<std::size_t>(x)];
    res.plan.trace.push_back(vname(x) + " <- " + res.coloring[static_cast<std::size_t>(x)].to_string());
  }
  validate(L, res.coloring, b, "lift");
  return LiftResult{std::move(res), std::move(reduced), a_base, c_base};
}

ColoringResult path_color_precolored(const ListAssignment& L, int b) {
  const auto& g = L.graph();
  if (!g.path_order()) fail(ErrorCode::invalid_argument, "this colorer needs a path");
  const auto& order = *g.path_order();
  std::size_t m = order.size();
  std::vector<ColorSet> seq;
  for (Vertex v : order) {
    if (L.is_precolored(v) && static_cast<int>(L.list(v).size()) != b)
      fail(ErrorCode::invalid_argument, "precolored vertex " + vname(v) + " must have a list of size b");
    seq.push_back(L.list(v));
  }
  int wi = 0, wj = 0;
  int slack = path_amplitude_slack(seq, b, &wi, &wj);
  if (slack < 0) {
    int len = wj - wi + 1;
    fail(ErrorCode::precondition, "amplitude condition fails on x" + std::to_string(wi + 1) + "..x" + std::to_string(wj + 1) +
                                      ": sigma = " + std::to_string(b * len + slack) + " < " + std::to_string(b * len));
  }

  ColoringResult res;
  res.plan.strategy = "path-amplitude";
  std::vector<ColorSet> chosen(m);
  auto solve = [&](auto&& self, std::size_t i, const ColorSet& prev) -> bool {
    if (i == m) return true;
    ColorSet avail = seq[i] - prev;
    auto attempt = [&](const ColorSet& s) {
      if (i + 1 < m) {
        std::vector<ColorSet> suffix(seq.begin() + static_cast<std::ptrdiff_t>(i + 1), seq.end());
        suffix.front() = suffix.front() - s;
        if (path_amplitude_slack(suffix, b) < 0) return false;
      }
      chosen[i] = s;
      return self(self, i + 1, s);
    };
    if (L.is_precolored(order[i])) return avail.size() == seq[i].size() && attempt(seq[i]);
    return for_each_b_subset(avail, b, attempt);
  };
  if (!solve(solve, 0, ColorSet{}))
    fail(ErrorCode::internal, "amplitude condition holds but backtracking found no coloring");

  res.coloring.assign(static_cast<std::size_t>(g.order()), {});
  for (std::size_t i = 0; i < m; ++i) {
    res.coloring[static_cast<std::size_t>(order[i])] = chosen[i];
    res.plan.trace.push_back("x" + std::to_string(i + 1) + " (" + vname(order[i]) + ") <- " + chosen[i].to_string());
  }
  validate(L, res.coloring, b, "path-amplitude");
  return res;
}

ColoringResult cycle_color_precolored(const ListAssignment& L, int b) {
  const auto& order = require_cycle_order(L);
  Vertex r = single_precolored(L, b);
  std::size_t n = order.size();
  ColoringResult res;
  res.plan.strategy = "cycle-cut";
  if (n == 3) {
    res.coloring = exact_colorer(L, b);
    res.plan.trace.push_back("triangle colored by exact search");
    return res;
  }
  auto start = static_cast<std::size_t>(std::find(order.begin(), order.end(), r) - order.begin());
  std::vector<Vertex> rotated;
  for (std::size_t i = 0; i <= n; ++i) rotated.push_back(order[(start + i) % n]);
  std::vector<ColorSet> lists;
  for (Vertex v : rotated) lists.push_back(L.list(v));
  ListAssignment cut(build_path(static_cast<int>(n + 1)), lists, L.a(), {0, static_cast<Vertex>(n)});
  auto path = path_color_precolored(cut, b);
  res.coloring.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) res.coloring[static_cast<std::size_t>(rotated[i])] = path.coloring[i];
  res.plan.trace.push_back("cut at " + vname(r));
  for (auto& line : path.plan.trace) res.plan.trace.push_back(std::move(line));
  validate(L, res.coloring, b, "cycle-cut");
  return res;
}

namespace {

using Partial = std::vector<std::optional<ColorSet>>;

// Colors the closed cycle `cyc` (cyc[0] already colored) through a cycle sub-instance.
void color_cycle_piece(const ListAssignment& L, int b, const std::vector<Vertex>& cyc, Partial& phi, ColoringPlan& plan) {
  std::vector<ColorSet> lists;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    lists.push_back(i == 0 ? *phi[static_cast<std::size_t>(cyc[0])] : L.list(cyc[i]));
  ListAssignment sub(build_cycle(static_cast<int>(cyc.size())), lists, L.a(), {0});
  auto out = cycle_color_precolored(sub, b);
  std::string line = "cycle";
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    phi[static_cast<std::size_t>(cyc[i])] = out.coloring[i];
    line += " " + vname(cyc[i]) + "<-" + out.coloring[i].to_string();
  }
  plan.trace.push_back(line);
}

// Colors the path `path` whose two ends are already colored.
void color_path_piece(const ListAssignment& L, int b, const std::vector<Vertex>& path, Partial& phi, ColoringPlan& plan) {
  std::vector<ColorSet> lists;
  std::size_t m = path.size();
  for (std::size_t i = 0; i < m; ++i)
    lists.push_back(i == 0 || i + 1 == m ? *phi[static_cast<std::size_t>(path[i])] : L.list(path[i]));
  ListAssignment sub(build_path(static_cast<int>(m)), lists, L.a(), {0, static_cast<Vertex>(m - 1)});
  auto out = path_color_precolored(sub, b);
  std::string line = "face path";
  for (std::size_t i = 0; i < m; ++i) {
    phi[static_cast<std::size_t>(path[i])] = out.coloring[i];
    line += " " + vname(path[i]) + "<-" + out.coloring[i].to_string();
  }
  plan.trace.push_back(line);
}

bool in_block(const Block& blk, Vertex v) { return std::binary_search(blk.vertices.begin(), blk.vertices.end(), v); }

// Cycle order of a cycle block starting at u.
std::vector<Vertex> block_cycle_from(const Graph& g, const Block& blk, Vertex u) {
  std::vector<Vertex> cyc{u};
  Vertex prev = -1, cur = u;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev && in_block(blk, w) && std::find(blk.edges.begin(), blk.edges.end(), make_edge(cur, w)) != blk.edges.end()) {
        next = w;
        break;
      }
    }
    if (next < 0 || next == u) break;
    cyc.push_back(next);
    prev = cur;
    cur = next;
  }
  if (cyc.size() != blk.vertices.size()) fail(ErrorCode::internal, "block is not a simple cycle");
  return cyc;
}

using BlockHandler = std::function<bool(const Block&, Vertex attach, Partial&, ColoringPlan&)>;

// Colors the blocks outward from the precolored vertex; `handle` colors non-bridge blocks
// and returns false to request an exact completion of everything left.
ColoringResult walk_blocks(const ListAssignment& L, int b, const std::string& strategy, bool cactus, const BlockHandler& handle) {
  const auto& g = L.graph();
  Vertex r = single_precolored(L, b);
  if (!g.connected()) fail(ErrorCode::invalid_argument, "graph must be connected");
  BlockTree tree = block_decomposition(g, cactus);
  ColoringResult res;
  res.plan.strategy = strategy;
  Partial phi(static_cast<std::size_t>(g.order()));
  phi[static_cast<std::size_t>(r)] = L.list(r);
  res.plan.trace.push_back(vname(r) + " precolored " + L.list(r).to_string());
  std::vector<char> done(tree.blocks.size(), 0);
  bool fallback = false;
  for (std::size_t processed = 0; processed < tree.blocks.size() && !fallback; ++processed) {
    std::size_t pick = tree.blocks.size();
    Vertex attach = -1;
    for (std::size_t i = 0; i < tree.blocks.size() && pick == tree.blocks.size(); ++i) {
      if (done[i]) continue;
      for (Vertex v : tree.blocks[i].vertices) {
        if (phi[static_cast<std::size_t>(v)]) {
          pick = i;
          attach = v;
          break;
        }
      }
    }
    if (pick == tree.blocks.size()) fail(ErrorCode::internal, "block tree is disconnected");
    done[pick] = 1;
    const Block& blk = tree.blocks[pick];
    if (blk.is_edge()) {
      Vertex v = blk.edges[0].first == attach ? blk.edges[0].second : blk.edges[0].first;
      ColorSet avail = L.list(v) - *phi[static_cast<std::size_t>(attach)];
      if (static_cast<int>(avail.size()) < b)
        fail(ErrorCode::precondition, "bridge " + vname(attach) + "-" + vname(v) + " leaves fewer than b colors");
      phi[static_cast<std::size_t>(v)] = first_members(avail, static_cast<std::size_t>(b));
      res.plan.trace.push_back("bridge " + vname(v) + " <- " + phi[static_cast<std::size_t>(v)]->to_string());
      continue;
    }
    if (!handle(blk, attach, phi, res.plan)) fallback = true;
  }
  if (fallback) {
    auto out = extend_coloring(L, b, phi, fast_exact());
    if (out.verdict != Verdict::yes) fail(ErrorCode::precondition, "no coloring extends the partial coloring");
    res.plan.trace.push_back("remaining vertices completed by exact search");
    for (Vertex v = 0; v < g.order(); ++v) phi[static_cast<std::size_t>(v)] = (*out.witness)[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!phi[static_cast<std::size_t>(v)]) fail(ErrorCode::internal, vname(v) + " was left uncolored");
    res.coloring.push_back(*phi[static_cast<std::size_t>(v)]);
  }
  validate(L, res.coloring, b, strategy);
  return res;
}

}  // namespace

ColoringResult cactus_free_color(const ListAssignment& L, int b) {
  return walk_blocks(L, b, "cactus", true, [&](const Block& blk, Vertex attach, Partial& phi, ColoringPlan& plan) {
    color_cycle_piece(L, b, block_cycle_from(L.graph(), blk, attach), phi, plan);
    return true;
  });
}

ColoringResult outerplanar_color(const ListAssignment& L, int b) {
  const auto& g = L.graph();
  if (!g.faces()) fail(ErrorCode::invalid_argument, "outerplanar coloring needs a face list");
  const auto& faces = *g.faces();
  return walk_blocks(L, b, "outerplanar", false, [&](const Block& blk, Vertex attach, Partial& phi, ColoringPlan& plan) {
    std::vector<std::size_t> mine;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      bool inside = std::all_of(faces[f].begin(), faces[f].end(), [&](Vertex v) { return in_block(blk, v); });
      if (inside) mine.push_back(f);
    }
    if (mine.empty()) return false;
    auto face_edges = [&](std::size_t f) {
      std::set<Edge> es;
      const auto& fc = faces[f];
      for (std::size_t i = 0; i < fc.size(); ++i) es.insert(make_edge(fc[i], fc[(i + 1) % fc.size()]));
      return es;
    };
    std::size_t root = mine.size();
    for (std::size_t i = 0; i < mine.size() && root == mine.size(); ++i)
      if (std::find(faces[mine[i]].begin(), faces[mine[i]].end(), attach) != faces[mine[i]].end()) root = i;
    if (root == mine.size()) return false;

    const auto& rf = faces[mine[root]];
    auto at = static_cast<std::size_t>(std::find(rf.begin(), rf.end(), attach) - rf.begin());
    std::vector<Vertex> cyc;
    for (std::size_t i = 0; i < rf.size(); ++i) cyc.push_back(rf[(at + i) % rf.size()]);
    color_cycle_piece(L, b, cyc, phi, plan);

    std::vector<char> colored(mine.size(), 0);
    colored[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      auto cur_edges = face_edges(mine[cur]);
      for (std::size_t j = 0; j < mine.size(); ++j) {
        if (colored[j]) continue;
        const auto& fc = faces[mine[j]];
        std::size_t len = fc.size();
        std::optional<std::size_t> shared;
        for (std::size_t i = 0; i < len && !shared; ++i)
          if (cur_edges.count(make_edge(fc[i], fc[(i + 1) % len]))) shared = i;
        if (!shared) continue;
        // Path from the far end of the shared edge around the face back to its near end.
        std::vector<Vertex> path;
        for (std::size_t s = 1; s <= len; ++s) path.push_back(fc[(*shared + s) % len]);
        for (std::size_t s = 1; s + 1 < path.size(); ++s)
          if (phi[static_cast<std::size_t>(path[s])]) return false;
        color_path_piece(L, b, path, phi, plan);
        colored[j] = 1;
        queue.push_back(j);
      }
    }
    for (Vertex v : blk.vertices)
      if (!phi[static_cast<std::size_t>(v)]) return false;
    return true;
  });
}

}  // namespace sepchoose
