#include "sepchoose/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "sepchoose/error.hpp"

namespace sepchoose {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SEPCHOOSE_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 500'000'000ULL;
}

namespace {

struct BudgetExhausted {};
struct Abandoned {};

struct Budget {
  explicit Budget(std::uint64_t limit) : limit(limit) {}
  std::uint64_t limit;
  std::atomic<std::uint64_t> used{0};

  void tick() {
    if (used.fetch_add(1, std::memory_order_relaxed) >= limit) throw BudgetExhausted{};
  }
};

using Words = std::vector<std::uint64_t>;

// Backtracking search for an (L,b)-coloring over densely relabeled colors.
//
// Branching at a vertex only distinguishes colors by their effective trace inside the
// current component (the uncolored vertices that can still use them): colors with equal
// traces are interchangeable, and colors nobody else can use are always taken first.
// Components of the uncolored subgraph are solved independently.
class Search {
 public:
  Search(const Graph& g, Budget& budget) : g_(g), budget_(budget), n_(g.order()) {}

  void load(const std::vector<std::vector<int>>& lists, int num_colors, int b) {
    b_ = b;
    m_ = num_colors;
    w_ = std::max<std::size_t>(1, (static_cast<std::size_t>(m_) + 63) / 64);
    list_.assign(static_cast<std::size_t>(n_) * w_, 0);
    occ_.assign(static_cast<std::size_t>(m_), {});
    for (int v = 0; v < n_; ++v) {
      for (int k : lists[static_cast<std::size_t>(v)]) {
        set_bit(list_, v, k);
        occ_[static_cast<std::size_t>(k)].push_back(v);
      }
    }
  }

  bool run(const std::vector<std::optional<std::vector<int>>>& fixed) {
    avail_ = list_;
    phi_.assign(static_cast<std::size_t>(n_) * w_, 0);
    colored_.assign(static_cast<std::size_t>(n_), 0);
    mark_.assign(static_cast<std::size_t>(n_), 0);
    stamp_ = 0;
    trail_.clear();
    for (int v = 0; v < n_; ++v) {
      const auto& f = fixed.empty() ? std::nullopt : fixed[static_cast<std::size_t>(v)];
      if (!f) continue;
      Words s(w_, 0);
      for (int k : *f) s[static_cast<std::size_t>(k) >> 6] |= bit(k);
      for (std::size_t i = 0; i < w_; ++i)
        if (s[i] & ~avail_[idx(v) + i]) return false;
      if (!assign(v, s)) return false;
    }
    std::vector<int> rest;
    for (int v = 0; v < n_; ++v)
      if (!colored_[static_cast<std::size_t>(v)]) rest.push_back(v);
    for (auto& comp : components(rest))
      if (!solve(comp)) return false;
    return true;
  }

  std::vector<std::vector<int>> coloring() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      for (int k = 0; k < m_; ++k)
        if (phi_[idx(v) + (static_cast<std::size_t>(k) >> 6)] & bit(k)) out[static_cast<std::size_t>(v)].push_back(k);
    return out;
  }

 private:
  struct TrailEntry {
    int v;
    bool colored_flag;
    Words old;
  };

  static std::uint64_t bit(int k) { return std::uint64_t{1} << (k & 63); }
  std::size_t idx(int v) const { return static_cast<std::size_t>(v) * w_; }
  void set_bit(Words& words, int v, int k) { words[idx(v) + (static_cast<std::size_t>(k) >> 6)] |= bit(k); }
  bool has(const Words& words, int v, int k) const { return words[idx(v) + (static_cast<std::size_t>(k) >> 6)] & bit(k); }
  int count(const Words& words, int v) const {
    int s = 0;
    for (std::size_t i = 0; i < w_; ++i) s += std::popcount(words[idx(v) + i]);
    return s;
  }
  std::vector<int> members(const Words& words, int v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < w_; ++i) {
      auto x = words[idx(v) + i];
      while (x) {
        out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
        x &= x - 1;
      }
    }
    return out;
  }

  // Colors v with s and removes s from its uncolored neighbors. Returns false when a
  // neighbor is left with fewer than b usable colors (state is still recorded on the trail).
  bool assign(int v, const Words& s) {
    trail_.push_back({v, true, {}});
    colored_[static_cast<std::size_t>(v)] = 1;
    std::copy(s.begin(), s.end(), phi_.begin() + static_cast<std::ptrdiff_t>(idx(v)));
    bool ok = true;
    for (int u : g_.neighbors(v)) {
      if (colored_[static_cast<std::size_t>(u)]) continue;
      bool touched = false;
      for (std::size_t i = 0; i < w_; ++i) touched |= (avail_[idx(u) + i] & s[i]) != 0;
      if (!touched) continue;
      trail_.push_back({u, false, Words(avail_.begin() + static_cast<std::ptrdiff_t>(idx(u)),
                                        avail_.begin() + static_cast<std::ptrdiff_t>(idx(u) + w_))});
      for (std::size_t i = 0; i < w_; ++i) avail_[idx(u) + i] &= ~s[i];
      if (count(avail_, u) < b_) ok = false;
    }
    return ok;
  }

  void revert(std::size_t mark) {
    while (trail_.size() > mark) {
      auto& e = trail_.back();
      if (e.colored_flag) {
        colored_[static_cast<std::size_t>(e.v)] = 0;
        std::fill(phi_.begin() + static_cast<std::ptrdiff_t>(idx(e.v)),
                  phi_.begin() + static_cast<std::ptrdiff_t>(idx(e.v) + w_), 0);
      } else {
        std::copy(e.old.begin(), e.old.end(), avail_.begin() + static_cast<std::ptrdiff_t>(idx(e.v)));
      }
      trail_.pop_back();
    }
  }

  int mark(const std::vector<int>& vs) {
    ++stamp_;
    for (int v : vs) mark_[static_cast<std::size_t>(v)] = stamp_;
    return stamp_;
  }

  // Connected components of the uncolored vertices among vs, ordered fail-first.
  std::vector<std::vector<int>> components(const std::vector<int>& vs) {
    int st = mark(vs);
    std::vector<std::vector<int>> comps;
    for (int s : vs) {
      auto si = static_cast<std::size_t>(s);
      if (mark_[si] != st || colored_[si]) continue;
      std::vector<int> comp{s};
      mark_[si] = 0;
      for (std::size_t h = 0; h < comp.size(); ++h) {
        for (int w : g_.neighbors(comp[h])) {
          auto wi = static_cast<std::size_t>(w);
          if (mark_[wi] == st && !colored_[wi]) {
            mark_[wi] = 0;
            comp.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    auto min_slack = [&](const std::vector<int>& c) {
      int best = 1 << 30;
      for (int v : c) best = std::min(best, count(avail_, v) - b_);
      return best;
    };
    std::stable_sort(comps.begin(), comps.end(),
                     [&](const auto& x, const auto& y) { return min_slack(x) < min_slack(y); });
    return comps;
  }

  bool solve(const std::vector<int>& comp) {
    budget_.tick();
    for (int v : comp)
      if (count(avail_, v) < b_) return false;
    if (comp.size() == 1) {
      int v = comp.front();
      Words s(w_, 0);
      int taken = 0;
      for (int k : members(avail_, v)) {
        if (taken == b_) break;
        s[static_cast<std::size_t>(k) >> 6] |= bit(k);
        ++taken;
      }
      assign(v, s);
      return true;
    }
    int st = mark(comp);
    // Pairwise capacity: adjacent uncolored vertices need 2b distinct usable colors.
    for (int u : comp) {
      for (int w : g_.neighbors(u)) {
        if (w <= u || mark_[static_cast<std::size_t>(w)] != st) continue;
        int uni = 0;
        for (std::size_t i = 0; i < w_; ++i) uni += std::popcount(avail_[idx(u) + i] | avail_[idx(w) + i]);
        if (uni < 2 * b_) return false;
      }
    }

    int v = choose_vertex(comp);
    // Group v's usable colors by effective trace within the component.
    std::map<std::vector<int>, std::vector<int>> classes;
    std::vector<int> priv;
    for (int k : members(avail_, v)) {
      std::vector<int> trace;
      for (int u : occ_[static_cast<std::size_t>(k)]) {
        auto ui = static_cast<std::size_t>(u);
        if (u != v && mark_[ui] == st && !colored_[ui] && has(avail_, u, k)) trace.push_back(u);
      }
      if (trace.empty())
        priv.push_back(k);
      else
        classes[std::move(trace)].push_back(k);
    }
    int take_priv = std::min<int>(b_, static_cast<int>(priv.size()));
    int rest = b_ - take_priv;
    std::vector<const std::vector<int>*> order;
    std::vector<const std::vector<int>*> traces;
    for (const auto& [t, ks] : classes) {
      traces.push_back(&t);
      order.push_back(&ks);
    }
    std::vector<std::size_t> perm(order.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t x, std::size_t y) { return traces[x]->size() < traces[y]->size(); });

    Words base(w_, 0);
    for (int i = 0; i < take_priv; ++i) base[static_cast<std::size_t>(priv[static_cast<std::size_t>(i)]) >> 6] |= bit(priv[static_cast<std::size_t>(i)]);

    std::vector<int> counts(perm.size(), 0);
    std::vector<int> suffix(perm.size() + 1, 0);
    for (std::size_t i = perm.size(); i-- > 0;) suffix[i] = suffix[i + 1] + static_cast<int>(order[perm[i]]->size());
    if (suffix[0] < rest) return false;

    bool found = false;
    // Enumerates count vectors summing to `rest`, larger counts on smaller traces first.
    auto branch = [&](auto&& self, std::size_t pos, int left) -> void {
      if (found) return;
      if (pos == perm.size()) {
        if (left != 0) return;
        Words s = base;
        for (std::size_t i = 0; i < perm.size(); ++i) {
          const auto& ks = *order[perm[i]];
          for (int j = 0; j < counts[i]; ++j) s[static_cast<std::size_t>(ks[static_cast<std::size_t>(j)]) >> 6] |= bit(ks[static_cast<std::size_t>(j)]);
        }
        found = try_branch(v, comp, s);
        return;
      }
      int cap = std::min<int>(left, static_cast<int>(order[perm[pos]]->size()));
      for (int take = cap; take >= 0; --take) {
        if (left - take > suffix[pos + 1]) break;
        counts[pos] = take;
        self(self, pos + 1, left - take);
        if (found) return;
      }
      counts[pos] = 0;
    };
    branch(branch, 0, rest);
    return found;
  }

  bool try_branch(int v, const std::vector<int>& comp, const Words& s) {
    budget_.tick();
    std::size_t mark_pos = trail_.size();
    if (assign(v, s)) {
      std::vector<int> rest;
      for (int u : comp)
        if (u != v) rest.push_back(u);
      bool ok = true;
      for (auto& sub : components(rest)) {
        if (!solve(sub)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    revert(mark_pos);
    return false;
  }

  int choose_vertex(const std::vector<int>& comp) const {
    int best = -1;
    int best_slack = 0, best_colored = 0, best_deg = 0;
    for (int v : comp) {
      int slack = count(avail_, v) - b_;
      int colored_nb = 0;
      for (int u : g_.neighbors(v)) colored_nb += colored_[static_cast<std::size_t>(u)] ? 1 : 0;
      int deg = g_.degree(v);
      bool better = best < 0 || slack < best_slack || (slack == best_slack && colored_nb > best_colored) ||
                    (slack == best_slack && colored_nb == best_colored && deg > best_deg);
      if (better) {
        best = v;
        best_slack = slack;
        best_colored = colored_nb;
        best_deg = deg;
      }
    }
    return best;
  }

  const Graph& g_;
  Budget& budget_;
  int n_;
  int b_ = 0;
  int m_ = 0;
  std::size_t w_ = 1;
  Words list_, avail_, phi_;
  std::vector<std::vector<int>> occ_;
  std::vector<char> colored_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<TrailEntry> trail_;
};

// Dense relabeling of the colors of L, preserving their order.
struct DenseLists {
  std::vector<Color> original;  // dense id -> color
  std::vector<std::vector<int>> lists;

  explicit DenseLists(const ListAssignment& L) {
    ColorSet all;
    for (const auto& l : L.lists()) all = all | l;
    original = all.members();
    std::map<Color, int> dense;
    for (std::size_t i = 0; i < original.size(); ++i) dense[original[i]] = static_cast<int>(i);
    for (const auto& l : L.lists()) {
      std::vector<int> row;
      for (Color c : l.members()) row.push_back(dense[c]);
      lists.push_back(std::move(row));
    }
  }
  std::vector<int> to_dense(const ColorSet& s) const {
    std::vector<int> out;
    for (Color c : s.members()) {
      auto it = std::lower_bound(original.begin(), original.end(), c);
      if (it == original.end() || *it != c) return {-1};
      out.push_back(static_cast<int>(it - original.begin()));
    }
    return out;
  }
  ColorSet from_dense(const std::vector<int>& s) const {
    ColorSet out;
    for (int k : s) out.insert(original[static_cast<std::size_t>(k)]);
    return out;
  }
};

// Lexicographically ordered b-subsets of `items`, stopping at `stop` (inclusive) or when f returns true.
template <typename F>
bool for_each_subset_until(const std::vector<Color>& items, int b, const std::vector<Color>& stop, F&& f) {
  int m = static_cast<int>(items.size());
  if (b > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(b));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<Color> subset;
    for (int i : idx) subset.push_back(items[static_cast<std::size_t>(i)]);
    if (f(subset)) return true;
    if (subset == stop) return false;
    int i = b - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - b + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < b; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

SolveOutcome solve_lists(const ListAssignment& L, int b, std::vector<std::optional<ColorSet>> fixed,
                         const SolveOptions& opts) {
  if (b < 0) fail(ErrorCode::invalid_argument, "b must be nonnegative");
  const auto& g = L.graph();
  SolveOutcome out;
  Budget budget(opts.budget);
  DenseLists dense(L);
  Search search(g, budget);
  search.load(dense.lists, static_cast<int>(dense.original.size()), b);

  std::vector<std::optional<std::vector<int>>> dfixed(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& f = fixed[static_cast<std::size_t>(v)];
    if (!f) continue;
    if (static_cast<int>(f->size()) != b || !f->is_subset_of(L.list(v))) {
      out.verdict = Verdict::no;
      return out;
    }
    dfixed[static_cast<std::size_t>(v)] = dense.to_dense(*f);
  }

  try {
    if (!search.run(dfixed)) {
      out.verdict = Verdict::no;
      out.nodes_explored = budget.used.load();
      return out;
    }
    auto current = search.coloring();
    if (opts.lex_least_witness) {
      for (Vertex v = 0; v < g.order(); ++v) {
        auto vi = static_cast<std::size_t>(v);
        if (dfixed[vi]) continue;
        auto members = L.list(v).members();
        std::vector<Color> stop;
        for (int k : current[vi]) stop.push_back(dense.original[static_cast<std::size_t>(k)]);
        for_each_subset_until(members, b, stop, [&](const std::vector<Color>& subset) {
          if (subset == stop) return true;
          ColorSet s(subset.begin(), subset.end());
          for (Vertex u : g.neighbors(v)) {
            const auto& fu = dfixed[static_cast<std::size_t>(u)];
            if (fu && !dense.from_dense(*fu).disjoint(s)) return false;
          }
          dfixed[vi] = dense.to_dense(s);
          if (search.run(dfixed)) {
            current = search.coloring();
            return true;
          }
          dfixed[vi].reset();
          return false;
        });
        dfixed[vi] = current[vi];
      }
    }
    BColoring phi;
    for (const auto& s : current) phi.push_back(dense.from_dense(s));
    out.verdict = Verdict::yes;
    out.witness = std::move(phi);
  } catch (const BudgetExhausted&) {
    out.verdict = Verdict::unknown;
  }
  out.nodes_explored = budget.used.load();
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of trace multisets.

using Mask = std::uint64_t;

bool mask_connected(const Graph& g, Mask m) {
  if (!m) return false;
  Mask seen = m & (~m + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) {
      int v = std::countr_zero(f);
      for (Vertex w : g.neighbors(v)) {
        Mask bw = Mask{1} << w;
        if ((m & bw) && !(seen & bw)) next |= bw;
      }
    }
    seen |= next;
    frontier = next;
  }
  return seen == m;
}

std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Vertex permutations of the dihedral group of the cycle order (fixing `fixed` if set).
std::vector<std::vector<Vertex>> cycle_automorphisms(const Graph& g, std::optional<Vertex> fixed) {
  std::vector<std::vector<Vertex>> perms;
  const auto& order = *g.cycle_order();
  int n = static_cast<int>(order.size());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (int refl = 0; refl < 2; ++refl) {
    for (int shift = 0; shift < n; ++shift) {
      std::vector<Vertex> p(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        int i = pos[static_cast<std::size_t>(v)];
        int j = refl ? ((shift - i) % n + n) % n : (i + shift) % n;
        p[static_cast<std::size_t>(v)] = order[static_cast<std::size_t>(j)];
      }
      if (fixed && p[static_cast<std::size_t>(*fixed)] != *fixed) continue;
      perms.push_back(std::move(p));
    }
  }
  return perms;
}

class TraceEnumerator {
 public:
  TraceEnumerator(const Graph& g, int a, int b, int c, std::optional<Vertex> precolored, const EnumerateOptions& opts)
      : g_(g), n_(g.order()), c_(c), opts_(opts) {
    if (n_ > 20) fail(ErrorCode::invalid_argument, "exhaustive enumeration is limited to 20 vertices");
    if (a < 0 || b < 0 || c < 0) fail(ErrorCode::invalid_argument, "a, b and c must be nonnegative");
    if (precolored && !g.has_vertex(*precolored)) fail(ErrorCode::invalid_argument, "precolored vertex out of range");
    demand_.assign(static_cast<std::size_t>(n_), a);
    if (precolored) demand_[static_cast<std::size_t>(*precolored)] = b;
    edges_ = g.edges();
    for (Mask m = 1; n_ > 0 && m < (Mask{1} << n_); ++m) {
      if (std::popcount(m) < 2) continue;
      if (opts.connected_traces_only && !mask_connected(g, m)) continue;
      traces_.push_back(m);
    }
    std::stable_sort(traces_.begin(), traces_.end(),
                     [](Mask x, Mask y) { return std::popcount(x) > std::popcount(y); });
    for (Mask t : traces_) {
      std::vector<int> inside;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        Mask em = (Mask{1} << edges_[e].first) | (Mask{1} << edges_[e].second);
        if ((t & em) == em) inside.push_back(static_cast<int>(e));
      }
      trace_edges_.push_back(std::move(inside));
      trace_vertices_.push_back(mask_vertices(t));
    }
    if (opts.symmetry && g.cycle_order()) autos_ = cycle_automorphisms(g, precolored);
    residual_ = demand_;
    cap_.assign(edges_.size(), c);
    mult_.assign(traces_.size(), 0);
  }

  std::size_t trace_count() const { return traces_.size(); }

  // Largest multiplicity the trace at position i can take right now.
  int max_mult(std::size_t i) const {
    int m = 1 << 30;
    for (int v : trace_vertices_[i]) m = std::min(m, residual_[static_cast<std::size_t>(v)]);
    for (int e : trace_edges_[i]) m = std::min(m, cap_[static_cast<std::size_t>(e)]);
    return std::max(m, 0);
  }

  void apply(std::size_t i, int m) {
    mult_[i] = m;
    for (int v : trace_vertices_[i]) residual_[static_cast<std::size_t>(v)] -= m;
    for (int e : trace_edges_[i]) cap_[static_cast<std::size_t>(e)] -= m;
  }
  void unapply(std::size_t i) { apply(i, -mult_[i]), mult_[i] = 0; }

  // Depth-first over multiplicities (largest first) from position `start`.
  // `leaf` returns false to stop; `should_stop` is polled between siblings.
  template <typename Leaf, typename Stop>
  bool dfs(std::size_t pos, Budget& budget, Leaf&& leaf, Stop&& should_stop) {
    budget.tick();
    if (pos == traces_.size()) {
      if (opts_.maximal_only && dominated()) return true;
      if (!autos_.empty() && !canonical()) return true;
      return leaf(*this);
    }
    int top = max_mult(pos);
    for (int m = top; m >= 0; --m) {
      if (should_stop()) throw Abandoned{};
      apply(pos, m);
      bool go = dfs(pos + 1, budget, leaf, should_stop);
      unapply(pos);
      if (!go) return false;
    }
    return true;
  }

  // Current multiset including singleton traces.
  std::vector<std::pair<Mask, int>> current() const {
    std::vector<std::pair<Mask, int>> out;
    for (std::size_t i = 0; i < traces_.size(); ++i)
      if (mult_[i] > 0) out.push_back({traces_[i], mult_[i]});
    for (int v = 0; v < n_; ++v)
      if (residual_[static_cast<std::size_t>(v)] > 0) out.push_back({Mask{1} << v, residual_[static_cast<std::size_t>(v)]});
    return out;
  }

  TraceMultiset multiset() const {
    TraceMultiset t;
    for (auto [m, k] : current()) t.counts[mask_vertices(m)] = k;
    return t;
  }

  std::vector<std::vector<int>> dense_lists(int& num_colors) const {
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n_));
    int next = 0;
    for (auto [m, k] : current()) {
      for (int copy = 0; copy < k; ++copy, ++next)
        for (Mask x = m; x; x &= x - 1) lists[static_cast<std::size_t>(std::countr_zero(x))].push_back(next);
    }
    num_colors = next;
    return lists;
  }

  // Replays the prefix of multiplicities (positions 0..prefix.size()-1).
  void set_prefix(const std::vector<int>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) apply(i, prefix[i]);
  }

 private:
  bool dominated() const {
    auto present = current();
    for (std::size_t x = 0; x < present.size(); ++x) {
      for (std::size_t y = x + 1; y < present.size(); ++y) {
        Mask t1 = present[x].first, t2 = present[y].first;
        if (t1 & t2) continue;
        bool adjacent = false, slack = true;
        for (std::size_t e = 0; e < edges_.size() && slack; ++e) {
          Mask u = Mask{1} << edges_[e].first, v = Mask{1} << edges_[e].second;
          bool cross = ((t1 & u) && (t2 & v)) || ((t1 & v) && (t2 & u));
          if (!cross) continue;
          adjacent = true;
          if (cap_[e] <= 0) slack = false;
        }
        if (adjacent && slack) return true;
      }
    }
    return false;
  }

  bool canonical() const {
    auto key = current();
    std::sort(key.begin(), key.end());
    for (const auto& p : autos_) {
      std::vector<std::pair<Mask, int>> image;
      for (auto [m, k] : key) {
        Mask im = 0;
        for (Mask x = m; x; x &= x - 1) im |= Mask{1} << p[static_cast<std::size_t>(std::countr_zero(x))];
        image.push_back({im, k});
      }
      std::sort(image.begin(), image.end());
      if (image < key) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  int c_;
  EnumerateOptions opts_;
  std::vector<int> demand_;
  std::vector<Edge> edges_;
  std::vector<Mask> traces_;
  std::vector<std::vector<int>> trace_edges_;
  std::vector<std::vector<Vertex>> trace_vertices_;
  std::vector<std::vector<Vertex>> autos_;
  std::vector<int> residual_;
  std::vector<int> cap_;
  std::vector<int> mult_;
};

struct FoundCounterexample {
  TraceMultiset traces;
};

// Searches one precolored choice for an uncolorable assignment. Subtrees are the values
// of the first trace multiplicity; the lowest subtree index wins so that the reported
// counterexample does not depend on scheduling.
Verdict search_counterexample(const Graph& g, int a, int b, int c, std::optional<Vertex> precolored,
                              const SolveOptions& opts, Budget& budget, std::optional<TraceMultiset>& found) {
  EnumerateOptions eo;
  eo.connected_traces_only = true;
  eo.maximal_only = opts.dominance;
  eo.symmetry = opts.symmetry;
  TraceEnumerator root(g, a, b, c, precolored, eo);

  std::vector<std::vector<int>> tasks;
  if (root.trace_count() == 0) {
    tasks.push_back({});
  } else {
    for (int m = root.max_mult(0); m >= 0; --m) tasks.push_back({m});
  }

  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> best_task{tasks.size()};
  std::atomic<bool> exhausted{false};
  std::mutex mu;
  std::map<std::size_t, TraceMultiset> results;

  auto worker = [&]() {
    Search search(g, budget);
    while (true) {
      std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size() || t > best_task.load() || exhausted.load()) return;
      TraceEnumerator en(g, a, b, c, precolored, eo);
      en.set_prefix(tasks[t]);
      auto leaf = [&](const TraceEnumerator& e) {
        int m = 0;
        auto lists = e.dense_lists(m);
        search.load(lists, m, b);
        if (search.run({})) return true;
        std::lock_guard<std::mutex> lock(mu);
        results[t] = e.multiset();
        std::size_t cur = best_task.load();
        while (t < cur && !best_task.compare_exchange_weak(cur, t)) {
        }
        return false;
      };
      auto stop = [&]() { return best_task.load() < t || exhausted.load(); };
      try {
        en.dfs(tasks[t].size(), budget, leaf, stop);
      } catch (const BudgetExhausted&) {
        exhausted.store(true);
        return;
      } catch (const Abandoned&) {
      }
    }
  };

  unsigned workers = std::max(1u, opts.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (!results.empty()) {
    found = results.begin()->second;
    return Verdict::no;
  }
  return exhausted.load() ? Verdict::unknown : Verdict::yes;
}

}  // namespace

SolveOutcome color_with_lists(const ListAssignment& L, int b, const SolveOptions& opts) {
  return solve_lists(L, b, std::vector<std::optional<ColorSet>>(static_cast<std::size_t>(L.graph().order())), opts);
}

SolveOutcome free_color_with_lists(const ListAssignment& L, int b, const SolveOptions& opts) {
  if (L.precolored().empty()) fail(ErrorCode::invalid_argument, "free coloring needs a precolored vertex");
  std::vector<std::optional<ColorSet>> fixed(static_cast<std::size_t>(L.graph().order()));
  for (Vertex r : L.precolored()) {
    if (static_cast<int>(L.list(r).size()) != b)
      fail(ErrorCode::invalid_argument, "precolored vertex " + std::to_string(r) + " must have a list of size b");
    fixed[static_cast<std::size_t>(r)] = L.list(r);
  }
  return solve_lists(L, b, std::move(fixed), opts);
}

SolveOutcome extend_coloring(const ListAssignment& L, int b, const std::vector<std::optional<ColorSet>>& fixed,
                             const SolveOptions& opts) {
  if (static_cast<int>(fixed.size()) != L.graph().order())
    fail(ErrorCode::invalid_argument, "partial coloring must have one entry per vertex");
  return solve_lists(L, b, fixed, opts);
}

std::uint64_t enumerate_canonical(const Graph& g, int a, int b, int c, std::optional<Vertex> precolored,
                                  const std::function<bool(const TraceMultiset&)>& visit, const EnumerateOptions& opts) {
  if (b > a) fail(ErrorCode::invalid_argument, "b must not exceed a");
  TraceEnumerator en(g, a, b, c, precolored, opts);
  Budget unlimited(~std::uint64_t{0});
  std::uint64_t visited = 0;
  en.dfs(
      0, unlimited,
      [&](const TraceEnumerator& e) {
        ++visited;
        return visit(e.multiset());
      },
      [] { return false; });
  return visited;
}

SolveOutcome decide_choosable(const Graph& g, int a, int b, int c, bool free, const SolveOptions& opts) {
  if (b < 1) fail(ErrorCode::invalid_argument, "b must be at least 1");
  if (b > a) fail(ErrorCode::invalid_argument, "b must not exceed a");
  if (c < 0) fail(ErrorCode::invalid_argument, "c must be nonnegative");
  auto graph = std::make_shared<const Graph>(g);
  SolveOutcome out;
  Budget budget(opts.budget);

  std::vector<std::optional<Vertex>> roots;
  if (!free) {
    roots.push_back(std::nullopt);
  } else if (opts.symmetry && g.cycle_order()) {
    roots.push_back(g.cycle_order()->front());
  } else {
    for (Vertex v = 0; v < g.order(); ++v) roots.push_back(v);
  }

  for (const auto& r : roots) {
    std::optional<TraceMultiset> found;
    Verdict v = search_counterexample(g, a, b, c, r, opts, budget, found);
    if (v == Verdict::no) {
      std::vector<Vertex> pre;
      if (r) pre.push_back(*r);
      out.verdict = Verdict::no;
      out.counterexample = realize(*found, graph, a, pre);
      out.nodes_explored = budget.used.load();
      return out;
    }
    if (v == Verdict::unknown) {
      out.verdict = Verdict::unknown;
      out.nodes_explored = budget.used.load();
      return out;
    }
  }
  out.verdict = Verdict::yes;
  out.nodes_explored = budget.used.load();
  return out;
}

int compute_sep(const Graph& g, int a, int b, bool free, const SolveOptions& opts) {
  if (b > a) fail(ErrorCode::invalid_argument, "b must not exceed a");
  std::vector<int> refuted;
  int c = a;
  while (c >= 0) {
    auto out = decide_choosable(g, a, b, c, free, opts);
    if (out.verdict == Verdict::unknown)
      fail(ErrorCode::budget_exhausted, "search budget exhausted while deciding c = " + std::to_string(c));
    if (out.verdict == Verdict::yes) {
      for (int s : refuted)
        if (s <= c) fail(ErrorCode::internal, "choosability is not monotone in c");
      return c;
    }
    int s = separation(*out.counterexample);
    if (s > c) fail(ErrorCode::internal, "counterexample exceeds the separation cap");
    refuted.push_back(s);
    // The counterexample refutes every cap >= its own separation.
    c = s - 1;
  }
  fail(ErrorCode::internal, "every graph is (a,b,0)-choosable");
}

}  // namespace sepchoose
