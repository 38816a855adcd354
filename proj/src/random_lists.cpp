#include "sepchoose/random_lists.hpp"

#include <algorithm>

#include "sepchoose/error.hpp"

namespace sepchoose {

ListAssignment random_separating_lists(std::shared_ptr<const Graph> g, int a, int c, std::mt19937_64& rng,
                                       const RandomListOptions& opts) {
  if (a < 0 || c < 0) fail(ErrorCode::invalid_argument, "a and c must be nonnegative");
  int n = g->order();
  std::vector<ColorSet> lists(static_cast<std::size_t>(n));
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  std::uniform_int_distribution<int> pool_size(std::max(1, a), std::max(1, 2 * a));
  int pool = pool_size(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double prefer_neighbors = 0.3 + 0.6 * unit(rng);
  Color fresh = pool;

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::shuffle(order.begin(), order.end(), rng);

  for (Vertex v : order) {
    auto vi = static_cast<std::size_t>(v);
    int want = opts.precolored && *opts.precolored == v ? opts.b : a;
    ColorSet& l = lists[vi];
    // Number of colors already shared with each assigned neighbor.
    std::vector<std::pair<Vertex, int>> shared;
    for (Vertex u : g->neighbors(v))
      if (assigned[static_cast<std::size_t>(u)]) shared.push_back({u, 0});
    auto acceptable = [&](Color col) {
      if (l.contains(col)) return false;
      for (auto& [u, s] : shared)
        if (lists[static_cast<std::size_t>(u)].contains(col) && s >= c) return false;
      return true;
    };
    auto add = [&](Color col) {
      l.insert(col);
      for (auto& [u, s] : shared)
        if (lists[static_cast<std::size_t>(u)].contains(col)) ++s;
    };
    int tries = 0;
    while (static_cast<int>(l.size()) < want) {
      Color col = -1;
      if (tries < 50 * (want + 1)) {
        ++tries;
        if (!shared.empty() && unit(rng) < prefer_neighbors) {
          std::uniform_int_distribution<std::size_t> pick_nb(0, shared.size() - 1);
          const auto& nb = lists[static_cast<std::size_t>(shared[pick_nb(rng)].first)];
          if (nb.empty()) continue;
          auto members = nb.members();
          std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
          col = members[pick(rng)];
        } else {
          std::uniform_int_distribution<Color> pick(0, pool - 1);
          col = pick(rng);
        }
        if (!acceptable(col)) continue;
      } else {
        col = fresh++;
      }
      add(col);
    }
    assigned[vi] = 1;
  }
  std::vector<Vertex> pre;
  if (opts.precolored) pre.push_back(*opts.precolored);
  return ListAssignment(std::move(g), std::move(lists), a, std::move(pre));
}

}  // namespace sepchoose
