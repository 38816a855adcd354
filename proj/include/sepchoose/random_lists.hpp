#pragma once

#include <optional>
#include <random>

#include "sepchoose/list_assign.hpp"

namespace sepchoose {

struct RandomListOptions {
  /// Precolored vertex whose list gets b colors instead of a.
  std::optional<Vertex> precolored;
  int b = 0;
};

/// A random c-separating list assignment with lists of size a (b at the precolored
/// vertex). Colors are drawn preferably from neighbors' lists, then from a small shared
/// pool, so that adjacent intersections often reach the cap c.
ListAssignment random_separating_lists(std::shared_ptr<const Graph> g, int a, int c, std::mt19937_64& rng,
                                       const RandomListOptions& opts = {});

}  // namespace sepchoose
