#include "sepchoose/adversary.hpp"

#include <algorithm>
#include <numeric>

#include "sepchoose/error.hpp"
#include "sepchoose/formulas.hpp"

namespace sepchoose {

const char* to_string(Claim c) { return c == Claim::uncolorable ? "uncolorable" : "colorable"; }

Claim claim_from_string(const std::string& s) {
  if (s == "uncolorable") return Claim::uncolorable;
  if (s == "colorable") return Claim::colorable;
  fail(ErrorCode::parse, "unknown claim '" + s + "'");
}

PathVariant path_variant_from_string(const std::string& s) {
  if (s == "case1") return PathVariant::case1;
  if (s == "case2a") return PathVariant::case2a;
  if (s == "case2b") return PathVariant::case2b;
  fail(ErrorCode::invalid_argument, "unknown path variant '" + s + "' (expected case1, case2a or case2b)");
}

Endpoints endpoints_from_string(const std::string& s) {
  if (s == "equal") return Endpoints::equal;
  if (s == "disjoint") return Endpoints::disjoint;
  fail(ErrorCode::invalid_argument, "unknown endpoints mode '" + s + "' (expected equal or disjoint)");
}

TriangleVariant triangle_variant_from_string(const std::string& s) {
  if (s == "case1") return TriangleVariant::case1;
  if (s == "case2_high") return TriangleVariant::case2_high;
  if (s == "case2_low") return TriangleVariant::case2_low;
  fail(ErrorCode::invalid_argument, "unknown triangle variant '" + s + "' (expected case1, case2_high or case2_low)");
}

const char* to_string(PathVariant v) {
  switch (v) {
    case PathVariant::case1:
      return "case1";
    case PathVariant::case2a:
      return "case2a";
    case PathVariant::case2b:
      return "case2b";
  }
  return "case1";
}

const char* to_string(Endpoints e) { return e == Endpoints::equal ? "equal" : "disjoint"; }

const char* to_string(TriangleVariant v) {
  switch (v) {
    case TriangleVariant::case1:
      return "case1";
    case TriangleVariant::case2_high:
      return "case2_high";
    case TriangleVariant::case2_low:
      return "case2_low";
  }
  return "case1";
}

const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass:
      return "pass";
    case VerifyStatus::refuted:
      return "refuted";
    case VerifyStatus::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

using ColorBlock = std::vector<Color>;

// Hands out consecutive fresh color ids in allocation order.
class Palette {
 public:
  ColorBlock take(int count) {
    if (count < 0) fail(ErrorCode::regime, "construction needs a block of negative size " + std::to_string(count));
    ColorBlock out(static_cast<std::size_t>(count));
    std::iota(out.begin(), out.end(), next_);
    next_ += count;
    return out;
  }

 private:
  Color next_ = 0;
};

ColorBlock prefix(const ColorBlock& block, int count) {
  if (count < 0 || count > static_cast<int>(block.size()))
    fail(ErrorCode::regime, "construction takes " + std::to_string(count) + " colors from a block of " +
                                std::to_string(block.size()));
  return ColorBlock(block.begin(), block.begin() + count);
}

ColorSet join(std::initializer_list<ColorBlock> blocks) {
  ColorSet out;
  for (const auto& blk : blocks)
    for (Color c : blk) out.insert(c);
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) fail(ErrorCode::regime, message);
}

}  // namespace

Certificate gen_sep_small_ratio(int n, int b, int k) {
  if (n < 3) fail(ErrorCode::invalid_argument, "cycle length must be at least 3");
  if (b < 1) fail(ErrorCode::invalid_argument, "b must be at least 1");
  require(k >= 0 && k < b, "need 0 <= k < b (got k=" + std::to_string(k) + ", b=" + std::to_string(b) + ")");
  Palette pal;
  ColorBlock C = pal.take(1);
  std::vector<ColorBlock> D, F;
  for (int i = 0; i < n; ++i) D.push_back(pal.take(k));
  for (int i = 0; i < n; ++i) F.push_back(pal.take(b - k - 1));
  std::vector<ColorSet> lists;
  for (int i = 0; i < n; ++i)
    lists.push_back(join({C, D[static_cast<std::size_t>(i)], D[static_cast<std::size_t>((i + 1) % n)], F[static_cast<std::size_t>(i)]}));
  int a = b + k;
  return Certificate{"sep-small-ratio", a, b, k + 1, ListAssignment(build_cycle(n), std::move(lists), a),
                     Claim::uncolorable, n / 2 + n * (b - 1)};
}

Certificate gen_sep_odd_cycle(int p, int b, int alpha) {
  if (p < 1) fail(ErrorCode::invalid_argument, "p must be at least 1");
  if (b < 1) fail(ErrorCode::invalid_argument, "b must be at least 1");
  require(alpha >= 0 && p * alpha <= b - 1, "need 0 <= alpha and p*alpha <= b-1 (got p=" + std::to_string(p) +
                                                ", b=" + std::to_string(b) + ", alpha=" + std::to_string(alpha) + ")");
  int n = 2 * p + 1;
  Palette pal;
  ColorBlock C = pal.take(n * alpha + 2);
  std::vector<ColorBlock> D;
  for (int i = 0; i < n; ++i) D.push_back(pal.take(b - p * alpha - 1));
  std::vector<ColorSet> lists;
  for (int i = 0; i < n; ++i) lists.push_back(join({C, D[static_cast<std::size_t>(i)], D[static_cast<std::size_t>((i + 1) % n)]}));
  int a = 2 * b + alpha;
  return Certificate{"sep-odd-cycle", a, b, b + (p + 1) * alpha + 1, ListAssignment(build_cycle(n), std::move(lists), a),
                     Claim::uncolorable, n * b - 1};
}

PathVariant path_variant_for(int n, int a, int b) {
  auto t = c_threshold(n, a, b);
  require(t.regime != "high", "path family needs a < 2(n+1)b/n");
  if (t.regime == "low") return PathVariant::case1;
  int c = static_cast<int>(t.floor) + 1;
  return a >= 2 * c ? PathVariant::case2a : PathVariant::case2b;
}

Certificate gen_path_family(int n, int a, int b, PathVariant variant, Endpoints endpoints) {
  if (n < 4) fail(ErrorCode::regime, "path family needs n >= 4 (got " + std::to_string(n) + ")");
  if (b < 1 || b > a) fail(ErrorCode::invalid_argument, "need 1 <= b <= a");
  auto t = c_threshold(n, a, b);
  require(t.regime != "high", "path family needs a < 2(n+1)b/n");
  int c = static_cast<int>(t.floor) + 1;
  switch (variant) {
    case PathVariant::case1:
      require(t.regime == "low", "case1 needs b <= a < (2n-1)b/(n-1)");
      break;
    case PathVariant::case2a:
      require(t.regime == "middle", "case2a needs (2n-1)b/(n-1) <= a < 2(n+1)b/n");
      require(a >= 2 * c, "case2a needs a >= 2c (c=" + std::to_string(c) + ")");
      break;
    case PathVariant::case2b:
      require(t.regime == "middle", "case2b needs (2n-1)b/(n-1) <= a < 2(n+1)b/n");
      require(a == 2 * c - 1, "case2b needs a = 2c-1 (c=" + std::to_string(c) + ")");
      break;
  }

  Palette pal;
  std::vector<ColorSet> lists(static_cast<std::size_t>(n + 1));
  ColorBlock B = pal.take(b);
  lists[0] = join({B});
  ColorBlock last;  // block introduced by the previous row
  std::optional<int> sigma;

  // Fresh end colors are allocated last so both endpoint variants share every other id.
  auto end_block = [&]() { return endpoints == Endpoints::equal ? B : pal.take(b); };
  ColorBlock Bn;

  if (variant == PathVariant::case1) {
    last = pal.take(a - c);
    lists[1] = join({prefix(B, c), last});
    for (int i = 3; i <= n - 1; ++i) {
      ColorBlock share = prefix(last, c);
      last = pal.take(a - c);
      lists[static_cast<std::size_t>(i - 1)] = join({share, last});
    }
    ColorBlock share = prefix(last, c);
    ColorBlock F = pal.take(a - 2 * c);
    Bn = end_block();
    lists[static_cast<std::size_t>(n - 1)] = join({prefix(Bn, c), share, F});
    sigma = (n - 1) * (a - c) + 2 * b - c;
  } else if (variant == PathVariant::case2a) {
    last = pal.take(a - b);
    lists[1] = join({B, last});
    for (int i = 3; i <= n - 1; ++i) {
      ColorBlock share = prefix(last, c);
      last = pal.take(a - c);
      lists[static_cast<std::size_t>(i - 1)] = join({share, last});
    }
    ColorBlock share = prefix(last, c);
    ColorBlock F = pal.take(a - c - b);
    Bn = end_block();
    lists[static_cast<std::size_t>(n - 1)] = join({Bn, share, F});
    sigma = (n - 1) * a - (n - 2) * c;
  } else {
    last = pal.take(2 * c - b - 1);
    lists[1] = join({B, last});
    for (int i = 3; i <= n - 1; ++i) {
      ColorBlock share = i == 3 ? prefix(last, c) : last;
      last = pal.take(i % 2 == 1 ? c - 1 : c);
      lists[static_cast<std::size_t>(i - 1)] = join({share, last});
    }
    ColorBlock F = pal.take(a - b - static_cast<int>(last.size()));
    Bn = end_block();
    lists[static_cast<std::size_t>(n - 1)] = join({Bn, last, F});
    sigma = n % 2 == 1 ? n * c - (n + 1) / 2 : n * c - n / 2;
  }
  lists[static_cast<std::size_t>(n)] = join({Bn});

  std::string family = std::string("path-") + to_string(variant) + "-" + to_string(endpoints);
  return Certificate{family, a, b, c, ListAssignment(build_path(n + 1), std::move(lists), a, {0, n}), Claim::uncolorable,
                     sigma};
}

Certificate glue_path_to_cycle(const Certificate& path) {
  const auto& g = path.graph();
  int n = g.order() - 1;
  if (!g.path_order() || n < 3) fail(ErrorCode::invalid_argument, "gluing needs a path certificate");
  const auto& order = *g.path_order();
  if (!(path.lists.list(order.front()) == path.lists.list(order.back())))
    fail(ErrorCode::precondition, "gluing needs equal lists at both ends of the path");
  std::vector<ColorSet> lists;
  for (int i = 0; i < n; ++i) lists.push_back(path.lists.list(order[static_cast<std::size_t>(i)]));
  return Certificate{path.family + "-glued", path.a, path.b, path.c,
                     ListAssignment(build_cycle(n), std::move(lists), path.a, {0}), path.claim, std::nullopt};
}

TriangleVariant triangle_variant_for(int a, int b) {
  if (b < 1 || b > a) fail(ErrorCode::invalid_argument, "need 1 <= b <= a");
  require(a < 3 * b, "triangle family needs a < 3b");
  if (4 * a < 7 * b) return TriangleVariant::case1;
  return a >= 2 * b ? TriangleVariant::case2_high : TriangleVariant::case2_low;
}

Certificate gen_c3_family(int a, int b, TriangleVariant variant) {
  if (b < 1 || b > a) fail(ErrorCode::invalid_argument, "need 1 <= b <= a");
  int c = 0;
  switch (variant) {
    case TriangleVariant::case1:
      require(4 * a < 7 * b, "case1 needs b <= a < 7b/4");
      c = static_cast<int>(floor_of(Rational(2 * (a - b), 3))) + 1;
      break;
    case TriangleVariant::case2_high:
      require(4 * a >= 7 * b && a < 3 * b && a >= 2 * b, "case2_high needs 7b/4 <= a < 3b and a >= 2b");
      c = 2 * a - 3 * b + 1;
      break;
    case TriangleVariant::case2_low:
      require(4 * a >= 7 * b && a < 2 * b, "case2_low needs 7b/4 <= a < 2b");
      c = 2 * a - 3 * b + 1;
      break;
  }
  Palette pal;
  ColorBlock B = pal.take(b);
  std::vector<ColorSet> lists(3);
  lists[0] = join({B});
  int sigma = 0;
  if (variant == TriangleVariant::case2_high) {
    ColorBlock E = pal.take(a - b);
    lists[1] = join({B, E});
    ColorBlock F = pal.take(a - c);
    lists[2] = join({B, prefix(E, c - b), F});
    sigma = 2 * a - c;
  } else {
    ColorBlock E = pal.take(a - c);
    lists[1] = join({prefix(B, c), E});
    // The part of B kept by x_3 is capped at c so that x_1x_3 stays c-separating.
    int kept = std::min(c, b - c);
    ColorBlock Bkept(B.begin() + c, B.begin() + c + kept);
    ColorBlock F = pal.take(a - kept - c);
    lists[2] = join({Bkept, prefix(E, c), F});
    sigma = b + (a - c) + (a - kept - c);
  }
  std::string family = std::string("c3-") + to_string(variant);
  return Certificate{family, a, b, c, ListAssignment(build_cycle(3), std::move(lists), a, {0}), Claim::uncolorable, sigma};
}

Certificate gen_flower(int p, int a, int b) {
  if (p < 3) fail(ErrorCode::invalid_argument, "flower petals need p >= 3");
  if (b < 1 || b > a) fail(ErrorCode::invalid_argument, "need 1 <= b <= a");
  Certificate base = p == 3 ? gen_c3_family(a, b, triangle_variant_for(a, b))
                            : glue_path_to_cycle(gen_path_family(p, a, b, path_variant_for(p, a, b), Endpoints::equal));
  int c = fsep_cycle(p, a, b).value + 1;
  if (base.c != c) fail(ErrorCode::internal, "base family does not sit one above the free-separation number");

  // One copy per b-subset of the hub colors {1..a}; non-hub colors come from a common set A.
  std::vector<std::vector<Color>> subsets;
  std::vector<Color> pick(static_cast<std::size_t>(b));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == b) {
      subsets.push_back(pick);
      return;
    }
    for (int x = start; x <= a; ++x) {
      pick[static_cast<std::size_t>(depth)] = x;
      self(self, x + 1, depth + 1);
    }
  };
  rec(rec, 1, 0);
  if (subsets.size() > 5000) fail(ErrorCode::invalid_argument, "flower would need more than 5000 petals");

  int k = static_cast<int>(subsets.size());
  Graph g = build_flower(p, k);
  std::vector<ColorSet> lists(static_cast<std::size_t>(g.order()));
  for (int x = 1; x <= a; ++x) lists[0].insert(x);
  for (int i = 0; i < k; ++i) {
    const auto& Bi = subsets[static_cast<std::size_t>(i)];
    auto relabel = [&](Color col) { return col < b ? Bi[static_cast<std::size_t>(col)] : a + 1 + (col - b); };
    for (int j = 1; j < p; ++j) {
      ColorSet l;
      for (Color col : base.lists.list(j).members()) l.insert(relabel(col));
      lists[static_cast<std::size_t>(1 + i * (p - 1) + (j - 1))] = l;
    }
  }
  return Certificate{"flower", a, b, c, ListAssignment(std::move(g), std::move(lists), a), Claim::uncolorable, std::nullopt};
}

Certificate fig1_fixture() {
  std::vector<Edge> edges{{0, 1}, {1, 3}, {2, 3}, {0, 2}, {4, 6}, {3, 4}, {3, 5}, {5, 6}};
  Graph g(7, edges);
  g = g.with_faces({{0, 1, 3, 2}, {6, 4, 3, 5}});
  g = g.with_block_tree(block_decomposition(g, true));
  std::vector<ColorSet> lists{{3, 4}, {1, 3}, {1, 4}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
  return Certificate{"fig1", 2, 1, 1, ListAssignment(std::move(g), std::move(lists), 2), Claim::uncolorable, std::nullopt};
}

VerifyReport verify_certificate(const Certificate& cert, const SolveOptions& opts) {
  VerifyReport rep;
  const auto& L = cert.lists;
  if (L.a() != cert.a) {
    rep.status = VerifyStatus::refuted;
    rep.message = "list bound a does not match the certificate";
    return rep;
  }
  if (auto why = L.size_violation(cert.b)) {
    rep.status = VerifyStatus::refuted;
    rep.message = "size invariant: " + *why;
    return rep;
  }
  int sep = separation(L);
  if (sep > cert.c) {
    rep.status = VerifyStatus::refuted;
    rep.message = "separation " + std::to_string(sep) + " exceeds c = " + std::to_string(cert.c);
    return rep;
  }
  auto out = L.precolored().empty() ? color_with_lists(L, cert.b, opts) : free_color_with_lists(L, cert.b, opts);
  rep.nodes_explored = out.nodes_explored;
  if (out.verdict == Verdict::unknown) {
    rep.status = VerifyStatus::unknown;
    rep.message = "search budget exhausted before the claim was settled";
    return rep;
  }
  if (out.verdict == Verdict::yes) {
    if (auto bad = coloring_violation(L, *out.witness, cert.b))
      fail(ErrorCode::internal, "solver returned an invalid witness: " + *bad);
  }
  bool colorable = out.verdict == Verdict::yes;
  bool claimed = cert.claim == Claim::colorable;
  if (colorable != claimed) {
    rep.status = VerifyStatus::refuted;
    rep.message = std::string("claim '") + to_string(cert.claim) + "' contradicted: the lists are " +
                  (colorable ? "colorable" : "uncolorable");
    return rep;
  }
  rep.status = VerifyStatus::pass;
  rep.message = std::string("claim '") + to_string(cert.claim) + "' confirmed, separation " + std::to_string(sep);
  return rep;
}

}  // namespace sepchoose
