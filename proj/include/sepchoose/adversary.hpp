#pragma once

#include <optional>
#include <string>

#include "sepchoose/list_assign.hpp"
#include "sepchoose/solver.hpp"

namespace sepchoose {

enum class Claim { uncolorable, colorable };

const char* to_string(Claim c);
Claim claim_from_string(const std::string& s);

/// A graph, parameters and lists together with a colorability claim that
/// verify_certificate re-checks from scratch.
struct Certificate {
  std::string family;
  int a = 0;
  int b = 0;
  int c = 0;
  ListAssignment lists;
  Claim claim = Claim::uncolorable;
  /// Amplitude of the whole graph predicted by the construction, when it states one.
  std::optional<int> sigma_closed_form;

  const Graph& graph() const { return lists.graph(); }
};

enum class PathVariant { case1, case2a, case2b };
enum class Endpoints { equal, disjoint };
enum class TriangleVariant { case1, case2_high, case2_low };

PathVariant path_variant_from_string(const std::string& s);
Endpoints endpoints_from_string(const std::string& s);
TriangleVariant triangle_variant_from_string(const std::string& s);
const char* to_string(PathVariant v);
const char* to_string(Endpoints e);
const char* to_string(TriangleVariant v);

/// C_n with a = b+k and lists C ∪ D_i ∪ D_{i+1} ∪ F_i; (k+1)-separating, uncolorable.
Certificate gen_sep_small_ratio(int n, int b, int k);

/// C_{2p+1} with a = 2b+alpha and lists C ∪ D_i ∪ D_{i+1}; uncolorable at c = b+(p+1)alpha+1.
Certificate gen_sep_odd_cycle(int p, int b, int alpha);

/// P_{n+1} (vertices x_1..x_{n+1} are 0..n) with both end lists of size b and
/// c = floor(c(n,a,b)) + 1; uncolorable.
Certificate gen_path_family(int n, int a, int b, PathVariant variant, Endpoints endpoints);

/// Identifies the end vertices of a path certificate with equal end lists, giving
/// C_n with x_1 precolored.
Certificate glue_path_to_cycle(const Certificate& path);

/// C_3 with x_1 precolored by b colors; uncolorable one above fsep(C_3,a,b).
Certificate gen_c3_family(int a, int b, TriangleVariant variant);

/// The variant of the triangle family whose regime contains (a,b).
TriangleVariant triangle_variant_for(int a, int b);
/// The variant of the path family whose regime contains (n,a,b).
PathVariant path_variant_for(int n, int a, int b);

/// Flower of C(a,b) copies of C_p on a common hub with list {1..a}: every choice
/// at the hub leaves one copy uncolorable. c = fsep(C_p,a,b) + 1.
Certificate gen_flower(int p, int a, int b);

/// Two 4-cycles sharing a vertex with a 1-separating 2-list assignment and no (L,1)-coloring.
Certificate fig1_fixture();

enum class VerifyStatus { pass, refuted, unknown };

struct VerifyReport {
  VerifyStatus status = VerifyStatus::unknown;
  std::string message;
  std::uint64_t nodes_explored = 0;
};

const char* to_string(VerifyStatus s);

/// Re-checks list sizes, the separation cap and the claim with the exact solver.
VerifyReport verify_certificate(const Certificate& cert, const SolveOptions& opts = {});

}  // namespace sepchoose
