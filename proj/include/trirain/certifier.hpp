#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trirain/family.hpp"
#include "trirain/rainbow.hpp"
#include "trirain/union_graph.hpp"

namespace trirain {

inline constexpr int kDefaultMisLimit = 64;

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken input contract (a member outside the expected shape).
class CertifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// certify() was handed a family with a rainbow triangle.
class RainbowInputError : public std::runtime_error {
 public:
  explicit RainbowInputError(RainbowCertificate c)
      : std::runtime_error("family has a rainbow triangle"), certificate(c) {}
  RainbowCertificate certificate;
};

/// Exact maximum independent set, lexicographically least among the maximum
/// ones. Throws LimitExceeded when g.n() > limit.
std::uint64_t max_independent_set(const UnionGraph& g, int limit = kDefaultMisLimit);

/// Independence number only.
int independence_number(const UnionGraph& g, std::uint64_t within);

std::vector<int> mask_vertices(std::uint64_t mask);

struct Bipartition {
  std::uint64_t a = 0;  // maximum independent set
  std::uint64_t b = 0;  // complement
  std::vector<Edge> e_b;

  int size_a() const { return popcount(a); }
  int size_b() const { return popcount(b); }
  bool in_b(Edge e) const { return ((b >> e.u) & 1) && ((b >> e.v) & 1); }
};

Bipartition make_bipartition(const UnionGraph& g, int mis_limit = kDefaultMisLimit);

struct BetaAssignment {
  std::map<MemberRef, Edge> beta;
  std::map<Edge, int> d;

  int d_of(Edge e) const {
    auto it = d.find(e);
    return it == d.end() ? 0 : it->second;
  }
  std::vector<MemberRef> preimage(Edge e) const;
};

/// Each member copy is sent to one of its edges inside B: the only one when
/// there is exactly one, otherwise a shared one if it has one, otherwise the
/// lexicographically least. Throws CertifyError for a member with no edge in B.
BetaAssignment build_beta(const TriangleFamily& f, const Bipartition& p);

struct Eq1Result {
  bool holds = false;
  std::int64_t value = 0;     // sum over b in B of sum over e in E(B) through b of d(e)
  std::int64_t expected = 0;  // 2 |T|
};

Eq1Result check_eq1(const TriangleFamily& f, const Bipartition& p, const BetaAssignment& beta);

struct WitnessViolation {
  enum class Kind { NotDistinct, NotIndependent };
  Kind kind;
  std::array<int, 3> triple;
};

std::string describe(const WitnessViolation& v);

struct IndependentWitness {
  int b = 0;
  int expected = 0;  // sum of d(e) over E(B) edges through b
  std::vector<int> picks;
  std::map<int, MemberRef> contributor;
  bool verified_independent = false;
  std::optional<WitnessViolation> violation;

  bool ok() const {
    return !violation && verified_independent && static_cast<int>(picks.size()) == expected;
  }
};

/// For each E(B) edge e through b and each member t with beta(t) = e: pick the
/// far endpoint of e when t is alone in the preimage, else t's vertex off e.
/// The picks are then checked distinct and independent in the union graph.
IndependentWitness build_witness(const TriangleFamily& f, const Bipartition& p,
                                 const BetaAssignment& beta, int b);

struct Eq2Row {
  int b = 0;
  int sum = 0;
  bool equality = false;
  bool witness_ok = false;
};

struct Eq2Result {
  bool holds = false;
  int bound = 0;  // |A|
  std::vector<Eq2Row> rows;
};

Eq2Result check_eq2(const Bipartition& p, std::span<const IndependentWitness> witnesses);

/// 2|T| <= |A||B| <= n^2/4, all in integers scaled by 4.
struct ChainResult {
  bool holds = false;
  std::int64_t twice_size = 0;
  std::int64_t product = 0;
  std::int64_t n_squared = 0;  // the last link is n_squared / 4

  std::int64_t first_slack() const { return product - twice_size; }
  std::int64_t second_slack_quarters() const { return n_squared - 4 * product; }
};

ChainResult check_master_chain(const TriangleFamily& f, const Bipartition& p);

/// No member has all three vertices in B.
bool check_step1(const TriangleFamily& f, const Bipartition& p);

struct ColoredEdge {
  Edge edge;
  int color = 0;

  bool operator==(const ColoredEdge&) const = default;
};

/// Multigraph on B: one edge per member copy (its edge inside B), colored by
/// its vertex in A.
struct ColoredMultigraph {
  std::vector<int> vertices;
  std::vector<int> palette;
  std::vector<ColoredEdge> edges;

  int m() const { return static_cast<int>(vertices.size()); }
};

ColoredMultigraph build_tb(const TriangleFamily& f, const Bipartition& p);

struct TbProperties {
  bool triangle_free = false;         // underlying simple graph
  bool path_ends_distinct = false;    // 3-edge paths: end edges differ in color
  bool same_color_simple = false;     // same color at a vertex implies simple
  bool regular = false;               // every vertex has degree m

  bool all() const { return triangle_free && path_ends_distinct && same_color_simple && regular; }
};

TbProperties check_tb_properties(const ColoredMultigraph& g);

/// m/2 disjoint pairs, each carrying m edges of pairwise distinct colors, and
/// no edge between pairs.
bool check_matched_pairs(const ColoredMultigraph& g);

struct CertifierReport {
  int n = 0;
  Mode mode = Mode::Set;
  int original_size = 0;
  int size = 0;  // of the analyzed support
  Bipartition partition;
  BetaAssignment beta;
  std::vector<IndependentWitness> witnesses;
  Eq1Result eq1;
  Eq2Result eq2;
  ChainResult chain;
  bool extremal = false;  // 8 |T| == n^2
  // Evaluated only for extremal inputs.
  std::optional<bool> step1;
  std::optional<TbProperties> tb;
  std::optional<bool> matched_pairs;
  std::optional<bool> is_tstar;
  std::optional<std::string> tb_error;

  bool passed() const;
};

/// Multiset families are analyzed through their distinct support.
/// Throws RainbowInputError, LimitExceeded.
CertifierReport certify(const TriangleFamily& f, int mis_limit = kDefaultMisLimit);

std::string format_report(const CertifierReport& r, bool porcelain);

}  // namespace trirain
