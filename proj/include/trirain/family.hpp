#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trirain {

// Every vertex set fits a 64-bit mask.
inline constexpr int kMaxVertices = 64;

class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge of(int a, int b);

  bool contains(int x) const { return x == u || x == v; }
  int other(int x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// Vertex triple, stored sorted a < b < c.
struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;

  /// Sorts the vertices; throws FamilyError if two coincide.
  static Triangle of(int x, int y, int z);

  std::array<int, 3> vertices() const { return {a, b, c}; }
  /// Edges in lexicographic order: ab, ac, bc.
  std::array<Edge, 3> edges() const { return {Edge{a, b}, Edge{a, c}, Edge{b, c}}; }
  bool contains(int x) const { return x == a || x == b || x == c; }
  bool contains(Edge e) const { return contains(e.u) && contains(e.v); }
  /// The vertex not on `e`; `e` must be an edge of this triangle.
  int opposite(Edge e) const;
  std::uint64_t mask() const { return (1ULL << a) | (1ULL << b) | (1ULL << c); }

  auto operator<=>(const Triangle&) const = default;
};

enum class Mode { Set, Multiset };

std::string to_string(Mode mode);

struct Member {
  Triangle tri;
  int multiplicity = 1;

  bool operator==(const Member&) const = default;
};

/// One copy of one member. Copies of the same member are distinct colors.
struct MemberRef {
  int index = 0;
  int copy = 0;

  auto operator<=>(const MemberRef&) const = default;
};

/// A family of triangles on the vertices [0, n). In multiset mode a triangle
/// may appear twice; repetition is recorded as a multiplicity, never as a
/// second entry.
class TriangleFamily {
 public:
  TriangleFamily(int n, Mode mode);
  TriangleFamily(int n, Mode mode, std::vector<Member> members);

  void add(Triangle t, int multiplicity = 1);
  /// Adds one copy of `t`, raising its multiplicity if already present.
  void add_copy(Triangle t);

  int n() const { return n_; }
  Mode mode() const { return mode_; }
  const std::vector<Member>& members() const { return members_; }
  bool empty() const { return members_.empty(); }

  /// Number of member copies (sum of multiplicities).
  int size() const;
  /// -1 when absent.
  int index_of(Triangle t) const;
  int multiplicity_of(Triangle t) const;
  /// Every member copy in member order.
  std::vector<MemberRef> refs() const;
  const Triangle& triangle(MemberRef r) const { return members_.at(r.index).tri; }

  /// Set-mode family with one copy of each distinct member.
  TriangleFamily support() const;

  /// Same family with members sorted lexicographically.
  TriangleFamily normalized() const;

  bool operator==(const TriangleFamily&) const = default;

 private:
  void check(const Member& m) const;

  int n_;
  Mode mode_;
  std::vector<Member> members_;
};

}  // namespace trirain
