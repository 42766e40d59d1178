#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "trirain/family.hpp"

namespace trirain {

/// The graph whose edge set is the union of all member triangles' edges,
/// together with the member copies owning each edge.
class UnionGraph {
 public:
  explicit UnionGraph(const TriangleFamily& f);

  int n() const { return n_; }
  bool has_edge(Edge e) const { return (adj_[e.u] >> e.v) & 1ULL; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  int edge_count() const { return static_cast<int>(owners_.size()); }
  std::vector<Edge> edges() const;
  /// Owner copies of `e` in member order; empty when `e` is absent.
  const std::vector<MemberRef>& owners(Edge e) const;
  const std::map<Edge, std::vector<MemberRef>>& owner_map() const { return owners_; }

  /// True when no two vertices of `set` are adjacent.
  bool independent(std::uint64_t set) const;

 private:
  int n_;
  std::vector<std::uint64_t> adj_;
  std::map<Edge, std::vector<MemberRef>> owners_;
};

inline UnionGraph union_graph(const TriangleFamily& f) { return UnionGraph(f); }

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }
inline int lowest_bit(std::uint64_t x) { return __builtin_ctzll(x); }
/// Mask of the vertices strictly greater than x.
inline std::uint64_t bits_above(int x) { return x >= 63 ? 0 : ~0ULL << (x + 1); }

}  // namespace trirain
