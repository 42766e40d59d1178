#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trirain/family.hpp"
#include "trirain/union_graph.hpp"

namespace trirain {

/// Split of a multiset family into its distinct support and the set of
/// members taken twice, with the union graph of the latter.
struct MultisetDecomposition {
  int n = 0;
  int original_size = 0;
  TriangleFamily t1;
  TriangleFamily t2;
  UnionGraph g2;
};

MultisetDecomposition decompose(const TriangleFamily& f);

struct T2Diagnostics {
  bool edge_disjoint = true;
  bool no_extra_triangles = true;
  std::optional<Edge> shared_edge;
  std::optional<Triangle> extra_triangle;

  bool ok() const { return edge_disjoint && no_extra_triangles; }
  std::string describe() const;
};

/// Both conditions follow from rainbow-freeness of the original family.
T2Diagnostics check_t2_constraints(const MultisetDecomposition& d, const TriangleFamily& original);

struct UniqueTriangleResult {
  bool holds = true;
  std::optional<Edge> violating_edge;
  int triangle_count = 0;  // for the violating edge
};

/// Every edge of g lies in exactly one triangle of g.
UniqueTriangleResult unique_triangle_property(const UnionGraph& g);

/// All triangles of the graph, lexicographic.
std::vector<Triangle> graph_triangles(const UnionGraph& g);

std::string bound_report(const MultisetDecomposition& d, bool porcelain = false);

}  // namespace trirain
