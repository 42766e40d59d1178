#pragma once

#include "trirain/family.hpp"

namespace trirain {

/// n/4 disjoint pairs {2i, 2i+1} each joined to every apex in [n/2, n).
/// Requires 4 | n; size n^2/8.
TriangleFamily t_star(int n);

/// `pairs` pairs {2i, 2i+1} joined to the last `apexes` vertices of [0, n).
TriangleFamily pair_family(int n, int pairs, int apexes);

/// Every member of a set-mode family taken twice.
TriangleFamily double_family(const TriangleFamily& f);

/// Six pairwise edge-disjoint triangles on nine vertices whose union graph
/// has no other triangle; doubling it gives twelve triangles with no rainbow
/// triangle.
TriangleFamily fig5_support();

/// double_family(fig5_support()).
TriangleFamily fig5_family();

}  // namespace trirain
