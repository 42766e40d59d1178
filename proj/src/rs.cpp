#include "trirain/rs.hpp"

#include <algorithm>
#include <sstream>

namespace trirain {

namespace {

TriangleFamily doubled_members(const TriangleFamily& f) {
  TriangleFamily out(f.n(), Mode::Set);
  for (const Member& m : f.members()) {
    if (m.multiplicity == 2) out.add(m.tri);
  }
  return out;
}

}  // namespace

MultisetDecomposition decompose(const TriangleFamily& f) {
  TriangleFamily t2 = doubled_members(f);
  UnionGraph g2(t2);
  return MultisetDecomposition{f.n(), f.size(), f.support(), std::move(t2), std::move(g2)};
}

std::vector<Triangle> graph_triangles(const UnionGraph& g) {
  std::vector<Triangle> out;
  for (int x = 0; x < g.n(); ++x) {
    for (std::uint64_t ys = g.neighbors(x) & bits_above(x); ys; ys &= ys - 1) {
      int y = lowest_bit(ys);
      for (std::uint64_t zs = g.neighbors(x) & g.neighbors(y) & bits_above(y); zs; zs &= zs - 1) {
        out.push_back(Triangle{x, y, lowest_bit(zs)});
      }
    }
  }
  return out;
}

std::string T2Diagnostics::describe() const {
  std::ostringstream os;
  if (shared_edge) os << "T2 members share edge " << shared_edge->u << ' ' << shared_edge->v << "; ";
  if (extra_triangle) {
    os << "G2 has extra triangle " << extra_triangle->a << ' ' << extra_triangle->b << ' ' << extra_triangle->c
       << "; ";
  }
  std::string s = os.str();
  return s.empty() ? "ok" : s.substr(0, s.size() - 2);
}

T2Diagnostics check_t2_constraints(const MultisetDecomposition& d, const TriangleFamily& /*original*/) {
  T2Diagnostics out;
  for (const auto& [e, owners] : d.g2.owner_map()) {
    if (owners.size() > 1) {
      out.edge_disjoint = false;
      out.shared_edge = e;
      break;
    }
  }
  for (Triangle t : graph_triangles(d.g2)) {
    if (d.t2.index_of(t) < 0) {
      out.no_extra_triangles = false;
      out.extra_triangle = t;
      break;
    }
  }
  return out;
}

UniqueTriangleResult unique_triangle_property(const UnionGraph& g) {
  UniqueTriangleResult out;
  for (Edge e : g.edges()) {
    int count = popcount(g.neighbors(e.u) & g.neighbors(e.v));
    if (count != 1) {
      out.holds = false;
      out.violating_edge = e;
      out.triangle_count = count;
      return out;
    }
  }
  return out;
}

std::string bound_report(const MultisetDecomposition& d, bool porcelain) {
  const int n = d.n;
  const int s1 = d.t1.size();
  const int s2 = d.t2.size();
  const bool t1_ok = 8 * static_cast<long long>(s1) <= static_cast<long long>(n) * n;
  const bool edges_ok = d.g2.edge_count() == 3 * s2;
  auto ut = unique_triangle_property(d.g2);
  std::ostringstream os;
  if (porcelain) {
    os << "n " << n << '\n'
       << "size " << d.original_size << '\n'
       << "t1 " << s1 << '\n'
       << "t1_bound " << n * n << "/8\n"
       << "t1_within_bound " << (t1_ok ? "true" : "false") << '\n'
       << "t2 " << s2 << '\n'
       << "g2_edges " << d.g2.edge_count() << '\n'
       << "g2_edges_is_3t2 " << (edges_ok ? "true" : "false") << '\n'
       << "g2_unique_triangle " << (ut.holds ? "true" : "false") << '\n'
       << "total " << s1 + s2 << '\n'
       << "asymptotic_term not-checkable\n";
    return os.str();
  }
  os << "|T1| = " << s1 << " <= n^2/8 = " << n * n << "/8  [" << (t1_ok ? "ok" : "FAIL") << "]\n"
     << "|T2| = " << s2 << ", G2 edges = " << d.g2.edge_count() << " = 3|T2|  [" << (edges_ok ? "ok" : "FAIL")
     << "]\n"
     << "G2 unique-triangle property: " << (ut.holds ? "holds" : "fails");
  if (ut.violating_edge) {
    os << " (edge " << ut.violating_edge->u << ' ' << ut.violating_edge->v << " in " << ut.triangle_count
       << " triangles)";
  }
  os << '\n'
     << "|T| = |T1| + |T2| = " << s1 << " + " << s2 << " = " << s1 + s2 << '\n'
     << "o(n^2) term for |T2|: informational only, not checkable at fixed n\n";
  return os.str();
}

}  // namespace trirain
