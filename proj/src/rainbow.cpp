#include "trirain/rainbow.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "trirain/union_graph.hpp"

namespace trirain {

namespace {

// Hall's condition on three owner lists: every union of k lists must hold at
// least k distinct copies.
bool hall_ok(const std::vector<MemberRef>& x, const std::vector<MemberRef>& y,
             const std::vector<MemberRef>& z) {
  auto distinct = [](std::initializer_list<const std::vector<MemberRef>*> lists) {
    std::set<MemberRef> s;
    for (const auto* l : lists) s.insert(l->begin(), l->end());
    return s.size();
  };
  if (x.empty() || y.empty() || z.empty()) return false;
  return distinct({&x, &y}) >= 2 && distinct({&x, &z}) >= 2 && distinct({&y, &z}) >= 2 &&
         distinct({&x, &y, &z}) >= 3;
}

}  // namespace

std::vector<MemberRef> edge_owners(const TriangleFamily& f, Edge e) {
  std::vector<MemberRef> out;
  for (MemberRef r : f.refs()) {
    if (f.triangle(r).contains(e)) out.push_back(r);
  }
  return out;
}

std::optional<RainbowCertificate> find_rainbow(const TriangleFamily& f) {
  if (f.size() < 3) return std::nullopt;
  UnionGraph g(f);
  for (int x = 0; x < f.n(); ++x) {
    for (std::uint64_t ys = g.neighbors(x) & bits_above(x); ys; ys &= ys - 1) {
      int y = lowest_bit(ys);
      for (std::uint64_t zs = g.neighbors(x) & g.neighbors(y) & bits_above(y); zs; zs &= zs - 1) {
        int z = lowest_bit(zs);
        Edge exy{x, y}, exz{x, z}, eyz{y, z};
        const auto& oxy = g.owners(exy);
        const auto& oxz = g.owners(exz);
        const auto& oyz = g.owners(eyz);
        if (!hall_ok(oxy, oxz, oyz)) continue;
        for (MemberRef a : oxy) {
          for (MemberRef b : oxz) {
            if (b == a) continue;
            for (MemberRef c : oyz) {
              if (c == a || c == b) continue;
              return RainbowCertificate{{x, y, z}, {{{exy, a}, {exz, b}, {eyz, c}}}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_certificate(const TriangleFamily& f, const RainbowCertificate& c) {
  auto [x, y, z] = c.vertices;
  if (!(0 <= x && x < y && y < z && z < f.n())) return false;
  std::array<Edge, 3> want{Edge{x, y}, Edge{x, z}, Edge{y, z}};
  std::set<MemberRef> used;
  for (int i = 0; i < 3; ++i) {
    const EdgeAssignment& a = c.assignment[i];
    if (a.edge != want[i]) return false;
    if (a.owner.index < 0 || a.owner.index >= static_cast<int>(f.members().size())) return false;
    const Member& m = f.members()[a.owner.index];
    if (a.owner.copy < 0 || a.owner.copy >= m.multiplicity) return false;
    if (!m.tri.contains(a.edge)) return false;
    used.insert(a.owner);
  }
  return used.size() == 3;
}

int shared_edge_count(const TriangleFamily& f, MemberRef m) {
  const Triangle& t = f.triangle(m);
  int shared = 0;
  for (Edge e : t.edges()) {
    auto owners = edge_owners(f, e);
    bool other = std::any_of(owners.begin(), owners.end(), [&](MemberRef r) { return r != m; });
    if (other) ++shared;
  }
  return shared;
}

std::string format_certificate(const RainbowCertificate& c) {
  std::ostringstream os;
  os << "rainbow " << c.vertices[0] << ' ' << c.vertices[1] << ' ' << c.vertices[2] << '\n';
  for (const EdgeAssignment& a : c.assignment) {
    os << "edge " << a.edge.u << ' ' << a.edge.v << " owner " << a.owner.index << " copy " << a.owner.copy
       << '\n';
  }
  return os.str();
}

}  // namespace trirain
