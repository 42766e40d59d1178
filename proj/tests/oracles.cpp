#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

using trirain::Edge;
using trirain::MemberRef;

std::vector<MemberRef> copies(const TriangleFamily& f) {
  std::vector<MemberRef> out;
  for (int i = 0; i < static_cast<int>(f.members().size()); ++i) {
    for (int c = 0; c < f.members()[i].multiplicity; ++c) out.push_back({i, c});
  }
  return out;
}

std::optional<trirain::RainbowCertificate> rainbow(const TriangleFamily& f) {
  auto cs = copies(f);
  auto has = [&](MemberRef r, int u, int v) {
    const Triangle& t = f.members()[r.index].tri;
    return t.contains(u) && t.contains(v);
  };
  int n = f.n();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        for (MemberRef p : cs) {
          if (!has(p, x, y)) continue;
          for (MemberRef q : cs) {
            if (q == p || !has(q, x, z)) continue;
            for (MemberRef r : cs) {
              if (r == p || r == q || !has(r, y, z)) continue;
              trirain::RainbowCertificate c;
              c.vertices = {x, y, z};
              c.assignment = {{{{x, y}, p}, {{x, z}, q}, {{y, z}, r}}};
              return c;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<TriangleFamily> plus(const TriangleFamily& f, Triangle t) {
  std::vector<trirain::Member> ms = f.members();
  bool found = false;
  for (auto& m : ms) {
    if (m.tri == t) {
      ++m.multiplicity;
      found = true;
    }
  }
  if (!found) ms.push_back({t, 1});
  int cap = f.mode() == Mode::Set ? 1 : 2;
  for (auto& m : ms) {
    if (m.multiplicity > cap) return std::nullopt;
  }
  return TriangleFamily(f.n(), f.mode(), ms);
}

bool extend_ok(const TriangleFamily& f, Triangle t) {
  auto g = plus(f, t);
  return g && rainbow_free(*g);
}

std::vector<std::pair<Triangle, int>> image(const TriangleFamily& f, const std::vector<int>& perm) {
  std::vector<std::pair<Triangle, int>> out;
  for (const auto& m : f.members()) {
    int v[3] = {perm[m.tri.a], perm[m.tri.b], perm[m.tri.c]};
    std::sort(v, v + 3);
    out.push_back({Triangle{v[0], v[1], v[2]}, m.multiplicity});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Triangle, int>> canon(const TriangleFamily& f) {
  std::vector<int> perm(f.n());
  std::iota(perm.begin(), perm.end(), 0);
  auto best = image(f, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, image(f, perm));
  return best;
}

bool isomorphic(const TriangleFamily& f1, const TriangleFamily& f2) {
  if (f1.n() != f2.n()) return false;
  std::vector<int> id(f1.n());
  std::iota(id.begin(), id.end(), 0);
  auto target = image(f2, id);
  std::vector<int> perm = id;
  do {
    if (image(f1, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int automorphism_count(const TriangleFamily& f) {
  std::vector<int> perm(f.n());
  std::iota(perm.begin(), perm.end(), 0);
  auto self = image(f, perm);
  int count = 0;
  do {
    if (image(f, perm) == self) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<std::uint64_t> adjacency(const TriangleFamily& f) {
  std::vector<std::uint64_t> adj(f.n(), 0);
  for (const auto& m : f.members()) {
    for (Edge e : m.tri.edges()) {
      adj[e.u] |= 1ULL << e.v;
      adj[e.v] |= 1ULL << e.u;
    }
  }
  return adj;
}

std::uint64_t max_independent(const std::vector<std::uint64_t>& adj) {
  int n = static_cast<int>(adj.size());
  std::uint64_t best = 0;
  std::vector<int> best_list;
  int best_size = -1;
  for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
    bool ok = true;
    std::vector<int> list;
    for (int v = 0; v < n && ok; ++v) {
      if (!((s >> v) & 1)) continue;
      if (adj[v] & s) ok = false;
      list.push_back(v);
    }
    if (!ok) continue;
    int size = static_cast<int>(list.size());
    if (size > best_size || (size == best_size && list < best_list)) {
      best = s;
      best_size = size;
      best_list = list;
    }
  }
  return best;
}

bool unique_triangle(const std::vector<std::uint64_t>& adj) {
  int n = static_cast<int>(adj.size());
  auto e = [&](int u, int v) { return (adj[u] >> v) & 1; };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!e(u, v)) continue;
      int count = 0;
      for (int w = 0; w < n; ++w) {
        if (w != u && w != v && e(u, w) && e(v, w)) ++count;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

std::vector<Triangle> all_triangles(int n) {
  std::vector<Triangle> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

int max_size(int n, Mode mode) {
  int best = 0;
  each_rainbow_free(n, mode, 1 << 20, [&](const TriangleFamily& f) { best = std::max(best, f.size()); });
  return best;
}

std::vector<int> class_census(int n, Mode mode) {
  std::map<int, std::set<std::vector<std::pair<Triangle, int>>>> classes;
  each_rainbow_free(n, mode, 1 << 20, [&](const TriangleFamily& f) { classes[f.size()].insert(canon(f)); });
  std::vector<int> out;
  for (const auto& [size, set] : classes) {
    out.resize(size + 1, 0);
    out[size] = static_cast<int>(set.size());
  }
  return out;
}

namespace {

bool edge_disjoint(Triangle s, Triangle t) {
  int common = (s.contains(t.a) ? 1 : 0) + (s.contains(t.b) ? 1 : 0) + (s.contains(t.c) ? 1 : 0);
  return common <= 1;
}

bool first_support_rec(const std::vector<Triangle>& pool, std::size_t start, std::vector<Triangle>& chosen) {
  if (chosen.size() == 6) {
    TriangleFamily f(9, Mode::Multiset);
    for (Triangle t : chosen) f.add(t, 2);
    return rainbow_free(f);
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    bool ok = std::all_of(chosen.begin(), chosen.end(), [&](Triangle s) { return edge_disjoint(s, pool[i]); });
    if (!ok) continue;
    chosen.push_back(pool[i]);
    if (first_support_rec(pool, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

TriangleFamily first_doubling_support() {
  auto pool = all_triangles(9);
  std::vector<Triangle> chosen;
  first_support_rec(pool, 0, chosen);
  TriangleFamily f(9, Mode::Set);
  for (Triangle t : chosen) f.add(t);
  return f;
}

TriangleFamily random_family(std::mt19937_64& rng, int n, Mode mode, int max_members) {
  auto pool = all_triangles(n);
  std::shuffle(pool.begin(), pool.end(), rng);
  int count = std::uniform_int_distribution<int>(0, std::min<int>(max_members, pool.size()))(rng);
  TriangleFamily f(n, mode);
  for (int i = 0; i < count; ++i) {
    int mult = (mode == Mode::Multiset && rng() % 3 == 0) ? 2 : 1;
    f.add(pool[i], mult);
  }
  return f;
}

}  // namespace oracle
