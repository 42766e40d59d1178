#include <algorithm>

#include "trirain/certifier.hpp"

namespace trirain {

namespace {

class MisSolver {
 public:
  explicit MisSolver(const UnionGraph& g) : g_(g) {}

  int solve(std::uint64_t cand) {
    best_ = 0;
    expand(cand, 0);
    return best_;
  }

 private:
  // Greedy clique cover: an independent set meets each clique at most once.
  int clique_cover(std::uint64_t cand) const {
    int cliques = 0;
    while (cand) {
      int u = lowest_bit(cand);
      std::uint64_t clique = 1ULL << u;
      std::uint64_t pool = cand & g_.neighbors(u);
      while (pool) {
        int w = lowest_bit(pool);
        clique |= 1ULL << w;
        pool &= g_.neighbors(w);
      }
      cand &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  void expand(std::uint64_t cand, int size) {
    // Vertices with no neighbor among the candidates always join.
    for (std::uint64_t s = cand; s; s &= s - 1) {
      int v = lowest_bit(s);
      if (!(g_.neighbors(v) & cand)) {
        cand &= ~(1ULL << v);
        ++size;
      }
    }
    if (!cand) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover(cand) <= best_) return;

    int pivot = -1;
    int pivot_degree = -1;
    for (std::uint64_t s = cand; s; s &= s - 1) {
      int v = lowest_bit(s);
      int d = popcount(g_.neighbors(v) & cand);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    std::uint64_t bit = 1ULL << pivot;
    expand(cand & ~bit & ~g_.neighbors(pivot), size + 1);
    expand(cand & ~bit, size);
  }

  const UnionGraph& g_;
  int best_ = 0;
};

std::uint64_t all_vertices(int n) { return n >= 64 ? ~0ULL : (1ULL << n) - 1; }

}  // namespace

int independence_number(const UnionGraph& g, std::uint64_t within) { return MisSolver(g).solve(within); }

std::uint64_t max_independent_set(const UnionGraph& g, int limit) {
  if (g.n() > limit) {
    throw LimitExceeded("exact independent set limited to " + std::to_string(limit) + " vertices, got " +
                        std::to_string(g.n()));
  }
  MisSolver solver(g);
  std::uint64_t cand = all_vertices(g.n());
  int alpha = solver.solve(cand);

  // Decide vertices in increasing order, keeping the smallest one that still
  // extends to a maximum set.
  std::uint64_t chosen = 0;
  int need = alpha;
  for (int v = 0; v < g.n() && need > 0; ++v) {
    std::uint64_t bit = 1ULL << v;
    if (!(cand & bit)) continue;
    cand &= ~bit;
    std::uint64_t rest = cand & ~g.neighbors(v);
    if (1 + solver.solve(rest) >= need) {
      chosen |= bit;
      cand = rest;
      --need;
    }
  }
  return chosen;
}

std::vector<int> mask_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(lowest_bit(mask));
  return out;
}

}  // namespace trirain
