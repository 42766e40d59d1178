#include "trirain/canon.hpp"

#include <algorithm>
#include <numeric>

namespace trirain {

namespace {

struct Incidence {
  int u;
  int w;
  int mult;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<int> parent_;
};

class Canonizer {
 public:
  explicit Canonizer(const TriangleFamily& f) : f_(f), n_(f.n()), offset_(f.n() + 1, 0) {
    for (const Member& m : f.members()) {
      for (int x : m.tri.vertices()) ++offset_[x + 1];
    }
    std::partial_sum(offset_.begin(), offset_.end(), offset_.begin());
    inc_.resize(offset_[n_]);
    sig_.resize(offset_[n_]);
    std::vector<int> fill(offset_.begin(), offset_.end() - 1);
    for (const Member& m : f.members()) {
      auto [a, b, c] = m.tri.vertices();
      inc_[fill[a]++] = {b, c, m.multiplicity};
      inc_[fill[b]++] = {a, c, m.multiplicity};
      inc_[fill[c]++] = {a, b, m.multiplicity};
    }
    order_.resize(n_);
  }

  CanonicalLabeling run() {
    search(std::vector<int>(n_, 0), 0, true, -1);
    CanonicalLabeling out;
    out.label = best_lab_;
    out.code.bytes.push_back(static_cast<char>(n_));
    for (std::uint32_t e : best_cert_) {
      for (int s : {24, 16, 8, 0}) out.code.bytes.push_back(static_cast<char>((e >> s) & 0xff));
    }
    out.generators = std::move(gens_);
    out.tree_nodes = nodes_;
    return out;
  }

 private:
  // Equitable-style refinement: a vertex's new color is determined by its old
  // color and the sorted multiset of (multiplicity, colors of the other two
  // vertices) over its triangles. Colors stay dense and ordered.
  int refine(std::vector<int>& color) {
    int cells = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<int> next(n_);
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        for (int k = offset_[v]; k < offset_[v + 1]; ++k) {
          int cu = color[inc_[k].u];
          int cw = color[inc_[k].w];
          if (cu > cw) std::swap(cu, cw);
          sig_[k] = (static_cast<std::uint32_t>(inc_[k].mult) << 16) | (cu << 8) | cw;
        }
        std::sort(sig_.begin() + offset_[v], sig_.begin() + offset_[v + 1]);
      }
      auto less = [&](int x, int y) {
        if (color[x] != color[y]) return color[x] < color[y];
        return std::lexicographical_compare(sig_.begin() + offset_[x], sig_.begin() + offset_[x + 1],
                                            sig_.begin() + offset_[y], sig_.begin() + offset_[y + 1]);
      };
      std::iota(order_.begin(), order_.end(), 0);
      std::sort(order_.begin(), order_.end(), less);
      int c = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && less(order_[i - 1], order_[i])) ++c;
        next[order_[i]] = c;
      }
      color.swap(next);
      if (c + 1 == cells) return cells;
      cells = c + 1;
    }
  }

  std::vector<int> individualize(const std::vector<int>& color, int w) const {
    std::vector<int> out(n_);
    std::vector<char> used(2 * n_, 0);
    for (int u = 0; u < n_; ++u) {
      out[u] = 2 * color[u] + ((color[u] == color[w] && u != w) ? 1 : 0);
      used[out[u]] = 1;
    }
    std::vector<int> rank(2 * n_, 0);
    int r = 0;
    for (int i = 0; i < 2 * n_; ++i) {
      if (used[i]) rank[i] = r++;
    }
    for (int& c : out) c = rank[c];
    return out;
  }

  std::vector<std::uint32_t> certificate(const std::vector<int>& lab) const {
    std::vector<std::uint32_t> cert;
    cert.reserve(f_.members().size());
    for (const Member& m : f_.members()) {
      Triangle t = permute(lab, m.tri);
      cert.push_back((static_cast<std::uint32_t>(t.a) << 24) | (t.b << 16) | (t.c << 8) | m.multiplicity);
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  // Automorphism g = to^{-1} o from, so that g maps the first leaf's
  // labeling onto the second.
  Permutation automorphism(const std::vector<int>& from, const std::vector<int>& to) const {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[to[v]] = v;
    Permutation g(n_);
    for (int u = 0; u < n_; ++u) g[u] = inv[from[u]];
    return g;
  }

  void record(Permutation g) {
    for (int v = 0; v < n_; ++v) {
      if (g[v] != v) {
        gens_.push_back(std::move(g));
        return;
      }
    }
  }

  int leaf(const std::vector<int>& lab, int diverged) {
    auto cert = certificate(lab);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = std::move(cert);
      first_lab_ = best_lab_ = lab;
      return -1;
    }
    if (cert == first_cert_) {
      record(automorphism(first_lab_, lab));
      return diverged;
    }
    if (cert == best_cert_) {
      record(automorphism(best_lab_, lab));
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = lab;
    }
    return -1;
  }

  // Returns the depth of the first-path node to unwind to, or -1.
  int search(std::vector<int> color, int depth, bool first_path, int diverged) {
    ++nodes_;
    if (refine(color) == n_) return leaf(color, diverged);

    std::vector<int> count(n_, 0);
    for (int c : color) ++count[c];
    int target = 0;
    while (count[target] < 2) ++target;
    std::vector<int> cell;
    for (int v = 0; v < n_; ++v) {
      if (color[v] == target) cell.push_back(v);
    }

    std::vector<int> explored;
    std::size_t gens_seen = 0;
    std::vector<int> orbit;
    for (int w : cell) {
      if (!explored.empty()) {
        if (gens_seen != gens_.size() || orbit.empty()) {
          orbit = stabilizer_orbits();
          gens_seen = gens_.size();
        }
        bool seen = std::any_of(explored.begin(), explored.end(),
                                [&](int x) { return orbit[x] == orbit[w]; });
        if (seen) continue;
      }
      bool child_first = first_path && explored.empty();
      int child_diverged = child_first ? -1 : (first_path ? depth : diverged);
      explored.push_back(w);
      path_.push_back(w);
      int r = search(individualize(color, w), depth + 1, child_first, child_diverged);
      path_.pop_back();
      if (r >= 0 && r < depth) return r;
    }
    return -1;
  }

  // Orbits of the subgroup generated by the automorphisms fixing the current
  // individualization path pointwise.
  std::vector<int> stabilizer_orbits() {
    UnionFind uf(n_);
    for (const Permutation& g : gens_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](int v) { return g[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, g[v]);
    }
    std::vector<int> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = uf.find(v);
    return out;
  }

  const TriangleFamily& f_;
  int n_;
  std::vector<int> offset_;
  std::vector<Incidence> inc_;
  std::vector<std::uint32_t> sig_;
  std::vector<int> order_;

  bool have_first_ = false;
  std::vector<std::uint32_t> first_cert_, best_cert_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<Permutation> gens_;
  std::vector<int> path_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char ch : bytes) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

Triangle permute(std::span<const int> perm, Triangle t) { return Triangle::of(perm[t.a], perm[t.b], perm[t.c]); }

TriangleFamily relabel(const TriangleFamily& f, std::span<const int> perm) {
  TriangleFamily out(f.n(), f.mode());
  for (const Member& m : f.members()) out.add(permute(perm, m.tri), m.multiplicity);
  return out;
}

CanonicalLabeling canonical_labeling(const TriangleFamily& f) { return Canonizer(f).run(); }

CanonicalCode canonical_form(const TriangleFamily& f) { return canonical_labeling(f).code; }

TriangleFamily canonical_family(const TriangleFamily& f) {
  return relabel(f, canonical_labeling(f).label).normalized();
}

bool are_isomorphic(const TriangleFamily& f1, const TriangleFamily& f2) {
  if (f1.n() != f2.n() || f1.size() != f2.size() || f1.members().size() != f2.members().size()) {
    return false;
  }
  return canonical_form(f1) == canonical_form(f2);
}

std::vector<int> vertex_orbits(int n, std::span<const Permutation> gens) {
  UnionFind uf(n);
  for (const Permutation& g : gens) {
    for (int v = 0; v < n; ++v) uf.unite(v, g[v]);
  }
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = uf.find(v);
  return out;
}

}  // namespace trirain
