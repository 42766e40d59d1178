#include "trirain/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <climits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "trirain/checkpoint.hpp"
#include "trirain/rainbow.hpp"
#include "trirain/union_graph.hpp"

namespace trirain {

OwnerIndex::OwnerIndex(int n)
    : n_(n), count_(static_cast<std::size_t>(n) * n, 0), owner_(static_cast<std::size_t>(n) * n, -1), adj_(n, 0) {}

OwnerIndex::OwnerIndex(const TriangleFamily& f) : OwnerIndex(f.n()) {
  for (MemberRef r : f.refs()) add_copy(f.triangle(r));
}

void OwnerIndex::add_copy(Triangle t) {
  const int id = next_id_++;
  for (Edge e : t.edges()) {
    for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      auto& c = count_[u * n_ + v];
      if (c == 0) owner_[u * n_ + v] = id;
      if (c < 255) ++c;
    }
    adj_[e.u] |= 1ULL << e.v;
    adj_[e.v] |= 1ULL << e.u;
  }
}

bool extend_ok(const TriangleFamily& /*f*/, Triangle t, const OwnerIndex& index) {
  for (Edge e : t.edges()) {
    std::uint64_t third = index.neighbors(e.u) & index.neighbors(e.v);
    for (; third; third &= third - 1) {
      int z = lowest_bit(third);
      int cu = index.count(e.u, z);
      int cv = index.count(e.v, z);
      // Two old copies can cover uz and vz unless both edges have the same
      // single owner.
      bool same_sole = cu == 1 && cv == 1 && index.sole_owner(e.u, z) == index.sole_owner(e.v, z);
      if (!same_sole) return false;
    }
  }
  return true;
}

std::string to_string(SearchTarget t) {
  switch (t) {
    case SearchTarget::Maximize:
      return "maximize";
    case SearchTarget::ProveSize:
      return "prove";
    case SearchTarget::EnumerateExtremal:
      return "enumerate";
  }
  return "?";
}

void SearchConfig::validate() const {
  if (n < 3 || n > kMaxSearchVertices) {
    throw std::invalid_argument("search needs 3 <= n <= " + std::to_string(kMaxSearchVertices));
  }
  if (workers < 1) throw std::invalid_argument("workers must be positive");
  if (split_depth < 1) throw std::invalid_argument("split depth must be positive");
  if (prove_k < 0) throw std::invalid_argument("prove target must be nonnegative");
  if (max_witnesses < 1) throw std::invalid_argument("max_witnesses must be positive");
}

namespace {

struct Pool {
  explicit Pool(int n) : n(n), index(static_cast<std::size_t>(n) * n * n, -1) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          index[(a * n + b) * n + c] = static_cast<int>(tris.size());
          tris.push_back({a, b, c});
        }
      }
    }
  }
  int id(Triangle t) const { return index[(t.a * n + t.b) * n + t.c]; }
  int size() const { return static_cast<int>(tris.size()); }

  int n;
  std::vector<Triangle> tris;
  std::vector<int> index;
};

struct Node {
  std::vector<std::uint8_t> mult;
  OwnerIndex owners;
  int size = 0;
  CanonicalLabeling canon;
};

struct WorkItem {
  Node node;
  bool subtree = false;
};

struct ItemStats {
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> by_size;
  int best = -1;
};

class Engine {
 public:
  explicit Engine(const SearchConfig& cfg) : cfg_(cfg), pool_(cfg.n) {}

  SearchResult run() {
    Node root{std::vector<std::uint8_t>(pool_.size(), 0), OwnerIndex(cfg_.n), 0, {}};
    root.canon = canonical_labeling(family_of(root));
    std::vector<WorkItem> items;
    split(root, items);

    std::vector<char> done(items.size(), 0);
    if (cfg_.resume_path) restore(*cfg_.resume_path, items.size(), done);
    found_witness_.resize(items.size());
    stats_.assign(items.size(), {});
    if (cfg_.prune && !proving()) seed_ = greedy_size(root);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= items.size() || limit_hit_.load()) return;
        if (done[i] || (proving() && static_cast<int>(i) > found_item_.load())) continue;
        if (process(items[i], static_cast<int>(i), stats_[i])) {
          std::lock_guard lock(mu_);
          done[i] = 1;
          maybe_checkpoint(items.size(), done, false);
        }
      }
    };
    if (cfg_.workers == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < cfg_.workers; ++w) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }
    {
      std::lock_guard lock(mu_);
      maybe_checkpoint(items.size(), done, true);
    }
    return assemble(done);
  }

 private:
  bool proving() const { return cfg_.target == SearchTarget::ProveSize; }

  TriangleFamily family_of(const Node& node) const {
    TriangleFamily f(cfg_.n, cfg_.mode);
    for (int i = 0; i < pool_.size(); ++i) {
      if (node.mult[i]) f.add(pool_.tris[i], node.mult[i]);
    }
    return f;
  }

  // Copies of each pool triangle that could still be added one at a time
  // without creating a rainbow triangle.
  std::vector<int> capacities(const Node& node, const TriangleFamily& f) const {
    std::vector<int> cap(pool_.size(), 0);
    for (int i = 0; i < pool_.size(); ++i) {
      const Triangle& t = pool_.tris[i];
      if (node.mult[i] >= cfg_.max_multiplicity() || !extend_ok(f, t, node.owners)) continue;
      cap[i] = 1;
      if (node.mult[i] == 0 && cfg_.max_multiplicity() == 2) {
        OwnerIndex once = node.owners;
        once.add_copy(t);
        if (extend_ok(f, t, once)) cap[i] = 2;
      }
    }
    return cap;
  }

  static bool same_orbit(Triangle from, Triangle to, const std::vector<Permutation>& gens) {
    if (from == to) return true;
    std::set<Triangle> seen{from};
    std::vector<Triangle> stack{from};
    while (!stack.empty()) {
      Triangle t = stack.back();
      stack.pop_back();
      for (const Permutation& g : gens) {
        Triangle img = permute(g, t);
        if (img == to) return true;
        if (seen.insert(img).second) stack.push_back(img);
      }
    }
    return false;
  }

  // Accepted children in increasing pool order of the added triangle.
  std::vector<Node> children(const Node& node, const TriangleFamily& f, const std::vector<int>& cap) const {
    std::vector<int> rep(pool_.size());
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int x) {
      while (rep[x] != x) x = rep[x] = rep[rep[x]];
      return x;
    };
    for (const Permutation& g : node.canon.generators) {
      for (int i = 0; i < pool_.size(); ++i) {
        if (!cap[i]) continue;
        int a = find(i);
        int b = find(pool_.id(permute(g, pool_.tris[i])));
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
      }
    }

    std::vector<Node> out;
    for (int i = 0; i < pool_.size(); ++i) {
      if (!cap[i] || find(i) != i) continue;
      const Triangle& t = pool_.tris[i];
      Node child{node.mult, node.owners, node.size + 1, {}};
      ++child.mult[i];
      child.owners.add_copy(t);
      TriangleFamily cf = f;
      cf.add_copy(t);
      child.canon = canonical_labeling(cf);

      Triangle last = cf.members().front().tri;
      Triangle last_img = permute(child.canon.label, last);
      for (const Member& m : cf.members()) {
        Triangle img = permute(child.canon.label, m.tri);
        if (img > last_img) {
          last = m.tri;
          last_img = img;
        }
      }
      if (same_orbit(t, last, child.canon.generators)) out.push_back(std::move(child));
    }
    return out;
  }

  bool stopped(int item) const {
    return limit_hit_.load(std::memory_order_relaxed) ||
           (proving() && found_item_.load(std::memory_order_relaxed) < item);
  }

  bool count_node(ItemStats& st) {
    std::uint64_t c = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (cfg_.node_limit && c > cfg_.node_limit) {
      limit_hit_.store(true);
      return false;
    }
    ++st.nodes;
    return true;
  }

  void record(const Node& node, const TriangleFamily& f, ItemStats& st) {
    int s = node.size;
    if (st.by_size.size() <= static_cast<std::size_t>(s)) st.by_size.resize(s + 1, 0);
    ++st.by_size[s];
    st.best = std::max(st.best, s);
    int seen = best_.load(std::memory_order_relaxed);
    while (s > seen && !best_.compare_exchange_weak(seen, s)) {
    }
    if (proving() || s < best_.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(mu_);
    if (s > collected_best_) {
      collected_best_ = s;
      extremal_.clear();
    }
    if (s == collected_best_ && !extremal_.count(node.canon.code)) {
      extremal_.emplace(node.canon.code, relabel(f, node.canon.label).normalized());
    }
  }

  void mark_found(int item, const TriangleFamily& f) {
    {
      std::lock_guard lock(mu_);
      found_witness_[item] = f;
    }
    int cur = found_item_.load();
    while (item < cur && !found_item_.compare_exchange_weak(cur, item)) {
    }
  }

  // Returns false when the walk was cut short.
  bool dfs(const Node& node, int item, ItemStats& st) {
    if (stopped(item) || !count_node(st)) return false;
    TriangleFamily f = family_of(node);
    record(node, f, st);
    if (proving() && node.size >= cfg_.prove_k) {
      mark_found(item, f);
      return false;
    }
    auto cap = capacities(node, f);
    int bound = node.size + std::accumulate(cap.begin(), cap.end(), 0);
    // Only item-local state here, so node counts do not depend on scheduling.
    int need = proving() ? cfg_.prove_k : std::max(seed_, st.best);
    if (cfg_.prune && bound < need) return true;
    for (const Node& child : children(node, f, cap)) {
      if (!dfs(child, item, st)) return false;
    }
    return true;
  }

  bool process(const WorkItem& w, int item, ItemStats& st) {
    if (w.subtree) {
      dfs(w.node, item, st);
      return !limit_hit_.load() && !(proving() && found_item_.load() < item);
    }
    if (!count_node(st)) return false;
    TriangleFamily f = family_of(w.node);
    record(w.node, f, st);
    if (proving() && w.node.size >= cfg_.prove_k) mark_found(item, f);
    return true;
  }

  // Size of the first leaf reached by always taking the first child. A
  // deterministic lower bound to prune against before items find their own.
  int greedy_size(Node node) {
    for (;;) {
      TriangleFamily f = family_of(node);
      auto kids = children(node, f, capacities(node, f));
      if (kids.empty()) return node.size;
      node = std::move(kids.front());
    }
  }

  // Items that count: finished ones, and in prove mode only those up to the
  // first item holding a witness.
  bool counted(std::size_t i, const std::vector<char>& done) const {
    if (!done[i]) return false;
    return !proving() || static_cast<int>(i) <= found_item_.load();
  }

  std::uint64_t counted_nodes(const std::vector<char>& done) const {
    std::uint64_t total = base_nodes_;
    for (std::size_t i = 0; i < stats_.size(); ++i) {
      if (counted(i, done)) total += stats_[i].nodes;
    }
    return total;
  }

  int counted_best(const std::vector<char>& done) const {
    int best = base_best_;
    for (std::size_t i = 0; i < stats_.size(); ++i) {
      if (counted(i, done)) best = std::max(best, stats_[i].best);
    }
    return best;
  }

  // Preorder walk down to the split depth. Shallow nodes become visit-only
  // items, nodes at the split depth become subtree items.
  void split(const Node& node, std::vector<WorkItem>& items) {
    if (node.size >= cfg_.split_depth) {
      items.push_back({node, true});
      return;
    }
    items.push_back({node, false});
    if (proving() && node.size >= cfg_.prove_k) return;
    TriangleFamily f = family_of(node);
    auto cap = capacities(node, f);
    if (cfg_.prune && proving() && node.size + std::accumulate(cap.begin(), cap.end(), 0) < cfg_.prove_k) return;
    for (const Node& child : children(node, f, cap)) split(child, items);
  }

  Checkpoint snapshot(std::size_t item_count, const std::vector<char>& done) const {
    Checkpoint c;
    c.n = cfg_.n;
    c.mode = cfg_.mode;
    c.target = to_string(cfg_.target);
    c.k = cfg_.prove_k;
    c.split_depth = cfg_.split_depth;
    c.items = static_cast<int>(item_count);
    for (std::size_t i = 0; i < done.size(); ++i) {
      if (done[i]) c.done.push_back(static_cast<int>(i));
    }
    c.nodes = counted_nodes(done);
    c.best = proving() ? counted_best(done) : collected_best_;
    int fi = found_item_.load();
    c.found_item = fi == INT_MAX ? -1 : fi;
    if (proving()) {
      if (fi != INT_MAX && found_witness_[fi]) c.witnesses.push_back(*found_witness_[fi]);
    } else {
      for (const auto& [code, fam] : extremal_) c.witnesses.push_back(fam);
    }
    return c;
  }

  void maybe_checkpoint(std::size_t item_count, const std::vector<char>& done, bool final) {
    if (!cfg_.checkpoint_path) return;
    auto now = std::chrono::steady_clock::now();
    std::chrono::duration<double> since = now - last_checkpoint_;
    if (!final && since.count() < cfg_.checkpoint_interval_seconds) return;
    last_checkpoint_ = now;
    write_checkpoint(*cfg_.checkpoint_path, snapshot(item_count, done));
  }

  void restore(const std::filesystem::path& path, std::size_t item_count, std::vector<char>& done) {
    Checkpoint c = read_checkpoint(path);
    if (c.n != cfg_.n || c.mode != cfg_.mode || c.target != to_string(cfg_.target) || c.k != cfg_.prove_k ||
        c.split_depth != cfg_.split_depth || c.items != static_cast<int>(item_count)) {
      throw std::invalid_argument("checkpoint does not match the search configuration");
    }
    for (int i : c.done) {
      if (i < 0 || i >= c.items) throw std::invalid_argument("checkpoint item out of range");
      done[i] = 1;
    }
    nodes_.store(c.nodes);
    base_nodes_ = c.nodes;
    base_best_ = c.best;
    best_.store(c.best);
    collected_best_ = c.best;
    found_witness_.resize(item_count);
    if (proving()) {
      if (c.found_item >= 0 && !c.witnesses.empty()) {
        found_item_.store(c.found_item);
        found_witness_[c.found_item] = c.witnesses.front();
      }
    } else {
      for (const TriangleFamily& w : c.witnesses) extremal_.emplace(canonical_form(w), w);
    }
  }

  SearchResult assemble(const std::vector<char>& done) {
    SearchResult r;
    // A run cut short by the node limit reports everything it touched.
    bool partial = limit_hit_.load();
    r.nodes_explored = partial ? nodes_.load() : counted_nodes(done);
    for (std::size_t i = 0; i < stats_.size(); ++i) {
      if (!partial && !counted(i, done)) continue;
      const auto& bs = stats_[i].by_size;
      if (r.nodes_by_size.size() < bs.size()) r.nodes_by_size.resize(bs.size(), 0);
      for (std::size_t s = 0; s < bs.size(); ++s) r.nodes_by_size[s] += bs[s];
    }
    while (!r.nodes_by_size.empty() && r.nodes_by_size.back() == 0) r.nodes_by_size.pop_back();
    r.best_size = collected_best_;
    if (proving()) {
      r.best_size = limit_hit_.load() ? best_.load() : counted_best(done);
      int fi = found_item_.load();
      r.found = fi != INT_MAX;
      if (r.found) {
        r.witnesses.push_back(*found_witness_[fi]);
        r.completed = std::all_of(done.begin(), done.begin() + fi + 1, [](char d) { return d != 0; });
      } else {
        r.completed = std::all_of(done.begin(), done.end(), [](char d) { return d != 0; });
      }
    } else {
      r.completed = !limit_hit_.load() && std::all_of(done.begin(), done.end(), [](char d) { return d != 0; });
      bool all = cfg_.target == SearchTarget::EnumerateExtremal;
      for (const auto& [code, fam] : extremal_) {
        if (!all && static_cast<int>(r.witnesses.size()) >= cfg_.max_witnesses) break;
        r.witnesses.push_back(fam);
      }
      if (all) r.extremal_class_count = static_cast<int>(extremal_.size());
    }
    for (const TriangleFamily& w : r.witnesses) {
      if (find_rainbow(w)) throw std::logic_error("search produced a family with a rainbow triangle");
    }
    return r;
  }

  const SearchConfig& cfg_;
  Pool pool_;

  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> limit_hit_{false};
  std::atomic<int> best_{-1};
  std::atomic<int> found_item_{INT_MAX};
  std::vector<ItemStats> stats_;
  std::uint64_t base_nodes_ = 0;
  int base_best_ = -1;
  int seed_ = -1;

  std::mutex mu_;
  int collected_best_ = -1;
  std::map<CanonicalCode, TriangleFamily> extremal_;
  std::vector<std::optional<TriangleFamily>> found_witness_;
  std::chrono::steady_clock::time_point last_checkpoint_ = std::chrono::steady_clock::now();
};

}  // namespace

SearchResult max_family(const SearchConfig& cfg) {
  cfg.validate();
  return Engine(cfg).run();
}

ProveResult prove_size(SearchConfig cfg) {
  cfg.target = SearchTarget::ProveSize;
  SearchResult r = max_family(cfg);
  ProveResult out;
  out.exists = r.found;
  if (r.found) out.witness = r.witnesses.front();
  out.completed = r.completed;
  out.nodes_explored = r.nodes_explored;
  return out;
}

}  // namespace trirain
