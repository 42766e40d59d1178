#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trirain/canon.hpp"
#include "trirain/family.hpp"

namespace trirain {

inline constexpr int kMaxSearchVertices = 16;

/// Edge ownership counts for incremental rainbow checks. Each added copy gets
/// a fresh id; an edge records how many copies own it and, while it has a
/// single owner, which one.
class OwnerIndex {
 public:
  explicit OwnerIndex(int n);
  explicit OwnerIndex(const TriangleFamily& f);

  void add_copy(Triangle t);

  int n() const { return n_; }
  int count(int u, int v) const { return count_[u * n_ + v]; }
  int sole_owner(int u, int v) const { return owner_[u * n_ + v]; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }

 private:
  int n_;
  int next_id_ = 0;
  std::vector<std::uint8_t> count_;
  std::vector<int> owner_;
  std::vector<std::uint64_t> adj_;
};

/// True iff f plus one more copy of t has no rainbow triangle, given that f
/// has none. A new rainbow triangle must give one of t's edges to the new
/// copy, so only triples through an edge of t are examined.
bool extend_ok(const TriangleFamily& f, Triangle t, const OwnerIndex& index);

enum class SearchTarget { Maximize, ProveSize, EnumerateExtremal };

std::string to_string(SearchTarget t);

struct SearchConfig {
  int n = 0;
  Mode mode = Mode::Set;
  SearchTarget target = SearchTarget::Maximize;
  int prove_k = 0;
  std::uint64_t node_limit = 0;  // 0: unlimited
  int workers = 1;
  /// Family size at which the tree is cut into independent work items.
  int split_depth = 3;
  /// Witnesses reported in maximize mode (lowest canonical codes first).
  int max_witnesses = 4;
  std::optional<std::filesystem::path> checkpoint_path;
  std::optional<std::filesystem::path> resume_path;
  double checkpoint_interval_seconds = 10.0;
  /// Bound-based pruning; off walks every isomorphism class exactly once.
  bool prune = true;

  int max_multiplicity() const { return mode == Mode::Set ? 1 : 2; }
  /// Throws std::invalid_argument.
  void validate() const;
};

struct SearchResult {
  int best_size = 0;
  /// Canonical families, pairwise non-isomorphic, sorted by canonical code.
  std::vector<TriangleFamily> witnesses;
  std::optional<int> extremal_class_count;
  std::uint64_t nodes_explored = 0;
  /// Nodes visited per family size; with pruning off this is the number of
  /// isomorphism classes of each size.
  std::vector<std::uint64_t> nodes_by_size;
  bool completed = false;
  /// Prove-size only: a family of size >= k exists.
  bool found = false;
};

/// Canonical augmentation: every rainbow-free family is generated once per
/// isomorphism class, extended by one triangle copy at a time. A child is
/// accepted iff the added triangle lies in the automorphism orbit of the
/// child's canonically last member.
SearchResult max_family(const SearchConfig& cfg);

struct ProveResult {
  bool exists = false;
  std::optional<TriangleFamily> witness;
  bool completed = false;
  std::uint64_t nodes_explored = 0;
};

ProveResult prove_size(SearchConfig cfg);

}  // namespace trirain
