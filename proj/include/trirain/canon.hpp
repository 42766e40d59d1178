#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trirain/family.hpp"

namespace trirain {

/// Byte string identifying a family up to vertex relabeling. Multiplicities
/// are part of the code; the family mode is not.
struct CanonicalCode {
  std::string bytes;

  std::string hex() const;
  auto operator<=>(const CanonicalCode&) const = default;
};

/// A vertex permutation: perm[v] is the image of v.
using Permutation = std::vector<int>;

struct CanonicalLabeling {
  /// label[v] is the canonical index of vertex v.
  Permutation label;
  CanonicalCode code;
  /// Generators of the automorphism group of the family.
  std::vector<Permutation> generators;
  std::uint64_t tree_nodes = 0;
};

/// Individualization-refinement search for the lexicographically least
/// relabeled member list. Automorphisms found at equivalent leaves prune
/// sibling subtrees and generate the full automorphism group.
CanonicalLabeling canonical_labeling(const TriangleFamily& f);

CanonicalCode canonical_form(const TriangleFamily& f);

/// The family relabeled by its canonical labeling (normalized member order).
TriangleFamily canonical_family(const TriangleFamily& f);

/// Different n is never isomorphic.
bool are_isomorphic(const TriangleFamily& f1, const TriangleFamily& f2);

TriangleFamily relabel(const TriangleFamily& f, std::span<const int> perm);

Triangle permute(std::span<const int> perm, Triangle t);

/// Orbit representative (smallest element) for every vertex under `gens`.
std::vector<int> vertex_orbits(int n, std::span<const Permutation> gens);

}  // namespace trirain
