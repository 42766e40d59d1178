#include "trirain/constructions.hpp"

#include <string>

namespace trirain {

TriangleFamily t_star(int n) {
  if (n < 4 || n % 4 != 0) throw FamilyError("t_star needs n divisible by 4, got " + std::to_string(n));
  return pair_family(n, n / 4, n / 2);
}

TriangleFamily pair_family(int n, int pairs, int apexes) {
  if (pairs < 1 || apexes < 1 || 2 * pairs + apexes > n) {
    throw FamilyError("pair_family capacity violated: 2*" + std::to_string(pairs) + " + " +
                      std::to_string(apexes) + " > " + std::to_string(n));
  }
  TriangleFamily f(n, Mode::Set);
  for (int i = 0; i < pairs; ++i) {
    for (int a = n - apexes; a < n; ++a) f.add(Triangle::of(2 * i, 2 * i + 1, a));
  }
  return f;
}

TriangleFamily double_family(const TriangleFamily& f) {
  if (f.mode() != Mode::Set) throw FamilyError("double_family needs a set-mode family");
  TriangleFamily out(f.n(), Mode::Multiset);
  for (const Member& m : f.members()) out.add(m.tri, 2);
  return out;
}

// First support in lexicographic order over 6-subsets of the 84 triangles on
// nine vertices; the regeneration test repeats that search.
TriangleFamily fig5_support() {
  return TriangleFamily(9, Mode::Set,
                        {{{0, 1, 2}}, {{0, 3, 4}}, {{1, 5, 6}}, {{2, 7, 8}}, {{3, 5, 7}}, {{4, 6, 8}}});
}

TriangleFamily fig5_family() { return double_family(fig5_support()); }

}  // namespace trirain
