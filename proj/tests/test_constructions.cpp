#include <doctest.h>

#include "oracles.hpp"
#include "trirain/constructions.hpp"
#include "trirain/rainbow.hpp"
#include "trirain/union_graph.hpp"

using namespace trirain;

TEST_SUITE("constructions") {
  TEST_CASE("t_star sizes") {
    auto t4 = t_star(4);
    CHECK(t4.members() == std::vector<Member>{{Triangle{0, 1, 2}, 1}, {Triangle{0, 1, 3}, 1}});
    CHECK(t_star(8).size() == 8);
    auto t12 = t_star(12);
    CHECK(t12.size() == 18);
    CHECK_FALSE(find_rainbow(t12));
    for (int n = 4; n <= 40; n += 4) CHECK(8 * t_star(n).size() == n * n);
  }

  TEST_CASE("t_star rejects other n") {
    for (int n : {-4, 0, 1, 2, 3, 5, 6, 7, 9, 10, 14}) CHECK_THROWS_AS(t_star(n), FamilyError);
  }

  TEST_CASE("pair families") {
    auto book = pair_family(5, 1, 3);
    CHECK(book.size() == 3);
    CHECK_FALSE(find_rainbow(book));
    auto p7 = pair_family(7, 2, 3);
    CHECK(p7.size() == 6);
    CHECK_FALSE(find_rainbow(p7));
    CHECK_THROWS_AS(pair_family(5, 2, 2), FamilyError);
    CHECK_THROWS_AS(pair_family(5, 0, 2), FamilyError);
    CHECK_THROWS_AS(pair_family(5, 1, 0), FamilyError);
  }

  TEST_CASE("pair family sweep") {
    for (int p = 1; p <= 3; ++p) {
      for (int a = 1; a <= 5; ++a) {
        for (int n = 2 * p + a; n <= 2 * p + a + 2; ++n) {
          CAPTURE(n);
          CAPTURE(p);
          CAPTURE(a);
          auto f = pair_family(n, p, a);
          CHECK(f.size() == p * a);
          CHECK(oracle::rainbow_free(f));
          CHECK_FALSE(find_rainbow(f));
          for (MemberRef r : f.refs()) CHECK(shared_edge_count(f, r) == (a > 1 ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("doubling") {
    TriangleFamily one(3, Mode::Set, {{Triangle{0, 1, 2}, 1}});
    auto d = double_family(one);
    CHECK(d.mode() == Mode::Multiset);
    CHECK(d.members() == std::vector<Member>{{Triangle{0, 1, 2}, 2}});
    CHECK(double_family(fig5_support()).size() == 12);
    CHECK(double_family(TriangleFamily(4, Mode::Set)).empty());
    CHECK_THROWS_AS(double_family(d), FamilyError);
  }

  TEST_CASE("fig5 support") {
    auto s = fig5_support();
    CHECK(s.n() == 9);
    CHECK(s.size() == 6);
    auto g = union_graph(s);
    CHECK(g.edge_count() == 18);
    CHECK(oracle::unique_triangle(oracle::adjacency(s)));
    CHECK_FALSE(find_rainbow(fig5_family()));
    CHECK(oracle::rainbow_free(fig5_family()));
    CHECK(fig5_family().size() == 12);
    CHECK(12 * 8 > 81);
  }

  TEST_CASE("fig5 support is the first one found by the regeneration search") {
    CHECK(oracle::first_doubling_support() == fig5_support());
  }
}
