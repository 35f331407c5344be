#include "doctest.h"

#include "support/fixtures.hpp"

#include <random>

using namespace momac;

TEST_SUITE("poset") {
  TEST_CASE("two parallel segments validate") {
    SimplicialPoset p = fixtures::two_segments();
    CHECK(p.size() == 5);
    CHECK(p.vertex_count() == 2);
    CHECK(p.top_rank() == 2);
    CHECK(p.element(0).id == "@");
    CHECK(p.element(p.index_of("s")).vertices == (vertex_bit(1) | vertex_bit(2)));
    CHECK(p.element(p.index_of("t")).rank == 2);
    CHECK_FALSE(is_simplicial_complex(p));
    CHECK(p.is_pure());
  }

  TEST_CASE("order and interval queries") {
    SimplicialPoset p = fixtures::two_segments();
    const int s = p.index_of("s"), t = p.index_of("t");
    CHECK(p.leq(0, s));
    CHECK(p.leq(1, s));
    CHECK_FALSE(p.leq(s, t));
    CHECK(p.join_set(1, 2) == std::vector<int>{s, t});
    CHECK(p.join_set(1, s) == std::vector<int>{s});
    CHECK(p.join_set(s, t).empty());
    CHECK(p.meet_set(s, t) == std::vector<int>{1, 2});
    CHECK(p.meet_set(1, 2) == std::vector<int>{0});
    CHECK(p.element_below(s, vertex_bit(1) | vertex_bit(2)) == s);
    CHECK(p.element_below(s, vertex_bit(2)) == 2);
    CHECK(p.element_below(s, 0) == 0);
    CHECK(p.element_below(1, vertex_bit(2)) == -1);
  }

  TEST_CASE("meets exist when joins do") {
    SimplicialPoset p = fixtures::parallel_triangles();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const int a = static_cast<int>(rng() % p.size());
      const int b = static_cast<int>(rng() % p.size());
      const auto joins = p.join_set(a, b);
      for (int e : joins)
        CHECK(p.element(e).vertices == (p.element(a).vertices | p.element(b).vertices));
      if (!joins.empty()) {
        const int meet = p.meet(a, b);
        CHECK(p.element(meet).vertices == (p.element(a).vertices & p.element(b).vertices));
        CHECK(p.leq(meet, a));
        CHECK(p.leq(meet, b));
      }
    }
  }

  TEST_CASE("validation diagnostics") {
    auto build = [](RawPoset raw) { return validate(raw); };

    RawPoset duplicate{"x", 2, {{"s", {"1", "2"}}, {"s", {"1", "2"}}}};
    CHECK_THROWS_WITH_AS(build(duplicate), doctest::Contains("declared twice"), error);

    RawPoset reserved{"x", 1, {{"@", {"1"}}}};
    CHECK_THROWS_AS(build(reserved), error);

    RawPoset unknown{"x", 2, {{"s", {"1", "oops"}}}};
    CHECK_THROWS_WITH_AS(build(unknown), doctest::Contains("undeclared facet"), error);

    RawPoset repeated_facet{"x", 2, {{"s", {"1", "1"}}}};
    CHECK_THROWS_WITH_AS(build(repeated_facet), doctest::Contains("twice"), error);

    RawPoset no_facets{"x", 2, {{"s", {}}}};
    CHECK_THROWS_AS(build(no_facets), error);

    RawPoset mixed{"x", 2, {{"e", {"1", "2"}}, {"s", {"e", "1"}}}};
    CHECK_THROWS_WITH_AS(build(mixed), doctest::Contains("different ranks"), error);

    // Two edges on the same vertex pair cannot support a common
    // higher face: the vertex count cannot match the rank.
    RawPoset pinched{"x", 2, {{"e", {"1", "2"}}, {"f", {"1", "2"}}, {"T", {"e", "f"}}}};
    CHECK_THROWS_AS(build(pinched), error);

    RawPoset out_of_order{"x", 3, {{"e", {"1", "2"}}, {"f", {"1", "3"}}, {"g", {"2", "3"}},
                                   {"T", {"e", "f", "g"}}, {"late", {"1", "2"}}}};
    CHECK_THROWS_WITH_AS(build(out_of_order), doctest::Contains("higher rank"), error);

    RawPoset wide{"x", 65, {}};
    CHECK_THROWS_AS(build(wide), error);
  }

  TEST_CASE("a missing gluing face breaks the boolean interval") {
    // A triangle declared over only two of its edges has the right
    // vertex count but a seven-element lower interval.
    RawPoset raw{"x", 3, {{"e12", {"1", "2"}}, {"e13", {"1", "3"}}, {"T", {"e12", "e13"}}}};
    CHECK_THROWS_WITH_AS(validate(raw), doctest::Contains("interval"), error);
  }

  TEST_CASE("downsets have two-to-the-rank elements") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      SimplicialPoset p = fixtures::random_poset(rng);
      for (int s = 0; s < p.size(); ++s) {
        int count = 0;
        for (int t = 0; t < p.size(); ++t)
          if (p.leq(t, s)) ++count;
        CHECK(count == (1 << p.element(s).rank));
      }
    }
  }

  TEST_CASE("maximal faces, purity, minimal maximal rank") {
    SimplicialPoset p = fixtures::two_triangles_plus_point();
    auto maximal = p.maximal_elements();
    REQUIRE(maximal.size() == 3);
    CHECK(p.element(maximal[0]).id == "4");
    CHECK_FALSE(p.is_pure());
    CHECK(p.min_max_rank() == 1);
    CHECK(p.top_rank() == 3);

    SimplicialPoset q = fixtures::parallel_triangles();
    CHECK(q.is_pure());
    CHECK(q.min_max_rank() == 3);
    CHECK(q.maximal_elements().size() == 6);
  }

  TEST_CASE("full subposet of the parallel triangles") {
    SimplicialPoset p = fixtures::parallel_triangles();
    Subposet sub = full_subposet(p, vertex_bit(1) | vertex_bit(2));
    CHECK(sub.poset.vertex_count() == 2);
    CHECK(sub.poset.size() == 6);  // bottom, 1, 2, e, f, g
    CHECK(sub.poset.top_rank() == 2);
    for (std::size_t i = 0; i < sub.elements.size(); ++i)
      CHECK(popcount(sub.poset.element(static_cast<int>(i)).vertices) ==
            popcount(p.element(sub.elements[i]).vertices));

    Subposet outer = full_subposet(p, vertex_bit(3) | vertex_bit(4) | vertex_bit(5));
    CHECK(outer.poset.size() == 4);  // bottom and three isolated vertices
    CHECK(outer.poset.top_rank() == 1);
  }

  TEST_CASE("subposet on the full vertex set reproduces the poset") {
    SimplicialPoset p = fixtures::parallel_triangles();
    Subposet sub = full_subposet(p, full_set(p.vertex_count()));
    CHECK(sub.poset == p);
  }

  TEST_CASE("underlying complex folds parallel faces together") {
    SimplicialPoset p = fixtures::two_segments();
    FoldResult fold = underlying_complex(p);
    CHECK(is_simplicial_complex(fold.complex));
    CHECK(fold.complex.size() == 4);  // bottom, 1, 2, edge
    const int edge = fold.fold.assignment[p.index_of("s")];
    CHECK(fold.fold.assignment[p.index_of("t")] == edge);
    CHECK(fold.complex.element(edge).vertices == (vertex_bit(1) | vertex_bit(2)));

    SimplicialPoset c = fixtures::projective_plane();
    FoldResult identity_fold = underlying_complex(c);
    CHECK(identity_fold.complex.size() == c.size());
  }

  TEST_CASE("fold maps preserve rank and intervals on random posets") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      SimplicialPoset p = fixtures::random_poset(rng);
      FoldResult fold = underlying_complex(p);
      CHECK(fold.fold.assignment.size() == static_cast<std::size_t>(p.size()));
      CHECK(is_simplicial_complex(fold.complex));
      for (int s = 0; s < p.size(); ++s)
        CHECK(fold.complex.element(fold.fold.assignment[s]).vertices == p.element(s).vertices);
    }
  }

  TEST_CASE("poset maps reject rank and order violations") {
    SimplicialPoset p = fixtures::two_segments();
    SimplicialPoset edge = underlying_complex(p).complex;
    CHECK_THROWS_AS(make_poset_map(p, edge, {0, 1, 2, 3, 3, 3}), error);   // wrong size
    CHECK_THROWS_AS(make_poset_map(p, edge, {0, 1, 2, 1, 3}), error);      // rank drop at s
    CHECK_THROWS_AS(make_poset_map(p, edge, {0, 1, 1, 3, 3}), error);      // not injective below s
  }

  TEST_CASE("join of two point pairs is a four-cycle") {
    SimplicialPoset s0 = fixtures::two_points();
    SimplicialPoset square = join_product(s0, s0);
    CHECK(square.vertex_count() == 4);
    CHECK(square.size() == 9);  // bottom, 4 vertices, 4 edges
    CHECK(square.top_rank() == 2);
    CHECK(is_simplicial_complex(square));
    for (int s : square.elements_of_rank(2)) {
      const VertexSet w = square.element(s).vertices;
      CHECK(popcount(w & (vertex_bit(1) | vertex_bit(2))) == 1);
      CHECK(popcount(w & (vertex_bit(3) | vertex_bit(4))) == 1);
    }
  }

  TEST_CASE("join with a simplex cones the poset") {
    SimplicialPoset p = fixtures::two_segments();
    SimplicialPoset cone = join_product(p, fixtures::simplex(1));
    CHECK(cone.vertex_count() == 3);
    CHECK(cone.top_rank() == 3);
    // bottom, 3 vertices, s, t, two edges to the apex, two cones
    CHECK(cone.size() == 10);
    CHECK(cone.maximal_elements().size() == 2);
  }

  TEST_CASE("join is compatible with dimensions on random pairs") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
      SimplicialPoset a = fixtures::random_poset(rng, {2, 3, 3, 6});
      SimplicialPoset b = fixtures::random_poset(rng, {2, 3, 3, 6});
      SimplicialPoset joined = join_product(a, b);
      CHECK(joined.vertex_count() == a.vertex_count() + b.vertex_count());
      CHECK(joined.top_rank() == a.top_rank() + b.top_rank());
      CHECK(joined.size() == a.size() * b.size());
    }
  }
}
