#include "doctest.h"

#include "momac/torus.hpp"
#include "support/fixtures.hpp"

#include <random>
#include <vector>

using namespace momac;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  IntMatrix m(rows, cols);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = static_cast<long long>(rng() % span) - bound;
  return m;
}

}  // namespace

TEST_SUITE("torus") {
  TEST_CASE("identity restricts isomorphically on glued segments") {
    SimplicialPoset p = fixtures::two_segments();
    IntMatrix eye = IntMatrix::identity(2);
    CHECK(is_rational_lsop(p, eye));
    CHECK(is_rational_lsop_all(p, eye));
    CHECK(is_integral_lsop(p, eye));
    CHECK(is_integral_lsop_all(p, eye));
    CHECK(check_lsop_restriction(p, eye));

    IntMatrix skew = from_rows({{1, 1}, {0, 2}});
    LsopResult rational = is_rational_lsop(p, skew);
    CHECK(rational.ok);
    LsopResult integral = is_integral_lsop(p, skew);
    CHECK_FALSE(integral.ok);
    CHECK(integral.witness == p.index_of("s"));

    LsopResult zero = is_rational_lsop(p, IntMatrix(2, 2));
    CHECK_FALSE(zero.ok);
    CHECK(zero.witness > 0);

    CHECK_THROWS_AS((void)is_rational_lsop(p, IntMatrix(3, 2)), error);
    CHECK_THROWS_AS((void)is_integral_lsop(p, IntMatrix(2, 3)), error);
  }

  TEST_CASE("seeded search finds a rational system") {
    SimplicialPoset p = fixtures::parallel_triangles();
    LsopSearch search = find_rational_lsop(p, 1000, 9, 1);
    REQUIRE(search.found);
    CHECK(search.attempts_used >= 1);
    CHECK(search.attempts_used <= 1000);
    CHECK(search.matrix.rows() == 3);
    CHECK(search.matrix.cols() == 5);
    CHECK(is_rational_lsop(p, search.matrix));
    CHECK(check_lsop_restriction(p, search.matrix));

    LsopSearch repeat = find_rational_lsop(p, 1000, 9, 1);
    CHECK(repeat.found);
    CHECK(repeat.attempts_used == search.attempts_used);
    CHECK(repeat.matrix == search.matrix);

    LsopSearch hopeless = find_rational_lsop(p, 5, 0, 7);
    CHECK_FALSE(hopeless.found);
    CHECK(hopeless.attempts_used == 5);

    CHECK_THROWS_AS((void)find_rational_lsop(p, -1, 3, 0), error);
    CHECK_THROWS_AS((void)find_rational_lsop(p, 3, -1, 0), error);
  }

  TEST_CASE("maximal faces decide the rational condition") {
    std::mt19937_64 rng(41);
    SimplicialPoset fixed[] = {fixtures::parallel_triangles(), fixtures::two_triangles_plus_point()};
    for (const SimplicialPoset& p : fixed)
      for (int trial = 0; trial < 40; ++trial) {
        IntMatrix lambda = random_matrix(rng, p.top_rank(), p.vertex_count(), 2);
        LsopResult fast = is_rational_lsop(p, lambda);
        LsopResult full = is_rational_lsop_all(p, lambda);
        CHECK(fast.ok == full.ok);
        if (is_integral_lsop(p, lambda).ok) CHECK(fast.ok);
      }

    for (int trial = 0; trial < 15; ++trial) {
      SimplicialPoset p = fixtures::random_poset(rng);
      IntMatrix lambda = random_matrix(rng, p.top_rank(), p.vertex_count(), 2);
      CHECK(is_rational_lsop(p, lambda).ok == is_rational_lsop_all(p, lambda).ok);
      CHECK(is_integral_lsop(p, lambda).ok == is_integral_lsop_all(p, lambda).ok);
    }
  }

  TEST_CASE("rank route and restriction route agree") {
    std::mt19937_64 rng(42);
    SimplicialPoset fixed[] = {fixtures::parallel_triangles(), fixtures::two_triangles_plus_point()};
    int failures_seen = 0;
    for (const SimplicialPoset& p : fixed)
      for (int trial = 0; trial < 50; ++trial) {
        IntMatrix lambda = random_matrix(rng, p.top_rank(), p.vertex_count(), 2);
        LsopResult ranks = is_rational_lsop_all(p, lambda);
        LsopResult restricted = check_lsop_restriction(p, lambda);
        CHECK(ranks.ok == restricted.ok);
        if (!ranks.ok) {
          CHECK(ranks.witness == restricted.witness);
          ++failures_seen;
        }
      }
    CHECK(failures_seen > 0);
  }

  TEST_CASE("rank audit of the parallel triangles") {
    SimplicialPoset p = fixtures::parallel_triangles();
    TrcReport report = trc_audit(p);
    CHECK(report.m == 5);
    CHECK(report.n == 3);
    CHECK(report.mrk == 3);
    CHECK(report.trk == 2);
    CHECK(report.hrk == 12);
    CHECK(report.hrk_underlying == 6);
    CHECK(report.bound_trk == 4);
    CHECK(report.bound_mrk == 4);
    CHECK(report.pure);
    CHECK(report.pass_trk);
    CHECK(report.pass_mrk);
    CHECK(report.pass_fold);
    CHECK(report.pass);
  }

  TEST_CASE("rank audit with a dangling vertex") {
    SimplicialPoset p = fixtures::two_triangles_plus_point();
    CohomologyRing ring = CohomologyRing::compute(p);
    CHECK(ring.betti() == std::vector<long>{1, 0, 0, 3, 3, 1, 1, 1});

    TrcReport report = trc_audit(p, &ring);
    CHECK(report.m == 4);
    CHECK(report.n == 3);
    CHECK(report.mrk == 1);
    CHECK(report.trk == 1);
    CHECK(report.hrk == 10);
    CHECK(report.hrk_underlying == 8);
    CHECK(report.bound_trk == 2);
    CHECK(report.bound_mrk == 8);
    CHECK_FALSE(report.pure);
    CHECK(report.pass);
  }

  TEST_CASE("rank audit on random posets") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 8; ++trial) {
      TrcReport report = trc_audit(fixtures::random_poset(rng));
      CHECK(report.pass_trk);
      CHECK(report.pass_mrk);
      CHECK(report.pass_fold);
    }
  }
}
