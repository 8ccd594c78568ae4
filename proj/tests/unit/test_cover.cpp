#include <doctest.h>

#include <set>

#include "common.hpp"
#include "satlink/catalog.hpp"
#include "satlink/cyclic_cover.hpp"

using namespace satlink;

TEST_CASE("cover word shape and lift bookkeeping") {
  const AnnularWord base = compile(catalog::winding8_inconclusive());
  for (std::size_t m : {1, 2, 4, 8}) {
    const CoverDiagram cd = build_cover(base, m);
    CHECK(cd.word.events.size() == m * base.events.size());
    CHECK(cd.word.seam == base.seam);
    CHECK(cd.cover.component_count() == m * cd.base_diagram.component_count());
    std::set<std::size_t> seen;
    for (ComponentId c : cd.base_diagram.components())
      for (std::size_t a = 0; a < m; ++a) {
        const ComponentId id = cd.lift(c, a);
        seen.insert(id.index);
        CHECK(cd.cover.name(id) == lift_name(cd.base_diagram.name(c), a));
        CHECK(deck_translate(cd, id, 1) == cd.lift(c, a + 1));
        CHECK(deck_translate(cd, id, m) == id);
        // lifts of eta wind n/m times, the clasps' lifts not at all
        CHECK(cd.cover.winding(id) * int(m) == cd.base_diagram.winding(c));
      }
    CHECK(seen.size() == cd.cover.component_count());
  }
}

TEST_CASE("clasp lifts keep their framing") {
  std::mt19937_64 rng(test::seed());
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 2 * (1 + rng() % 5);
    const auto p = random_presentation(n, 1 + rng() % 4, rng());
    const CoverDiagram cd = build_cover(compile(p), 2);
    for (ComponentId c : surgery_components(cd.base_diagram))
      for (std::size_t a = 0; a < 2; ++a) CHECK(cd.cover.framing(cd.lift(c, a)) == cd.base_diagram.framing(c));
  }
}

TEST_CASE("lifted meridian linkings of the cable") {
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t m = 2; m <= n; ++m) {
      if (n % m) continue;
      const RationalMatrix lk = lifted_eta_linkings(build_cover(cable_template(n), m));
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          if (j == k) CHECK(lk(j, k) == 0);
          else CHECK(lk(j, k) == make_rational(long(n), long(m)));
        }
    }
}

TEST_CASE("lifted surgery matrix") {
  std::mt19937_64 rng(test::seed() + 1);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 4 * (1 + rng() % 2);
    const auto p = random_presentation(n, 1 + rng() % 4, rng());
    for (std::size_t m : {2, 4}) {
      const CoverDiagram cd = build_cover(compile(p), m);
      const LiftedData ld = lifted_linking_matrix(cd);
      const std::size_t k = p.clasps.size();
      REQUIRE(ld.A.rows() == m * k);
      CHECK(ld.A.symmetric());
      CHECK(std::holds_alternative<std::vector<IntMatrix>>(block_circulant_split(ld.A, m)));
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < k; ++c) {
          CHECK(ld.A(a * k + c, a * k + c) == p.clasps[c].framing);
          CHECK(ld.labels[a * k + c] == lift_name(clasp_name(c), a));
        }
      // every clasp has zero total linking with eta, so with all its lifts
      for (std::size_t c = 0; c < m * k; ++c) {
        Rational col = 0;
        for (std::size_t j = 0; j < m; ++j) col += ld.eta_vs_L(j, c);
        CHECK(col == 0);
      }
    }
  }
}

TEST_CASE("cover errors") {
  CHECK_THROWS_AS(build_cover(cable_template(6), 4), WindingNotDivisible);
  CHECK_THROWS_AS(build_cover(cable_template(6), 0), std::invalid_argument);
  try {
    build_cover(cable_template(6), 4);
  } catch (const WindingNotDivisible& e) {
    CHECK(e.component() == "eta");
    CHECK(e.winding() == 6);
    CHECK(e.m() == 4);
  }
  CHECK_THROWS_AS(lifted_eta_linkings(build_cover(parse_annular("annular v1\nseam 2 ++\nx 1 under\n"), 2)), DiagramError);
}
