#include <doctest.h>

#include "common.hpp"
#include "satlink/annular_word.hpp"
#include "satlink/diagram.hpp"
#include "satlink/downhill.hpp"

using namespace satlink;

namespace {

const char* kHopf =
    "annular v1\n"
    "seam 2 ++\n"
    "label a seam 1\n"
    "label b seam 2\n"
    "x 1 under\n"
    "x 1 under\n";

DiagramError::Kind parse_error(const char* text) {
  try {
    parse_annular(text);
  } catch (const DiagramError& e) {
    return e.kind();
  }
  FAIL("no error");
  return DiagramError::Kind::Syntax;
}

}  // namespace

TEST_CASE("parse and serialize") {
  const AnnularWord w = parse_annular(kHopf);
  CHECK(w.seam == std::vector<int>{1, 1});
  REQUIRE(w.events.size() == 2);
  CHECK(w.events[0] == Event::cross(1, Over::Lower));
  CHECK(serialize(w) == kHopf);
  CHECK(parse_annular("# comment\nannular v1\nseam 0\ncup 1\nkink 1 -\ncap 1\n").events.size() == 3);

  std::mt19937_64 rng(test::seed());
  for (int i = 0; i < 50; ++i) {
    const AnnularWord r = random_pattern_word(2 + rng() % 5, rng());
    CHECK(parse_annular(serialize(r)) == r);
  }
}

TEST_CASE("parse errors carry a kind and a line") {
  CHECK(parse_error("annular v2\n") == DiagramError::Kind::Syntax);
  CHECK(parse_error("annular v1\nseam 2 +\n") == DiagramError::Kind::Syntax);
  CHECK(parse_error("annular v1\nseam 2 ++\nx 2 under\n") == DiagramError::Kind::StrandCountMismatch);
  CHECK(parse_error("annular v1\nseam 2 ++\ncap 2\n") == DiagramError::Kind::StrandCountMismatch);
  CHECK(parse_error("annular v1\nseam 1 +\ncup 1\n") == DiagramError::Kind::SeamMismatch);
  CHECK(parse_error("annular v1\nseam 1 +\nlabel k seam 2\n") == DiagramError::Kind::UnknownLabel);
  CHECK(parse_error("annular v1\nseam 1 +\nx 1 sideways\n") == DiagramError::Kind::Syntax);
  try {
    parse_annular("annular v1\nseam 2 ++\nx 1 under\n\nx 3 over\n");
    FAIL("accepted");
  } catch (const DiagramError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("strand counts") {
  const AnnularWord w = parse_annular("annular v1\nseam 1 +\ncup 1\nx 2 under\ncap 2\n");
  CHECK(strand_counts(w) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(repeat_events(w, 3).events.size() == 9);
}

TEST_CASE("Hopf link and trefoil in the solid torus") {
  const Diagram hopf(parse_annular(kHopf));
  REQUIRE(hopf.component_count() == 2);
  const ComponentId a = hopf.require("a"), b = hopf.require("b");
  CHECK(hopf.winding(a) == 1);
  CHECK(hopf.linking(a, b) == 1);
  CHECK(hopf.linking(b, a) == 1);
  CHECK(hopf.framing(a) == 0);
  CHECK_THROWS_AS(hopf.linking(a, a), SameComponentError);
  CHECK_THROWS_AS(hopf.require("c"), DiagramError);

  const Diagram trefoil(parse_annular("annular v1\nseam 2 ++\nx 1 under\nx 1 under\nx 1 under\n"));
  REQUIRE(trefoil.component_count() == 1);
  CHECK(trefoil.winding(ComponentId{0}) == 2);
  CHECK(trefoil.framing(ComponentId{0}) == 3);
  // same braid with the other strand on top: all crossings negative
  const Diagram mirror(parse_annular("annular v1\nseam 2 ++\nx 1 over\nx 1 over\nx 1 over\n"));
  CHECK(mirror.framing(ComponentId{0}) == -3);
  // reversing one strand of the Hopf link negates its linking
  const Diagram anti(parse_annular("annular v1\nseam 2 +-\nx 1 under\nx 1 under\n"));
  CHECK(anti.linking(ComponentId{0}, ComponentId{1}) == -1);
}

TEST_CASE("a circle away from the axis") {
  const Diagram d(parse_annular("annular v1\nseam 0\ncup 1\nkink 1 +\ncap 1\n"));
  REQUIRE(d.component_count() == 1);
  CHECK(d.winding(ComponentId{0}) == 0);
  CHECK(d.wrapping(ComponentId{0}) == 0);
  CHECK(d.framing(ComponentId{0}) == 1);
}

TEST_CASE("Reidemeister moves leave winding, linking and framing alone") {
  std::mt19937_64 rng(test::seed() + 7);
  for (int i = 0; i < 40; ++i) {
    // a random closed braid on 3 strands: several components in general
    AnnularWord w;
    w.seam = {1, 1, 1};
    for (int e = 0; e < 6; ++e) w.events.push_back(Event::cross(1 + rng() % 2, rng() % 2 ? Over::Upper : Over::Lower));
    const Diagram d(w);

    AnnularWord moved = w;
    const std::size_t at = rng() % (w.events.size() + 1);
    const std::size_t g = 1 + rng() % 2;
    const Over o = rng() % 2 ? Over::Upper : Over::Lower;
    // R2: the same strands cross twice with the same strand on top
    const Over back = o == Over::Upper ? Over::Lower : Over::Upper;
    moved.events.insert(moved.events.begin() + at, {Event::cross(g, o), Event::cross(g, back)});
    const Diagram m2(moved);
    REQUIRE(m2.component_count() == d.component_count());
    for (std::size_t k = 1; k <= 3; ++k) {
      const ComponentId c = d.component_at(0, k), c2 = m2.component_at(0, k);
      CHECK(m2.winding(c2) == d.winding(c));
      CHECK(m2.framing(c2) == d.framing(c));
      for (std::size_t j = 1; j <= 3; ++j) {
        const ComponentId e = d.component_at(0, j);
        if (e != c) CHECK(m2.linking(c2, m2.component_at(0, j)) == d.linking(c, e));
      }
    }
  }
}
