#include <doctest.h>

#include "common.hpp"
#include "satlink/catalog.hpp"
#include "satlink/clasp_presentation.hpp"
#include "satlink/diagram.hpp"

using namespace satlink;

namespace {

PresentationError::Kind presentation_error(const char* text) {
  try {
    parse_pattern(text);
  } catch (const PresentationError& e) {
    return e.kind();
  }
  FAIL("no error");
  return PresentationError::Kind::Syntax;
}

ClaspSpec clasp(std::size_t slot, std::size_t enter, std::size_t exit, const char* weave, int sign, int framing) {
  return {slot, enter, exit, weave_from_string(weave), sign, framing};
}

}  // namespace

TEST_CASE("weaves") {
  CHECK(weave_to_string(weave_from_string("ouuo")) == "ouuo");
  CHECK(weave_balanced(weave_from_string("ouuo")));
  CHECK(weave_balanced(weave_from_string("")));
  CHECK_FALSE(weave_balanced(weave_from_string("oouu")));
  CHECK_THROWS(weave_from_string("ox"));
}

TEST_CASE("cable template") {
  for (std::size_t n = 1; n <= 9; ++n) {
    const Diagram d(cable_template(n));
    REQUIRE(d.component_count() == 1);
    const ComponentId eta = d.require("eta");
    CHECK(d.winding(eta) == int(n));
    CHECK(d.wrapping(eta) == n);
    // n - 1 positive crossings
    CHECK(d.framing(eta) == int(n) - 1);
  }
}

TEST_CASE("compiled clasps satisfy the crossing-change hypotheses") {
  const ClaspPresentation p{"two", 4, {clasp(1, 0, 2, "ouuo", 1, -1), clasp(3, 4, 1, "uuoouu", -1, 1)}};
  const AnnularWord w = compile(p);
  const Diagram d(w);
  REQUIRE(d.component_count() == 3);
  const ComponentId eta = d.require("eta");
  CHECK(d.winding(eta) == 4);
  for (std::size_t i = 0; i < 2; ++i) {
    const ComponentId l = d.require(clasp_name(i));
    CHECK(d.winding(l) == 0);
    CHECK(d.wrapping(l) == 2);
    CHECK(d.linking(l, eta) == 0);
    CHECK(d.framing(l) == p.clasps[i].framing);
  }
  CHECK(validate(w).ok());
  CHECK(validate(d).findings.empty());
}

TEST_CASE("validation findings") {
  // unbalanced weave links eta
  ClaspPresentation p{"bad", 4, {clasp(0, 0, 2, "oouu", 1, 1)}};
  CHECK(validate(compile(p)).has(Finding::Code::EtaLinkingNonzero));
  CHECK_FALSE(validate(compile(p)).ok());
  // framing 3
  p.clasps = {clasp(0, 0, 2, "ouuo", 1, 3)};
  CHECK(validate(compile(p)).has(Finding::Code::FramingNotUnit));
  // no eta at all
  CHECK(validate(parse_annular("annular v1\nseam 1 +\n")).has(Finding::Code::NoEta));
  // a curve winding around the axis
  const auto wound = validate(parse_annular("annular v1\nseam 2 ++\nlabel eta seam 1\nlabel L1 seam 2\n"));
  CHECK(wound.has(Finding::Code::WindingNonzero));
}

TEST_CASE("range checks") {
  CHECK_THROWS_AS(compile({"p", 1, {}}), PresentationError);
  CHECK(presentation_error("pattern v1\ncable 1\n") == PresentationError::Kind::WindingTooSmall);
  CHECK(presentation_error("pattern v1\ncable 4\nclasp slot 4 enter 0 exit 1 weave ou sign + framing 1\n") ==
        PresentationError::Kind::SlotOutOfRange);
  CHECK(presentation_error("pattern v1\ncable 4\nclasp slot 0 enter 0 exit 5 weave ou sign + framing 1\n") ==
        PresentationError::Kind::GapOutOfRange);
  CHECK(presentation_error("pattern v1\ncable 4\nclasp slot 0 enter 0 exit 2 weave ou sign + framing 1\n") ==
        PresentationError::Kind::WeaveMismatch);
  CHECK(presentation_error("pattern v1\ncable 4\nclasp slot 0 enter 0\n") == PresentationError::Kind::Syntax);
  CHECK(presentation_error("pattern v2\n") == PresentationError::Kind::Syntax);
}

TEST_CASE("text and JSON round trips") {
  const ClaspPresentation w8 = catalog::winding8_inconclusive();
  CHECK(parse_pattern(serialize(w8)) == w8);
  CHECK(pattern_from_json(pattern_to_json(w8)) == w8);
  CHECK(parse_pattern(catalog::winding8_inconclusive_text()) == w8);
  std::mt19937_64 rng(test::seed());
  for (int i = 0; i < 50; ++i) {
    const auto p = random_presentation(2 + rng() % 9, rng() % 6, rng());
    CHECK(parse_pattern(serialize(p)) == p);
    CHECK(pattern_from_json(pattern_to_json(p)) == p);
  }
  CHECK_THROWS(pattern_from_json("{\"cable\": 4"));
}

TEST_CASE("random presentations") {
  std::mt19937_64 rng(test::seed() + 1);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 11, k = rng() % 7;
    const std::uint64_t s = rng();
    const auto p = random_presentation(n, k, s);
    CHECK(p == random_presentation(n, k, s));
    CHECK(p.n == n);
    CHECK(p.clasps.size() == k);
    CHECK(validate(compile(p)).ok());
  }
}

TEST_CASE("cancelling pair") {
  const ClaspPresentation p = catalog::cable(4);
  const ClaspSpec t = clasp(1, 1, 3, "ouou", 1, 1);
  const ClaspPresentation q = add_cancelling_pair(p, t);
  REQUIRE(q.clasps.size() == 2);
  CHECK(q.clasps[0] == t);
  CHECK(q.clasps[1].clasp_sign == -1);
  CHECK(q.clasps[1].framing == -1);
  CHECK(validate(compile(q)).ok());
}
