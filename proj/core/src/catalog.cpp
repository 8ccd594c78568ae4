#include "satlink/catalog.hpp"

namespace satlink::catalog {

namespace {

// Each framing -1 clasp whose ends sit k strands apart lowers
// lk(eta, t^j eta) for j = +-k; two k=3, one k=2 and one k=4 clasp turn the
// cable's all-ones m=8 vector into the target. Placement found by search.
constexpr std::string_view kWinding8 = R"(pattern v1
name winding8-inconclusive
cable 8
clasp slot 5 enter 4 exit 6 weave ouou sign + framing -1
clasp slot 2 enter 2 exit 6 weave ouuuuuou sign + framing -1
clasp slot 4 enter 3 exit 5 weave ouou sign + framing -1
clasp slot 2 enter 4 exit 1 weave uououu sign + framing -1
)";

}  // namespace

ClaspPresentation cable(std::size_t n) {
  ClaspPresentation p;
  p.name = "cable" + std::to_string(n);
  p.n = n;
  return p;
}

ClaspPresentation winding8_inconclusive() { return parse_pattern(kWinding8); }

std::string_view winding8_inconclusive_text() { return kWinding8; }

}  // namespace satlink::catalog
