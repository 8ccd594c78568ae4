#include "satlink/cyclic_cover.hpp"

namespace satlink {

WindingNotDivisible::WindingNotDivisible(std::string component, int winding, std::size_t m)
    : std::invalid_argument("WindingNotDivisible: component '" + component + "' has winding " +
                            std::to_string(winding) + ", not divisible by " + std::to_string(m)),
      component_(std::move(component)),
      winding_(winding),
      m_(m) {}

std::pair<std::size_t, std::size_t> base_point(const Diagram& d, ComponentId c) {
  for (const Label& l : d.word().labels)
    if (l.name == d.name(c)) return {l.column, l.position};
  const std::size_t t = d.tracks_of(c).front();
  const Track& tr = d.tracks()[t];
  if (tr.start == Track::End::Seam) return {0, tr.start_ref + 1};
  // Newborn lower strand of a cup sits at the cup's position just after it.
  return {tr.start_ref + 1, d.word().events[tr.start_ref].position};
}

std::string lift_name(const std::string& name, std::size_t copy) { return name + "." + std::to_string(copy); }

namespace {

AnnularWord stacked_word(const Diagram& base, std::size_t m) {
  AnnularWord w = repeat_events(base.word(), m);
  const std::size_t e = base.word().events.size();
  for (ComponentId c : base.components()) {
    const auto [col, pos] = base_point(base, c);
    for (std::size_t a = 0; a < m; ++a) w.labels.push_back({lift_name(base.name(c), a), a * e + col, pos});
  }
  return w;
}

}  // namespace

CoverDiagram build_cover(const AnnularWord& w, std::size_t m) {
  if (m == 0) throw std::invalid_argument("build_cover: m must be positive");
  Diagram base(w);
  for (ComponentId c : base.components()) {
    const int wd = base.winding(c);
    if (wd % static_cast<int>(m) != 0) throw WindingNotDivisible(base.name(c), wd, m);
  }
  AnnularWord word = stacked_word(base, m);
  // Lifts inherit the base orientation; most of them never meet the seam.
  std::vector<Diagram::OrientationPin> pins;
  const std::size_t e = w.events.size();
  for (ComponentId c : base.components()) {
    const auto [col, pos] = base_point(base, c);
    const int o = base.tracks()[base.track_at(col, pos)].orientation;
    for (std::size_t a = 0; a < m; ++a) pins.push_back({a * e + col, pos, o});
  }
  Diagram cover(word, pins);
  if (cover.component_count() != base.component_count() * m) {
    throw std::logic_error("build_cover: lifts do not close up");
  }
  std::vector<std::vector<ComponentId>> lifts(base.component_count());
  std::vector<ComponentId> deck(cover.component_count());
  for (ComponentId c : base.components()) {
    for (std::size_t a = 0; a < m; ++a) lifts[c.index].push_back(cover.require(lift_name(base.name(c), a)));
    for (std::size_t a = 0; a < m; ++a) deck[lifts[c.index][a].index] = lifts[c.index][(a + 1) % m];
  }
  return CoverDiagram{w, m, std::move(word), std::move(cover), std::move(base), std::move(lifts), std::move(deck)};
}

ComponentId deck_translate(const CoverDiagram& cd, ComponentId id, std::size_t k) {
  for (std::size_t i = 0; i < k % cd.m; ++i) id = cd.deck.at(id.index);
  return id;
}

RationalMatrix lifted_eta_linkings(const CoverDiagram& cd) {
  const ComponentId eta = cd.base_diagram.require("eta");
  RationalMatrix out(cd.m, cd.m);
  for (std::size_t j = 0; j < cd.m; ++j)
    for (std::size_t k = 0; k < cd.m; ++k)
      if (j != k) out(j, k) = cd.cover.linking(cd.lift(eta, j), cd.lift(eta, k));
  return out;
}

std::vector<ComponentId> surgery_components(const Diagram& d) {
  std::vector<ComponentId> out;
  for (ComponentId c : d.components())
    if (d.name(c) != "eta") out.push_back(c);
  return out;
}

namespace {

Integer integral(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw LinalgError(std::string(what) + " is not an integer: " + to_string(r));
  return r.get_num();
}

}  // namespace

LiftedData lifted_linking_matrix(const CoverDiagram& cd) {
  const auto surgery = surgery_components(cd.base_diagram);
  const std::size_t k = surgery.size();
  const std::size_t n = cd.m * k;
  std::vector<ComponentId> lifted;
  LiftedData out;
  for (std::size_t a = 0; a < cd.m; ++a)
    for (ComponentId c : surgery) {
      lifted.push_back(cd.lift(c, a));
      out.labels.push_back(lift_name(cd.base_diagram.name(c), a));
    }
  out.A = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.A(i, i) = cd.cover.framing(lifted[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      out.A(i, j) = out.A(j, i) = integral(cd.cover.linking(lifted[i], lifted[j]), "lifted linking number");
    }
  }
  if (cd.base_diagram.find("eta")) {
    const ComponentId eta = cd.base_diagram.require("eta");
    out.eta_lk = lifted_eta_linkings(cd);
    out.eta_vs_L = RationalMatrix(cd.m, n);
    for (std::size_t j = 0; j < cd.m; ++j)
      for (std::size_t i = 0; i < n; ++i) out.eta_vs_L(j, i) = cd.cover.linking(cd.lift(eta, j), lifted[i]);
  }
  return out;
}

}  // namespace satlink
