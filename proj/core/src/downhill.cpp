#include "satlink/downhill.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "satlink/cyclic_cover.hpp"
#include "satlink/diagram.hpp"

namespace satlink {

NormalizeError::NormalizeError(Kind kind, const std::string& message)
    : std::invalid_argument(std::string(satlink::to_string(kind)) + ": " + message), kind_(kind) {}

std::string_view to_string(NormalizeError::Kind kind) {
  switch (kind) {
    case NormalizeError::Kind::MultiComponent: return "MultiComponent";
    case NormalizeError::Kind::WindingTooSmall: return "WindingTooSmall";
    case NormalizeError::Kind::NoConvergence: return "NoConvergence";
  }
  return "?";
}

std::string_view to_string(Handedness h) { return h == Handedness::Standard ? "Standard" : "Reversed"; }

namespace {

// Walking against the orientation is walking with the orientation of the
// reversed curve; reversing only touches the seam signs.
AnnularWord in_frame(AnnularWord w, Direction dir) {
  if (dir == Direction::AgainstOrientation)
    for (int& s : w.seam) s = -s;
  return w;
}

}  // namespace

TraversalState traverse(const AnnularWord& word, Direction dir) {
  const AnnularWord w = in_frame(word, dir);
  const Diagram d(w);
  if (d.component_count() != 1) {
    throw NormalizeError(NormalizeError::Kind::MultiComponent,
                         "expected one component, found " + std::to_string(d.component_count()));
  }
  TraversalState st;
  if (w.seam.empty()) return st;  // a closed curve away from the seam; nothing to walk from

  const auto& tracks = d.tracks();
  auto walk = [&](std::size_t t, bool forward) {
    const auto& evs = tracks[t].events;
    auto visit = [&](std::size_t e) {
      const Event& ev = w.events[e];
      if (ev.kind != EventKind::Cross) return;
      const bool lower_entering = d.event_tracks(e).lower == t;
      st.visits.push_back({e, lower_entering == (ev.over == Over::Lower)});
    };
    if (forward) for (auto it = evs.begin(); it != evs.end(); ++it) visit(*it);
    else for (auto it = evs.rbegin(); it != evs.rend(); ++it) visit(*it);
  };
  auto partner = [&](std::size_t event, std::size_t t) {
    const auto& et = d.event_tracks(event);
    return et.lower == t ? et.upper : et.lower;
  };

  const std::size_t t0 = d.left_track(0);
  const bool start_forward = tracks[t0].orientation > 0;
  std::size_t t = t0;
  bool forward = start_forward;
  if (!start_forward) {
    st.seam.push_back({1, -1, 0});
    t = d.right_track(0);
  }
  const std::size_t limit = 4 * (tracks.size() + 1);
  for (std::size_t step = 0; step < limit; ++step) {
    if (!start_forward && t == t0) {
      walk(t, false);  // last stretch back up to p
      return st;
    }
    walk(t, forward);
    const Track& tr = tracks[t];
    if (forward) {
      if (tr.end == Track::End::Seam) {
        st.seam.push_back({tr.end_ref + 1, +1, st.visits.size()});
        t = d.left_track(tr.end_ref);
        if (start_forward && t == t0) return st;
      } else {
        t = partner(tr.end_ref, t);
        forward = false;
      }
    } else {
      if (tr.start == Track::End::Seam) {
        st.seam.push_back({tr.start_ref + 1, -1, st.visits.size()});
        t = d.right_track(tr.start_ref);
      } else {
        t = partner(tr.start_ref, t);
        forward = true;
      }
    }
  }
  throw std::logic_error("traverse: walk did not close up");
}

bool is_downhill(const AnnularWord& w, Direction dir) {
  const TraversalState st = traverse(w, dir);
  std::set<std::size_t> seen;
  for (const auto& v : st.visits)
    if (seen.insert(v.event).second && !v.over) return false;
  return true;
}

DownhillResult force_downhill(const AnnularWord& w, Direction dir) {
  const TraversalState st = traverse(w, dir);
  DownhillResult out{w, {}};
  std::set<std::size_t> seen;
  for (const auto& v : st.visits) {
    if (!seen.insert(v.event).second || v.over) continue;
    Event& ev = out.word.events[v.event];
    ev.over = ev.over == Over::Lower ? Over::Upper : Over::Lower;
    out.changes.push_back(v.event);
  }
  std::sort(out.changes.begin(), out.changes.end());
  return out;
}

std::vector<std::size_t> surviving_seam_hits(const std::vector<SeamHit>& hits) {
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (!stack.empty() && hits[stack.back()].sign != hits[i].sign) stack.pop_back();
    else stack.push_back(i);
  }
  return stack;
}

namespace {

// Geometry of the straightened picture, in the traversal frame.
struct Straight {
  std::size_t n = 0;
  int sigma = 1;
  std::vector<std::size_t> rank;  // rank[j] for survivor j = 1..n (index 0 unused)
  std::vector<std::size_t> survivors;

  // Arc a (1..n-1) runs between survivors a and a+1; arc 0 is the one
  // through p. Left-edge position of each arc.
  std::size_t left_rank(std::size_t a) const {
    if (a == 0) return sigma > 0 ? rank[n] : rank[1];
    return sigma > 0 ? rank[a] : rank[a + 1];
  }
};

Straight straight_layout(const TraversalState& st) {
  Straight s;
  s.survivors = surviving_seam_hits(st.seam);
  s.n = s.survivors.size();
  if (s.n == 0) return s;
  s.sigma = st.seam[s.survivors.front()].sign;
  std::vector<std::size_t> pos;
  for (std::size_t i : s.survivors) pos.push_back(st.seam[i].position);
  std::vector<std::size_t> sorted = pos;
  std::sort(sorted.begin(), sorted.end());
  s.rank.assign(s.n + 1, 0);
  for (std::size_t j = 0; j < s.n; ++j)
    s.rank[j + 1] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), pos[j]) - sorted.begin()) + 1;
  return s;
}

AnnularWord straight_word(const Straight& s) {
  AnnularWord w;
  const std::size_t n = s.n;
  w.seam.assign(n, s.sigma);
  if (n == 0) return w;
  // Per arc: left position, right position, height (larger = over).
  struct Arc {
    std::size_t left, right;
    long height;
  };
  std::vector<Arc> arcs(n);
  for (std::size_t a = 1; a < n; ++a) {
    arcs[a] = s.sigma > 0 ? Arc{s.rank[a], s.rank[a + 1], static_cast<long>(n - a)}
                          : Arc{s.rank[a + 1], s.rank[a], static_cast<long>(n - a)};
  }
  // The p arc: near the left edge it drops to the bottom (lowest piece when
  // moving with the seam, highest when against), then runs to the right edge.
  const bool first_piece_high = s.sigma < 0;
  arcs[0] = s.sigma > 0 ? Arc{s.rank[n], s.rank[1], static_cast<long>(n)} : Arc{s.rank[1], s.rank[n], 0};

  std::vector<std::size_t> at(n);  // arc at each position (0-based)
  for (std::size_t a = 0; a < n; ++a) at[arcs[a].left - 1] = a;
  for (std::size_t t = arcs[0].left; t > 1; --t) {
    w.events.push_back(Event::cross(t - 1, first_piece_high ? Over::Upper : Over::Lower));
    std::swap(at[t - 2], at[t - 1]);
  }
  // Straight segments: every inverted pair crosses once.
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Arc& lo = arcs[at[i]];
      const Arc& hi = arcs[at[i + 1]];
      if (lo.right > hi.right) {
        w.events.push_back(Event::cross(i + 1, lo.height > hi.height ? Over::Lower : Over::Upper));
        std::swap(at[i], at[i + 1]);
        swapped = true;
      }
    }
  }
  return w;
}

AnnularWord back_from_frame(AnnularWord w, Direction dir) { return in_frame(std::move(w), dir); }

}  // namespace

AnnularWord reduce_returning(const AnnularWord& w, Direction dir) {
  const TraversalState st = traverse(w, dir);
  return back_from_frame(straight_word(straight_layout(st)), dir);
}

Rational cable_handedness(const AnnularWord& straightened) {
  const Diagram d(straightened);
  const ComponentId c{0};
  const int n = std::abs(d.winding(c));
  if (n < 2) throw NormalizeError(NormalizeError::Kind::WindingTooSmall, "handedness needs |winding| >= 2");
  const CoverDiagram cd = build_cover(straightened, static_cast<std::size_t>(n));
  return cd.cover.linking(cd.lift(c, 0), cd.lift(c, 1));
}

namespace {

std::vector<ClaspSpec> clasps_for_changes(const AnnularWord& original, const TraversalState& st,
                                          const std::vector<std::size_t>& changes, Direction dir) {
  const Straight s = straight_layout(st);
  const Diagram d(in_frame(original, dir));
  const std::size_t events = std::max<std::size_t>(original.events.size(), 1);

  // survivors among the first i seam hits
  std::vector<std::size_t> surv_before(st.seam.size() + 1, 0);
  {
    std::vector<bool> survives(st.seam.size(), false);
    for (std::size_t i : s.survivors) survives[i] = true;
    for (std::size_t i = 0; i < st.seam.size(); ++i) surv_before[i + 1] = surv_before[i] + (survives[i] ? 1 : 0);
  }
  auto arc_of_visit = [&](std::size_t v) {
    std::size_t seg = 0;
    while (seg < st.seam.size() && st.seam[seg].crossings_before <= v) ++seg;
    const std::size_t a = surv_before[seg];
    return a == s.n ? std::size_t{0} : a;
  };

  std::vector<ClaspSpec> out;
  for (std::size_t e : changes) {
    std::vector<std::size_t> ranks;
    for (std::size_t v = 0; v < st.visits.size(); ++v)
      if (st.visits[v].event == e) ranks.push_back(s.left_rank(arc_of_visit(v)));
    const auto [lo, hi] = std::minmax(ranks.front(), ranks.back());
    const int sign = d.crossing_sign(e);
    ClaspSpec c;
    c.slot = std::min(s.n - 1, e * s.n / events);
    c.gap_enter = lo - 1;
    c.gap_exit = hi;
    const std::size_t len = hi - lo + 1;
    std::vector<Pass> outward;
    for (std::size_t j = 0; j < len; ++j)
      outward.push_back(((j % 2 == 0) == (sign > 0)) ? Pass::Over : Pass::Under);
    c.weave = outward;
    c.weave.insert(c.weave.end(), outward.rbegin(), outward.rend());
    c.clasp_sign = sign;
    c.framing = -sign;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Normalization normalize(const AnnularWord& w, const std::string& name) {
  const Diagram d(w);
  if (d.component_count() != 1) {
    throw NormalizeError(NormalizeError::Kind::MultiComponent,
                         "expected one component, found " + std::to_string(d.component_count()));
  }
  const int winding = d.winding(ComponentId{0});
  if (std::abs(winding) < 2) {
    throw NormalizeError(NormalizeError::Kind::WindingTooSmall, "winding " + std::to_string(winding) + " (need |winding| >= 2)");
  }
  Normalization out;
  for (Direction dir : {Direction::WithOrientation, Direction::AgainstOrientation}) {
    const bool with = dir == Direction::WithOrientation;
    DownhillResult dh = force_downhill(w, dir);
    AnnularWord st = reduce_returning(dh.word, dir);
    const Rational h = cable_handedness(st);
    out.log.push_back(std::string(with ? "with" : "against") + " orientation: " + std::to_string(dh.changes.size()) +
                      " crossing change(s), straightened wrapping " + std::to_string(st.seam.size()) +
                      ", lift linking " + to_string(h));
    if (h != 1) continue;
    const TraversalState trav = traverse(dh.word, dir);
    out.presentation.name = name;
    out.presentation.n = static_cast<std::size_t>(std::abs(winding));
    out.presentation.clasps = clasps_for_changes(w, trav, dh.changes, dir);
    for (std::size_t i = 0; i < dh.changes.size(); ++i) {
      const Event& ev = w.events[dh.changes[i]];
      out.log.push_back("change event " + std::to_string(dh.changes[i]) + " (x " + std::to_string(ev.position) +
                        (ev.over == Over::Upper ? " over -> under" : " under -> over") + ") -> clasp " + clasp_name(i));
    }
    out.log.push_back("clasp coordinates follow the straightened strand order; positions are a convention, not a certified isotopy");
    out.orientation = with ? Handedness::Standard : Handedness::Reversed;
    out.downhill = std::move(dh.word);
    out.straightened = std::move(st);
    out.changes = std::move(dh.changes);
    return out;
  }
  throw NormalizeError(NormalizeError::Kind::NoConvergence, "neither traversal direction straightens to the (n,1)-cable");
}

AnnularWord random_pattern_word(std::size_t winding, std::uint64_t seed, std::size_t fingers, std::size_t extras) {
  if (winding == 0) throw std::invalid_argument("random_pattern_word: winding must be positive");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  auto flag = [&] { return draw(2) ? Over::Upper : Over::Lower; };

  AnnularWord w;
  w.seam.assign(winding, 1);
  for (std::size_t g = 1; g < winding; ++g) w.events.push_back(Event::cross(g, flag()));

  auto double_crossings = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      const auto counts = strand_counts(w);
      const std::size_t at = draw(w.events.size() + 1);
      if (counts[at] < 2) continue;
      const std::size_t g = 1 + draw(counts[at] - 1);
      const std::array<Event, 2> pair{Event::cross(g, flag()), Event::cross(g, flag())};
      w.events.insert(w.events.begin() + static_cast<std::ptrdiff_t>(at), pair.begin(), pair.end());
    }
  };

  double_crossings(extras / 2);
  for (std::size_t f = 0; f < fingers; ++f) {
    // Push a loop of the strand at seam position q back across the seam.
    std::vector<std::size_t> candidates;
    for (std::size_t q = 1; q <= w.seam.size(); ++q)
      if (w.seam[q - 1] > 0) candidates.push_back(q);
    const std::size_t q = candidates[draw(candidates.size())];
    w.seam.insert(w.seam.begin() + static_cast<std::ptrdiff_t>(q), {-1, 1});
    w.events.insert(w.events.begin(), Event::cap(q));
    w.events.push_back(Event::cup(q + 1));
  }
  double_crossings(extras - extras / 2);
  for (std::size_t k = 0; k < extras / 4; ++k) {
    const auto counts = strand_counts(w);
    const std::size_t at = draw(w.events.size() + 1);
    if (counts[at] == 0) continue;
    w.events.insert(w.events.begin() + static_cast<std::ptrdiff_t>(at),
                    Event::kink(1 + draw(counts[at]), draw(2) ? 1 : -1));
  }
  if (Diagram(w).component_count() != 1) throw std::logic_error("random_pattern_word: produced several components");
  return w;
}

}  // namespace satlink
