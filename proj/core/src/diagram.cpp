#include "satlink/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace satlink {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct Link {
  std::size_t other;
  int relation;  // +1 same orientation, -1 opposite
};

}  // namespace

Diagram::Diagram(AnnularWord word) : Diagram(std::move(word), {}) {}

Diagram::Diagram(AnnularWord word, const std::vector<OrientationPin>& pins) : word_(std::move(word)) {
  strand_counts(word_);

  const std::size_t width = word_.seam.size();
  std::vector<std::size_t> slots(width);
  for (std::size_t k = 0; k < width; ++k) {
    Track t;
    t.start = Track::End::Seam;
    t.start_ref = k;
    tracks_.push_back(t);
    slots[k] = k;
  }
  left_ = slots;

  std::vector<std::pair<std::size_t, std::size_t>> turn_pairs;
  event_tracks_.resize(word_.events.size());
  for (std::size_t e = 0; e < word_.events.size(); ++e) {
    const Event& ev = word_.events[e];
    const std::size_t p = ev.position - 1;
    switch (ev.kind) {
      case EventKind::Cross: {
        const std::size_t lo = slots[p], hi = slots[p + 1];
        event_tracks_[e] = {lo, hi};
        tracks_[lo].events.push_back(e);
        tracks_[hi].events.push_back(e);
        std::swap(slots[p], slots[p + 1]);
        break;
      }
      case EventKind::Cup: {
        const std::size_t lo = tracks_.size();
        Track t;
        t.start = Track::End::Turn;
        t.start_ref = e;
        tracks_.push_back(t);
        tracks_.push_back(t);
        slots.insert(slots.begin() + static_cast<std::ptrdiff_t>(p), {lo, lo + 1});
        event_tracks_[e] = {lo, lo + 1};
        turn_pairs.emplace_back(lo, lo + 1);
        break;
      }
      case EventKind::Cap: {
        const std::size_t lo = slots[p], hi = slots[p + 1];
        tracks_[lo].end = tracks_[hi].end = Track::End::Turn;
        tracks_[lo].end_ref = tracks_[hi].end_ref = e;
        event_tracks_[e] = {lo, hi};
        turn_pairs.emplace_back(lo, hi);
        slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(p), slots.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        break;
      }
      case EventKind::Kink: {
        const std::size_t t = slots[p];
        event_tracks_[e] = {t, t};
        tracks_[t].events.push_back(e);
        break;
      }
    }
  }
  right_ = slots;
  for (std::size_t k = 0; k < width; ++k) {
    tracks_[right_[k]].end = Track::End::Seam;
    tracks_[right_[k]].end_ref = k;
  }

  // Connectivity and orientation constraints.
  const std::size_t nt = tracks_.size();
  UnionFind uf(nt);
  std::vector<std::vector<Link>> graph(nt);
  auto relate = [&](std::size_t a, std::size_t b, int rel) {
    uf.join(a, b);
    graph[a].push_back({b, rel});
    graph[b].push_back({a, rel});
  };
  for (auto [a, b] : turn_pairs) relate(a, b, -1);
  for (std::size_t k = 0; k < width; ++k) relate(right_[k], left_[k], +1);

  std::vector<int> orient(nt, 0);
  std::queue<std::size_t> todo;
  auto fix = [&](std::size_t t, int o) {
    if (orient[t] == 0) {
      orient[t] = o;
      todo.push(t);
    } else if (orient[t] != o) {
      throw DiagramError(DiagramError::Kind::SeamMismatch,
                         "strand orientations are inconsistent around the seam");
    }
  };
  auto drain = [&] {
    while (!todo.empty()) {
      const std::size_t t = todo.front();
      todo.pop();
      for (const Link& l : graph[t]) fix(l.other, orient[t] * l.relation);
    }
  };
  for (std::size_t k = 0; k < width; ++k) fix(left_[k], word_.seam[k]);
  drain();
  for (const OrientationPin& pin : pins) {
    fix(track_at(pin.column, pin.position), pin.orientation);
    drain();
  }
  for (std::size_t t = 0; t < nt; ++t) {
    if (orient[t] == 0) {
      // First track of a seam-free component: a cup's lower strand runs right.
      fix(t, 1);
      drain();
    }
  }
  for (std::size_t t = 0; t < nt; ++t) tracks_[t].orientation = orient[t];

  std::vector<std::size_t> comp_of_root(nt, nt);
  std::size_t ncomp = 0;
  for (std::size_t t = 0; t < nt; ++t) {
    const std::size_t r = uf.find(t);
    if (comp_of_root[r] == nt) comp_of_root[r] = ncomp++;
    tracks_[t].component = comp_of_root[r];
  }

  names_.assign(ncomp, std::string());
  const auto counts = strand_counts(word_);
  for (const Label& l : word_.labels) {
    const std::size_t counts_at = l.column < counts.size() ? counts[l.column] : 0;
    if (l.column > word_.events.size() || l.position < 1 || l.position > counts_at) {
      throw DiagramError(DiagramError::Kind::UnknownLabel, "label '" + l.name + "' points at no strand");
    }
    const std::size_t c = tracks_[track_at(l.column, l.position)].component;
    for (std::size_t o = 0; o < ncomp; ++o) {
      if (o != c && names_[o] == l.name) {
        throw DiagramError(DiagramError::Kind::UnknownLabel, "label '" + l.name + "' names two components");
      }
    }
    if (!names_[c].empty() && names_[c] != l.name) {
      throw DiagramError(DiagramError::Kind::UnknownLabel,
                         "component already labelled '" + names_[c] + "', cannot relabel as '" + l.name + "'");
    }
    names_[c] = l.name;
  }
  for (std::size_t c = 0; c < ncomp; ++c) {
    if (names_[c].empty()) names_[c] = "c" + std::to_string(c + 1);
  }

  crossing_sums_.assign(ncomp * ncomp, 0);
  for (std::size_t e = 0; e < word_.events.size(); ++e) {
    const Event& ev = word_.events[e];
    if (ev.kind == EventKind::Cross) {
      const int s = crossing_sign(e);
      const std::size_t a = tracks_[event_tracks_[e].lower].component;
      const std::size_t b = tracks_[event_tracks_[e].upper].component;
      crossing_sums_[a * ncomp + b] += s;
      if (a != b) crossing_sums_[b * ncomp + a] += s;
    } else if (ev.kind == EventKind::Kink) {
      const std::size_t a = tracks_[event_tracks_[e].lower].component;
      crossing_sums_[a * ncomp + a] += ev.sign;
    }
  }
}

std::vector<ComponentId> Diagram::components() const {
  std::vector<ComponentId> out(names_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

std::optional<ComponentId> Diagram::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return ComponentId{i};
  return std::nullopt;
}

ComponentId Diagram::require(std::string_view name) const {
  if (auto c = find(name)) return *c;
  throw DiagramError(DiagramError::Kind::UnknownLabel, "no component named '" + std::string(name) + "'");
}

std::size_t Diagram::track_at(std::size_t column, std::size_t position) const {
  if (column > word_.events.size()) throw std::out_of_range("track_at: column out of range");
  std::vector<std::size_t> slots = left_;
  for (std::size_t e = 0; e < column; ++e) {
    const Event& ev = word_.events[e];
    const std::size_t p = ev.position - 1;
    switch (ev.kind) {
      case EventKind::Cross: std::swap(slots[p], slots[p + 1]); break;
      case EventKind::Cup:
        slots.insert(slots.begin() + static_cast<std::ptrdiff_t>(p),
                     {event_tracks_[e].lower, event_tracks_[e].upper});
        break;
      case EventKind::Cap:
        slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(p), slots.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        break;
      case EventKind::Kink: break;
    }
  }
  if (position < 1 || position > slots.size()) throw std::out_of_range("track_at: position out of range");
  return slots[position - 1];
}

ComponentId Diagram::component_at(std::size_t column, std::size_t position) const {
  return ComponentId{tracks_[track_at(column, position)].component};
}

std::vector<std::size_t> Diagram::tracks_of(ComponentId c) const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < tracks_.size(); ++t)
    if (tracks_[t].component == c.index) out.push_back(t);
  return out;
}

int Diagram::crossing_sign(std::size_t event) const {
  const Event& ev = word_.events.at(event);
  if (ev.kind != EventKind::Cross) throw std::invalid_argument("crossing_sign: not a crossing");
  const auto& et = event_tracks_[event];
  const int o = tracks_[et.lower].orientation * tracks_[et.upper].orientation;
  return ev.over == Over::Lower ? o : -o;
}

int Diagram::winding(ComponentId c) const {
  int w = 0;
  for (std::size_t k = 0; k < left_.size(); ++k)
    if (tracks_[left_[k]].component == c.index) w += word_.seam[k];
  return w;
}

std::size_t Diagram::wrapping(ComponentId c) const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < left_.size(); ++k)
    if (tracks_[left_[k]].component == c.index) ++w;
  return w;
}

Rational Diagram::linking(ComponentId c1, ComponentId c2) const {
  if (c1 == c2) throw SameComponentError("linking: '" + name(c1) + "' with itself");
  const long long s = crossing_sums_.at(c1.index * names_.size() + c2.index);
  return make_rational(Integer(static_cast<long>(s)), 2);
}

Integer Diagram::framing(ComponentId c) const {
  return Integer(static_cast<long>(crossing_sums_.at(c.index * names_.size() + c.index)));
}

}  // namespace satlink
