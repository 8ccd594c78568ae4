#pragma once

// Combinatorial analysis of an AnnularWord: strand tracks, orientations,
// components, and the crossing counts behind winding, linking and framing.
//
// Sign convention: a crossing whose two strands point the same way is
// positive when the strand entering from the lower position passes over.
// In general sign = o_lower * o_upper * (lower over ? +1 : -1). The positive
// one-shift braid (cable_template) is built from positive crossings, which
// makes the cover linking numbers of the (n,1)-cable come out as +n/m.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "satlink/annular_word.hpp"
#include "satlink/exact_linalg.hpp"

namespace satlink {

struct ComponentId {
  std::size_t index = 0;
  friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

class SameComponentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A maximal strand piece between seam edges, cups and caps. A track is
/// born at the left edge or a cup and dies at the right edge or a cap;
/// crossings do not break it.
struct Track {
  enum class End { Seam, Turn };
  End start = End::Seam;
  std::size_t start_ref = 0;  // seam position (0-based) or cup event index
  End end = End::Seam;
  std::size_t end_ref = 0;    // seam position (0-based) or cap event index
  int orientation = 1;        // +1: traversed left to right
  std::size_t component = 0;
  std::vector<std::size_t> events;  // crossing / kink events along the track, left to right
};

/// Tracks taking part in an event. Cross: entering lower / upper. Cup: newborn
/// lower / upper. Cap: dying lower / upper. Kink: `lower` only.
struct EventTracks {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

class Diagram {
 public:
  /// Throws DiagramError on ill-typed or non-orientable words and on labels
  /// that collide.
  explicit Diagram(AnnularWord word);

  /// Strand at (column, position) is forced to run with `orientation`. Needed
  /// for components that never cross the seam, which otherwise default to a
  /// lower cup strand running left to right.
  struct OrientationPin {
    std::size_t column = 0;
    std::size_t position = 1;
    int orientation = 1;
  };
  Diagram(AnnularWord word, const std::vector<OrientationPin>& pins);

  const AnnularWord& word() const noexcept { return word_; }

  std::size_t component_count() const noexcept { return names_.size(); }
  std::vector<ComponentId> components() const;
  const std::string& name(ComponentId c) const { return names_.at(c.index); }
  std::optional<ComponentId> find(std::string_view name) const;
  /// Like find, but throws DiagramError(UnknownLabel).
  ComponentId require(std::string_view name) const;

  /// Component through the strand at `position` (1-based) of column `column`.
  ComponentId component_at(std::size_t column, std::size_t position) const;
  std::size_t track_at(std::size_t column, std::size_t position) const;

  const std::vector<Track>& tracks() const noexcept { return tracks_; }
  const EventTracks& event_tracks(std::size_t event) const { return event_tracks_.at(event); }
  std::size_t left_track(std::size_t seam_pos) const { return left_.at(seam_pos); }
  std::size_t right_track(std::size_t seam_pos) const { return right_.at(seam_pos); }
  std::vector<std::size_t> tracks_of(ComponentId c) const;

  /// Sign of a crossing event from the orientations of its strands.
  int crossing_sign(std::size_t event) const;

  /// Signed count of the component's seam crossings.
  int winding(ComponentId c) const;
  /// Unsigned count of the component's seam crossings.
  std::size_t wrapping(ComponentId c) const;
  /// Half the signed count of crossings between c1 and c2.
  Rational linking(ComponentId c1, ComponentId c2) const;
  /// Signed kinks plus signed self-crossings.
  Integer framing(ComponentId c) const;

 private:
  AnnularWord word_;
  std::vector<Track> tracks_;
  std::vector<EventTracks> event_tracks_;
  std::vector<std::size_t> left_, right_;
  std::vector<std::string> names_;
  // Symmetric matrix of signed crossing sums between components; the
  // diagonal holds self-crossings plus kinks.
  std::vector<long long> crossing_sums_;
};

}  // namespace satlink
