#pragma once

// Turning a one-component pattern diagram into the (n,1)-cable by crossing
// changes, and reading off the clasp presentation those changes define.
//
// The base point p sits just inside the left edge on the bottom strand
// (column 0, position 1); nothing in the diagram passes below it there, which
// is all the later isotopies need. The traversal starts at p and follows the
// orientation (or runs against it when asked).
//
// Downhill: every crossing is first reached as the over strand. Such a
// diagram is a curve whose height falls monotonically along the traversal
// except for one climb at p, so it is pinned down by the cyclic sequence of
// its seam crossings. Cancelling adjacent opposite crossings (never the pair
// on either side of p) removes the returning strands; what is left is drawn
// with straight strands, earlier-visited strands on top.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "satlink/annular_word.hpp"
#include "satlink/clasp_presentation.hpp"

namespace satlink {

class NormalizeError : public std::invalid_argument {
 public:
  enum class Kind { MultiComponent, WindingTooSmall, NoConvergence };
  NormalizeError(Kind kind, const std::string& message);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(NormalizeError::Kind kind);

enum class Direction { WithOrientation, AgainstOrientation };
enum class Handedness { Standard, Reversed };
std::string_view to_string(Handedness h);

/// One seam passage met by the traversal.
struct SeamHit {
  std::size_t position = 0;  // 1-based seam position
  int sign = 1;              // +1 left-to-right
  std::size_t crossings_before = 0;
};

/// The traversal from p: crossing visits in order (each crossing twice) and
/// seam passages. visits[i].over says whether the strand walked is the over
/// strand at that visit.
struct TraversalState {
  struct Visit {
    std::size_t event = 0;
    bool over = false;
  };
  std::vector<Visit> visits;
  std::vector<SeamHit> seam;
  std::vector<std::size_t> changes;  // filled by force_downhill
};

/// Throws NormalizeError(MultiComponent) unless w has exactly one component.
TraversalState traverse(const AnnularWord& w, Direction dir = Direction::WithOrientation);

/// True iff every crossing is first reached on its over strand.
bool is_downhill(const AnnularWord& w, Direction dir = Direction::WithOrientation);

struct DownhillResult {
  AnnularWord word;
  std::vector<std::size_t> changes;  // flipped event indices, ascending
};

DownhillResult force_downhill(const AnnularWord& w, Direction dir = Direction::WithOrientation);

/// Seam signs in traversal order with adjacent opposite pairs cancelled;
/// the indices (into TraversalState::seam) of the survivors.
std::vector<std::size_t> surviving_seam_hits(const std::vector<SeamHit>& hits);

/// Straightened diagram of a downhill word: wrapping = |winding|, one strand
/// per surviving seam passage, kinks dropped. Precondition: w downhill in
/// direction dir.
AnnularWord reduce_returning(const AnnularWord& w, Direction dir = Direction::WithOrientation);

struct Normalization {
  ClaspPresentation presentation;
  Handedness orientation = Handedness::Standard;
  AnnularWord downhill;      // the input after the crossing changes
  AnnularWord straightened;  // reduce_returning(downhill)
  std::vector<std::size_t> changes;
  std::vector<std::string> log;
};

/// Lift linking number lk(P.0, P.1) in the |winding|-fold cover: +1 for the
/// (n,1)-cable, -1 for the (n,-1)-cable.
Rational cable_handedness(const AnnularWord& straightened);

/// Throws NormalizeError for several components, |winding| < 2, or if
/// neither traversal direction yields the (n,1)-cable.
Normalization normalize(const AnnularWord& w, const std::string& name = "normalized");

/// Random one-component word with the given winding (>= 1): a shift braid
/// with random crossings, finger moves across the seam, double crossings and
/// kinks. Deterministic in seed.
AnnularWord random_pattern_word(std::size_t winding, std::uint64_t seed, std::size_t fingers = 2,
                                std::size_t extras = 8);

}  // namespace satlink
