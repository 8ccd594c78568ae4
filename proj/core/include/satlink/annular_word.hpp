#pragma once

// Event-word presentation of oriented curves in the complement of an
// unknotted axis.
//
// The solid torus around the axis is cut open along a meridian disk (the
// seam) into a rectangle that is read left to right. Strands are numbered
// 1, 2, ... from the bottom at every column. Each event acts on the current
// stack of strands; the right edge re-glues to the left edge at equal
// heights. The axis itself is never a strand.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace satlink {

enum class EventKind : std::uint8_t { Cross, Cup, Cap, Kink };

/// Which strand of a crossing is on top: the one entering from the upper
/// position (gap + 1) or the one entering from the lower position (gap).
enum class Over : std::uint8_t { Upper, Lower };

struct Event {
  EventKind kind = EventKind::Cross;
  // Cross: gap g swaps strands g and g+1. Cup: new strands at p, p+1.
  // Cap: strands p, p+1 end. Kink: curl on strand p.
  std::size_t position = 1;
  Over over = Over::Upper;  // Cross only
  int sign = 1;             // Kink only, +1 or -1

  static Event cross(std::size_t gap, Over over) { return {EventKind::Cross, gap, over, 1}; }
  static Event cup(std::size_t pos) { return {EventKind::Cup, pos, Over::Upper, 1}; }
  static Event cap(std::size_t pos) { return {EventKind::Cap, pos, Over::Upper, 1}; }
  static Event kink(std::size_t pos, int sign) { return {EventKind::Kink, pos, Over::Upper, sign}; }

  friend bool operator==(const Event&, const Event&) = default;
};

/// Names the component through the strand at `position` (1-based) in column
/// `column` (0 = left edge, k = just after event k).
struct Label {
  std::string name;
  std::size_t column = 0;
  std::size_t position = 1;

  friend bool operator==(const Label&, const Label&) = default;
};

struct AnnularWord {
  std::vector<int> seam;  // orientation of each seam strand, +1 rightward / -1 leftward
  std::vector<Event> events;
  std::vector<Label> labels;

  std::size_t seam_width() const noexcept { return seam.size(); }

  friend bool operator==(const AnnularWord&, const AnnularWord&) = default;
};

class DiagramError : public std::runtime_error {
 public:
  enum class Kind { Syntax, StrandCountMismatch, SeamMismatch, UnknownLabel };

  DiagramError(Kind kind, std::string message, std::size_t line = 0, std::size_t column = 0);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

std::string_view to_string(DiagramError::Kind kind);

/// Strand count in column k (0 = seam). Throws DiagramError with kind
/// StrandCountMismatch / SeamMismatch on an ill-typed word; `lines` (optional)
/// maps event index -> source line for diagnostics.
std::vector<std::size_t> strand_counts(const AnnularWord& w,
                                       const std::vector<std::size_t>* lines = nullptr);

/// Parses the `annular v1` text format. Validates strand counts, seam
/// closure, orientability and labels.
AnnularWord parse_annular(std::string_view text);

/// Canonical text: header, seam, labels, then one event per line.
std::string serialize(const AnnularWord& w);

/// Concatenation of `copies` copies of the event list with the same seam and no
/// labels.
AnnularWord repeat_events(const AnnularWord& w, std::size_t copies);

}  // namespace satlink
