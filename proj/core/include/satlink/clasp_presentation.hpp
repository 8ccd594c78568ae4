#pragma once

// A pattern given as the (n,1)-cable plus +-1-framed clasp curves.
//
// Layout of a compiled word (positions from the bottom):
//   1..n            strands of eta, closing up as the positive one-shift braid
//                   x 1 under, x 2 under, ..., x n-1 under
//   n+2i-1, n+2i    the two parked arms of clasp i (1-based), oriented
//                   (sign, -sign) at the seam
//
// A clasp's gadget is spliced in before template crossing `slot`:
//   1. its arms drop as a ribbon, passing under everything, until they sit in
//      gap `enter` of the eta strands;
//   2. one arm makes an excursion to gap `exit` and back, crossing each eta
//      strand in between once on the way out and once on the way back; weave
//      character j says whether the arm passes over ('o') or under ('u') at the
//      j-th of these crossings (first the outward ones, then the return ones);
//      the framing is carried by kinks at the tip of the excursion;
//   3. the arms are capped off and re-born (so the clasp is one closed curve);
//   4. the ribbon climbs back to its parking place, again passing under.
// The arms cross the seam once in each direction, so winding is 0 and
// wrapping 2. The clasp links eta zero times iff the weave has as many 'o' in
// its outward half as in its return half.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "satlink/annular_word.hpp"
#include "satlink/diagram.hpp"

namespace satlink {

enum class Pass : std::uint8_t { Over, Under };

struct ClaspSpec {
  std::size_t slot = 0;       // 0..n-1
  std::size_t gap_enter = 0;  // 0..n
  std::size_t gap_exit = 0;   // 0..n
  std::vector<Pass> weave;    // 2 * |gap_exit - gap_enter| entries
  int clasp_sign = 1;         // orientation of the lower parked arm
  int framing = 1;

  friend bool operator==(const ClaspSpec&, const ClaspSpec&) = default;
};

struct ClaspPresentation {
  std::string name = "pattern";
  std::size_t n = 2;
  std::vector<ClaspSpec> clasps;

  friend bool operator==(const ClaspPresentation&, const ClaspPresentation&) = default;
};

class PresentationError : public std::runtime_error {
 public:
  enum class Kind { Syntax, WindingTooSmall, SlotOutOfRange, GapOutOfRange, WeaveMismatch };
  PresentationError(Kind kind, std::string message, std::size_t line = 0, std::size_t column = 0);
  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

std::string_view to_string(PresentationError::Kind kind);

std::string weave_to_string(const std::vector<Pass>& weave);
std::vector<Pass> weave_from_string(std::string_view text);

/// True when the outward and return halves contain the same number of 'o'.
bool weave_balanced(const std::vector<Pass>& weave);

/// n strands of eta closing up as the positive one-shift braid; one component
/// named "eta" with winding n. n >= 1.
AnnularWord cable_template(std::size_t n);

/// Deterministic compiler; see the layout notes above. Components are named
/// "eta", "L1", ..., "Lk".
AnnularWord compile(const ClaspPresentation& p);

/// Name of the i-th (0-based) clasp component.
std::string clasp_name(std::size_t i);

struct Finding {
  enum class Code {
    NoEta,
    WindingNonzero,
    EtaLinkingNonzero,
    FramingNotUnit,
    WrappingNotTwo,
    ClaspLinkingNonzero,
  };
  Code code;
  bool error = true;  // false: warning only
  std::string component;
  std::string detail;
};

std::string_view to_string(Finding::Code code);

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const;
  bool has(Finding::Code code) const;
};

/// Checks every non-eta component against the standing hypotheses for
/// crossing-change curves: winding 0, zero linking with eta, framing +-1.
/// Wrapping other than 2 and mutual clasp linking are warnings.
ValidationReport validate(const AnnularWord& w);
ValidationReport validate(const Diagram& d);

/// Appends two copies of `tmpl`, the second with opposite clasp_sign and
/// framing. Surgery on the pair cancels.
ClaspPresentation add_cancelling_pair(ClaspPresentation p, const ClaspSpec& tmpl);

/// k clasps drawn from a mt19937_64 seeded with `seed`. Weaves are balanced,
/// framings +-1.
ClaspPresentation random_presentation(std::size_t n, std::size_t k, std::uint64_t seed);

/// `pattern v1` text format.
ClaspPresentation parse_pattern(std::string_view text);
std::string serialize(const ClaspPresentation& p);

/// JSON mirror: {"name", "cable", "clasps": [{"slot", "enter", "exit",
/// "weave", "sign", "framing"}]}.
ClaspPresentation pattern_from_json(std::string_view json_text);
std::string pattern_to_json(const ClaspPresentation& p);

/// Range and shape checks; throws PresentationError.
void check_presentation(const ClaspPresentation& p);

}  // namespace satlink
