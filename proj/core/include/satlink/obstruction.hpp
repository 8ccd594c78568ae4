#pragma once

// Linking numbers of the lifted meridian in branched covers of a pattern's
// image of the unknot, and the odd-order / uniform-sign test built on them.
//
// Pipeline for a presentation p and a cover degree m dividing n:
//   compile -> build_cover -> lifted surgery matrix A, vectors x, y
//   lk(eta, t^k eta) = lk_cover(eta.s, eta.s+k) - x^T A^{-1} y
// with s the preferred copy (0 unless a relabelling test asks otherwise).
// |H_1| = |det A| and the order of eta is the order of x in coker A.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "satlink/clasp_presentation.hpp"
#include "satlink/exact_linalg.hpp"

namespace satlink {

struct FramedLinkingMatrix {
  IntMatrix A;
  std::vector<std::string> labels;
};

class NotRationalHomologySphere : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The compiled word failed validation; the findings are in the message.
class InvalidPattern : public std::invalid_argument {
 public:
  InvalidPattern(std::string message, ValidationReport report)
      : std::invalid_argument(std::move(message)), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// lk_Y(a, b) = base_lk - x^T A^{-1} y. Throws NotRationalHomologySphere when
/// det A = 0.
Rational cha_ko(const Rational& base_lk, const FramedLinkingMatrix& A, const IntVector& x, const IntVector& y);

enum class Verdict { Obstructed, Inconclusive, NotApplicable };
std::string_view to_string(Verdict v);

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
  // Hard checks encode facts that hold for every valid input; a failure
  // means a bug, not a property of the pattern.
  bool hard = true;
};

struct ObstructionReport {
  std::size_t m = 0;
  std::vector<Rational> linkings;  // k = 1..m-1
  Integer h1_order = 0;
  Integer eta_order = 0;
  bool condition1 = false;
  std::string reason1;
  bool condition2 = false;
  std::string reason2;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<Check> checks;
};

struct LinkingOptions {
  std::size_t preferred_shift = 0;  // use lift s of eta as the base lift
};

bool is_prime_power(std::size_t m);

/// Fills m, linkings, h1_order, eta_order, plus the per-cover structural
/// checks. Requires m >= 1 dividing n and a valid compiled word (throws
/// InvalidPattern otherwise).
ObstructionReport branched_linkings(const ClaspPresentation& p, std::size_t m, const LinkingOptions& opts = {});

/// branched_linkings plus both conditions and the verdict.
ObstructionReport verdict(const ClaspPresentation& p, std::size_t m);

struct AggregateReport {
  std::string pattern;
  std::size_t n = 0;
  std::vector<ObstructionReport> per_m;
  Verdict aggregate = Verdict::NotApplicable;
};

/// Obstructed if any m obstructs; Inconclusive if some m applied; otherwise
/// NotApplicable.
AggregateReport auto_verdict(const ClaspPresentation& p, const std::vector<std::size_t>& m_list = {2, 4});

/// Checks tying different covers together: the 2-vs-4 linking identity,
/// oddness and divisibility of |H_1|, parity forms, invariance under moving
/// the preferred lift and under adding a cancelling clasp pair.
std::vector<Check> cross_checks(const ClaspPresentation& p);

}  // namespace satlink
