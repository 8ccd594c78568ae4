#include "satlink/obstruction.hpp"

#include <algorithm>

#include "satlink/cyclic_cover.hpp"

namespace satlink {

Rational cha_ko(const Rational& base_lk, const FramedLinkingMatrix& A, const IntVector& x, const IntVector& y) {
  const std::size_t n = A.A.rows();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("cha_ko: vector length does not match A");
  if (n == 0) return base_lk;
  if (det(A.A) == 0) throw NotRationalHomologySphere("surgery matrix is singular; the result is not a rational homology sphere");
  Rational out = base_lk - bilinear(x, inverse(A.A), y);
  out.canonicalize();
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

bool is_prime_power(std::size_t m) {
  if (m < 2) return false;
  std::size_t p = 2;
  while (m % p != 0) ++p;
  while (m % p == 0) m /= p;
  return m == 1;
}

namespace {

bool power_of_two(std::size_t m) { return m >= 2 && (m & (m - 1)) == 0; }

IntVector integral_row(const RationalMatrix& M, std::size_t row) {
  IntVector out(M.cols());
  for (std::size_t i = 0; i < M.cols(); ++i) {
    if (M(row, i).get_den() != 1) throw LinalgError("lifted linking with eta is not an integer");
    out[i] = M(row, i).get_num();
  }
  return out;
}

std::string join(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

// (lk - expected) * h1 is an even integer.
Check parity_check(std::string name, const Rational& lk, const Rational& expected, const Integer& h1) {
  Rational t = (lk - expected) * h1;
  t.canonicalize();
  const bool ok = t.get_den() == 1 && mpz_even_p(t.get_num().get_mpz_t());
  return {std::move(name), ok, "(lk - " + to_string(expected) + ") * |H1| = " + to_string(t)};
}

// Block b of a vector split into m blocks of size k.
IntVector block_of(const IntVector& v, std::size_t k, std::size_t b) {
  return IntVector(v.begin() + static_cast<std::ptrdiff_t>(b * k), v.begin() + static_cast<std::ptrdiff_t>((b + 1) * k));
}

IntVector negated_sum(const std::vector<IntVector>& parts, std::size_t k) {
  IntVector s(k);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < k; ++i) s[i] -= p[i];
  return s;
}

void shape_checks(std::vector<Check>& out, std::size_t m, std::size_t k, const IntVector& x, const IntVector& y) {
  if (k == 0) return;
  if (m == 2) {
    const IntVector v = block_of(x, k, 0);
    IntVector mv = v;
    for (auto& e : mv) e = -e;
    const bool ok = block_of(x, k, 1) == mv && block_of(y, k, 0) == mv && block_of(y, k, 1) == v;
    out.push_back({"vector_shape", ok, "x = " + join(x) + ", y = " + join(y) + "; expected x = (v,-v), y = (-v,v)"});
  } else if (m == 4) {
    const IntVector u = block_of(x, k, 0), v = block_of(x, k, 1), w = block_of(x, k, 2);
    const IntVector z = negated_sum({u, v, w}, k);
    const bool ok = block_of(x, k, 3) == z && block_of(y, k, 0) == w && block_of(y, k, 1) == z &&
                    block_of(y, k, 2) == u && block_of(y, k, 3) == v;
    out.push_back({"vector_shape", ok,
                   "x = " + join(x) + ", y = " + join(y) + "; expected x = (u,v,w,-u-v-w), y = (w,-u-v-w,u,v)"});
  }
}

Diagram checked_diagram(const ClaspPresentation& p, AnnularWord& word) {
  word = compile(p);
  Diagram d(word);
  ValidationReport r = validate(d);
  if (!r.ok()) {
    std::string msg = "pattern '" + p.name + "' fails validation:";
    for (const auto& f : r.findings)
      if (f.error) msg += " " + std::string(to_string(f.code)) + "(" + f.component + ": " + f.detail + ")";
    throw InvalidPattern(msg, std::move(r));
  }
  return d;
}

}  // namespace

ObstructionReport branched_linkings(const ClaspPresentation& p, std::size_t m, const LinkingOptions& opts) {
  if (m == 0 || p.n % m != 0) {
    throw std::invalid_argument("branched_linkings: m = " + std::to_string(m) + " does not divide n = " + std::to_string(p.n));
  }
  AnnularWord word;
  const Diagram base = checked_diagram(p, word);
  const CoverDiagram cd = build_cover(word, m);
  const LiftedData lifted = lifted_linking_matrix(cd);
  const FramedLinkingMatrix A{lifted.A, lifted.labels};
  const std::size_t k = surgery_components(base).size();
  const std::size_t s = opts.preferred_shift % m;

  ObstructionReport r;
  r.m = m;
  const IntVector x = integral_row(lifted.eta_vs_L, s);
  for (std::size_t j = 1; j < m; ++j) {
    const IntVector y = integral_row(lifted.eta_vs_L, (s + j) % m);
    r.linkings.push_back(cha_ko(lifted.eta_lk(s, (s + j) % m), A, x, y));
  }
  if (k == 0) {
    r.h1_order = 1;
    r.eta_order = 1;
  } else {
    r.h1_order = abs(det(A.A));
    const Order o = order_in_quotient(A.A, x);
    if (!std::holds_alternative<Integer>(o)) throw NotRationalHomologySphere("eta has infinite order");
    r.eta_order = std::get<Integer>(o);
  }

  auto& c = r.checks;
  c.push_back({"matrix_symmetric", A.A.symmetric(), std::to_string(A.A.rows()) + "x" + std::to_string(A.A.cols())});
  if (k > 0) {
    const auto split = block_circulant_split(A.A, m);
    std::string detail = "blocks of size " + std::to_string(k);
    if (const auto* bad = std::get_if<NotBlockCirculant>(&split)) {
      detail = "block (" + std::to_string(bad->block_row) + "," + std::to_string(bad->block_col) + ") differs from block (0," +
               std::to_string(bad->reference_col) + ")";
    }
    c.push_back({"block_circulant", std::holds_alternative<std::vector<IntMatrix>>(split), detail});

    // Sum rule: lifts of an eps-framed curve with winding 0 add up to m * eps.
    bool ok = true;
    std::string detail_sum;
    const auto surgery = surgery_components(base);
    for (std::size_t i = 0; i < k; ++i) {
      Integer total = 0;
      for (std::size_t a = 0; a < m; ++a) {
        total += A.A(a * k + i, a * k + i);
        for (std::size_t b = a + 1; b < m; ++b) total += 2 * A.A(a * k + i, b * k + i);
      }
      const Integer want = base.framing(surgery[i]) * static_cast<long>(m);
      if (total != want) {
        ok = false;
        detail_sum += base.name(surgery[i]) + ": " + to_string(total) + " != " + to_string(want) + "; ";
      }
    }
    c.push_back({"framing_sum_rule", ok, ok ? "all lifts sum to m * framing" : detail_sum});
  }
  bool palindrome = true;
  for (std::size_t j = 1; j < m; ++j) palindrome = palindrome && r.linkings[j - 1] == r.linkings[m - j - 1];
  c.push_back({"linkings_palindromic", palindrome, "lk(t^k) = lk(t^(m-k))"});
  if (power_of_two(m)) {
    c.push_back({"h1_odd", mpz_odd_p(r.h1_order.get_mpz_t()) != 0, "|H1| = " + to_string(r.h1_order)});
  }
  if (m == 2) c.push_back(parity_check("parity_m2", r.linkings[0], make_rational(Integer(static_cast<long>(p.n)), 2), r.h1_order));
  if (m == 4) c.push_back(parity_check("parity_m4", r.linkings[1], make_rational(Integer(static_cast<long>(p.n)), 4), r.h1_order));
  if (m == 2 || m == 4) shape_checks(c, m, k, x, integral_row(lifted.eta_vs_L, (s + m / 2) % m));
  return r;
}

ObstructionReport verdict(const ClaspPresentation& p, std::size_t m) {
  if (m < 2) throw std::invalid_argument("verdict: m must be at least 2");
  if (!is_prime_power(m) || p.n % m != 0) {
    ObstructionReport r;
    r.m = m;
    r.reason1 = r.reason2 = !is_prime_power(m) ? "m = " + std::to_string(m) + " is not a prime power"
                                               : "m = " + std::to_string(m) + " does not divide n = " + std::to_string(p.n);
    return r;
  }
  ObstructionReport r = branched_linkings(p, m);
  r.condition1 = mpz_odd_p(r.eta_order.get_mpz_t()) != 0;
  r.reason1 = "eta has order " + to_string(r.eta_order) + (r.condition1 ? " (odd)" : " (even)");
  const bool all_zero = std::all_of(r.linkings.begin(), r.linkings.end(), [](const Rational& q) { return q == 0; });
  const bool nonneg = std::all_of(r.linkings.begin(), r.linkings.end(), [](const Rational& q) { return q >= 0; });
  const bool nonpos = std::all_of(r.linkings.begin(), r.linkings.end(), [](const Rational& q) { return q <= 0; });
  if (all_zero) {
    r.reason2 = "condition (2) fails: all zero";
  } else if (nonneg || nonpos) {
    r.condition2 = true;
    r.reason2 = nonneg ? "linkings non-negative, not all zero" : "linkings non-positive, not all zero";
  } else {
    r.reason2 = "condition (2) fails: mixed signs";
  }
  r.verdict = r.condition1 && r.condition2 ? Verdict::Obstructed : Verdict::Inconclusive;
  return r;
}

AggregateReport auto_verdict(const ClaspPresentation& p, const std::vector<std::size_t>& m_list) {
  AggregateReport out;
  out.pattern = p.name;
  out.n = p.n;
  for (std::size_t m : m_list) {
    out.per_m.push_back(verdict(p, m));
    const Verdict v = out.per_m.back().verdict;
    if (v == Verdict::Obstructed) out.aggregate = Verdict::Obstructed;
    else if (v == Verdict::Inconclusive && out.aggregate == Verdict::NotApplicable) out.aggregate = Verdict::Inconclusive;
  }
  return out;
}

namespace {

std::string join(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

std::vector<Check> cross_checks(const ClaspPresentation& p) {
  std::vector<Check> out;
  std::vector<std::pair<std::size_t, ObstructionReport>> reports;
  for (std::size_t m : {2, 4, 8})
    if (p.n % m == 0) reports.emplace_back(m, branched_linkings(p, m));
  auto find = [&](std::size_t m) -> const ObstructionReport* {
    for (const auto& [mm, r] : reports)
      if (mm == m) return &r;
    return nullptr;
  };

  const auto* r2 = find(2);
  const auto* r4 = find(4);
  if (r2 && r4) {
    const Rational twice = 2 * r4->linkings[0];
    out.push_back({"two_four_identity", r2->linkings[0] == twice,
                   "lk_2 = " + to_string(r2->linkings[0]) + ", 2 * lk_4(1,2) = " + to_string(twice)});
    out.push_back({"h1_divides", r4->h1_order % r2->h1_order == 0,
                   "|H1| at m=2: " + to_string(r2->h1_order) + ", at m=4: " + to_string(r4->h1_order)});
  }
  for (const auto& [m, r] : reports) {
    for (const auto& c : r.checks) {
      if (c.name == "h1_odd" || c.name == "parity_m2" || c.name == "parity_m4") {
        out.push_back({c.name + "@m=" + std::to_string(m), c.pass, c.detail});
      }
    }
  }
  for (const auto& [m, r] : reports) {
    if (m > 4) continue;
    const ObstructionReport shifted = branched_linkings(p, m, LinkingOptions{1});
    out.push_back({"deck_relabel@m=" + std::to_string(m), shifted.linkings == r.linkings,
                   join(r.linkings) + " vs " + join(shifted.linkings)});
  }
  {
    ClaspSpec tmpl;
    tmpl.slot = 0;
    tmpl.gap_enter = 0;
    tmpl.gap_exit = 1;
    tmpl.weave = {Pass::Over, Pass::Over};
    const ClaspPresentation q = add_cancelling_pair(p, tmpl);
    for (const auto& [m, r] : reports) {
      if (m > 4) continue;
      const ObstructionReport rq = branched_linkings(q, m);
      out.push_back({"cancelling_pair@m=" + std::to_string(m), rq.linkings == r.linkings,
                     join(r.linkings) + " vs " + join(rq.linkings)});
    }
  }
  return out;
}

}  // namespace satlink
