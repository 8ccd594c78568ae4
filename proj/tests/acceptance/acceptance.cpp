// Acceptance criteria 1-8, one PASS/FAIL line each; exit 1 if any failed.
// An argument N runs criterion N alone. Each criterion seeds its own RNG, so
// results do not depend on which others ran.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "satlink/catalog.hpp"
#include "satlink/cyclic_cover.hpp"
#include "satlink/diagram.hpp"
#include "satlink/downhill.hpp"
#include "satlink/obstruction.hpp"

using namespace satlink;

namespace {

std::uint64_t seed() {
  if (const char* s = std::getenv("HEDDEN_SEED"); s && *s) return std::strtoull(s, nullptr, 0);
  return 20240229;
}

Rational q(long a, long b = 1) { return make_rational(a, b); }

std::string show(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

// Throws a string describing the first failure.
struct Fail {
  std::string why;
};
void require(bool ok, const std::string& why) {
  if (!ok) throw Fail{why};
}

void hard_checks(const ObstructionReport& r, const std::string& who) {
  for (const auto& c : r.checks) require(!c.hard || c.pass, who + ": " + c.name + " " + c.detail);
}

std::string cable_goldens() {
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t m = 2; m <= n; ++m) {
      if (n % m) continue;
      const auto r = branched_linkings(catalog::cable(n), m);
      for (const auto& v : r.linkings)
        require(v == q(long(n), long(m)), "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + show(r.linkings));
      ++cases;
    }
  require(branched_linkings(catalog::cable(6), 2).linkings == std::vector<Rational>{q(3)}, "n=6 m=2");
  require(branched_linkings(catalog::cable(8), 4).linkings == std::vector<Rational>(3, q(2)), "n=8 m=4");
  return std::to_string(cases) + " (n, m) pairs";
}

bool equal_up_to_reversal(const std::vector<Rational>& got, const std::vector<Rational>& want) {
  return got == want || std::vector<Rational>(got.rbegin(), got.rend()) == want;
}

std::string winding8() {
  const auto a = auto_verdict(catalog::winding8_inconclusive(), {2, 4, 8});
  require(a.per_m.size() == 3, "three covers");
  require(a.per_m[0].linkings == std::vector<Rational>{q(0)}, "m=2 " + show(a.per_m[0].linkings));
  // k = 1, 2 (k = 3 mirrors k = 1)
  require(a.per_m[1].linkings[0] == 0 && a.per_m[1].linkings[1] == 0, "m=4 " + show(a.per_m[1].linkings));
  const std::vector<Rational> m8{q(1), q(0), q(-1), q(-1), q(-1), q(0), q(1)};
  require(equal_up_to_reversal(a.per_m[2].linkings, m8), "m=8 " + show(a.per_m[2].linkings));
  for (const auto& r : a.per_m) {
    require(r.verdict == Verdict::Inconclusive, "m=" + std::to_string(r.m) + " " + std::string(to_string(r.verdict)));
    hard_checks(r, "m=" + std::to_string(r.m));
  }
  require(a.aggregate == Verdict::Inconclusive, "aggregate");
  return "m=2 " + show(a.per_m[0].linkings) + ", m=4 " + show(a.per_m[1].linkings) + ", m=8 " + show(a.per_m[2].linkings);
}

std::string sweep_two_mod_four(std::mt19937_64& rng) {
  const std::size_t ns[] = {2, 6, 10};
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = ns[rng() % 3];
    const auto p = random_presentation(n, rng() % 7, rng());
    const auto r = verdict(p, 2);
    const std::string who = p.name + " (n=" + std::to_string(n) + ", " + std::to_string(p.clasps.size()) + " clasps)";
    require(r.verdict == Verdict::Obstructed, who + " " + std::string(to_string(r.verdict)));
    require(r.h1_order % 2 != 0, who + " |H1| = " + to_string(r.h1_order));
    const Rational t = (r.linkings[0] - q(long(n), 2)) * Rational(r.h1_order);
    require(t.get_den() == 1 && t.get_num() % 2 == 0, who + " (lk - n/2)|H1| = " + to_string(t));
    hard_checks(r, who);
  }
  return "200 presentations";
}

std::string sweep_four_mod_eight(std::mt19937_64& rng) {
  std::size_t via4 = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng() % 2 ? 4 : 12;
    const auto p = random_presentation(n, rng() % 7, rng());
    const auto a = auto_verdict(p, {2, 4});
    const std::string who = p.name + " (n=" + std::to_string(n) + ")";
    require(a.aggregate == Verdict::Obstructed, who + " not obstructed");
    const auto& two = a.per_m[0];
    const auto& four = a.per_m[1];
    hard_checks(two, who);
    hard_checks(four, who);
    if (two.linkings[0] == 0) {
      ++via4;
      require(four.linkings[0] == 0, who + " lk4(1,2) = " + to_string(four.linkings[0]));
      require(four.linkings[1] != 0, who + " lk4(1,3) = 0");
    }
  }
  return "200 presentations, " + std::to_string(via4) + " with lk2 = 0";
}

std::string two_four_identity(std::mt19937_64& rng) {
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 4 * (1 + rng() % 3);
    const auto p = random_presentation(n, rng() % 7, rng());
    const auto two = branched_linkings(p, 2);
    const auto four = branched_linkings(p, 4);
    require(two.linkings[0] == 2 * four.linkings[0],
            p.name + ": lk2 = " + to_string(two.linkings[0]) + ", lk4 = " + to_string(four.linkings[0]));
  }
  return "100 presentations, n in {4,8,12}";
}

void check_structure(const ClaspPresentation& p, std::size_t m) {
  const auto r = branched_linkings(p, m);
  const CoverDiagram cd = build_cover(compile(p), m);
  const LiftedData ld = lifted_linking_matrix(cd);
  const std::string who = p.name + " m=" + std::to_string(m);
  require(ld.A.symmetric(), who + " A not symmetric");
  if (!p.clasps.empty())
    require(std::holds_alternative<std::vector<IntMatrix>>(block_circulant_split(ld.A, m)), who + " A not block circulant");
  for (std::size_t k = 1; k < m; ++k) require(r.linkings[k - 1] == r.linkings[m - 1 - k], who + " not palindromic");
  // x and y shapes: columns of eta_vs_L grouped by copy.
  const std::size_t kk = p.clasps.size();
  auto x_block = [&](std::size_t row, std::size_t copy) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < kk; ++i) v.push_back(ld.eta_vs_L(row, copy * kk + i));
    return v;
  };
  auto neg = [](std::vector<Rational> v) {
    for (auto& e : v) e = -e;
    return v;
  };
  if (m == 2) {
    const auto v = x_block(0, 0);
    require(x_block(0, 1) == neg(v), who + " x not (v,-v)");
    require(x_block(1, 0) == neg(v) && x_block(1, 1) == v, who + " y not (-v,v)");
  }
  if (m == 4) {
    const auto u = x_block(0, 0), v = x_block(0, 1), w = x_block(0, 2), z = x_block(0, 3);
    for (std::size_t i = 0; i < kk; ++i) require(u[i] + v[i] + w[i] + z[i] == 0, who + " x does not sum to 0");
    // the partner row two copies on is x shifted by two blocks
    require(x_block(2, 0) == w && x_block(2, 1) == z && x_block(2, 2) == u && x_block(2, 3) == v, who + " y shape");
  }
}

std::string structural(std::mt19937_64& rng) {
  std::size_t count = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 11;
    const auto p = random_presentation(n, rng() % 7, rng());
    for (std::size_t m : {2, 3, 4, 6, 8})
      if (n % m == 0) {
        check_structure(p, m);
        ++count;
      }
  }
  check_structure(catalog::winding8_inconclusive(), 8);
  return std::to_string(count + 1) + " (pattern, m) instances";
}

std::string differential(std::mt19937_64& rng) {
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 * (1 + rng() % 4);
    const auto p = random_presentation(n, rng() % 5, rng());
    const std::size_t m = (n % 4 == 0 && rng() % 2) ? 4 : 2;
    const auto base = branched_linkings(p, m);
    // cancelling pair, random template from a one-clasp presentation
    const auto t = random_presentation(n, 1, rng()).clasps.front();
    const auto padded = branched_linkings(add_cancelling_pair(p, t), m);
    require(padded.linkings == base.linkings, p.name + " cancelling pair " + show(base.linkings) + " vs " + show(padded.linkings));
    for (std::size_t s = 1; s < m; ++s) {
      const auto moved = branched_linkings(p, m, LinkingOptions{s});
      require(moved.linkings == base.linkings, p.name + " relabel s=" + std::to_string(s));
    }
  }
  // zero-clasp: Cha-Ko with an empty surgery link vs counting crossings directly
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t m = 2; m <= n; ++m) {
      if (n % m) continue;
      const auto r = branched_linkings(catalog::cable(n), m);
      const CoverDiagram cd = build_cover(cable_template(n), m);
      for (std::size_t k = 1; k < m; ++k) {
        const Rational direct = cd.cover.linking(cd.lift(ComponentId{0}, 0), cd.lift(ComponentId{0}, k));
        require(direct == r.linkings[k - 1], "cable " + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  return "100 presentations; cable covers n <= 12";
}

std::string normalizer(std::mt19937_64& rng) {
  std::size_t flips = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t s = rng();
    const AnnularWord w = random_pattern_word(6, s);
    const std::string who = "word seed " + std::to_string(s);
    const Diagram d(w);
    require(d.component_count() == 1 && d.winding(ComponentId{0}) == 6, who + " not a winding-6 knot");
    const auto dh = force_downhill(w);
    require(is_downhill(dh.word), who + " not downhill after force_downhill");
    const AnnularWord straight = reduce_returning(dh.word);
    const Diagram sd(straight);
    require(sd.wrapping(ComponentId{0}) == 6 && sd.winding(ComponentId{0}) == 6, who + " wrapping != winding");
    const Normalization nz = normalize(w);
    flips += nz.changes.size();
    require(validate(compile(nz.presentation)).ok(), who + " emitted presentation invalid");
    require(auto_verdict(nz.presentation).aggregate == Verdict::Obstructed, who + " not obstructed");
  }
  return "100 words, " + std::to_string(flips) + " crossing changes";
}

}  // namespace

int main(int argc, char** argv) {
  using Sweep = std::string (*)(std::mt19937_64&);
  struct Criterion {
    const char* name;
    Sweep run;
  };
  const std::vector<Criterion> criteria{
      {"1 cable goldens", [](std::mt19937_64&) { return cable_goldens(); }},
      {"2 winding-8 inconclusive pattern", [](std::mt19937_64&) { return winding8(); }},
      {"3 winding 2 mod 4 sweep", sweep_two_mod_four},
      {"4 winding 4 mod 8 sweep", sweep_four_mod_eight},
      {"5 m=2 vs m=4 identity", two_four_identity},
      {"6 structural invariants", structural},
      {"7 differential tests", differential},
      {"8 normalizer", normalizer},
  };
  std::size_t only = 0;
  if (argc > 1) {
    only = std::strtoul(argv[1], nullptr, 10);
    if (only < 1 || only > criteria.size()) {
      std::cerr << "usage: " << argv[0] << " [1-" << criteria.size() << "]\n";
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && i + 1 != only) continue;
    const auto& c = criteria[i];
    std::mt19937_64 rng(seed() + i);
    const auto t0 = std::chrono::steady_clock::now();
    std::string line;
    bool ok = false;
    try {
      line = c.run(rng);
      ok = true;
    } catch (const Fail& f) {
      line = f.why;
    } catch (const std::exception& e) {
      line = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream timing;
    timing.precision(0);
    timing << std::fixed << ms << " ms";
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << " [" << line << "] " << timing.str() << std::endl;
    failed += !ok;
    ++ran;
  }
  std::cout << (failed ? "FAILED " : "passed ") << ran - failed << "/" << ran << " (seed " << seed() << ")\n";
  return failed ? 1 : 0;
}
