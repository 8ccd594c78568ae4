// Golden values and invariant sweeps at fixed seeds. Smaller than the
// acceptance suite; meant as a quick health check of an installed binary.

#include <ostream>
#include <random>

#include "commands.hpp"
#include "satlink/catalog.hpp"
#include "satlink/cyclic_cover.hpp"
#include "satlink/downhill.hpp"
#include "satlink/obstruction.hpp"

namespace satlink::cli {

namespace {

std::string vec(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

bool hard_checks_pass(const ObstructionReport& r, std::string& why) {
  for (const auto& c : r.checks)
    if (c.hard && !c.pass) {
      why = c.name + ": " + c.detail;
      return false;
    }
  return true;
}

std::vector<Check> run_selftest(std::uint64_t seed) {
  std::vector<Check> out;

  {
    bool ok = true;
    std::string detail = "n <= 12, every m | n";
    for (std::size_t n = 2; n <= 12 && ok; ++n)
      for (std::size_t m = 2; m <= n && ok; ++m) {
        if (n % m) continue;
        const auto r = branched_linkings(catalog::cable(n), m);
        for (const auto& q : r.linkings)
          if (q != make_rational(Integer(static_cast<long>(n)), Integer(static_cast<long>(m)))) {
            ok = false;
            detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + vec(r.linkings);
          }
      }
    out.push_back({"cable linkings are n/m", ok, detail});
  }
  {
    const auto r = branched_linkings(catalog::cable(6), 2);
    out.push_back({"cable 6, m=2: linking 3", r.linkings == ints({3}), vec(r.linkings)});
    const auto r4 = branched_linkings(catalog::cable(8), 4);
    out.push_back({"cable 8, m=4: linkings 2", r4.linkings == ints({2, 2, 2}), vec(r4.linkings)});
  }
  {
    const ClaspPresentation p = catalog::winding8_inconclusive();
    const AggregateReport a = auto_verdict(p, {2, 4, 8});
    const bool ok = a.per_m[0].linkings == ints({0}) && a.per_m[1].linkings == ints({0, 0, 0}) &&
                    a.per_m[2].linkings == ints({1, 0, -1, -1, -1, 0, 1}) && a.aggregate == Verdict::Inconclusive &&
                    a.per_m[0].verdict == Verdict::Inconclusive && a.per_m[1].verdict == Verdict::Inconclusive &&
                    a.per_m[2].verdict == Verdict::Inconclusive;
    out.push_back({"winding-8 pattern inconclusive at m = 2, 4, 8", ok,
                   vec(a.per_m[0].linkings) + " " + vec(a.per_m[1].linkings) + " " + vec(a.per_m[2].linkings)});
  }
  {
    const Rational v = cha_ko(0, FramedLinkingMatrix{IntMatrix{{1}}, {"K"}}, {1}, {1});
    out.push_back({"blow-down of a +1 unknot", v == -1, to_string(v)});
  }

  std::mt19937_64 rng(seed);
  {
    bool ok = true;
    std::string detail = "20 presentations, n in {2,6,10}";
    for (int i = 0; i < 20 && ok; ++i) {
      const std::size_t n = std::array<std::size_t, 3>{2, 6, 10}[rng() % 3];
      const auto p = random_presentation(n, rng() % 7, rng());
      const auto r = verdict(p, 2);
      std::string why;
      if (r.verdict != Verdict::Obstructed || !hard_checks_pass(r, why)) {
        ok = false;
        detail = p.name + ": " + std::string(to_string(r.verdict)) + " " + why;
      }
    }
    out.push_back({"winding 2 mod 4 obstructed at m=2", ok, detail});
  }
  {
    bool ok = true;
    std::string detail = "20 presentations, n in {4,12}";
    for (int i = 0; i < 20 && ok; ++i) {
      const std::size_t n = rng() % 2 ? 4 : 12;
      const auto p = random_presentation(n, rng() % 7, rng());
      const auto a = auto_verdict(p, {2, 4});
      if (a.aggregate != Verdict::Obstructed) {
        ok = false;
        detail = p.name + " not obstructed";
      }
      for (const auto& c : cross_checks(p))
        if (!c.pass) {
          ok = false;
          detail = p.name + ": " + c.name + " " + c.detail;
        }
    }
    out.push_back({"winding 4 mod 8 obstructed at m=2 or 4; cross-checks", ok, detail});
  }
  {
    bool ok = true;
    std::string detail = "10 words of winding 6";
    for (int i = 0; i < 10 && ok; ++i) {
      const AnnularWord w = random_pattern_word(6, rng());
      const Normalization nz = normalize(w);
      const bool downhill = is_downhill(nz.downhill, nz.orientation == Handedness::Standard
                                                          ? Direction::WithOrientation
                                                          : Direction::AgainstOrientation);
      const bool tight = nz.straightened.seam.size() == 6;
      const bool valid = validate(compile(nz.presentation)).ok();
      const bool obstructed = auto_verdict(nz.presentation).aggregate == Verdict::Obstructed;
      if (!(downhill && tight && valid && obstructed)) {
        ok = false;
        detail = "word " + std::to_string(i) + ": downhill " + std::to_string(downhill) + ", tight " +
                 std::to_string(tight) + ", valid " + std::to_string(valid) + ", obstructed " + std::to_string(obstructed);
      }
    }
    out.push_back({"normalizer reaches an obstructed cable presentation", ok, detail});
  }
  return out;
}

}  // namespace

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto checks = run_selftest(cfg.seed);
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass || !c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  out << (all ? "selftest passed" : "selftest FAILED") << " (seed " << cfg.seed << ")\n";
  return all ? kOk : kInternal;
}

}  // namespace satlink::cli
