#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "common.hpp"
#include "satlink/exact_linalg.hpp"

using namespace satlink;
using satlink::test::random_matrix;

namespace {

// Leibniz formula; the oracle for det.
Integer permutation_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) sign = -sign;
    Integer term = sign;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// k*x lies in the column span iff every Cramer numerator is divisible by det.
bool in_lattice(const IntMatrix& m, const IntVector& v, const Integer& d) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    IntMatrix mc = m;
    for (std::size_t r = 0; r < m.rows(); ++r) mc(r, c) = v[r];
    if (permutation_det(mc) % d != 0) return false;
  }
  return true;
}

Integer enumerate_order(const IntMatrix& m, const IntVector& x) {
  const Integer d = abs(permutation_det(m));
  for (Integer k = 1; k <= d; ++k) {
    IntVector kx = x;
    for (auto& e : kx) e *= k;
    if (in_lattice(m, kx, d)) return k;
  }
  return -1;
}

}  // namespace

TEST_CASE("rationals are canonical and round-trip through text") {
  CHECK(make_rational(4, -6) == Rational(-2, 3));
  CHECK(make_rational(4, -6).get_den() == 3);
  CHECK(to_string(make_rational(6, 3)) == "2");
  CHECK(to_string(make_rational(-1, 4)) == "-1/4");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("det agrees with the permutation expansion") {
  std::mt19937_64 rng(test::seed());
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, n, n, -4, 4);
    CHECK(det(m) == permutation_det(m));
  }
  CHECK(det(IntMatrix{}) == 1);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), NonSquareError);
}

TEST_CASE("inverse and adjugate") {
  SUBCASE("2x2 closed form") {
    const IntMatrix m{{3, 5}, {1, 2}};
    CHECK(adjugate(m) == IntMatrix{{2, -5}, {-1, 3}});
    CHECK(inverse(m) == RationalMatrix{{2, -5}, {-1, 3}});
    const IntMatrix s{{2, 1}, {1, 2}};
    CHECK(inverse(s) == RationalMatrix{{make_rational(2, 3), make_rational(-1, 3)}, {make_rational(-1, 3), make_rational(2, 3)}});
  }
  SUBCASE("M * M^-1 = I and denominators divide det") {
    std::mt19937_64 rng(test::seed() + 1);
    int done = 0;
    while (done < 100) {
      const std::size_t n = 1 + rng() % 5;
      const IntMatrix m = random_matrix(rng, n, n, -5, 5);
      const Integer d = permutation_det(m);
      if (d == 0) {
        CHECK_THROWS_AS(inverse(m), SingularError);
        continue;
      }
      const RationalMatrix inv = inverse(m);
      CHECK(to_rational(m) * inv == RationalMatrix::identity(n));
      for (const auto& e : inv.entries()) CHECK(d % e.get_den() == 0);
      CHECK(m * adjugate(m) == [&] {
        IntMatrix di = IntMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) di(i, i) = d;
        return di;
      }());
      ++done;
    }
  }
}

TEST_CASE("Smith normal form") {
  std::mt19937_64 rng(test::seed() + 2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, r, c, -6, 6);
    const SmithForm s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(permutation_det(s.u)) == 1);
    CHECK(abs(permutation_det(s.v)) == 1);
    const auto f = invariant_factors(m);
    REQUIRE(f.size() == std::min(r, c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i] >= 0);
      CHECK(f[i] == s.d(i, i));
      if (i + 1 < f.size() && f[i] != 0) CHECK(f[i + 1] % f[i] == 0);
      if (f[i] == 0 && i + 1 < f.size()) CHECK(f[i + 1] == 0);
    }
    if (r == c) {
      Integer prod = 1;
      for (const auto& e : f) prod *= e;
      CHECK(prod == abs(permutation_det(m)));
    }
  }
  CHECK(invariant_factors(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(invariant_factors(IntMatrix{{2, 4}, {6, 8}}) == std::vector<Integer>{2, 4});
}

TEST_CASE("element order in the cokernel matches enumeration") {
  std::mt19937_64 rng(test::seed() + 3);
  int done = 0;
  while (done < 150) {
    const std::size_t n = 1 + rng() % 3;
    const IntMatrix m = random_matrix(rng, n, n, -4, 4);
    if (permutation_det(m) == 0) continue;
    IntVector x(n);
    for (auto& e : x) e = static_cast<long>(rng() % 7) - 3;
    const Order o = order_in_quotient(m, x);
    REQUIRE(std::holds_alternative<Integer>(o));
    CHECK(std::get<Integer>(o) == enumerate_order(m, x));
    ++done;
  }
  const IntMatrix degenerate{{2, 0}, {0, 0}};
  CHECK(std::get<Integer>(order_in_quotient(degenerate, {1, 0})) == 2);
  CHECK(std::holds_alternative<Infinite>(order_in_quotient(degenerate, {0, 1})));
  CHECK(std::get<Integer>(order_in_quotient(degenerate, {0, 0})) == 1);
}

TEST_CASE("bilinear form") {
  const RationalMatrix m{{1, make_rational(1, 2)}, {0, 3}};
  CHECK(bilinear({1, 2}, m, {3, -1}) == Rational(3) - Rational(1, 2) - 6);
}

TEST_CASE("block circulant split") {
  const IntMatrix a{{1, 2, 3, 4}, {5, 6, 7, 8}, {3, 4, 1, 2}, {7, 8, 5, 6}};
  const auto s = block_circulant_split(a, 2);
  REQUIRE(std::holds_alternative<std::vector<IntMatrix>>(s));
  CHECK(std::get<0>(s)[1] == IntMatrix{{3, 4}, {7, 8}});
  IntMatrix b = a;
  b(3, 3) = 0;
  const auto t = block_circulant_split(b, 2);
  REQUIRE(std::holds_alternative<NotBlockCirculant>(t));
  CHECK(std::get<1>(t).block_row == 1);
  CHECK(std::get<1>(t).block_col == 1);
  CHECK(std::get<1>(t).reference_col == 0);
  CHECK_THROWS_AS(block_circulant_split(a, 3), std::invalid_argument);
}
