#include "satlink/exact_linalg.hpp"

#include <sstream>
#include <utility>

namespace satlink {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  auto parse_int = [](const std::string& s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') return false;
    return out.set_str(s[0] == '+' ? s.substr(1) : s, 10) == 0;
  };
  if (slash == std::string::npos) {
    if (!parse_int(text, num)) throw std::invalid_argument("bad rational: " + text);
  } else {
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den)) {
      throw std::invalid_argument("bad rational: " + text);
    }
    if (den == 0) throw std::invalid_argument("bad rational (zero denominator): " + text);
  }
  return make_rational(num, den);
}

RationalMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> e;
  e.reserve(m.entries().size());
  for (const auto& z : m.entries()) e.emplace_back(z);
  return RationalMatrix(m.rows(), m.cols(), std::move(e));
}

namespace {

void exact_div(Integer& a, const Integer& b) {
  if (b == 1) return;
#ifndef NDEBUG
  if (a % b != 0) throw std::logic_error("fraction-free elimination: inexact division");
#endif
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

}  // namespace

Integer det(const IntMatrix& m) {
  if (!m.square()) throw NonSquareError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        exact_div(a(i, j), prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Fraction-free Gauss-Jordan on [M | I]. On return the left block is
// diag(p, ..., p) with p = +-det(M) and the right block is p * M^{-1}.
std::pair<Integer, IntMatrix> gauss_jordan(const IntMatrix& m) {
  if (!m.square()) throw NonSquareError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    a(r, n + r) = 1;
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) throw SingularError("inverse: matrix is singular");
      swap_rows(a, k, p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        exact_div(a(i, j), prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  IntMatrix right(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) right(r, c) = a(r, n + c);
  return {prev, std::move(right)};
}

}  // namespace

RationalMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (!m.square()) throw NonSquareError("inverse: matrix is not square");
  if (n == 0) return RationalMatrix(0, 0);
  auto [pivot, right] = gauss_jordan(m);
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = make_rational(right(r, c), pivot);
  return inv;
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.square()) throw NonSquareError("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return IntMatrix(0, 0);
  auto [pivot, right] = gauss_jordan(m);
  // pivot = +-det; right = pivot * M^{-1} = (pivot / det) * adj.
  const Integer d = det(m);
  if (pivot != d) {
    for (auto r = 0u; r < n; ++r)
      for (auto c = 0u; c < n; ++c) right(r, c) = -right(r, c);
  }
  return right;
}

Rational bilinear(const IntVector& x, const RationalMatrix& m, const IntVector& y) {
  if (x.size() != m.rows() || y.size() != m.cols()) {
    throw std::invalid_argument("bilinear: dimension mismatch");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) row += m(i, j) * Rational(y[j]);
    }
    acc += Rational(x[i]) * row;
  }
  return acc;
}

}  // namespace satlink
