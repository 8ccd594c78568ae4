#include "satlink/exact_linalg.hpp"

#include <numeric>

namespace satlink {

namespace {

struct Work {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(a, c), d(b, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(dst, c) += k * d(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += k * u(src, c);
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, dst) += k * d(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += k * v(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(r, c) = -d(r, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(r, c) = -u(r, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Work w{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the active block, first in row-major order.
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          if (w.d(r, c) == 0) continue;
          Integer a = abs(w.d(r, c));
          if (!found || a < best) {
            found = true;
            best = a;
            pr = r;
            pc = c;
          }
        }
      if (!found) break;
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (w.d(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.d(r, t).get_mpz_t(), w.d(t, t).get_mpz_t());
        w.add_row(r, t, -q);
        if (w.d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (w.d(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.d(t, c).get_mpz_t(), w.d(t, t).get_mpz_t());
        w.add_col(c, t, -q);
        if (w.d(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide everything left in the active block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (w.d(r, c) % w.d(t, t) != 0) {
            w.add_row(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (w.d(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.d), std::move(w.u), std::move(w.v)};
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  std::vector<Integer> out;
  const std::size_t n = std::min(m.rows(), m.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(snf.d(i, i));
  return out;
}

Order order_in_quotient(const IntMatrix& m, const IntVector& x) {
  if (!m.square()) throw NonSquareError("order_in_quotient: matrix is not square");
  if (x.size() != m.rows()) throw std::invalid_argument("order_in_quotient: dimension mismatch");
  const auto snf = smith_normal_form(m);
  // x lies in M Z^n  <=>  U x lies in D Z^n.
  Integer order = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer y = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) y += snf.u(i, j) * x[j];
    const Integer& di = snf.d(i, i);
    if (di == 0) {
      if (y != 0) return Infinite{};
      continue;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), y.get_mpz_t());
    const Integer part = di / g;
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
  }
  return order;
}

}  // namespace satlink
