#include "nctoric/linalg.hpp"

#include <algorithm>

namespace nctoric {

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= f * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = m;
      std::size_t pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (s(i, j) != 0 && (pr == m || abs(s(i, j)) < abs(s(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == m) return {std::move(u), std::move(s), std::move(v)};
      s.swap_rows(t, pr);
      u.swap_rows(t, pr);
      s.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        add_row_multiple(s, i, t, q);
        add_row_multiple(u, i, t, q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        add_col_multiple(s, j, t, q);
        add_col_multiple(v, j, t, q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain by folding an offending row into row t.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t()) == 0) {
            add_row_multiple(s, t, i, Integer(-1));
            add_row_multiple(u, t, i, Integer(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (p == m || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p == m) break;
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        add_row_multiple(h, i, r, q);
        add_row_multiple(u, i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      add_row_multiple(h, i, r, q);
      add_row_multiple(u, i, r, q);
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  std::size_t r = 0;
  while (r < std::min(a.rows(), a.cols()) && snf.S(r, r) != 0) ++r;
  if (r == a.cols()) return {};
  IntMatrix basis(a.cols() - r, a.cols());
  for (std::size_t k = r; k < a.cols(); ++k)
    for (std::size_t i = 0; i < a.cols(); ++i) basis(k - r, i) = snf.V(i, k);
  auto hnf = hermite_normal_form(basis);
  std::vector<std::vector<Integer>> out;
  for (std::size_t i = 0; i < hnf.rank; ++i) out.push_back(hnf.H.row_vector(i));
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail("DimensionMismatch", "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()) && snf.S(i, i) != 0; ++i) out.push_back(snf.S(i, i));
  return out;
}

SolveResult solve_exact(const ScalarMatrix& a, const Vector& b) {
  if (a.rows() != b.size()) fail("DimensionMismatch", "right-hand side length differs from row count");
  const std::size_t n = a.cols();
  ScalarMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto e = rref(std::move(aug));
  SolveResult result;
  if (!e.pivots.empty() && e.pivots.back() == n) {
    result.kind = SolveResult::Kind::Infeasible;
    return result;
  }
  result.particular.assign(n, Scalar());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) result.particular[e.pivots[i]] = e.reduced(i, n);
  result.kernel = kernel_basis(a);
  result.kind = result.kernel.empty() ? SolveResult::Kind::Unique : SolveResult::Kind::Family;
  return result;
}

ScalarMatrix conjugate(const ScalarMatrix& m) {
  ScalarMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).conjugate();
  return c;
}

std::size_t rational_part_dimension(const std::vector<Vector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  std::vector<Vector> stacked = rows;
  for (const auto& r : rows) {
    Vector c;
    c.reserve(r.size());
    for (const auto& x : r) c.push_back(x.conjugate());
    stacked.push_back(std::move(c));
  }
  std::size_t dim_w = rank(ScalarMatrix::from_rows(rows, cols));
  std::size_t dim_sum = rank(ScalarMatrix::from_rows(stacked, cols));
  return 2 * dim_w - dim_sum;
}

bool is_galois_stable(const std::vector<Vector>& rows, std::size_t cols) {
  if (rows.empty()) return true;
  return rational_part_dimension(rows, cols) == rank(ScalarMatrix::from_rows(rows, cols));
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& q : v) den = lcm(den, Integer(q.get_den()));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = Integer(q.get_num()) * (den / q.get_den());
    g = gcd(g, z);
    out.push_back(z);
  }
  if (g != 0)
    for (auto& z : out) z /= g;
  return out;
}

}  // namespace nctoric
