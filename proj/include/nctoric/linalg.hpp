#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nctoric/matrix.hpp"

namespace nctoric {

// ---------------------------------------------------------------------------
// Integer lattices

/// U*A*V == S with U, V unimodular and S diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: U*A == H, H in echelon form with positive
/// pivots and entries above each pivot reduced into [0, pivot). Zero rows of
/// H are kept at the bottom; `rank` counts the non-zero ones.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// Saturated Z-basis of {v in Z^cols : A v = 0}, returned in Hermite normal
/// form so the result is canonical for the lattice.
std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& a);

Integer determinant(const IntMatrix& a);

/// Invariant factors d_1 | d_2 | ... (non-zero diagonal of the Smith form).
std::vector<Integer> invariant_factors(const IntMatrix& a);

// ---------------------------------------------------------------------------
// Exact linear algebra over Q or Q(sqrt d)

template <typename T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

template <typename T>
void check_field(const Matrix<T>&) {}
inline void check_field(const ScalarMatrix& m) { common_radicand(m.data()); }

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename T>
Echelon<T> rref(Matrix<T> m) {
  check_field(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of {x : M x = 0}, as rows in reduced row echelon form.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols());
    v[f] = T(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  auto canon = rref(Matrix<T>::from_rows(basis, m.cols()));
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < canon.pivots.size(); ++i) out.push_back(canon.reduced.row_vector(i));
  return out;
}

/// Canonical basis (non-zero rows of the RREF) of the row space.
template <typename T>
std::vector<std::vector<T>> row_space_basis(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  auto e = rref(Matrix<T>::from_rows(rows, cols));
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row_vector(i));
  return out;
}

template <typename T>
T determinant_field(Matrix<T> m) {
  if (m.rows() != m.cols()) fail("DimensionMismatch", "determinant of a non-square matrix");
  check_field(m);
  T det(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = c;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) return T(0);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Inverse of a square matrix; nullopt when singular.
template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) fail("DimensionMismatch", "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

struct SolveResult {
  enum class Kind { Unique, Family, Infeasible };
  Kind kind = Kind::Infeasible;
  Vector particular;           // empty when infeasible
  std::vector<Vector> kernel;  // empty unless kind == Family
};

/// Gaussian elimination for A x = b over the common scalar field.
SolveResult solve_exact(const ScalarMatrix& a, const Vector& b);

ScalarMatrix conjugate(const ScalarMatrix& m);

/// dim(W ∩ conj(W)) for the row space W of `rows`; this is the dimension of
/// the largest subspace of W spanned by rational vectors.
std::size_t rational_part_dimension(const std::vector<Vector>& rows, std::size_t cols);

/// True iff the row space equals its Galois conjugate, i.e. it has a basis
/// of rational vectors.
bool is_galois_stable(const std::vector<Vector>& rows, std::size_t cols);

/// Clears denominators of a rational vector and divides by the content.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace nctoric
