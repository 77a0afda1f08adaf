#include <bit>
#include <cmath>
#include <random>

#include "doctest.h"
#include "nctoric/linalg.hpp"

using namespace nctoric;

namespace {

// gcd of all k x k minors, computed by brute force over row/column subsets.
Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  std::size_t m = a.rows(), n = a.cols();
  Integer g = 0;
  for (unsigned rs = 0; rs < (1u << m); ++rs) {
    if (std::popcount(rs) != static_cast<int>(k)) continue;
    for (unsigned cs = 0; cs < (1u << n); ++cs) {
      if (std::popcount(cs) != static_cast<int>(k)) continue;
      IntMatrix sub(k, k);
      std::size_t r = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (!(rs >> i & 1)) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (cs >> j & 1) sub(r, c++) = a(i, j);
        ++r;
      }
      g = gcd(g, determinant(sub));
    }
  }
  return g;
}

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t m, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

}  // namespace

TEST_CASE("scalar arithmetic in Q(sqrt 2)") {
  Scalar r2 = Scalar::sqrt(2);
  CHECK(r2 * r2 == Scalar(2));
  CHECK((1 + r2) * (r2 - 1) == Scalar(1));
  CHECK((1 + r2).inverse() == r2 - 1);
  CHECK(Scalar::sqrt(8) == 2 * r2);
  CHECK(Scalar::sqrt(9) == Scalar(3));
  CHECK(r2.floor() == 1);
  CHECK((-r2).floor() == -2);
  CHECK((r2 * 1000000).floor() == 1414213);
  CHECK(Scalar(Rational(7, 5)) < r2);
  CHECK(Scalar(Rational(3, 2)) > r2);
  CHECK((1 + r2).to_string() == "1+sqrt(2)");
  CHECK((Scalar(Rational(1, 2)) - Scalar(0, Rational(3, 2), 5)).to_string() == "1/2-3/2*sqrt(5)");
}

TEST_CASE("mixing quadratic fields is rejected") {
  Scalar r2 = Scalar::sqrt(2);
  Scalar r3 = Scalar::sqrt(3);
  try {
    (void)(r2 + r3);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.name() == "FieldMismatch");
  }
}

TEST_CASE("floor agrees with a float estimate away from integers") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int t = 0; t < 300; ++t) {
    Scalar x(Rational(dist(rng), 7), Rational(dist(rng), 3), 5);
    double v = x.to_double();
    if (std::abs(v - std::round(v)) < 1e-9) continue;
    CHECK(x.floor() == static_cast<long>(std::floor(v)));
    CHECK(Scalar(x.floor()) <= x);
    CHECK(Scalar(Integer(x.floor() + 1)) > x);
  }
}

TEST_CASE("smith normal form matches minor gcds") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    IntMatrix a = random_int_matrix(rng, m, n, 6);
    auto snf = smith_normal_form(a);
    CHECK(snf.U * a * snf.V == snf.S);
    CHECK(abs(determinant(snf.U)) == 1);
    CHECK(abs(determinant(snf.V)) == 1);
    Integer prod = 1;
    for (std::size_t k = 1; k <= std::min(m, n); ++k) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) CHECK(snf.S(i, j) == 0);
      prod *= snf.S(k - 1, k - 1);
      CHECK(prod == minor_gcd(a, k));
      if (k >= 2 && snf.S(k - 1, k - 1) != 0) CHECK(snf.S(k - 1, k - 1) % snf.S(k - 2, k - 2) == 0);
    }
  }
}

TEST_CASE("integer kernel basis is saturated and canonical") {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t m = 1 + rng() % 3, n = m + 1 + rng() % 3;
    IntMatrix a = random_int_matrix(rng, m, n, 5);
    auto basis = integer_kernel_basis(a);
    auto qa = RationalMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) qa(i, j) = a(i, j);
    CHECK(basis.size() == n - rank(qa));
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < m; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
        CHECK(s == 0);
      }
    }
    if (basis.empty()) continue;
    IntMatrix b = IntMatrix::from_rows(basis, n);
    // Saturated: the maximal minors of the basis have gcd 1.
    CHECK(minor_gcd(b, basis.size()) == 1);
    // Canonical: a unimodular change of basis gives the same answer.
    IntMatrix shuffled = b;
    for (std::size_t i = 1; i < shuffled.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) shuffled(0, j) += 3 * shuffled(i, j);
    CHECK(hermite_normal_form(shuffled).H == hermite_normal_form(b).H);
  }
}

TEST_CASE("kernel of the teardrop-style configuration") {
  IntMatrix rho{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  auto basis = integer_kernel_basis(rho.transpose());
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == std::vector<Integer>{1, 0, 1, 0});
  CHECK(basis[1] == std::vector<Integer>{0, 1, 0, 1});
}

TEST_CASE("rref, kernel and determinant over Q(sqrt 5)") {
  Scalar r5 = Scalar::sqrt(5);
  ScalarMatrix m{{1, r5}, {r5, 5}};
  CHECK(rank(m) == 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{1, -r5 / 5});
  CHECK(determinant_field(ScalarMatrix{{1, r5}, {r5, 1}}) == Scalar(-4));
  auto inv = inverse(ScalarMatrix{{1, r5}, {0, 2}});
  REQUIRE(inv.has_value());
  CHECK(*inv * ScalarMatrix{{1, r5}, {0, 2}} == ScalarMatrix::identity(2));
}

TEST_CASE("solve_exact classifies systems") {
  ScalarMatrix a{{1, 1}, {1, -1}};
  auto u = solve_exact(a, {2, 0});
  CHECK(u.kind == SolveResult::Kind::Unique);
  CHECK(u.particular == Vector{1, 1});
  ScalarMatrix b{{1, 1}, {2, 2}};
  CHECK(solve_exact(b, {1, 3}).kind == SolveResult::Kind::Infeasible);
  auto f = solve_exact(b, {1, 2});
  CHECK(f.kind == SolveResult::Kind::Family);
  CHECK(f.kernel.size() == 1);
  ScalarMatrix mixed{{Scalar::sqrt(2), 1}, {Scalar::sqrt(3), 1}};
  CHECK_THROWS_AS(solve_exact(mixed, {0, 0}), Error);
}

TEST_CASE("galois stability of subspaces") {
  Scalar r2 = Scalar::sqrt(2);
  std::vector<Vector> rational_plane{{1, r2, 0}, {0, 1, 0}};
  CHECK(is_galois_stable(rational_plane, 3));
  std::vector<Vector> line{{1, r2, 0}};
  CHECK_FALSE(is_galois_stable(line, 3));
  CHECK(rational_part_dimension(line, 3) == 0);
  std::vector<Vector> mixed{{1, r2, 0}, {0, 0, 1}};
  CHECK(rational_part_dimension(mixed, 3) == 1);
}
