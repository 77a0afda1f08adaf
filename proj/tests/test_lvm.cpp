#include <algorithm>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "nctoric/homogeneous.hpp"
#include "nctoric/lvm.hpp"

using namespace nctoric;

namespace {

std::string error_name(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

const Scalar r2 = Scalar::sqrt(2);

Configuration five_point(Scalar first, Scalar last_re) {
  return make_configuration_1d({{first, 0}, {0, 1}, {0, 1}, {1, 0}, {last_re, -2}});
}

Configuration teardrop(long p) { return make_configuration_1d({{1, 0}, {0, 1}, {p, 0}, {-1, -1}}); }

std::vector<Vector> rows_of(const ScalarMatrix& m) { return m.to_rows(); }

// Dimension of W ∩ Q^n for W given by an RREF basis. A vector of W is
// rational iff its pivot coordinates c are rational and the irrational
// parts of sum c_i w_i cancel, so the answer is k - rank_Q(B) where B holds
// the irrational coefficient vectors of the basis.
std::size_t rational_part_by_coefficients(const std::vector<Vector>& w, std::size_t n) {
  std::vector<std::vector<Rational>> b;
  for (const auto& row : w) {
    std::vector<Rational> irr;
    for (const auto& x : row) irr.push_back(x.irrational_part());
    b.push_back(std::move(irr));
  }
  return w.size() - rank(RationalMatrix::from_rows(b, n));
}

// Rank of the rational vectors sum c_i w_i found for integer c in [-3, 3]^k.
std::size_t rational_part_search(const std::vector<Vector>& w, std::size_t n) {
  const std::size_t k = w.size();
  std::vector<Vector> found;
  std::vector<int> c(k, -3);
  for (;;) {
    Vector x(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) x[j] += Scalar(c[i]) * w[i][j];
    if (!is_zero_vector(x) && std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_rational(); }))
      found.push_back(std::move(x));
    std::size_t i = 0;
    while (i < k && c[i] == 3) c[i++] = -3;
    if (i == k) break;
    ++c[i];
  }
  return found.empty() ? 0 : rank(ScalarMatrix::from_rows(found, n));
}

}  // namespace

TEST_CASE("admissibility") {
  auto printed = five_point(1, 2);
  auto a = check_admissible(printed);
  CHECK_FALSE(a.siegel);  // 0 is not a convex combination of 1, i and 2-2i
  CHECK(a.weak_hyperbolic);
  auto fixed = check_admissible(five_point(1, -2));
  CHECK(fixed.siegel);
  CHECK(fixed.weak_hyperbolic);
  CHECK_FALSE(check_admissible(make_configuration_1d({{1, 0}, {2, 0}, {3, 0}})).siegel);
  CHECK_FALSE(check_admissible(make_configuration_1d({{1, 0}, {-1, 0}, {0, 1}})).weak_hyperbolic);
  CHECK(check_admissible(make_configuration_1d({{1, 0}, {0, 1}, {-1, -1}})).admissible());
  CHECK(error_name([] { make_configuration_1d({{1, 0}, {0, 1}}); }) == "InvalidConfiguration");
  CHECK(error_name([] { make_configuration_1d({{Scalar::sqrt(2), 0}, {0, Scalar::sqrt(3)}, {-1, -1}}); }) ==
        "FieldMismatch");
}

TEST_CASE("siegel strata") {
  auto c = five_point(1, -2);
  CHECK(minimal_removed_zero_sets(c) == IndexFamily{{4}, {0, 3}, {1, 2}});
  auto tri = make_configuration_1d({{1, 0}, {0, 1}, {-1, -1}});
  auto fam = siegel_index_family(tri);
  CHECK(fam == IndexFamily{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
  // The printed configuration fails the Siegel condition, so every support is removed.
  CHECK(minimal_removed_zero_sets(five_point(1, 2)) == IndexFamily{{}});
}

TEST_CASE("system (S) and condition (K)") {
  for (long last : {2L, -2L}) {
    auto c = five_point(1, last);
    CHECK(solution_basis(c) == ScalarMatrix{{1, 0, 0, -1, 0}, {0, 1, -1, 0, 0}});
    CHECK(condition_K(c));
    CHECK(leaf_dichotomy(c) == LeafType::CompactTori);
  }
  auto tri = make_configuration_1d({{1, 0}, {0, 1}, {-1, -1}});
  CHECK(solution_basis(tri).rows() == 0);
  CHECK(condition_K(tri));

  auto pert = five_point(r2, 2);
  auto basis = solution_basis(pert);
  CHECK(basis.rows() == 2);
  CHECK_FALSE(std::all_of(basis.data().begin(), basis.data().end(), [](const Scalar& x) { return x.is_rational(); }));
  CHECK(rational_part_dimension(rows_of(basis), 5) == 1);
  CHECK_FALSE(condition_K(pert));
  CHECK(leaf_dichotomy(pert) == LeafType::DenseLeaves);

  auto degenerate = make_configuration_1d({{1, 0}, {2, 0}, {-1, 0}, {-3, 0}});
  CHECK(error_name([&] { solution_basis(degenerate); }) == "DegenerateSystem");
}

TEST_CASE("Gale transform and reconstructed polytopes") {
  auto g = gale_transform(five_point(1, 2));
  CHECK(g.V == ScalarMatrix{{1, 0}, {0, 1}, {0, -1}, {-1, 0}, {0, 0}});
  auto p = polytope_from_gale(g);
  CHECK(p.vertices() == std::vector<Vector>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
  CHECK(p.redundant_facets() == IndexSet{4});

  auto t = gale_transform(teardrop(4));
  CHECK(t.V == ScalarMatrix{{1}, {Rational(-1, 3)}, {Rational(-1, 3)}, {Rational(-1, 3)}});
  auto seg = polytope_from_gale(t);
  CHECK(seg.vertices() == std::vector<Vector>{{-1}, {3}});

  auto tri = gale_transform(make_configuration_1d({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(tri.V.cols() == 0);
  CHECK(error_name([&] { polytope_from_gale(tri); }) == "EmptyGale");
}

TEST_CASE("canonical epsilons") {
  auto c = five_point(1, -2);
  auto eps = canonical_epsilon(c);
  CHECK(eps == Vector{Rational(1, 5), Rational(1, 5), Rational(1, 5), Rational(1, 5), Rational(1, 5)});
  GaleData g = gale_transform(c);
  g.epsilons = eps;
  auto p = polytope_from_gale(g);
  CHECK(p.vertices().size() == 4);
  CHECK(p.vertices().front() == Vector{Rational(-1, 5), Rational(-1, 5)});
  CHECK(minimal_non_faces(p.family(), 5) == minimal_removed_zero_sets(c));
  CHECK(error_name([] { canonical_epsilon(five_point(1, 2)); }) == "NotSiegel");
}

TEST_CASE("generic fibers") {
  auto f = generic_fiber(five_point(1, 2));
  CHECK(f.torus_rank == 4);
  CHECK(f.foliation_subspace.size() == 2);
  CHECK(f.rational);
  REQUIRE(f.slope);
  CHECK(*f.slope == 1);

  auto g = generic_fiber(five_point(r2, 2));
  CHECK_FALSE(g.rational);
  REQUIRE(g.slope);
  CHECK(*g.slope == r2);
  CHECK(*g.slope_pair == std::pair<std::size_t, std::size_t>{0, 3});

  for (long p : {4L, 5L, 7L}) {
    auto t = generic_fiber(teardrop(p));
    CHECK(t.torus_rank == 3);
    CHECK(t.rational);
  }
  CHECK(error_name([] { generic_fiber(make_configuration_1d({{1, 0}, {2, 0}, {-1, 0}, {-3, 0}})); }) ==
        "DegenerateFoliation");
}

TEST_CASE("teardrop and football weights") {
  auto w4 = orbifold_weights_1d(teardrop(4));
  CHECK(w4.gale_vector == std::vector<Integer>{-3, 1, 1, 1});
  CHECK(w4.singular_orders() == std::vector<Integer>{3});
  CHECK(w4.lower.active == IndexSet{2});
  CHECK(w4.upper.active == IndexSet{0});
  auto w7 = orbifold_weights_1d(teardrop(7));
  CHECK(w7.gale_vector == std::vector<Integer>{-5, 2, 1, 2});
  CHECK(w7.singular_orders() == std::vector<Integer>{5});
  auto w5 = orbifold_weights_1d(teardrop(5));
  CHECK(w5.gale_vector == std::vector<Integer>{-11, 4, 3, 4});
  CHECK(w5.singular_orders() == std::vector<Integer>{3, 11});
  for (long l = 1; l <= 6; ++l) {
    long p = 3 * l + 1;
    CHECK(orbifold_weights_1d(teardrop(p)).singular_orders() == std::vector<Integer>{2 * l + 1});
    CHECK(orbifold_weights_1d(teardrop(p + 1)).singular_orders() == std::vector<Integer>{3, 2 * (p + 1) + 1});
  }
  CHECK(error_name([] { orbifold_weights_1d(five_point(1, -2)); }) == "WrongDimension");
  CHECK(error_name([] { orbifold_weights_1d(make_configuration_1d({{1, 0}, {0, 1}, {r2, 0}, {-1, -1}})); }) ==
        "IrrationalWeights");
}

TEST_CASE("random admissible configurations") {
  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    auto c = gen::random_admissible(rng, t % 2 == 1);
    bool k = condition_K(c);
    CHECK(k == (leaf_dichotomy(c) == LeafType::CompactTori));
    auto fiber = generic_fiber(c);
    CHECK(fiber.rational == k);

    // Rationality does not depend on the chosen basis of the phase subspace.
    auto rows = fiber.foliation_subspace;
    std::vector<Vector> mixed{rows[0] , rows[1]};
    for (std::size_t j = 0; j < rows[0].size(); ++j) {
      mixed[0][j] = rows[0][j] + Scalar(t + 2) * rows[1][j];
      mixed[1][j] = rows[0][j] - rows[1][j];
    }
    CHECK(is_galois_stable(mixed, rows[0].size()) == fiber.rational);

    // Facet i of the canonical polytope is non-empty iff 0 is in the hull of the other points.
    if (c.n - 3 == 0) continue;
    GaleData g = gale_transform(c);
    g.epsilons = canonical_epsilon(c);
    for (const auto& e : g.epsilons) CHECK(e > 0);
    auto p = polytope_from_gale(g);
    auto pts = real_points(c);
    for (std::size_t i = 0; i < c.n; ++i) {
      std::vector<Vector> others;
      for (std::size_t j = 0; j < c.n; ++j)
        if (j != i) others.push_back(pts[j]);
      bool facet = std::any_of(p.family().begin(), p.family().end(),
                               [i](const IndexSet& s) { return s == IndexSet{i}; });
      CHECK(facet == origin_in_convex_hull(others));
    }
    if (k) CHECK(minimal_non_faces(p.family(), c.n) == minimal_removed_zero_sets(c));
  }
}

TEST_CASE("Galois stability agrees with coefficient-space oracles") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> small(-1, 1);
  for (int t = 0; t < 24; ++t) {
    std::size_t n = 3 + t % 3;
    std::size_t rational_rows = t % 3, irrational_rows = 1 + t % 2;
    std::vector<Vector> w;
    for (std::size_t i = 0; i < rational_rows; ++i) {
      Vector v(n);
      for (auto& x : v) x = small(rng);
      w.push_back(v);
    }
    for (std::size_t i = 0; i < irrational_rows; ++i) {
      Vector v(n);
      for (auto& x : v) x = Scalar(small(rng)) + Scalar(small(rng)) * r2;
      w.push_back(v);
    }
    w = row_space_basis(w, n);
    if (w.empty()) continue;
    std::size_t exact = rational_part_by_coefficients(w, n);
    CHECK(rational_part_dimension(w, n) == exact);
    CHECK(rational_part_search(w, n) <= exact);
    CHECK(is_galois_stable(w, n) == (exact == w.size()));
    if (exact == w.size()) CHECK(rational_part_search(w, n) == exact);
  }
}
