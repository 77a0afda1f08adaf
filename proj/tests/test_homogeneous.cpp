#include <algorithm>
#include <optional>
#include <random>

#include "doctest.h"
#include "nctoric/homogeneous.hpp"
#include "oracles.hpp"

using namespace nctoric;

namespace {

SimplePolytope simplex(std::size_t d) {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(d);
    e[i] = 1;
    hs.push_back({e, 0});
  }
  hs.push_back({Vector(d, Scalar(-1)), -1});
  return SimplePolytope(d, hs);
}

std::string error_name(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

// Minimal infeasible facet sets by Fourier-Motzkin.
IndexFamily oracle_minimal_non_faces(const SimplePolytope& p) {
  std::vector<Vector> normals;
  Vector offsets;
  for (const auto& h : p.halfspaces()) {
    normals.push_back(h.normal);
    offsets.push_back(h.offset);
  }
  const std::size_t n = normals.size();
  std::vector<bool> feasible(1ul << n);
  IndexFamily out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    feasible[mask] = oracle::face_nonempty(normals, offsets, s);
    if (feasible[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i & 1) && !feasible[mask & ~(1ul << i)]) minimal = false;
    if (minimal) out.push_back(s);
  }
  sort_family(out);
  return out;
}

}  // namespace

TEST_CASE("forbidden strata of basic polytopes") {
  auto sq = box({0, 0}, {1, 1});
  CHECK(forbidden_strata(sq.family(), 4) == IndexFamily{{0, 1}, {2, 3}});
  CHECK(oracle_minimal_non_faces(sq) == IndexFamily{{0, 1}, {2, 3}});
  auto s3 = simplex(3);
  CHECK(forbidden_strata(s3.family(), 4) == IndexFamily{{0, 1, 2, 3}});
  CHECK(oracle_minimal_non_faces(s3) == IndexFamily{{0, 1, 2, 3}});
  CHECK(forbidden_strata(box({0}, {1}).family(), 2) == IndexFamily{{0, 1}});
  CHECK(error_name([] { forbidden_strata(IndexFamily{{}, {0}}, 2); }) == "CodimensionOne");
}

TEST_CASE("kernel lattice") {
  auto sq = kernel_lattice(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(sq == std::vector<std::vector<Integer>>{{1, 1, 0, 0}, {0, 0, 1, 1}});
  auto tri = kernel_lattice(IntMatrix{{1, 0}, {0, 1}, {-1, -1}});
  CHECK(tri == std::vector<std::vector<Integer>>{{1, 1, 1}});
  CHECK(kernel_lattice(IntMatrix{{1, 0}, {0, 1}}).empty());
  CHECK(error_name([] { kernel_lattice(IntMatrix{{1, 0}, {2, 0}}); }) == "RankDeficient");
}

TEST_CASE("moment vector") {
  auto q = quotient_data(box({0, 0}, {1, 1}));
  CHECK(q.nu == Vector{1, 1});
  CHECK(q.kernel_basis.size() == 2);
  CHECK(quotient_data(box({0}, {1})).nu == Vector{1});
  CHECK(quotient_data(box({5, 7}, {6, 8})).nu == Vector{1, 1});
  CHECK(quotient_data(box({0, 0}, {3, 1})).nu == Vector{3, 1});
}

TEST_CASE("random polytopes: fibre correspondence and translation invariance") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-3, 3);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    std::size_t d = 2 + t % 2;
    std::vector<Halfspace> hs = box(Vector(d, Scalar(-2)), Vector(d, Scalar(2))).halfspaces();
    Vector a(d);
    for (auto& x : a) x = coef(rng);
    if (!is_zero_vector(a)) hs.push_back({a, Scalar(Rational(coef(rng) - 3, 2))});
    std::optional<SimplePolytope> p;
    try {
      p.emplace(d, hs);
    } catch (const Error&) {
      continue;
    }
    if (!p->redundant_facets().empty()) continue;
    ++checked;
    auto q = quotient_data(*p);
    auto nd = normal_data(*p);
    CHECK(q.kernel_basis.size() == hs.size() - d);
    if (d == 2) CHECK(q.forbidden_strata == oracle_minimal_non_faces(*p));

    Vector shift(d);
    for (auto& x : shift) x = Scalar(Rational(coef(rng), 5));
    std::vector<Halfspace> moved;
    for (const auto& h : hs) moved.push_back({h.normal, h.offset + dot(h.normal, shift)});
    CHECK(quotient_data(SimplePolytope(d, moved)).nu == q.nu);

    auto x_of = [&](const Vector& u) {
      Vector x;
      for (std::size_t j = 0; j < hs.size(); ++j) x.push_back(dot(to_scalars(nd.rho.row_vector(j)), u) - nd.lambda[j]);
      return x;
    };
    auto check_fibre = [&](const Vector& x) {
      for (std::size_t b = 0; b < q.kernel_basis.size(); ++b) {
        Scalar s;
        for (std::size_t j = 0; j < x.size(); ++j) s += Scalar(q.kernel_basis[b][j]) * x[j];
        CHECK(s == q.nu[b]);
      }
    };
    Vector centre(d);
    for (const auto& u : p->vertices()) {
      Vector x = x_of(u);
      IndexSet zeros;
      for (std::size_t j = 0; j < x.size(); ++j) {
        CHECK(x[j] >= 0);
        if (x[j].is_zero()) zeros.push_back(j);
      }
      CHECK(zeros.size() == d);
      CHECK(std::binary_search(p->family().begin(), p->family().end(), zeros, [](const IndexSet& l, const IndexSet& r) {
        return l.size() != r.size() ? l.size() < r.size() : l < r;
      }));
      for (const auto& s : q.forbidden_strata) CHECK_FALSE(is_subset(s, zeros));
      check_fibre(x);
      for (std::size_t i = 0; i < d; ++i) centre[i] += u[i] / Scalar(static_cast<long>(p->vertices().size()));
    }
    Vector xc = x_of(centre);
    for (const auto& v : xc) CHECK(v > 0);
    check_fibre(xc);
  }
  CHECK(checked > 20);
}
