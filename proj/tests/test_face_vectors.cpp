#include <algorithm>

#include "doctest.h"
#include "nctoric/face_vectors.hpp"
#include "nctoric/polytope.hpp"
#include "oracles.hpp"

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

IntVector iv(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<oracle::RatVec> cyclic_points(std::size_t d, std::size_t n) {
  std::vector<oracle::RatVec> pts;
  for (std::size_t t = 1; t <= n; ++t) {
    oracle::RatVec p;
    Rational x = 1;
    for (std::size_t k = 0; k < d; ++k) p.push_back(x *= static_cast<long>(t));
    pts.push_back(p);
  }
  return pts;
}

std::vector<oracle::RatVec> cross_points(std::size_t d) {
  std::vector<oracle::RatVec> pts;
  for (std::size_t i = 0; i < d; ++i)
    for (long s : {1L, -1L}) {
      oracle::RatVec p(d);
      p[i] = s;
      pts.push_back(p);
    }
  return pts;
}

std::vector<oracle::RatVec> simplex_points(std::size_t d) {
  std::vector<oracle::RatVec> pts{oracle::RatVec(d)};
  for (std::size_t i = 0; i < d; ++i) {
    oracle::RatVec p(d);
    p[i] = 1;
    pts.push_back(p);
  }
  return pts;
}

// Largest number of degree-(i+1) monomials in k variables whose degree-i
// divisors all lie in a set of l degree-i monomials.
Integer max_growth(long l, long i, long k) {
  std::vector<std::vector<long>> lower, upper;
  auto gen = [k](long deg) {
    std::vector<std::vector<long>> out;
    std::vector<long> e(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, long var, long left) -> void {
      if (var == k - 1) {
        e[static_cast<std::size_t>(var)] = left;
        out.push_back(e);
        return;
      }
      for (long a = left; a >= 0; --a) {
        e[static_cast<std::size_t>(var)] = a;
        self(self, var + 1, left - a);
      }
    };
    rec(rec, 0, deg);
    return out;
  };
  lower = gen(i);
  upper = gen(i + 1);
  long best = -1;
  for (unsigned long mask = 0; mask < (1ul << lower.size()); ++mask) {
    if (__builtin_popcountl(mask) != l) continue;
    long count = 0;
    for (const auto& m : upper) {
      bool ok = true;
      for (std::size_t v = 0; v < m.size() && ok; ++v) {
        if (m[v] == 0) continue;
        auto div = m;
        --div[v];
        auto pos = std::find(lower.begin(), lower.end(), div) - lower.begin();
        ok = (mask >> pos) & 1;
      }
      if (ok) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

}  // namespace

TEST_CASE("h-vectors") {
  CHECK(h_from_f(iv({1, 6, 12, 8}), 3) == iv({1, 3, 3, 1}));
  CHECK(h_from_f(iv({1, 3, 3}), 2) == iv({1, 1, 1}));
  for (long d = 1; d <= 8; ++d) {
    IntVector f{1};
    for (long i = 0; i < d; ++i) f.push_back(binomial(d + 1, i + 1));
    CHECK(h_from_f(f, static_cast<std::size_t>(d)) == IntVector(static_cast<std::size_t>(d + 1), Integer(1)));
  }
  CHECK(error_name([] { h_from_f(iv({1, 6, 12}), 3); }) == "LengthMismatch");
  CHECK(error_name([] { h_from_f(iv({2, 6, 12, 8}), 3); }) == "LengthMismatch");
}

TEST_CASE("Dehn-Sommerville") {
  CHECK(check_dehn_sommerville(iv({1, 3, 3, 1})));
  CHECK_FALSE(check_dehn_sommerville(iv({1, 2, 3})));
  CHECK(check_dehn_sommerville(iv({1})));
}

TEST_CASE("Macaulay shadow") {
  CHECK(macaulay_expansion(3, 1) == std::vector<long>{3});
  CHECK(shadow(3, 1) == 6);
  CHECK(macaulay_expansion(4, 2) == std::vector<long>{3, 1});
  CHECK(shadow(4, 2) == 5);
  for (long i = 1; i <= 5; ++i) CHECK(shadow(1, i) == 1);
  CHECK(shadow(2, 1, ShadowConvention::Literal) == 1);
  CHECK(shadow(2, 1) == 3);

  for (long i = 1; i <= 2; ++i)
    for (long l = 1; l <= (i == 1 ? 4 : 10); ++l) CHECK(shadow(l, i) == max_growth(l, i, 4));
  for (long l = 1; l <= 10; ++l) CHECK(shadow(l, 3) == max_growth(l, 3, 3));
}

TEST_CASE("M-vectors") {
  CHECK(is_m_vector(iv({1, 2})));
  CHECK_FALSE(is_m_vector(iv({1, 2, 4})));
  CHECK(is_m_vector(iv({1, 3, 6, 10})));
  CHECK_FALSE(is_m_vector(iv({2, 1})));
  CHECK_FALSE(is_m_vector(iv({1, -1})));
  CHECK(is_m_vector(iv({1, 2, 3})));
  CHECK_FALSE(is_m_vector(iv({1, 2, 3}), ShadowConvention::Literal));
}

TEST_CASE("g-theorem necessity") {
  auto oct = g_theorem_necessity(iv({1, 6, 12, 8}), 3);
  CHECK(oct.vectors.g == iv({1, 2}));
  CHECK(oct.ds);
  CHECK(oct.m_vector);
  CHECK(oct.pass);
  CHECK(g_theorem_necessity(iv({1, 6, 12, 8}), 3, ShadowConvention::Literal).pass);
  auto bad = g_theorem_necessity(iv({1, 6, 12, 7}), 3);
  CHECK(bad.vectors.h == iv({1, 3, 3, 0}));
  CHECK_FALSE(bad.ds);
  CHECK_FALSE(bad.pass);

  auto f = oracle::simplicial_f_vector(cyclic_points(4, 7));
  CHECK(f == iv({1, 7, 21, 28, 14}));
  auto cyc = g_theorem_necessity(f, 4);
  CHECK(cyc.vectors.h == iv({1, 3, 6, 3, 1}));
  CHECK(cyc.vectors.g == iv({1, 2, 3}));
  CHECK(cyc.pass);
  CHECK_FALSE(g_theorem_necessity(f, 4, ShadowConvention::Literal).pass);
}

TEST_CASE("brute-force polytopes satisfy the h-vector identities") {
  std::vector<std::vector<oracle::RatVec>> cases;
  for (std::size_t d = 2; d <= 4; ++d) {
    cases.push_back(simplex_points(d));
    cases.push_back(cross_points(d));
    for (std::size_t n = d + 1; n <= 8; ++n) cases.push_back(cyclic_points(d, n));
  }
  for (const auto& pts : cases) {
    auto f = oracle::simplicial_f_vector(pts);
    std::size_t d = pts[0].size();
    auto h = h_from_f(f, d);
    Integer sum = 0;
    for (const auto& x : h) sum += x;
    CHECK(sum == f[d]);
    CHECK(h[d] == 1);
    CHECK(f_from_h(h) == f);
    CHECK(g_theorem_necessity(f, d).pass);
  }
  CHECK(oracle::simplicial_f_vector(cross_points(3)) == iv({1, 6, 12, 8}));
}

TEST_CASE("face counts of simple polytopes pass the necessity check") {
  Scalar r5 = Scalar::sqrt(5);
  Scalar inv_phi = (r5 - 1) / Scalar(2);
  // Affine image of the regular pentagon with coordinates in Q(sqrt 5).
  auto pentagon = polygon_from_vertices(
      {{1, 0}, {0, 1}, {-1, inv_phi}, {-inv_phi, inv_phi * inv_phi - 1}, {inv_phi, -1}});
  CHECK(classify_delzant(pentagon) == DelzantClass::Irrational);
  std::vector<SimplePolytope> ps{pentagon, box({0, 0}, {1, 1}), box({0, 0, 0}, {1, 2, 3}),
                                 polygon_from_vertices({{0, 0}, {1, 0}, {0, 1}})};
  for (const auto& p : ps) {
    auto f = face_counts(p);
    auto c = g_theorem_necessity(f, p.dim());
    CHECK(c.pass);
  }
  CHECK(face_counts(pentagon) == iv({1, 5, 5}));
}
