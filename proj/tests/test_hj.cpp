#include <numeric>

#include "doctest.h"
#include "nctoric/hj.hpp"

using namespace nctoric;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::string error_name(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

// Rays of a 2D fan ordered along the chain, with every adjacent determinant.
std::vector<Scalar> adjacent_dets(const Resolution& r, const Cone& input) {
  std::vector<Vector> chain;
  auto first = primitive_direction(input.rays[0]).empty() ? input.rays[1] : input.rays[0];
  chain.push_back(first);
  for (const auto& v : r.inserted_rays) chain.push_back(v);
  chain.push_back(first == input.rays[0] ? input.rays[1] : input.rays[0]);
  std::vector<Scalar> dets;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) dets.push_back(det2(chain[i], chain[i + 1]));
  return dets;
}

}  // namespace

TEST_CASE("finite expansions") {
  CHECK(hj_expand(Scalar(Rational(7, 5))).digits == ints({2, 2, 3}));
  CHECK(hj_expand(Scalar(2)).digits == ints({2}));
  CHECK(hj_expand(Scalar(Rational(7, 5))).finite);
  CHECK(hj_evaluate(ints({2, 2, 3})) == Rational(7, 5));
  CHECK(hj_evaluate(ints({2})) == 2);
  CHECK(hj_evaluate(ints({3})) == 3);
  CHECK(error_name([] { hj_evaluate(ints({2, 1, 1})); }) == "DivisionByZero");
  CHECK(error_name([] { hj_expand(Scalar(1)); }) == "OutOfRange");
  CHECK(error_name([] { hj_expand(Scalar(Rational(1, 2))); }) == "OutOfRange");
}

TEST_CASE("round trip and uniqueness for all small fractions") {
  for (long m = 2; m <= 50; ++m)
    for (long k = 1; k < m; ++k) {
      if (std::gcd(m, k) != 1) continue;
      auto e = hj_expand(Scalar(Rational(m, k)));
      CHECK(hj_evaluate(e.digits) == Rational(m, k));
      for (const auto& d : e.digits) CHECK(d >= 2);
      CHECK(hj_expand(Scalar(hj_evaluate(e.digits))).digits == e.digits);
    }
}

TEST_CASE("quadratic irrationals have periodic expansions") {
  auto e = hj_expand(Scalar::sqrt(2), 5);
  CHECK(e.digits == ints({2, 2, 4, 2, 4}));
  CHECK(e.period_detected);
  CHECK(e.prefix == ints({2}));
  CHECK(e.period == ints({2, 4}));
  CHECK_FALSE(e.finite);
  for (long d : {3, 5, 6, 7, 10, 13}) {
    auto x = Scalar::sqrt(d) + 1;
    auto ex = hj_expand(x, 40);
    CHECK(ex.period_detected);
    // The prefix plus repeated period reproduces the stream.
    std::vector<Integer> rebuilt = ex.prefix;
    while (rebuilt.size() < 40) rebuilt.insert(rebuilt.end(), ex.period.begin(), ex.period.end());
    rebuilt.resize(40);
    CHECK(rebuilt == ex.digits);
  }
  HJDigitStream s(Scalar::sqrt(2));
  CHECK(s.next() == 2);
  CHECK(s.next() == 2);
  CHECK(s.next() == 4);
  CHECK_FALSE(s.finished());
}

TEST_CASE("resolution of rational cones") {
  Cone a1 = make_cone(2, {{0, 1}, {2, -1}});
  auto r = resolve_cone(a1);
  REQUIRE(r.inserted_rays.size() == 1);
  CHECK(r.inserted_rays[0] == Vector{1, 0});
  CHECK(is_refinement(r.fan, make_fan(2, {make_cone(2, {}), make_cone(2, {{0, 1}}), make_cone(2, {{2, -1}}), a1})));
  auto smooth = resolve_cone(make_cone(2, {{1, 0}, {0, 1}}));
  CHECK(smooth.inserted_rays.empty());

  for (long m = 2; m <= 50; ++m)
    for (long k = 1; k < m; ++k) {
      if (std::gcd(m, k) != 1) continue;
      Cone c = make_cone(2, {{0, 1}, {m, -k}});
      auto res = resolve_cone(c);
      auto digits = hj_expand(Scalar(Rational(m, k))).digits;
      CHECK(res.digits == digits);
      CHECK(res.inserted_rays.size() == digits.size());
      for (const auto& d : adjacent_dets(res, c)) CHECK(d.abs() == Scalar(1));
      for (const auto& cone : res.fan.cones)
        if (cone.rays.size() == 2) CHECK(cone_classify(cone).kind == ConeKind::Smooth);
      Fan coarse = make_fan(2, {make_cone(2, {}), make_cone(2, {c.rays[0]}), make_cone(2, {c.rays[1]}), c});
      CHECK(is_refinement(res.fan, coarse));
    }
}

TEST_CASE("resolution of skew rational cones goes through a unimodular frame") {
  Cone c = make_cone(2, {{3, 1}, {-1, 4}});
  auto res = resolve_cone(c);
  IntMatrix u = res.frame;
  CHECK(abs(determinant(u)) == 1);
  for (const auto& d : adjacent_dets(res, c)) CHECK(d.abs() == Scalar(1));
  Fan coarse = make_fan(2, {make_cone(2, {}), make_cone(2, {c.rays[0]}), make_cone(2, {c.rays[1]}), c});
  CHECK(is_refinement(res.fan, coarse));
}

TEST_CASE("truncated resolution of an irrational slope") {
  Cone c = make_cone(2, {{0, 1}, {Scalar::sqrt(2), -1}});
  auto r3 = resolve_cone(c, 3);
  CHECK(r3.inserted_rays == std::vector<Vector>{{1, 0}, {2, -1}, {3, -2}});
  CHECK(r3.truncated);
  auto r5 = resolve_cone(c, 5);
  CHECK(r5.digits == ints({2, 2, 4, 2, 4}));
  CHECK(r5.inserted_rays.size() == 5);
  CHECK(r5.inserted_rays.back() == Vector{17, -12});
  auto dets = adjacent_dets(r5, c);
  for (std::size_t i = 0; i + 1 < dets.size(); ++i) CHECK(dets[i].abs() == Scalar(1));
  CHECK_FALSE(dets.back().is_rational());
  Fan coarse = make_fan(2, {make_cone(2, {}), make_cone(2, {c.rays[0]}), make_cone(2, {c.rays[1]}), c});
  CHECK(is_refinement(r5.fan, coarse));
  CHECK(error_name([] { resolve_cone(make_cone(2, {{1, Scalar::sqrt(2)}, {Scalar::sqrt(2), -1}})); }) ==
        "NotNormalizable");
}
