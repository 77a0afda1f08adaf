#include "nctoric/fan.hpp"

#include <algorithm>
#include <set>

#include "nctoric/hj.hpp"

namespace nctoric {

namespace {

bool is_half_upper(const Vector& v) { return v[1].sign() > 0 || (v[1].is_zero() && v[0].sign() > 0); }

// x lies in cone(a, b) for a, b in counter-clockwise order spanning less than a half-turn.
bool in_sector(const Vector& a, const Vector& b, const Vector& x) {
  return det2(a, x).sign() >= 0 && det2(x, b).sign() >= 0;
}

bool strictly_in_sector(const Vector& a, const Vector& b, const Vector& x) {
  return det2(a, x).sign() > 0 && det2(x, b).sign() > 0;
}

// Rays of a 2D cone in counter-clockwise order.
std::pair<Vector, Vector> ccw_pair(const Cone& c) {
  if (det2(c.rays[0], c.rays[1]).sign() > 0) return {c.rays[0], c.rays[1]};
  return {c.rays[1], c.rays[0]};
}

bool has_cone(const Fan& f, const Cone& c) { return std::binary_search(f.cones.begin(), f.cones.end(), c, cone_less); }

// Fan axioms in dimension <= 2 and completeness.
bool validate_low_dim(const Fan& f) {
  std::set<Vector, decltype([](const Vector& a, const Vector& b) { return lex_less(a, b); })> rays;
  std::vector<Cone> planes;
  for (const auto& c : f.cones) {
    if (c.rays.size() > f.dim) fail("InvalidFan", "cone with more rays than the dimension");
    for (const auto& r : c.rays) {
      if (!has_cone(f, make_cone(f.dim, {r}))) fail("InvalidFan", "a ray of a cone is missing from the fan");
      rays.insert(r);
    }
    if (!f.cones.empty() && !has_cone(f, make_cone(f.dim, {}))) fail("InvalidFan", "the origin cone is missing");
    if (c.rays.size() == 2) {
      if (f.dim == 1 || det2(c.rays[0], c.rays[1]).is_zero()) fail("InvalidFan", "cone is not strictly convex");
      planes.push_back(c);
    }
    if (f.dim == 1 && c.rays.size() == 1 && c.rays[0][0].is_zero()) fail("InvalidFan", "zero ray");
  }
  if (f.dim == 1) return rays.size() == 2;
  for (const auto& c : planes) {
    auto [a, b] = ccw_pair(c);
    for (const auto& r : rays)
      if (strictly_in_sector(a, b, r)) fail("InvalidFan", "a ray lies inside a two-dimensional cone");
  }
  if (rays.size() < 3) return false;
  std::vector<Vector> sorted(rays.begin(), rays.end());
  std::sort(sorted.begin(), sorted.end(), angle_less);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Vector& a = sorted[i];
    const Vector& b = sorted[(i + 1) % sorted.size()];
    if (det2(a, b).sign() <= 0 || !has_cone(f, make_cone(2, {a, b}))) return false;
  }
  return true;
}

}  // namespace

Scalar det2(const Vector& a, const Vector& b) { return a[0] * b[1] - a[1] * b[0]; }

bool angle_less(const Vector& a, const Vector& b) {
  bool ua = is_half_upper(a), ub = is_half_upper(b);
  if (ua != ub) return ua;
  return det2(a, b).sign() > 0;
}

Cone make_cone(std::size_t dim, const std::vector<Vector>& rays) {
  Cone c{dim, {}};
  for (const auto& r : rays) {
    if (r.size() != dim) fail("DimensionMismatch", "ray length differs from the cone dimension");
    if (is_zero_vector(r)) fail("InvalidCone", "zero ray");
    c.rays.push_back(normalize_direction(r));
  }
  std::sort(c.rays.begin(), c.rays.end(), [](const Vector& a, const Vector& b) { return lex_less(a, b); });
  c.rays.erase(std::unique(c.rays.begin(), c.rays.end()), c.rays.end());
  return c;
}

bool cone_less(const Cone& a, const Cone& b) {
  if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
  return std::lexicographical_compare(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                                      [](const Vector& x, const Vector& y) { return lex_less(x, y); });
}

Fan make_fan(std::size_t dim, std::vector<Cone> cones, bool complete) {
  for (const auto& c : cones)
    if (c.dim != dim) fail("DimensionMismatch", "cone dimension differs from the fan dimension");
  std::sort(cones.begin(), cones.end(), cone_less);
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  Fan f{dim, std::move(cones), complete};
  if (dim <= 2) f.complete = validate_low_dim(f);
  return f;
}

Fan normal_fan(const SimplePolytope& p) {
  std::vector<Cone> cones;
  for (const auto& s : p.essential_family()) {
    std::vector<Vector> rays;
    for (auto i : s) {
      Vector outer;
      for (const auto& x : p.halfspaces()[i].normal) outer.push_back(-x);
      rays.push_back(std::move(outer));
    }
    cones.push_back(make_cone(p.dim(), rays));
  }
  return make_fan(p.dim(), std::move(cones), true);
}

const char* to_string(ConeKind k) {
  switch (k) {
    case ConeKind::Smooth:
      return "Smooth";
    case ConeKind::Orbifold:
      return "Orbifold";
    case ConeKind::NonRational:
      return "NonRational";
  }
  return "?";
}

ConeClass cone_classify(const Cone& c) {
  if (c.rays.size() != c.dim) fail("NotSimplicial", "cone needs exactly as many rays as the dimension");
  ScalarMatrix m(c.dim, c.dim);
  for (std::size_t j = 0; j < c.dim; ++j)
    for (std::size_t i = 0; i < c.dim; ++i) m(i, j) = c.rays[j][i];
  if (determinant_field(m).is_zero()) fail("NotSimplicial", "cone rays are linearly dependent");
  IntMatrix im(c.dim, c.dim);
  for (std::size_t j = 0; j < c.dim; ++j) {
    auto prim = primitive_direction(c.rays[j]);
    if (prim.empty()) return {ConeKind::NonRational, 0};
    for (std::size_t i = 0; i < c.dim; ++i) im(i, j) = prim[i];
  }
  Integer index = abs(determinant(im));
  return {index == 1 ? ConeKind::Smooth : ConeKind::Orbifold, index};
}

IntMatrix normalizing_map(const std::vector<Integer>& a, const Vector& b) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[0].get_mpz_t(), a[1].get_mpz_t());
  if (g != 1) fail("NotNormalizable", "first ray is not primitive");
  Vector av{Scalar(a[0]), Scalar(a[1])};
  int orient = det2(av, b).sign();
  if (orient == 0) fail("NotSimplicial", "rays are collinear");
  // Row 1 annihilates a, row 2 pairs to 1 with it; det(U) = +-1.
  IntMatrix u{{-orient * a[1], orient * a[0]}, {s, t}};
  Scalar first = Scalar(u(0, 0)) * b[0] + Scalar(u(0, 1)) * b[1];
  Scalar second = Scalar(u(1, 0)) * b[0] + Scalar(u(1, 1)) * b[1];
  Integer q = (-second / first).floor();
  u(1, 0) += q * u(0, 0);
  u(1, 1) += q * u(0, 1);
  return u;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  Integer d = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  if (abs(d) != 1) fail("NotNormalizable", "matrix is not unimodular");
  return IntMatrix{{d * u(1, 1), -d * u(0, 1)}, {-d * u(1, 0), d * u(0, 0)}};
}

std::vector<std::vector<Integer>> hilbert_basis_2d(std::vector<Integer> a, std::vector<Integer> b) {
  IntMatrix u = normalizing_map(a, to_scalars(b));
  IntMatrix ui = inverse_unimodular(u);
  Integer m = u(0, 0) * b[0] + u(0, 1) * b[1];
  Integer k = -(u(1, 0) * b[0] + u(1, 1) * b[1]);
  std::vector<std::vector<Integer>> frame{{0, 1}};
  if (m != 1) {
    auto digits = hj_expand(Scalar(Rational(m, k))).digits;
    frame.push_back({1, 0});
    for (const auto& d : digits) {
      const auto& cur = frame[frame.size() - 1];
      const auto& prev = frame[frame.size() - 2];
      frame.push_back({d * cur[0] - prev[0], d * cur[1] - prev[1]});
    }
  } else {
    frame.push_back({m, -k});
  }
  std::vector<std::vector<Integer>> out;
  for (const auto& w : frame) out.push_back({ui(0, 0) * w[0] + ui(0, 1) * w[1], ui(1, 0) * w[0] + ui(1, 1) * w[1]});
  return out;
}

DualCone2D dual_cone_2d(const Cone& c) {
  if (c.dim != 2 || c.rays.size() != 2) fail("WrongDimension", "dual cones are computed for full cones in the plane");
  auto [u, v] = ccw_pair(c);
  if (det2(u, v).is_zero()) fail("WrongDimension", "cone is not full-dimensional");
  if (!u[0].is_rational() || !u[1].is_rational() || !v[0].is_rational() || !v[1].is_rational() ||
      primitive_direction(u).empty() || primitive_direction(v).empty())
    fail("NonRational", "cone has an irrational ray");
  auto pu = primitive_direction(u);
  auto pv = primitive_direction(v);
  // Inner normals of the two walls, listed counter-clockwise.
  std::vector<Integer> w_v{pv[1], -pv[0]};
  std::vector<Integer> w_u{-pu[1], pu[0]};
  DualCone2D out;
  out.dual_rays = {w_v, w_u};
  out.hilbert_basis = hilbert_basis_2d(w_v, w_u);
  return out;
}

bool is_refinement(const Fan& fine, const Fan& coarse) {
  if (fine.dim != coarse.dim) fail("DimensionMismatch", "fans live in different dimensions");
  if (fine.dim > 2) fail("UnsupportedDimension", "refinement is decided in dimensions 1 and 2");
  auto contained = [&](const Cone& small, const Cone& big) {
    if (big.rays.empty()) return small.rays.empty();
    if (big.rays.size() == 1) {
      for (const auto& r : small.rays)
        if (r != big.rays[0]) return false;
      return true;
    }
    auto [a, b] = ccw_pair(big);
    for (const auto& r : small.rays)
      if (!in_sector(a, b, r)) return false;
    return true;
  };
  for (const auto& c : fine.cones) {
    bool inside = false;
    for (const auto& big : coarse.cones) inside = inside || contained(c, big);
    if (!inside) return false;
  }
  for (const auto& big : coarse.cones) {
    if (big.rays.size() <= 1) {
      if (!has_cone(fine, big)) return false;
      continue;
    }
    auto [a, b] = ccw_pair(big);
    std::vector<Vector> chain;
    for (const auto& c : fine.cones)
      if (c.rays.size() == 1 && in_sector(a, b, c.rays[0])) chain.push_back(c.rays[0]);
    std::sort(chain.begin(), chain.end(), [](const Vector& x, const Vector& y) { return det2(x, y).sign() > 0; });
    if (chain.size() < 2 || chain.front() != a || chain.back() != b) return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!has_cone(fine, make_cone(2, {chain[i], chain[i + 1]}))) return false;
  }
  return true;
}

}  // namespace nctoric
