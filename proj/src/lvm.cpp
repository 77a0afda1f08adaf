#include "nctoric/lvm.hpp"

#include <algorithm>

#include "nctoric/combinatorics.hpp"

namespace nctoric {

namespace {

// Unique solution of [p_i ; 1] t = (0, 1) over the chosen points, if any.
std::optional<Vector> barycentric_origin(const std::vector<Vector>& points, const IndexSet& subset) {
  const std::size_t k = points[0].size();
  ScalarMatrix a(k + 1, subset.size());
  for (std::size_t j = 0; j < subset.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) a(i, j) = points[subset[j]][i];
    a(k, j) = 1;
  }
  Vector rhs(k + 1);
  rhs[k] = 1;
  auto sol = solve_exact(a, rhs);
  if (sol.kind != SolveResult::Kind::Unique) return std::nullopt;
  return sol.particular;
}

bool origin_in_hull_of(const std::vector<Vector>& points, const IndexSet& subset) {
  if (subset.empty()) return false;
  const std::size_t k = points[0].size();
  bool found = false;
  for (std::size_t size = 1; size <= std::min(subset.size(), k + 1) && !found; ++size) {
    for_each_combination(subset.size(), size, [&](const std::vector<std::size_t>& pick) {
      IndexSet s;
      for (auto p : pick) s.push_back(subset[p]);
      auto t = barycentric_origin(points, s);
      if (t && std::all_of(t->begin(), t->end(), [](const Scalar& x) { return x.sign() >= 0; })) found = true;
      return !found;
    });
  }
  return found;
}

IndexSet complement(const IndexSet& s, std::size_t n) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

// Rank over Q of the rational and irrational coefficient vectors of the rows.
std::size_t rational_coefficient_rank(const ScalarMatrix& m) {
  std::vector<std::vector<Rational>> parts;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> a, b;
    for (const auto& x : m.row(i)) {
      a.push_back(x.rational_part());
      b.push_back(x.irrational_part());
    }
    parts.push_back(std::move(a));
    parts.push_back(std::move(b));
  }
  return rank(RationalMatrix::from_rows(parts, m.cols()));
}

std::optional<Scalar> real_ratio(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  std::optional<Scalar> theta;
  for (std::size_t k = 0; k < x.size() && !theta; ++k) {
    if (!y[k].re.is_zero()) theta = x[k].re / y[k].re;
    else if (!y[k].im.is_zero()) theta = x[k].im / y[k].im;
  }
  if (!theta) return std::nullopt;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k].re != *theta * y[k].re || x[k].im != *theta * y[k].im) return std::nullopt;
  return theta;
}

}  // namespace

Configuration make_configuration(std::size_t m, std::vector<std::vector<Complex>> lambdas) {
  const std::size_t n = lambdas.size();
  if (m == 0) fail("InvalidConfiguration", "m must be positive");
  if (n <= 2 * m) fail("InvalidConfiguration", "need n > 2m points");
  Vector all;
  for (const auto& l : lambdas) {
    if (l.size() != m) fail("InvalidConfiguration", "every point needs m complex entries");
    for (const auto& z : l) {
      all.push_back(z.re);
      all.push_back(z.im);
    }
  }
  common_radicand(all);
  return {n, m, std::move(lambdas)};
}

Configuration make_configuration_1d(const std::vector<Complex>& lambdas) {
  std::vector<std::vector<Complex>> pts;
  for (const auto& z : lambdas) pts.push_back({z});
  return make_configuration(1, std::move(pts));
}

std::vector<Vector> real_points(const Configuration& c) {
  std::vector<Vector> out;
  for (const auto& l : c.lambdas) {
    Vector p;
    for (const auto& z : l) {
      p.push_back(z.re);
      p.push_back(z.im);
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool origin_in_convex_hull(const std::vector<Vector>& points) {
  IndexSet all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return origin_in_hull_of(points, all);
}

Admissibility check_admissible(const Configuration& c) {
  auto pts = real_points(c);
  Admissibility a;
  a.siegel = origin_in_convex_hull(pts);
  a.weak_hyperbolic = true;
  for_each_combination(c.n, 2 * c.m, [&](const std::vector<std::size_t>& s) {
    if (origin_in_hull_of(pts, s)) a.weak_hyperbolic = false;
    return a.weak_hyperbolic;
  });
  return a;
}

IndexFamily siegel_index_family(const Configuration& c) {
  if (c.n >= 8 * sizeof(unsigned long) - 1) fail("ComplexTooLarge", "too many points");
  auto pts = real_points(c);
  IndexFamily out;
  for (unsigned long mask = 0; mask < (1ul << c.n); ++mask) {
    IndexSet s = bits_of(mask);
    if (!origin_in_hull_of(pts, s)) out.push_back(std::move(s));
  }
  sort_family(out);
  return out;
}

IndexFamily minimal_removed_zero_sets(const Configuration& c) {
  IndexFamily removed = siegel_index_family(c);
  IndexFamily out;
  for (const auto& s : removed) {
    bool maximal = std::none_of(removed.begin(), removed.end(),
                                [&](const IndexSet& t) { return t.size() > s.size() && is_subset(s, t); });
    if (maximal) out.push_back(complement(s, c.n));
  }
  sort_family(out);
  return out;
}

ScalarMatrix system_matrix(const Configuration& c) {
  ScalarMatrix a(2 * c.m + 1, c.n);
  for (std::size_t i = 0; i < c.n; ++i) {
    for (std::size_t k = 0; k < c.m; ++k) {
      a(2 * k, i) = c.lambdas[i][k].re;
      a(2 * k + 1, i) = c.lambdas[i][k].im;
    }
    a(2 * c.m, i) = 1;
  }
  return a;
}

ScalarMatrix solution_basis(const Configuration& c) {
  auto rows = kernel_basis(system_matrix(c));
  const std::size_t expected = c.n - 2 * c.m - 1;
  if (rows.size() != expected)
    fail("DegenerateSystem", "solution space has dimension " + std::to_string(rows.size()) + ", expected " +
                                 std::to_string(expected));
  return ScalarMatrix::from_rows(rows, c.n);
}

bool condition_K(const Configuration& c) {
  auto basis = solution_basis(c);
  return is_galois_stable(basis.to_rows(), c.n);
}

const char* to_string(LeafType t) { return t == LeafType::CompactTori ? "CompactTori" : "DenseLeaves"; }

LeafType leaf_dichotomy(const Configuration& c) {
  // Rationality of the row space of the system matrix.
  ScalarMatrix a = system_matrix(c);
  std::size_t r = rank(a);
  if (r != 2 * c.m + 1) fail("DegenerateSystem", "system (S) has dependent equations");
  return rational_coefficient_rank(a) == r ? LeafType::CompactTori : LeafType::DenseLeaves;
}

GaleData gale_transform(const Configuration& c) {
  ScalarMatrix basis = solution_basis(c);
  return {basis.transpose(), Vector(c.n, Scalar(1))};
}

SimplePolytope polytope_from_gale(const GaleData& g) {
  if (g.V.cols() == 0) fail("EmptyGale", "the Gale transform is zero-dimensional");
  if (g.epsilons.size() != g.V.rows()) fail("DimensionMismatch", "need one epsilon per Gale vector");
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < g.V.rows(); ++i) hs.push_back({g.V.row_vector(i), -g.epsilons[i]});
  return SimplePolytope(g.V.cols(), std::move(hs));
}

Vector canonical_epsilon(const Configuration& c) {
  ScalarMatrix a = system_matrix(c);
  const std::size_t k = a.rows();
  if (rank(a) != k) fail("DegenerateSystem", "system (S) has dependent equations");
  Vector rhs(k);
  rhs[k - 1] = 1;
  std::vector<Vector> vertices;
  for_each_combination(c.n, k, [&](const std::vector<std::size_t>& s) {
    ScalarMatrix sub(k, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) sub(i, j) = a(i, s[j]);
    auto sol = solve_exact(sub, rhs);
    if (sol.kind != SolveResult::Kind::Unique) return true;
    if (std::any_of(sol.particular.begin(), sol.particular.end(), [](const Scalar& x) { return x.sign() < 0; }))
      return true;
    Vector r(c.n);
    for (std::size_t j = 0; j < k; ++j) r[s[j]] = sol.particular[j];
    if (std::find(vertices.begin(), vertices.end(), r) == vertices.end()) vertices.push_back(std::move(r));
    return true;
  });
  if (vertices.empty()) fail("NotSiegel", "0 is not in the convex hull of the configuration");
  Vector eps(c.n);
  const Scalar count(static_cast<long>(vertices.size()));
  for (const auto& v : vertices)
    for (std::size_t i = 0; i < c.n; ++i) eps[i] += v[i] / count;
  return eps;
}

FiberReport generic_fiber(const Configuration& c) {
  const std::size_t n = c.n;
  std::vector<Vector> image;
  for (std::size_t k = 0; k < c.m; ++k) {
    Vector re, im;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      re.push_back(c.lambdas[i][k].re - c.lambdas[n - 1][k].re);
      im.push_back(c.lambdas[i][k].im - c.lambdas[n - 1][k].im);
    }
    image.push_back(std::move(re));
    image.push_back(std::move(im));
  }
  FiberReport f;
  f.torus_rank = n - 1;
  f.foliation_subspace = row_space_basis(image, n - 1);
  if (f.foliation_subspace.size() != 2 * c.m)
    fail("DegenerateFoliation", "phase subspace has dimension below 2m");
  f.rational = is_galois_stable(f.foliation_subspace, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto theta = real_ratio(c.lambdas[i], c.lambdas[j]);
      if (!theta) continue;
      if (!f.slope || (f.slope->is_rational() && !theta->is_rational())) {
        f.slope = theta;
        f.slope_pair = {i, j};
      }
    }
  return f;
}

std::vector<Integer> OrbifoldWeights::singular_orders() const {
  std::vector<Integer> out;
  for (const auto* e : {&lower, &upper})
    for (const auto& w : e->weights)
      if (w > 1) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

OrbifoldWeights orbifold_weights_1d(const Configuration& c) {
  if (c.n - 2 * c.m - 1 != 1) fail("WrongDimension", "the Gale polytope must be an interval");
  if (!condition_K(c)) fail("IrrationalWeights", "condition (K) fails, weights are not integral");
  ScalarMatrix basis = solution_basis(c);
  std::vector<Rational> q;
  for (const auto& x : basis.row(0)) q.push_back(x.to_rational());
  OrbifoldWeights out;
  out.gale_vector = primitive_integer_vector(q);
  for (auto it = out.gale_vector.rbegin(); it != out.gale_vector.rend(); ++it) {
    if (*it == 0) continue;
    if (*it < 0)
      for (auto& z : out.gale_vector) z = -z;
    break;
  }
  GaleData g{ScalarMatrix(c.n, 1), canonical_epsilon(c)};
  for (std::size_t i = 0; i < c.n; ++i) g.V(i, 0) = Scalar(out.gale_vector[i]);
  SimplePolytope p = polytope_from_gale(g);
  const auto& verts = p.vertices();
  IntervalEndpoint* ends[2] = {&out.lower, &out.upper};
  for (std::size_t e = 0; e < 2; ++e) {
    ends[e]->position = verts[e][0];
    Vector s = p.slacks(verts[e]);
    for (std::size_t i = 0; i < c.n; ++i)
      if (s[i].is_zero()) {
        ends[e]->active.push_back(i);
        ends[e]->weights.push_back(abs(out.gale_vector[i]));
      }
  }
  return out;
}

}  // namespace nctoric
