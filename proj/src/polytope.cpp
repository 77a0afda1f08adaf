#include "nctoric/polytope.hpp"

#include <algorithm>
#include <set>

#include "nctoric/combinatorics.hpp"

namespace nctoric {

namespace {

std::size_t affine_dimension(const std::vector<Vector>& pts, std::size_t dim) {
  if (pts.size() <= 1) return 0;
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vector d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(ScalarMatrix::from_rows(diffs, dim));
}

ScalarMatrix normal_matrix(const std::vector<Halfspace>& hs, const IndexSet& rows, std::size_t dim) {
  ScalarMatrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < dim; ++j) m(r, j) = hs[rows[r]].normal[j];
  return m;
}

void add_subsets(const IndexSet& base, std::set<IndexSet>& out) {
  const std::size_t k = base.size();
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    IndexSet s;
    for (std::size_t b : bits_of(mask)) s.push_back(base[b]);
    out.insert(std::move(s));
  }
}

}  // namespace

const char* to_string(DelzantClass c) {
  switch (c) {
    case DelzantClass::Irrational:
      return "Irrational";
    case DelzantClass::Rational:
      return "RationalDelzant";
    case DelzantClass::Integral:
      return "IntegralDelzant";
  }
  return "?";
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void sort_family(IndexFamily& f) {
  std::sort(f.begin(), f.end(), [](const IndexSet& x, const IndexSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  f.erase(std::unique(f.begin(), f.end()), f.end());
}

SimplePolytope::SimplePolytope(std::size_t dim, std::vector<Halfspace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  if (dim_ == 0) fail("DimensionMismatch", "polytope dimension must be positive");
  Vector all;
  for (const auto& h : halfspaces_) {
    if (h.normal.size() != dim_) fail("DimensionMismatch", "facet normal length differs from the dimension");
    all.insert(all.end(), h.normal.begin(), h.normal.end());
    all.push_back(h.offset);
  }
  common_radicand(all);

  const std::size_t n_rows = halfspaces_.size();
  IndexSet every(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) every[i] = i;
  if (n_rows == 0 || rank(normal_matrix(halfspaces_, every, dim_)) < dim_)
    fail("Unbounded", "facet normals do not span the ambient space");

  for_each_combination(n_rows, dim_, [&](const IndexSet& rows) {
    ScalarMatrix a = normal_matrix(halfspaces_, rows, dim_);
    Vector b;
    for (auto r : rows) b.push_back(halfspaces_[r].offset);
    auto sol = solve_exact(a, b);
    if (sol.kind != SolveResult::Kind::Unique) return true;
    if (!contains(sol.particular)) return true;
    if (std::find(vertices_.begin(), vertices_.end(), sol.particular) == vertices_.end())
      vertices_.push_back(std::move(sol.particular));
    return true;
  });
  if (vertices_.empty()) fail("Empty", "the halfspaces have empty intersection");
  std::sort(vertices_.begin(), vertices_.end(), [](const Vector& x, const Vector& y) { return lex_less(x, y); });

  // A pointed polyhedron is unbounded iff its recession cone has an extreme ray,
  // and every extreme ray is cut out by dim-1 independent normals.
  bool unbounded = false;
  for_each_combination(n_rows, dim_ - 1, [&](const IndexSet& rows) {
    Vector y;
    if (rows.empty()) {
      y = Vector{Scalar(1)};
    } else {
      ScalarMatrix a = normal_matrix(halfspaces_, rows, dim_);
      auto k = kernel_basis(a);
      if (k.size() != 1) return true;
      y = k[0];
    }
    bool nonneg = true, nonpos = true;
    for (const auto& h : halfspaces_) {
      int s = dot(h.normal, y).sign();
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    unbounded = nonneg || nonpos;
    return !unbounded;
  });
  if (unbounded) fail("Unbounded", "the halfspace intersection is unbounded");
  if (affine_dimension(vertices_, dim_) < dim_) fail("NotFullDimensional", "the polytope has empty interior");

  for (const auto& v : vertices_) {
    IndexSet t;
    Vector s = slacks(v);
    for (std::size_t i = 0; i < n_rows; ++i)
      if (s[i].is_zero()) t.push_back(i);
    tight_.push_back(std::move(t));
  }

  redundant_.assign(n_rows, true);
  std::vector<IndexSet> facet_vertices;
  for (std::size_t i = 0; i < n_rows; ++i) {
    IndexSet on;
    std::vector<Vector> pts;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (std::binary_search(tight_[v].begin(), tight_[v].end(), i)) {
        on.push_back(v);
        pts.push_back(vertices_[v]);
      }
    if (pts.size() < dim_ || affine_dimension(pts, dim_) != dim_ - 1) continue;
    if (std::find(facet_vertices.begin(), facet_vertices.end(), on) != facet_vertices.end()) continue;
    facet_vertices.push_back(std::move(on));
    redundant_[i] = false;
  }

  std::set<IndexSet> fam, ess;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    IndexSet facets;
    for (auto i : tight_[v])
      if (!redundant_[i]) facets.push_back(i);
    if (facets.size() != dim_)
      fail("NotSimple", "vertex " + std::to_string(v) + " lies on " + std::to_string(facets.size()) + " facets");
    auto inv = inverse(normal_matrix(halfspaces_, facets, dim_));
    if (!inv) fail("NotSimple", "facet normals at a vertex are linearly dependent");
    std::vector<Vector> dirs;
    for (std::size_t j = 0; j < dim_; ++j) dirs.push_back(inv->column(j));
    edges_.push_back(std::move(dirs));
    add_subsets(tight_[v], fam);
    add_subsets(facets, ess);
    vertex_facets_.push_back(std::move(facets));
  }
  family_.assign(fam.begin(), fam.end());
  essential_family_.assign(ess.begin(), ess.end());
  sort_family(family_);
  sort_family(essential_family_);
}

IndexSet SimplePolytope::redundant_facets() const {
  IndexSet out;
  for (std::size_t i = 0; i < redundant_.size(); ++i)
    if (redundant_[i]) out.push_back(i);
  return out;
}

IndexSet SimplePolytope::essential_facets() const {
  IndexSet out;
  for (std::size_t i = 0; i < redundant_.size(); ++i)
    if (!redundant_[i]) out.push_back(i);
  return out;
}

Vector SimplePolytope::slacks(const Vector& x) const {
  Vector s;
  s.reserve(halfspaces_.size());
  for (const auto& h : halfspaces_) s.push_back(dot(h.normal, x) - h.offset);
  return s;
}

bool SimplePolytope::contains(const Vector& x) const {
  for (const auto& h : halfspaces_)
    if (dot(h.normal, x) < h.offset) return false;
  return true;
}

SimplePolytope polygon_from_vertices(const std::vector<Vector>& ccw_vertices) {
  const std::size_t k = ccw_vertices.size();
  if (k < 3) fail("DimensionMismatch", "a polygon needs at least three vertices");
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < k; ++i) {
    const Vector& p = ccw_vertices[i];
    const Vector& q = ccw_vertices[(i + 1) % k];
    if (p.size() != 2 || q.size() != 2) fail("DimensionMismatch", "polygon vertices must be planar");
    Vector normal{-(q[1] - p[1]), q[0] - p[0]};
    Scalar offset = dot(normal, p);
    hs.push_back({std::move(normal), std::move(offset)});
  }
  return SimplePolytope(2, std::move(hs));
}

SimplePolytope box(const Vector& lo, const Vector& hi) {
  if (lo.size() != hi.size() || lo.empty()) fail("DimensionMismatch", "box bounds differ in length");
  const std::size_t n = lo.size();
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    hs.push_back({e, lo[i]});
    e[i] = -1;
    hs.push_back({e, -hi[i]});
  }
  return SimplePolytope(n, std::move(hs));
}

DelzantClass classify_delzant(const SimplePolytope& p) {
  bool integral = true;
  for (const auto& dirs : p.edge_directions()) {
    IntMatrix m(p.dim(), p.dim());
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      auto prim = primitive_direction(dirs[j]);
      if (prim.empty()) return DelzantClass::Irrational;
      for (std::size_t i = 0; i < p.dim(); ++i) m(i, j) = prim[i];
    }
    if (abs(determinant(m)) != 1) integral = false;
  }
  return integral ? DelzantClass::Integral : DelzantClass::Rational;
}

NormalData normal_data(const SimplePolytope& p) {
  const std::size_t n = p.dim();
  const auto& hs = p.halfspaces();
  NormalData out{IntMatrix(hs.size(), n), {}};
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Vector& normal = hs[i].normal;
    auto prim = primitive_direction(normal);
    if (prim.empty()) fail("IrrationalNormals", "facet " + std::to_string(i + 1) + " has an irrational normal");
    std::size_t k = 0;
    while (k < n && prim[k] == 0) ++k;
    if (k == n) {
      out.lambda.push_back(hs[i].offset);
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) out.rho(i, j) = prim[j];
    Scalar scale = normal[k] / Scalar(prim[k]);
    out.lambda.push_back(hs[i].offset / scale);
  }
  return out;
}

std::vector<Integer> face_counts(const SimplePolytope& p) {
  std::vector<Integer> f(p.dim() + 1, Integer(0));
  for (const auto& s : p.essential_family())
    if (s.size() <= p.dim()) f[s.size()] += 1;
  return f;
}

}  // namespace nctoric
