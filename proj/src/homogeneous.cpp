#include "nctoric/homogeneous.hpp"

#include <algorithm>

namespace nctoric {

IndexFamily minimal_non_faces(const IndexFamily& f, std::size_t n) {
  if (n >= 8 * sizeof(unsigned long) - 1) fail("ComplexTooLarge", "too many facets");
  auto member = [&](const IndexSet& s) { return std::binary_search(f.begin(), f.end(), s, [](const IndexSet& x, const IndexSet& y) {
                                           if (x.size() != y.size()) return x.size() < y.size();
                                           return x < y;
                                         }); };
  IndexFamily out;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (member(s)) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
      IndexSet t = s;
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
      minimal = member(t);
    }
    if (minimal) out.push_back(std::move(s));
  }
  sort_family(out);
  return out;
}

IndexFamily forbidden_strata(const IndexFamily& f, std::size_t n) {
  IndexFamily out = minimal_non_faces(f, n);
  for (const auto& s : out)
    if (s.size() < 2) fail("CodimensionOne", "facet " + std::to_string(s[0] + 1) + " is empty");
  return out;
}

std::vector<std::vector<Integer>> kernel_lattice(const IntMatrix& rho) {
  RationalMatrix q(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) q(i, j) = rho(i, j);
  if (rank(q) < rho.cols()) fail("RankDeficient", "facet normals do not span the ambient space");
  return integer_kernel_basis(rho.transpose());
}

Vector moment_vector(const std::vector<std::vector<Integer>>& basis, const Vector& lambda) {
  Vector nu;
  for (const auto& b : basis) {
    if (b.size() != lambda.size()) fail("DimensionMismatch", "kernel vector length differs from facet count");
    Scalar s;
    for (std::size_t i = 0; i < b.size(); ++i) s -= Scalar(b[i]) * lambda[i];
    nu.push_back(std::move(s));
  }
  return nu;
}

QuotientData quotient_data(const SimplePolytope& p) {
  QuotientData q;
  q.facet_count = p.halfspace_count();
  q.forbidden_strata = forbidden_strata(p.family(), q.facet_count);
  auto nd = normal_data(p);
  q.kernel_basis = kernel_lattice(nd.rho);
  q.nu = moment_vector(q.kernel_basis, nd.lambda);
  return q;
}

}  // namespace nctoric
