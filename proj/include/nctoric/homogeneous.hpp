#pragma once

#include <cstddef>
#include <vector>

#include "nctoric/polytope.hpp"

namespace nctoric {

/// Inclusion-minimal index sets in {0..n-1} that are not members of the
/// subset-closed family f.
IndexFamily minimal_non_faces(const IndexFamily& f, std::size_t n);

/// Minimal non-faces, required to have at least two elements
/// (Error "CodimensionOne" otherwise).
IndexFamily forbidden_strata(const IndexFamily& f, std::size_t n);

/// Saturated basis of ker(rho^T), i.e. integer relations among the rows of
/// rho. Throws Error("RankDeficient") when rho has rank below its width.
std::vector<std::vector<Integer>> kernel_lattice(const IntMatrix& rho);

/// B^T (-lambda) for the basis B returned by kernel_lattice.
Vector moment_vector(const std::vector<std::vector<Integer>>& basis, const Vector& lambda);

struct QuotientData {
  std::size_t facet_count = 0;
  IndexFamily forbidden_strata;
  std::vector<std::vector<Integer>> kernel_basis;
  Vector nu;
};

QuotientData quotient_data(const SimplePolytope& p);

}  // namespace nctoric
