#pragma once

#include <cstddef>
#include <vector>

#include "nctoric/polytope.hpp"

namespace nctoric {

/// Polyhedral cone spanned by its extreme rays.
///
/// Rays are normalized (primitive integer vectors for rational directions,
/// first non-zero entry +-1 otherwise) and kept in lexicographic order, so
/// equal cones compare equal.
struct Cone {
  std::size_t dim = 0;
  std::vector<Vector> rays;

  friend bool operator==(const Cone&, const Cone&) = default;
};

Cone make_cone(std::size_t dim, const std::vector<Vector>& rays);
bool cone_less(const Cone& a, const Cone& b);

struct Fan {
  std::size_t dim = 0;
  std::vector<Cone> cones;  // sorted by ray count, then lexicographically
  bool complete = false;

  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Canonicalizes the cone list. In dimensions 1 and 2 the fan axioms are
/// verified (Error "InvalidFan") and completeness is computed; otherwise
/// `complete` is taken as given.
Fan make_fan(std::size_t dim, std::vector<Cone> cones, bool complete = false);

/// Outer normal fan: one cone spanned by the outward facet normals per face.
Fan normal_fan(const SimplePolytope& p);

enum class ConeKind { Smooth, Orbifold, NonRational };

struct ConeClass {
  ConeKind kind;
  Integer index;  // |det| of the primitive generators; 0 when non-rational
};

const char* to_string(ConeKind k);

/// Throws Error("NotSimplicial") unless the cone has dim linearly independent rays.
ConeClass cone_classify(const Cone& c);

/// Unimodular U with U*a = (0, 1), (U*b)_0 = |det(a, b)| > 0 and
/// -(U*b)_1 / (U*b)_0 in [0, 1), for a primitive integer a and any b off the
/// line through a. For integer b this is the frame cone((0,1), (m,-k)).
IntMatrix normalizing_map(const std::vector<Integer>& a, const Vector& b);
IntMatrix inverse_unimodular(const IntMatrix& u);

/// Minimal generators of cone(a, b) ∩ Z^2, listed from a to b.
std::vector<std::vector<Integer>> hilbert_basis_2d(std::vector<Integer> a, std::vector<Integer> b);

struct DualCone2D {
  std::vector<std::vector<Integer>> dual_rays;      // counter-clockwise order
  std::vector<std::vector<Integer>> hilbert_basis;  // from the first dual ray to the second
};

/// Dual of a full-dimensional rational cone in the plane with the generators
/// of its lattice-point semigroup. Errors: WrongDimension, NonRational.
DualCone2D dual_cone_2d(const Cone& c);

/// True iff every cone of `fine` lies in a cone of `coarse` and every cone of
/// `coarse` is a union of cones of `fine`. Supported in dimensions 1 and 2.
bool is_refinement(const Fan& fine, const Fan& coarse);

/// 2D helpers over the real embedding.
Scalar det2(const Vector& a, const Vector& b);
/// Strict angular order starting at the positive x-axis.
bool angle_less(const Vector& a, const Vector& b);

}  // namespace nctoric
