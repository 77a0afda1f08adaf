#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nctoric/polytope.hpp"

namespace nctoric {

/// Exact complex number re + i*im.
struct Complex {
  Scalar re;
  Scalar im;
  friend bool operator==(const Complex&, const Complex&) = default;
};

/// Configuration Lambda = (Lambda_1, ..., Lambda_n) of n points in C^m.
struct Configuration {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<Complex>> lambdas;  // n entries of m complex numbers
};

/// Validates shapes (n > 2m, every point has m entries) and the common field.
/// Errors: InvalidConfiguration, FieldMismatch.
Configuration make_configuration(std::size_t m, std::vector<std::vector<Complex>> lambdas);

/// Shorthand for m = 1.
Configuration make_configuration_1d(const std::vector<Complex>& lambdas);

/// Lambda_i as a real vector (Re l^1, Im l^1, ..., Re l^m, Im l^m).
std::vector<Vector> real_points(const Configuration& c);

/// Exact test of 0 in conv(points) by Caratheodory subset enumeration.
bool origin_in_convex_hull(const std::vector<Vector>& points);

struct Admissibility {
  bool siegel = false;
  bool weak_hyperbolic = false;
  bool admissible() const { return siegel && weak_hyperbolic; }
};

Admissibility check_admissible(const Configuration& c);

/// Every I (0-based, sorted by size then lex) with 0 outside conv{Lambda_i : i in I}.
IndexFamily siegel_index_family(const Configuration& c);

/// Inclusion-minimal coordinate zero-sets removed from C^n: complements of
/// the maximal members of siegel_index_family.
IndexFamily minimal_removed_zero_sets(const Configuration& c);

/// Coefficient matrix of the system (S): rows Re Lambda^(k), Im Lambda^(k)
/// for k = 1..m, then the all-ones row.
ScalarMatrix system_matrix(const Configuration& c);

/// Basis of the solutions of (S), one solution per row, in reduced row
/// echelon form. Error DegenerateSystem when its dimension is not n-2m-1.
ScalarMatrix solution_basis(const Configuration& c);

/// Condition (K): the solution space of (S) has a rational basis.
bool condition_K(const Configuration& c);

enum class LeafType { CompactTori, DenseLeaves };
const char* to_string(LeafType t);

/// Decided from the rationality of span{Re Lambda, Im Lambda, 1}.
LeafType leaf_dichotomy(const Configuration& c);

struct GaleData {
  ScalarMatrix V;   // row i is v_i
  Vector epsilons;  // P = {u : <v_i, u> >= -epsilon_i}
};

/// Gale vectors from the solution basis with every epsilon_i = 1.
GaleData gale_transform(const Configuration& c);

/// Errors: EmptyGale, DimensionMismatch, plus the polytope construction errors.
SimplePolytope polytope_from_gale(const GaleData& g);

/// Barycenter of the vertices of {r >= 0 : sum r_i Lambda_i = 0, sum r_i = 1}.
/// With these epsilons, polytope_from_gale reproduces that polytope and facet
/// i is non-empty exactly when 0 lies in conv{Lambda_j : j != i}.
/// Error NotSiegel when the polytope is empty.
Vector canonical_epsilon(const Configuration& c);

struct FiberReport {
  std::size_t torus_rank = 0;
  std::vector<Vector> foliation_subspace;  // RREF basis inside R^{n-1}
  bool rational = false;
  std::optional<Scalar> slope;
  std::optional<std::pair<std::size_t, std::size_t>> slope_pair;  // Lambda_i = slope * Lambda_j
};

/// Error DegenerateFoliation when the phase subspace has dimension below 2m.
FiberReport generic_fiber(const Configuration& c);

struct IntervalEndpoint {
  Scalar position;
  IndexSet active;               // facets tight at this end
  std::vector<Integer> weights;  // |v_i| for the active facets
};

struct OrbifoldWeights {
  std::vector<Integer> gale_vector;  // primitive, last non-zero entry positive
  IntervalEndpoint lower;
  IntervalEndpoint upper;
  /// Weights above 1 over both endpoints, sorted ascending.
  std::vector<Integer> singular_orders() const;
};

/// Endpoint weights of the interval polytope with canonical epsilons.
/// Errors: WrongDimension (n-2m-1 != 1), IrrationalWeights (condition (K) fails).
OrbifoldWeights orbifold_weights_1d(const Configuration& c);

}  // namespace nctoric
