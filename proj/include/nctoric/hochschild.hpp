#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nctoric/matrix.hpp"

namespace nctoric {

using RationalVector = std::vector<Rational>;
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Unital associative algebra over Q given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k. Associativity and the unit laws are
/// checked exhaustively at construction (Error InvalidAlgebra).
class FinDimAlgebra {
 public:
  FinDimAlgebra(std::vector<std::string> labels, const std::vector<std::vector<RationalVector>>& c, RationalVector unit);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RationalVector& unit() const { return unit_; }
  /// Non-zero entries of e_i e_j, sorted by index.
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  /// Dense structure constants c[i][j][k].
  std::vector<std::vector<RationalVector>> structure_constants() const;
  /// Index k when the unit equals the basis vector e_k.
  std::optional<std::size_t> unit_index() const;

  RationalVector multiply(const RationalVector& x, const RationalVector& y) const;

 private:
  std::vector<std::string> labels_;
  std::vector<SparseVector> products_;
  RationalVector unit_;
};

/// New basis b_i = sum_j p(i, j) e_j. Error InvalidAlgebra if p is singular.
FinDimAlgebra change_basis(const FinDimAlgebra& a, const RationalMatrix& p);

/// Equivalent algebra in which the unit is a basis vector; returns the input
/// unchanged when it already is.
FinDimAlgebra with_unit_basis(const FinDimAlgebra& a);

/// Formal combination of tensors e_{i0} (x) ... (x) e_{ik} of length degree+1.
/// In reduced mode tensors carrying the unit label in positions 1..k vanish.
struct ChainElement {
  std::size_t degree = 0;
  bool reduced = false;
  std::map<std::vector<std::size_t>, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<std::size_t>& tensor, const Rational& coeff);
  ChainElement& operator+=(const ChainElement& o);
  friend bool operator==(const ChainElement&, const ChainElement&) = default;
};

/// Sum of (-1)^i a0 .. a_i a_{i+1} .. an over i < n plus (-1)^n an a0 (x) a1 .. a_{n-1}.
/// Error DegreeZero. Reduced chains need the unit as a basis vector (UnitNotBasis).
ChainElement hochschild_boundary(const FinDimAlgebra& a, const ChainElement& x);

/// Sum over i of (-1)^{n i} 1 (x) a_i (x) .. (x) a_n (x) a_0 (x) .. (x) a_{i-1}.
/// Error UnitNotBasis when the unit is not a basis vector.
ChainElement connes_B(const FinDimAlgebra& a, const ChainElement& x);

/// dim HH_k for k = 0..up_to by exact sparse rank computations.
/// Errors ComplexTooLarge (up_to > 6 or too many tensors), UnitNotBasis.
std::vector<std::size_t> hh_ranks(const FinDimAlgebra& a, std::size_t up_to, bool reduced = false);

struct HPResult {
  std::size_t N = 0;
  std::size_t even = 0;  // homology in total degree 0
  std::size_t odd = 0;   // homology in total degree 1
};

/// Homology of the reduced complex C[u]/u^N with differential d + uB, where
/// total degree t collects C_{t+2j} u^j for 0 <= j < N.
HPResult hp_truncated(const FinDimAlgebra& a, std::size_t N);

struct HPReport {
  std::vector<HPResult> by_N;  // N = 1..N_max
  bool stabilized = false;     // the last two truncations agree
};

HPReport hp_stabilization(const FinDimAlgebra& a, std::size_t N_max);

/// Finite groupoid on objects 0..objects-1; arrow k goes from source[k] to
/// target[k]. compose[a][b] is a∘b (defined when source(a) == target(b)).
struct FiniteGroupoid {
  std::size_t objects = 0;
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::vector<std::vector<std::optional<std::size_t>>> compose;
  std::vector<std::string> labels;
};

/// Checks category axioms and invertibility; Error InvalidGroupoid.
void validate_groupoid(const FiniteGroupoid& g);

FiniteGroupoid pair_groupoid(std::size_t n);
FiniteGroupoid cyclic_group_groupoid(std::size_t order);
FiniteGroupoid discrete_groupoid(std::size_t n);

/// Basis = arrows, e_b * e_c = e_{b∘c} when composable; unit = sum of identities.
FinDimAlgebra convolution_algebra(const FiniteGroupoid& g);

}  // namespace nctoric
