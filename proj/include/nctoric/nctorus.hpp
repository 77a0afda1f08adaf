#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nctoric/matrix.hpp"

namespace nctoric {

enum class KroneckerType { ClosedLeaves, DenseLeaves };
const char* to_string(KroneckerType t);

KroneckerType kronecker_classify(const Scalar& theta);

/// Regular continued fraction [a0; a1, ..., (period)]. The integer part a0
/// always belongs to the preperiod, so the golden ratio reads [1; (1)].
struct CFExpansion {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
};

/// Exact period detection by repetition of complete quotients.
/// Error RationalInput for rational theta.
CFExpansion cf_expand(const Scalar& theta);

/// Complete quotients x_0 = theta, x_{k+1} = 1 / (x_k - floor(x_k)).
std::vector<Scalar> complete_quotients(const Scalar& theta, std::size_t count);

/// (a theta + b) / (c theta + d). Errors PoleAtInput, DimensionMismatch.
Scalar mobius_apply(const IntMatrix& m, const Scalar& theta);

struct MoritaResult {
  bool equivalent = false;
  std::optional<IntMatrix> witness;      // determinant +1, maps theta to theta'
  std::optional<IntMatrix> gl2_witness;  // determinant -1, set only without a +1 witness
  bool gl2_only_certificate = false;
};

/// Equivalence by coincidence of continued-fraction tails. Witnesses are
/// searched over alignments (i, j) of complete quotients with i, j below
/// the bound (0 picks a bound that covers two periods of each expansion).
/// Error RationalInput when either parameter is rational.
MoritaResult morita_equivalent(const Scalar& theta1, const Scalar& theta2, std::size_t search_bound = 0);

}  // namespace nctoric
