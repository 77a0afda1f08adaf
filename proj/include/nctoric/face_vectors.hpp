#pragma once

#include <cstddef>
#include <vector>

#include "nctoric/scalar.hpp"

namespace nctoric {

using IntVector = std::vector<Integer>;

Integer binomial(long n, long k);  // 0 outside 0 <= k <= n

/// h_i = sum_j C(d-j, d-i) (-1)^{i-j} f_{j-1} for f = (1, f_0, ..., f_{d-1}).
/// Error LengthMismatch unless f has d+1 entries starting with 1.
IntVector h_from_f(const IntVector& f, std::size_t d);

/// Inverse transform f_{j-1} = sum_{i<=j} C(d-i, j-i) h_i.
IntVector f_from_h(const IntVector& h);

/// g_0 = h_0, g_i = h_i - h_{i-1} for 1 <= i <= floor(d/2).
IntVector g_from_h(const IntVector& h);

bool check_dehn_sommerville(const IntVector& h);

/// Terms n_i > n_{i-1} > ... > n_j >= j >= 1 of the greedy expansion
/// l = C(n_i, i) + ... + C(n_j, j), listed from level i down.
std::vector<long> macaulay_expansion(const Integer& l, long i);

enum class ShadowConvention {
  Standard,  // C(n_i + 1, i + 1) + ... + C(n_j + 1, j + 1)
  Literal,   // C(n_i, i + 1) + ... + C(n_j, j + 1)
};

Integer shadow(const Integer& l, long i, ShadowConvention conv = ShadowConvention::Standard);

/// l_0 = 1 and 0 <= l_{i+1} <= shadow(l_i, i) for i >= 1.
bool is_m_vector(const IntVector& l, ShadowConvention conv = ShadowConvention::Standard);

struct FHGVectors {
  std::size_t d = 0;
  IntVector f;
  IntVector h;
  IntVector g;
};

struct GTheoremCheck {
  FHGVectors vectors;
  bool ds = false;
  bool h0 = false;
  bool m_vector = false;
  bool pass = false;
};

GTheoremCheck g_theorem_necessity(const IntVector& f, std::size_t d,
                                  ShadowConvention conv = ShadowConvention::Standard);

}  // namespace nctoric
