#include "nctoric/nctorus.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace nctoric {

namespace {

void require_irrational(const Scalar& theta) {
  if (theta.is_rational()) fail("RationalInput", "expected an irrational quadratic slope, got " + theta.to_string());
}

// [[p_{i-1}, p_{i-2}], [q_{i-1}, q_{i-2}]] so that theta = M . x_i.
std::vector<IntMatrix> convergent_matrices(const std::vector<Scalar>& quotients) {
  std::vector<IntMatrix> out{IntMatrix::identity(2)};
  for (std::size_t i = 0; i + 1 < quotients.size(); ++i) {
    const IntMatrix& m = out.back();
    Integer a = quotients[i].floor();
    out.push_back(IntMatrix{{a * m(0, 0) + m(0, 1), m(0, 0)}, {a * m(1, 0) + m(1, 1), m(1, 0)}});
  }
  return out;
}

Integer det2x2(const IntMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

const char* to_string(KroneckerType t) { return t == KroneckerType::ClosedLeaves ? "ClosedLeaves" : "DenseLeaves"; }

KroneckerType kronecker_classify(const Scalar& theta) {
  return theta.is_rational() ? KroneckerType::ClosedLeaves : KroneckerType::DenseLeaves;
}

std::vector<Scalar> complete_quotients(const Scalar& theta, std::size_t count) {
  std::vector<Scalar> out;
  Scalar x = theta;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(x);
    Scalar frac = x - Scalar(x.floor());
    if (frac.is_zero()) break;
    x = frac.inverse();
  }
  return out;
}

CFExpansion cf_expand(const Scalar& theta) {
  require_irrational(theta);
  std::map<Scalar, std::size_t> seen;
  std::vector<Integer> digits{theta.floor()};
  Scalar x = (theta - Scalar(digits[0])).inverse();
  for (;;) {
    auto [it, fresh] = seen.emplace(x, digits.size());
    if (!fresh) {
      CFExpansion e;
      e.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      e.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return e;
    }
    Integer a = x.floor();
    digits.push_back(a);
    x = (x - Scalar(a)).inverse();
  }
}

Scalar mobius_apply(const IntMatrix& m, const Scalar& theta) {
  if (m.rows() != 2 || m.cols() != 2) fail("DimensionMismatch", "Mobius transformations use 2x2 matrices");
  Scalar den = Scalar(m(1, 0)) * theta + Scalar(m(1, 1));
  if (den.is_zero()) fail("PoleAtInput", "c*theta + d vanishes");
  return (Scalar(m(0, 0)) * theta + Scalar(m(0, 1))) / den;
}

MoritaResult morita_equivalent(const Scalar& theta1, const Scalar& theta2, std::size_t search_bound) {
  require_irrational(theta1);
  require_irrational(theta2);
  MoritaResult r;
  if (theta1.radicand() != theta2.radicand()) return r;
  CFExpansion e1 = cf_expand(theta1), e2 = cf_expand(theta2);
  const std::size_t span1 = e1.preperiod.size() + e1.period.size();
  const std::size_t span2 = e2.preperiod.size() + e2.period.size();

  // Tail coincidence within one preperiod plus period of each expansion.
  auto x = complete_quotients(theta1, span1);
  auto y = complete_quotients(theta2, span2);
  for (const auto& q : x)
    if (std::find(y.begin(), y.end(), q) != y.end()) r.equivalent = true;
  if (!r.equivalent) return r;

  std::size_t bound = search_bound;
  if (bound == 0) bound = std::max(e1.preperiod.size() + 2 * e1.period.size(), e2.preperiod.size() + 2 * e2.period.size()) + 1;
  auto xs = complete_quotients(theta1, bound);
  auto ys = complete_quotients(theta2, bound);
  auto mx = convergent_matrices(xs);
  auto my = convergent_matrices(ys);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) order.emplace_back(i, j);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    auto key = [](const auto& p) { return std::make_tuple(std::max(p.first, p.second), p.first + p.second, p.first); };
    return key(a) < key(b);
  });
  for (auto [i, j] : order) {
    if (xs[i] != ys[j]) continue;
    // theta2 = My . x = My . Mx^{-1} . theta1
    const IntMatrix& a = mx[i];
    Integer d = det2x2(a);
    IntMatrix inv{{d * a(1, 1), -d * a(0, 1)}, {-d * a(1, 0), d * a(0, 0)}};
    IntMatrix w = my[j] * inv;
    if (mobius_apply(w, theta1) != theta2) fail("InternalError", "witness does not map theta1 to theta2");
    if (det2x2(w) == 1) {
      r.witness = w;
      r.gl2_witness.reset();
      r.gl2_only_certificate = false;
      return r;
    }
    if (!r.gl2_witness) r.gl2_witness = w;
  }
  r.gl2_only_certificate = true;
  return r;
}

}  // namespace nctoric
