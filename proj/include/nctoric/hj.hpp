#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nctoric/fan.hpp"

namespace nctoric {

/// Lazily produces the Hirzebruch-Jung digits a_i = ceil(x_i),
/// x_{i+1} = 1 / (a_i - x_i) of a value x_1 > 1.
class HJDigitStream {
 public:
  explicit HJDigitStream(Scalar x);  // throws Error("OutOfRange") unless x > 1

  bool finished() const { return finished_; }
  /// State x_i whose ceiling is the next digit.
  const Scalar& state() const { return state_; }
  Integer next();  // throws Error("Exhausted") once finished

 private:
  Scalar state_;
  bool finished_ = false;
};

inline constexpr std::size_t kPeriodSearchBound = 10000;

struct HJExpansion {
  Scalar source;
  std::vector<Integer> digits;  // complete for rationals, `depth` digits otherwise
  bool finite = false;
  bool period_detected = false;
  std::vector<Integer> prefix;  // digits before the repeating block
  std::vector<Integer> period;
};

/// Digits of x > 1. Irrational inputs yield `depth` digits (default 10) and
/// an exact period search over repeated states.
HJExpansion hj_expand(const Scalar& x, std::optional<std::size_t> depth = std::nullopt);

/// a_1 - 1/(a_2 - 1/(... - 1/a_r)); throws Error("DivisionByZero") on a
/// vanishing intermediate denominator.
Rational hj_evaluate(const std::vector<Integer>& digits);

struct Resolution {
  Fan fan;
  std::vector<Vector> inserted_rays;  // in order from the first ray of the input
  std::vector<Integer> digits;
  IntMatrix frame;                    // unimodular normalizing map of the input
  bool truncated = false;             // irrational slope: last wedge is not smooth
};

/// Subdivides a 2D cone into unimodular cones. Rational cones are resolved
/// completely; a cone with one rational and one irrational ray gets `depth`
/// rays (default 5) from the truncated expansion. Errors: WrongDimension,
/// NotSimplicial, NotNormalizable.
Resolution resolve_cone(const Cone& c, std::optional<std::size_t> depth = std::nullopt);

}  // namespace nctoric
