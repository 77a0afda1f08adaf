#include "nctoric/hj.hpp"

#include <map>

namespace nctoric {

HJDigitStream::HJDigitStream(Scalar x) : state_(std::move(x)) {
  if (state_ <= 1) fail("OutOfRange", "Hirzebruch-Jung expansion needs a value greater than 1");
}

Integer HJDigitStream::next() {
  if (finished_) fail("Exhausted", "the expansion has terminated");
  Integer a = state_.ceil();
  Scalar rest = Scalar(a) - state_;
  if (rest.is_zero()) {
    finished_ = true;
  } else {
    state_ = rest.inverse();
  }
  return a;
}

HJExpansion hj_expand(const Scalar& x, std::optional<std::size_t> depth) {
  HJExpansion out;
  out.source = x;
  HJDigitStream stream(x);
  if (x.is_rational()) {
    while (!stream.finished()) out.digits.push_back(stream.next());
    out.finite = true;
    return out;
  }
  const std::size_t want = depth.value_or(10);
  std::map<Scalar, std::size_t> seen;
  std::vector<Integer> digits;
  for (std::size_t step = 0; step < std::max(want, kPeriodSearchBound); ++step) {
    if (!out.period_detected) {
      auto [it, fresh] = seen.emplace(stream.state(), step);
      if (!fresh) {
        out.period_detected = true;
        out.prefix.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
        out.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      }
    }
    if (out.period_detected && digits.size() >= want) break;
    digits.push_back(stream.next());
  }
  digits.resize(std::min(digits.size(), want));
  out.digits = std::move(digits);
  return out;
}

Rational hj_evaluate(const std::vector<Integer>& digits) {
  if (digits.empty()) fail("InvalidDigits", "empty digit list");
  Rational v(digits.back());
  for (std::size_t i = digits.size() - 1; i-- > 0;) {
    if (v == 0) fail("DivisionByZero", "vanishing denominator while evaluating digits");
    v = Rational(digits[i]) - 1 / v;
  }
  return v;
}

Resolution resolve_cone(const Cone& c, std::optional<std::size_t> depth) {
  if (c.dim != 2 || c.rays.size() != 2) fail("WrongDimension", "resolution is defined for full cones in the plane");
  if (det2(c.rays[0], c.rays[1]).is_zero()) fail("NotSimplicial", "cone rays are collinear");
  auto p0 = primitive_direction(c.rays[0]);
  auto p1 = primitive_direction(c.rays[1]);
  if (p0.empty() && p1.empty()) fail("NotNormalizable", "neither ray of the cone is rational");

  Resolution out;
  const bool rational = !p0.empty() && !p1.empty();
  const auto& a = p0.empty() ? p1 : p0;
  const Vector& b = p0.empty() ? c.rays[0] : c.rays[1];
  IntMatrix u = normalizing_map(a, b);
  IntMatrix ui = inverse_unimodular(u);
  out.frame = u;

  Scalar first = Scalar(u(0, 0)) * b[0] + Scalar(u(0, 1)) * b[1];
  Scalar second = Scalar(u(1, 0)) * b[0] + Scalar(u(1, 1)) * b[1];
  if (!second.is_zero()) {
    Scalar slope = first / -second;
    if (rational) {
      out.digits = hj_expand(slope).digits;
    } else {
      out.digits = hj_expand(slope, depth.value_or(5)).digits;
      out.truncated = true;
    }
  }

  std::vector<std::vector<Integer>> frame{{0, 1}, {1, 0}};
  for (std::size_t i = 0; i + 1 < out.digits.size(); ++i) {
    const auto& cur = frame[frame.size() - 1];
    const auto& prev = frame[frame.size() - 2];
    frame.push_back({out.digits[i] * cur[0] - prev[0], out.digits[i] * cur[1] - prev[1]});
  }
  std::vector<Vector> chain{to_scalars(a)};
  for (std::size_t i = 1; i <= out.digits.size(); ++i) {
    const auto& w = frame[i];
    Vector ray{Scalar(Integer(ui(0, 0) * w[0] + ui(0, 1) * w[1])), Scalar(Integer(ui(1, 0) * w[0] + ui(1, 1) * w[1]))};
    out.inserted_rays.push_back(ray);
    chain.push_back(std::move(ray));
  }
  chain.push_back(b);

  std::vector<Cone> cones{make_cone(2, {})};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    cones.push_back(make_cone(2, {chain[i]}));
    if (i + 1 < chain.size()) cones.push_back(make_cone(2, {chain[i], chain[i + 1]}));
  }
  out.fan = make_fan(2, std::move(cones));
  return out;
}

}  // namespace nctoric
