#include "nctoric/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "nctoric/error.hpp"

namespace nctoric {

namespace {

// Largest s with s*s | n, and the square-free cofactor.
std::pair<Integer, Integer> split_square(Integer n) {
  Integer s = 1;
  Integer f = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) f *= p;
  }
  f *= n;
  return {s, f};
}

}  // namespace

Scalar::Scalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ < 0) fail("InvalidScalar", "radicand must be non-negative");
  if (d_ <= 1) {
    if (d_ == 1) a_ += b_;
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [s, f] = split_square(Integer(static_cast<long>(d_)));
  b_ *= s;
  if (f == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else {
    d_ = f.get_si();
  }
  normalize();
}

Scalar Scalar::sqrt(const Integer& n) {
  if (n < 0) fail("InvalidScalar", "square root of a negative integer");
  if (!n.fits_slong_p()) fail("InvalidScalar", "radicand too large");
  return Scalar(0, 1, n.get_si());
}

void Scalar::normalize() {
  if (b_ == 0) d_ = 0;
}

Integer Scalar::to_integer() const {
  if (!is_integer()) fail("NotInteger", to_string() + " is not an integer");
  return a_.get_num();
}

const Rational& Scalar::to_rational() const {
  if (!is_rational()) fail("NotRational", to_string() + " is not rational");
  return a_;
}

int Scalar::sign() const {
  int sa = sgn(a_);
  if (d_ == 0) return sa;
  int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs; the larger square wins.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * static_cast<long>(d_);
  return lhs > rhs ? sa : sb;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Integer Scalar::floor() const {
  if (d_ == 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return q;
  }
  // Bracket with a float estimate, then settle with exact comparisons.
  double est = to_double();
  Integer c;
  if (std::isfinite(est) && std::fabs(est) < 1e15) {
    c = static_cast<long>(std::floor(est));
  } else {
    c = Scalar(a_).floor();
  }
  // Exponential search followed by bisection keeps this exact for any size.
  auto le = [this](const Integer& k) { return Scalar(Rational(k)) <= *this; };
  if (le(c)) {
    Integer step = 1;
    while (le(c + step)) {
      c += step;
      step *= 2;
    }
    Integer lo = c;
    Integer hi = c + step;  // le(lo) and !le(hi)
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      (le(mid) ? lo : hi) = mid;
    }
    return lo;
  }
  Integer step = 1;
  while (!le(c - step)) {
    c -= step;
    step *= 2;
  }
  Integer lo = c - step;
  Integer hi = c;
  while (hi - lo > 1) {
    Integer mid = lo + (hi - lo) / 2;
    (le(mid) ? lo : hi) = mid;
  }
  return lo;
}

Integer Scalar::ceil() const { return -(-*this).floor(); }

double Scalar::to_double() const {
  double v = a_.get_d();
  if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::int64_t d = common_radicand(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  std::int64_t d = common_radicand(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::int64_t d = common_radicand(d_, o.d_);
  Rational na = a_ * o.a_;
  if (d != 0) na += b_ * o.b_ * static_cast<long>(d);
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = d;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero");
  if (d_ == 0) return Scalar(Rational(1) / a_);
  Rational norm = a_ * a_ - b_ * b_ * static_cast<long>(d_);
  return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  common_radicand(d_, o.d_);
  return *this *= o.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
  return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw InputError("invalid rational literal '" + text + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string Scalar::to_string() const {
  if (d_ == 0) return rational_to_string(a_);
  std::string out;
  if (a_ != 0) out = rational_to_string(a_);
  Rational mag = b_;
  bool negative = mag < 0;
  if (negative) mag = -mag;
  if (negative) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (mag != 1) out += rational_to_string(mag) + "*";
  out += "sqrt(" + std::to_string(d_) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

std::int64_t common_radicand(std::int64_t d1, std::int64_t d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  fail("FieldMismatch", "cannot mix Q(sqrt " + std::to_string(d1) + ") and Q(sqrt " + std::to_string(d2) + ")");
}

std::int64_t common_radicand(std::span<const Scalar> values) {
  std::int64_t d = 0;
  for (const auto& v : values) d = common_radicand(d, v.radicand());
  return d;
}

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) fail("DimensionMismatch", "dot product of vectors with different lengths");
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool lex_less(std::span<const Scalar> x, std::span<const Scalar> y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::vector<Integer> primitive_direction(std::span<const Scalar> v) {
  auto pivot = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (pivot == v.end()) return std::vector<Integer>(v.size(), Integer(0));
  Scalar lead = pivot->abs();
  std::vector<Rational> ratios;
  ratios.reserve(v.size());
  for (const auto& x : v) {
    Scalar r = x / lead;
    if (!r.is_rational()) return {};
    ratios.push_back(r.to_rational());
  }
  Integer den = 1;
  for (const auto& r : ratios) den = lcm(den, Integer(r.get_den()));
  std::vector<Integer> out;
  out.reserve(ratios.size());
  Integer g = 0;
  for (const auto& r : ratios) {
    Integer z = Integer(r.get_num()) * (den / r.get_den());
    g = gcd(g, z);
    out.push_back(z);
  }
  for (auto& z : out) z /= g;
  return out;
}

Vector normalize_direction(std::span<const Scalar> v) {
  auto prim = primitive_direction(v);
  if (!prim.empty()) return to_scalars(prim);
  auto pivot = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  Scalar lead = pivot->abs();
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / lead);
  return out;
}

Vector to_scalars(std::span<const Integer> v) { return Vector(v.begin(), v.end()); }

}  // namespace nctoric
