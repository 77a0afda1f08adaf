#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace nctoric {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt d).
///
/// d is square-free and >= 2 whenever b != 0; rational values always carry
/// d == 0. Arithmetic between two irrational values requires equal d and
/// throws Error("FieldMismatch") otherwise. Ordering uses the real embedding
/// with sqrt(d) > 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : a_(v) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b, std::int64_t d);

  /// sqrt(n) for a non-negative integer n, with square factors pulled out.
  static Scalar sqrt(const Integer& n);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  /// Square-free radicand, or 0 for rational values.
  std::int64_t radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }
  bool is_zero() const { return d_ == 0 && a_ == 0; }
  Integer to_integer() const;  // throws unless is_integer()
  const Rational& to_rational() const;  // throws unless is_rational()

  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  Scalar conjugate() const;
  Integer floor() const;
  Integer ceil() const;
  /// Float approximation, for rendering and tie-free sanity checks only.
  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar inverse() const;

  /// Exact equality; values from different irrational fields are never equal.
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// Canonical literal such as "3", "-1/2", "sqrt(2)" or "1+3/2*sqrt(5)".
  std::string to_string() const;

 private:
  void normalize();

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Radicand shared by all irrational entries (0 if every entry is rational).
/// Throws Error("FieldMismatch") when two distinct fields occur.
std::int64_t common_radicand(std::span<const Scalar> values);
std::int64_t common_radicand(std::int64_t d1, std::int64_t d2);

using Vector = std::vector<Scalar>;

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y);
bool is_zero_vector(std::span<const Scalar> v);
bool lex_less(std::span<const Scalar> x, std::span<const Scalar> y);

/// Primitive integer vector on the ray through v, or an empty vector when the
/// ray is not rational. A zero vector comes back as zeros.
std::vector<Integer> primitive_direction(std::span<const Scalar> v);

/// Scales v by a positive Scalar so that it is a primitive integer vector
/// (rational direction) or has first non-zero entry equal to +-1 otherwise.
Vector normalize_direction(std::span<const Scalar> v);

Vector to_scalars(std::span<const Integer> v);

std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);  // "p", "p/q"; throws InputError

}  // namespace nctoric
