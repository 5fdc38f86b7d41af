#pragma once

#include <iosfwd>
#include <string>

#include "qrep/rational.hpp"

namespace qrep {

// Element a + b*sqrt(2) of Q(sqrt 2).
class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadraticValue(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadraticValue sqrt2() { return {Rational(0), Rational(1)}; }
  // 2^(k/2) for any integer k.
  static QuadraticValue sqrt2_power(std::int64_t k);
  // cos(k*pi/4), which always lies in Q(sqrt 2).
  static QuadraticValue cos_pi_over_4(std::int64_t k);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadraticValue conjugate() const { return {a_, -b_}; }
  // a^2 - 2 b^2
  Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
  double to_double() const;
  std::string str() const;

  QuadraticValue operator-() const { return {-a_, -b_}; }
  QuadraticValue& operator+=(const QuadraticValue& o);
  QuadraticValue& operator-=(const QuadraticValue& o);
  QuadraticValue& operator*=(const QuadraticValue& o);
  // Division; throws InvalidInput on zero.
  QuadraticValue& operator/=(const QuadraticValue& o);

  friend QuadraticValue operator+(QuadraticValue x, const QuadraticValue& y) { return x += y; }
  friend QuadraticValue operator-(QuadraticValue x, const QuadraticValue& y) { return x -= y; }
  friend QuadraticValue operator*(QuadraticValue x, const QuadraticValue& y) { return x *= y; }
  friend QuadraticValue operator/(QuadraticValue x, const QuadraticValue& y) { return x /= y; }
  friend bool operator==(const QuadraticValue&, const QuadraticValue&) = default;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticValue& v);

}  // namespace qrep
