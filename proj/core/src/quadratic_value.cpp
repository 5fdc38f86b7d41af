#include "qrep/quadratic_value.hpp"

#include <cmath>
#include <ostream>

#include "qrep/errors.hpp"

namespace qrep {

QuadraticValue QuadraticValue::sqrt2_power(std::int64_t k) {
  // 2^(k/2) = 2^floor(k/2) * (sqrt 2)^(k mod 2)
  const std::int64_t half = (k >= 0) ? k / 2 : -((-k + 1) / 2);
  const std::int64_t odd = k - 2 * half;
  const Rational scale = Rational::power(2, half);
  return odd ? QuadraticValue{Rational(0), scale} : QuadraticValue{scale, Rational(0)};
}

QuadraticValue QuadraticValue::cos_pi_over_4(std::int64_t k) {
  const std::int64_t r = ((k % 8) + 8) % 8;
  const Rational half(1, 2);
  switch (r) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), half};
    case 2: return {Rational(0), Rational(0)};
    case 3: return {Rational(0), -half};
    case 4: return {Rational(-1), Rational(0)};
    case 5: return {Rational(0), -half};
    case 6: return {Rational(0), Rational(0)};
    default: return {Rational(0), half};
  }
}

double QuadraticValue::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(2.0);
}

std::string QuadraticValue::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + "+" + b_.str() + "*sqrt2";
}

QuadraticValue& QuadraticValue::operator+=(const QuadraticValue& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticValue& QuadraticValue::operator-=(const QuadraticValue& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticValue& QuadraticValue::operator*=(const QuadraticValue& o) {
  Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadraticValue& QuadraticValue::operator/=(const QuadraticValue& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw InvalidInput("QuadraticValue: division by zero");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuadraticValue& v) { return os << v.str(); }

}  // namespace qrep
