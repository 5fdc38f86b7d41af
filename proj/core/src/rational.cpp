#include "qrep/rational.hpp"

#include <climits>
#include <ostream>

#include "qrep/errors.hpp"

namespace qrep {

BigInt big(std::int64_t v) {
  // mpz_class has no portable int64 constructor; go through the string form
  // only for values that do not fit a long.
  if (v >= static_cast<std::int64_t>(LONG_MIN) && v <= static_cast<std::int64_t>(LONG_MAX)) {
    return BigInt(static_cast<long>(v));
  }
  return BigInt(std::to_string(v));
}

BigInt big_u(std::uint64_t v) {
  if (v <= static_cast<std::uint64_t>(ULONG_MAX)) return BigInt(static_cast<unsigned long>(v));
  return BigInt(std::to_string(v));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

Rational::Rational(std::int64_t n) : value_(big(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(big(num), big(den)) {}

Rational::Rational(const BigInt& n) : value_(n) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    return Rational(BigInt(std::string(text.substr(0, slash))),
                    BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw InvalidInput("Rational: cannot parse '" + std::string(text) + "'");
  }
}

Rational Rational::power(std::int64_t base, std::int64_t exponent) {
  if (base == 0 && exponent < 0) throw InvalidInput("Rational::power: 0 to a negative power");
  BigInt p;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(p.get_mpz_t(), big(base).get_mpz_t(), e);
  if (exponent >= 0) return Rational(p);
  return Rational(BigInt(1), p);
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

BigInt Rational::to_integer() const {
  if (!is_integer()) throw InvalidInput("Rational " + str() + " is not an integer");
  return value_.get_num();
}

std::string Rational::str() const { return value_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qrep
