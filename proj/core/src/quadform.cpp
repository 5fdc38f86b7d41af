#include "qrep/quadform.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"
#include "qrep/memo.hpp"

namespace qrep::quadform {

bool ReducedForm::primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

bool ReducedForm::is_reduced() const {
  if (a <= 0 || discriminant() >= 0) return false;
  const std::int64_t ab = b < 0 ? -b : b;
  if (!(ab <= a && a <= c)) return false;
  if ((ab == a || a == c) && b < 0) return false;
  return true;
}

std::vector<ReducedForm> reduced_forms(std::int64_t D) {
  if (D >= 0) throw InvalidInput("reduced_forms: discriminant must be negative");
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r != 0 && r != 1) throw InvalidInput("reduced_forms: D must be 0 or 1 mod 4");
  std::vector<ReducedForm> out;
  const auto amax = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(-D) / 3));
  for (std::int64_t a = 1; a <= amax; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      ReducedForm f{a, b, c};
      if (f.is_reduced()) out.push_back(f);
    }
  }
  return out;
}

ClassData class_number(std::int64_t d) {
  if (d >= 0 || !is_fundamental_discriminant(d)) {
    throw InvalidInput("class_number: " + std::to_string(d) +
                       " is not a negative fundamental discriminant");
  }
  const auto forms = reduced_forms(d);
  return {d, static_cast<std::int64_t>(forms.size()), unit_count(d)};
}

Rational hurwitz_H(std::int64_t m, MemoTables* memo) {
  if (m <= 0) throw InvalidInput("hurwitz_H: m must be positive");
  const std::int64_t r = ((-m % 4) + 4) % 4;
  if (r != 0 && r != 1) return Rational(0);
  const FundamentalPart fp = fundamental_part(-m);
  const ClassData cd = memo ? memo->class_number(fp.d) : class_number(fp.d);
  const auto factorize = [memo](std::int64_t n) { return memo ? memo->factor(n) : factor(n); };
  Rational sum(0);
  for (std::uint64_t l : divisors(factorize(fp.f))) {
    Rational term(static_cast<std::int64_t>(l));
    if (l > 1) {
      for (std::uint64_t p : factorize(static_cast<std::int64_t>(l)).primes()) {
        term *= Rational(1) - Rational(kronecker(fp.d, static_cast<std::int64_t>(p)),
                                       static_cast<std::int64_t>(p));
      }
    }
    sum += term;
  }
  return Rational(2 * cd.h, cd.w) * sum;
}

Rational hurwitz_H_oracle(std::int64_t m) {
  if (m <= 0) throw InvalidInput("hurwitz_H_oracle: m must be positive");
  const std::int64_t r = ((-m % 4) + 4) % 4;
  if (r != 0 && r != 1) return Rational(0);
  Rational total(0);
  for (const auto& f : reduced_forms(-m)) {
    if (f.b == 0 && f.a == f.c) {
      total += Rational(1, 2);  // lambda (x^2 + y^2)
    } else if (f.a == f.b && f.b == f.c) {
      total += Rational(1, 3);  // lambda (x^2 + xy + y^2)
    } else {
      total += Rational(1);
    }
  }
  return total;
}

double L_one_chi(std::int64_t d, std::uint64_t terms) {
  if (d >= 0 || !is_fundamental_discriminant(d)) {
    throw InvalidInput("L_one_chi: d must be a negative fundamental discriminant");
  }
  // chi_d is periodic mod |d|
  const std::int64_t period = -d;
  std::vector<int> chi(static_cast<std::size_t>(period));
  for (std::int64_t n = 0; n < period; ++n) chi[static_cast<std::size_t>(n)] = kronecker(d, n);
  double sum = 0.0;
  double comp = 0.0;
  std::size_t idx = 1 % static_cast<std::size_t>(period);
  for (std::uint64_t n = 1; n <= terms; ++n) {
    const int c = chi[idx];
    if (c != 0) {
      const double y = c / static_cast<double>(n) - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    if (++idx == static_cast<std::size_t>(period)) idx = 0;
  }
  return sum;
}

double class_number_formula_L(std::int64_t d) {
  const ClassData cd = class_number(d);
  return 2.0 * std::numbers::pi * static_cast<double>(cd.h) /
         (cd.w * std::sqrt(static_cast<double>(-d)));
}

}  // namespace qrep::quadform
