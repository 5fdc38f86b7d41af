#include "qrep/whittaker.hpp"

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"

namespace qrep::whittaker {
namespace {

Rational inv_pow(std::uint64_t p, std::int64_t e) {
  return Rational::power(static_cast<std::int64_t>(p), -e);
}

void require_prime(std::uint64_t p, const char* where) {
  if (!is_prime(p)) throw InvalidInput(std::string(where) + ": " + std::to_string(p) + " is not prime");
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::split_unramified: return "split-unramified";
    case CaseTag::split_N: return "split-N";
    case CaseTag::ramified_D: return "ramified-D";
    case CaseTag::weight32_odd: return "weight32-odd";
    case CaseTag::weight32_two: return "weight32-two";
    case CaseTag::foursquares_two: return "foursquares-two";
  }
  return "?";
}

Rational w2_split_unramified(std::uint64_t p, unsigned r) {
  require_prime(p, "w2_split_unramified");
  Rational sum(0);
  for (unsigned i = 0; i <= r; ++i) sum += inv_pow(p, i);
  return (Rational(1) - inv_pow(p, 2)) * sum;
}

Rational w2_split_N(std::uint64_t p, unsigned r) {
  require_prime(p, "w2_split_N");
  const std::int64_t rr = r;
  return Rational(2) * inv_pow(p, 1) - inv_pow(p, rr + 1) - inv_pow(p, rr + 2);
}

Rational w2_ramified_D(std::uint64_t p, unsigned r) {
  require_prime(p, "w2_ramified_D");
  const std::int64_t rr = r;
  return -inv_pow(p, rr + 2) * Rational(static_cast<std::int64_t>(p) + 1);
}

Rational ramified_matching_combination(std::uint64_t p, unsigned r) {
  const auto pp = static_cast<std::int64_t>(p);
  return Rational(-2, pp - 1) * w2_split_unramified(p, r) +
         Rational(pp + 1, pp - 1) * w2_split_N(p, r);
}

Weight32Odd w32_odd_parts(std::uint64_t p, std::int64_t m) {
  require_prime(p, "w32_odd");
  if (p == 2) throw InvalidInput("w32_odd: p must be odd");
  const DiscriminantData dd = discriminant_data(m);
  const auto pp = static_cast<std::int64_t>(p);
  const unsigned t = ord_p(dd.c, p);
  const int chi = dd.chi(pp);
  const bool p_divides_d = dd.d % pp == 0;

  Weight32Odd out;
  out.t_p = t;
  out.p_divides_d = p_divides_d;
  const std::int64_t tt = t;
  if (!p_divides_d) {
    out.value = Rational(1) + inv_pow(p, 1) - inv_pow(p, tt + 1) + Rational(chi) * inv_pow(p, tt + 1);
  } else {
    out.value = Rational(1) + inv_pow(p, 1) - inv_pow(p, tt + 1) - inv_pow(p, tt + 2);
  }
  // L_p(1, chi) = (1 - chi(p)/p)^{-1}, zeta_p(2) = (1 - p^-2)^{-1}
  out.euler_ratio = (Rational(1) - inv_pow(p, 2)) / (Rational(1) - Rational(chi, pp));
  // b_p: the divisors of p^t are p^j, each with the single prime factor p
  Rational sum(1);
  const Rational local = Rational(1) - Rational(chi, pp);
  for (unsigned j = 1; j <= t; ++j) sum += Rational::power(pp, j) * local;
  out.b_p = inv_pow(p, tt) * sum;
  return out;
}

Rational w32_odd(std::uint64_t p, std::int64_t m) { return w32_odd_parts(p, m).value; }

Weight32Two w32_two_parts(std::int64_t m) {
  const DiscriminantData dd = discriminant_data(m);
  Weight32Two out;
  out.t_2 = ord_p(dd.c, 2);
  out.chi_2 = dd.chi(2);
  out.L2 = Rational(1) / (Rational(1) - Rational(out.chi_2, 2));
  out.b2 = Rational(3, 2) * inv_pow(2, out.t_2) * Rational(1 - out.chi_2);
  return out;
}

Rational w32_two_normalized(std::int64_t m) { return w32_two_parts(m).normalized(); }

Rational w2_two_foursquares_raw(std::int64_t m) {
  const unsigned r = ord_p(m, 2);
  if (r == 0) return Rational(-1, 4);
  const std::int64_t rr = r;
  return -inv_pow(2, rr + 1) - inv_pow(2, rr + 2);
}

Rational foursquares_two_normalizer() { return Rational(-1, 4); }

Rational w2_two_foursquares_normalized(std::int64_t m) {
  return w2_two_foursquares_raw(m) / foursquares_two_normalizer();
}

}  // namespace qrep::whittaker
