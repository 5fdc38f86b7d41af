#include "qrep/hecke.hpp"

#include <numeric>
#include <set>
#include <string>

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"

namespace qrep::hecke {
namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

void check_m(std::int64_t m) {
  if (m < 1) throw InvalidInput("m must be positive");
}

EichlerSpec indefinite(std::int64_t D, std::int64_t N) {
  EichlerSpec spec = EichlerSpec::make(D, N);
  if (spec.definite()) throw InvalidInput("D must have an even number of prime factors");
  return spec;
}

// Extended Euclid: returns g = gcd(a, b) >= 0 with x a + y b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

}  // namespace

EichlerSpec EichlerSpec::make(std::int64_t D, std::int64_t N) {
  if (D < 1 || N < 1) throw InvalidInput("EichlerSpec: D and N must be positive");
  if (!is_squarefree(D)) throw InvalidInput("EichlerSpec: D must be squarefree");
  if (std::gcd(D, N) != 1) throw InvalidInput("EichlerSpec: gcd(D, N) must be 1");
  return {D, N};
}

bool EichlerSpec::definite() const { return omega(D) % 2 == 1; }

const char* to_string(SignConvention convention) {
  return convention == SignConvention::prime_factors_of_m ? "k = number of prime factors of m"
                                                          : "k = number of prime factors of D";
}

Rational r_DN_magnitude(std::int64_t D, std::int64_t N, std::int64_t m) {
  EichlerSpec::make(D, N);
  check_m(m);
  Rational value(24 * m);
  for (std::uint64_t up : factor(m).primes()) {
    const auto p = static_cast<std::int64_t>(up);
    if (D % p == 0 || N % p == 0) continue;
    const auto r = static_cast<std::int64_t>(ord_p(m, up));
    value *= (Rational(p) - Rational::power(p, -r)) / Rational(p - 1);
  }
  for (std::uint64_t up : factor(N).primes()) {
    const auto p = static_cast<std::int64_t>(up);
    const auto r = static_cast<std::int64_t>(ord_p(m, up));
    value *= (Rational(2 * p) - Rational::power(p, -(r - 1)) - Rational::power(p, -r)) / Rational(p * p - 1);
  }
  for (std::uint64_t up : factor(D).primes()) {
    const auto p = static_cast<std::int64_t>(up);
    const auto r = static_cast<std::int64_t>(ord_p(m, up));
    value *= Rational::power(p, -r) / Rational(p - 1);
  }
  return value;
}

Rational r_DN_closed(std::int64_t D, std::int64_t N, std::int64_t m, SignConvention convention) {
  const Rational magnitude = r_DN_magnitude(D, N, m);
  const unsigned k = convention == SignConvention::prime_factors_of_m ? omega(m) : omega(D);
  return (k % 2 == 1) ? magnitude : -magnitude;
}

Rational deg_T_closed(std::int64_t D, std::int64_t N, std::int64_t m) {
  indefinite(D, N);
  check_m(m);
  Rational value(2 * m * N * D);
  for (std::uint64_t up : factor(m).primes()) {
    const auto p = static_cast<std::int64_t>(up);
    if (D % p == 0 || N % p == 0) continue;
    const auto r = static_cast<std::int64_t>(ord_p(m, up));
    value *= (Rational(p) - Rational::power(p, -r)) / Rational(p - 1);
  }
  for (std::uint64_t up : factor(N).primes()) {
    const auto p = static_cast<std::int64_t>(up);
    const auto r = static_cast<std::int64_t>(ord_p(m, up));
    value *= (Rational(2) - Rational::power(p, -r) - Rational::power(p, -r - 1)) / Rational(p - 1);
  }
  for (std::uint64_t up : factor(D).primes()) {
    const auto p = static_cast<std::int64_t>(up);
    const auto r = static_cast<std::int64_t>(ord_p(m, up));
    value *= Rational::power(p, -(r + 1));
  }
  return value;
}

Rational vol_X(std::int64_t D, std::int64_t N) {
  indefinite(D, N);
  Rational value(D * N, 6);
  for (std::uint64_t p : factor(N).primes()) value *= Rational(1) + Rational(1, static_cast<std::int64_t>(p));
  for (std::uint64_t p : factor(D).primes()) value *= Rational(1) - Rational(1, static_cast<std::int64_t>(p));
  return value;
}

bool ramified_recurrence_check(std::int64_t D, std::int64_t N, std::int64_t p, std::int64_t q, std::int64_t m,
                  SignConvention convention) {
  if (p < 2 || q < 2 || !is_prime(static_cast<std::uint64_t>(p)) || !is_prime(static_cast<std::uint64_t>(q))) {
    throw InvalidInput("ramified_recurrence_check: p and q must be prime");
  }
  if (p == q) throw InvalidInput("ramified_recurrence_check: p and q must be distinct");
  if (D < 1 || !is_squarefree(D * p * q)) throw InvalidInput("ramified_recurrence_check: Dpq must be squarefree");
  if (N < 1 || std::gcd(D * p * q, N) != 1) throw InvalidInput("ramified_recurrence_check: gcd(Dpq, N) must be 1");
  check_m(m);
  const auto r = [&](std::int64_t d, std::int64_t n) { return r_DN_closed(d, n, m, convention); };
  const Rational lhs = Rational(-2, q - 1) * r(D * p, N) + Rational(q + 1, q - 1) * r(D * p, N * q);
  const Rational rhs = Rational(-2, p - 1) * r(D * q, N) + Rational(p + 1, p - 1) * r(D * q, N * p);
  const Rational step = Rational(-2, p - 1) * r(D, N) + Rational(p + 1, p - 1) * r(D, N * p);
  return lhs == rhs && r(D * p, N) == step;
}

IntegerMatrix2 sl2_inverse(const IntegerMatrix2& u) {
  if (u.det() != 1) throw InvalidInput("sl2_inverse: determinant must be 1");
  return {u.d, -u.b, -u.c, u.a};
}

HnfDecomposition hnf_decompose(const IntegerMatrix2& alpha) {
  const std::int64_t m = alpha.det();
  if (m <= 0) throw InvalidInput("hnf_decompose: determinant must be positive");
  std::int64_t x, y;
  const std::int64_t g = ext_gcd(alpha.a, alpha.c, x, y);
  // first row (x, y) combines the first column to g; second row kills it
  IntegerMatrix2 u{x, y, -alpha.c / g, alpha.a / g};
  IntegerMatrix2 h = u * alpha;
  const std::int64_t d = h.d;
  const std::int64_t t = (h.b - mod(h.b, d)) / d;
  const IntegerMatrix2 shift{1, -t, 0, 1};
  u = shift * u;
  h = shift * h;
  return {u, h};
}

std::vector<IntegerMatrix2> hnf_matrices(std::int64_t m) {
  check_m(m);
  std::vector<IntegerMatrix2> out;
  for (std::uint64_t ua : divisors(factor(m))) {
    const auto a = static_cast<std::int64_t>(ua);
    const std::int64_t d = m / a;
    for (std::int64_t b = 0; b < d; ++b) out.push_back({a, b, 0, d});
  }
  return out;
}

P1Point p1_normalize(std::int64_t c, std::int64_t d, std::int64_t N) {
  if (N < 1) throw InvalidInput("p1_normalize: N must be positive");
  c = mod(c, N);
  d = mod(d, N);
  if (std::gcd(std::gcd(c, d), N) != 1 && N > 1) throw InvalidInput("p1_normalize: (c, d) not primitive mod N");
  P1Point best{c, d};
  for (std::int64_t lambda = 2; lambda < N; ++lambda) {
    if (std::gcd(lambda, N) != 1) continue;
    const P1Point cand{mod(lambda * c, N), mod(lambda * d, N)};
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<P1Point> p1_points(std::int64_t N) {
  std::set<P1Point> seen;
  for (std::int64_t c = 0; c < N; ++c) {
    for (std::int64_t d = 0; d < N; ++d) {
      if (N > 1 && std::gcd(std::gcd(c, d), N) != 1) continue;
      seen.insert(p1_normalize(c, d, N));
    }
  }
  return {seen.begin(), seen.end()};
}

CosetInvariant coset_invariant(const IntegerMatrix2& alpha, std::int64_t N) {
  const HnfDecomposition dec = hnf_decompose(alpha);
  const IntegerMatrix2 gamma = sl2_inverse(dec.u);
  return {dec.h, p1_normalize(gamma.c, gamma.d, N)};
}

std::uint64_t coset_oracle(std::int64_t N, std::int64_t m, std::uint64_t work_bound) {
  if (N < 1) throw InvalidInput("coset_oracle: N must be positive");
  check_m(m);
  const BigInt estimate = sigma1(m) * big(N) * big(N);
  if (estimate > big_u(work_bound)) {
    throw WorkBoundExceeded("coset_oracle: work estimate " + qrep::to_string(estimate) + " exceeds bound");
  }
  const std::vector<P1Point> rows = p1_points(N);
  // gamma h has lower-left entry c * a; membership needs c * a = 0 mod N
  std::set<CosetInvariant> cosets;
  for (const IntegerMatrix2& h : hnf_matrices(m)) {
    for (const P1Point& row : rows) {
      if (mod(row.c * h.a, N) == 0) cosets.insert({h, row});
    }
  }
  return cosets.size();
}

}  // namespace qrep::hecke
