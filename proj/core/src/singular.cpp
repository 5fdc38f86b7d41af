#include "qrep/singular.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"
#include "qrep/whittaker.hpp"

namespace qrep::singular {
namespace {

__extension__ typedef unsigned __int128 u128;

// Neumaier-compensated complex accumulator.
struct KahanComplex {
  double re = 0, im = 0, cre = 0, cim = 0;

  static void add(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  void add(std::complex<double> z) {
    add(re, cre, z.real());
    add(im, cim, z.imag());
  }
  std::complex<double> value() const { return {re + cre, im + cim}; }
};

std::complex<double> cpow(std::complex<double> z, int s) {
  std::complex<double> r(1.0, 0.0);
  for (int i = 0; i < s; ++i) r *= z;
  return r;
}

}  // namespace

GaussSumTable::GaussSumTable(std::uint64_t k, int s, std::uint64_t max_modulus) : k_(k), s_(s) {
  if (k == 0) throw InvalidInput("GaussSumTable: k must be positive");
  if (s < 1) throw InvalidInput("GaussSumTable: s must be positive");
  if (k > max_modulus) {
    throw WorkBoundExceeded("GaussSumTable: modulus " + std::to_string(k) + " exceeds bound " +
                            std::to_string(max_modulus));
  }
  roots_.resize(k);
  for (std::uint64_t v = 0; v < k; ++v) {
    roots_[v] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(k));
  }
  for (std::uint64_t h = 1; h <= k; ++h) {
    if (std::gcd(h, k) == 1) units_.push_back(h % k);
  }
  // cnt[v] = #{j mod k : j^2 = v}
  std::vector<std::uint64_t> cnt(k, 0);
  for (std::uint64_t j = 0; j < k; ++j) cnt[(j * j) % k] += 1;

  std::vector<KahanComplex> acc(k);
  for (std::uint64_t v = 0; v < k; ++v) {
    if (!cnt[v]) continue;
    const auto weight = static_cast<double>(cnt[v]);
    std::uint64_t idx = 0;  // h * v mod k, for h = 0, 1, ...
    for (std::uint64_t h = 0; h < k; ++h) {
      acc[h].add(weight * roots_[idx]);
      idx += v;
      if (idx >= k) idx -= k;
    }
  }
  powered_.reserve(units_.size());
  const auto kd = static_cast<double>(k);
  for (std::uint64_t h : units_) powered_.push_back(cpow(acc[h].value() / kd, s));
}

std::complex<double> GaussSumTable::A_complex(std::int64_t m) const {
  if (k_ == 1) return {1.0, 0.0};
  const auto K = static_cast<std::int64_t>(k_);
  const auto shift = static_cast<std::uint64_t>(((-m % K) + K) % K);
  KahanComplex sum;
  for (std::size_t i = 0; i < units_.size(); ++i) {
    const std::uint64_t idx = static_cast<std::uint64_t>(
        (static_cast<u128>(units_[i]) * shift) % k_);
    sum.add(powered_[i] * roots_[idx]);
  }
  return sum.value();
}

double GaussSumTable::A(std::int64_t m) const {
  const std::complex<double> z = A_complex(m);
  if (std::abs(z.imag()) > kImaginaryTolerance) {
    throw NumericalCheckFailed("A_k(m): imaginary part " + std::to_string(z.imag()) + " at k=" +
                               std::to_string(k_) + ", m=" + std::to_string(m));
  }
  return z.real();
}

const GaussSumTable& OracleCache::table(std::uint64_t k, int s) {
  const auto key = std::make_pair(k, s);
  auto it = tables_.find(key);
  if (it == tables_.end()) it = tables_.emplace(key, GaussSumTable(k, s)).first;
  return it->second;
}

double A_k_oracle(std::uint64_t k, std::int64_t m, int s) {
  if (m < 1) throw InvalidInput("A_k_oracle: m must be positive");
  if (s < 3) throw InvalidInput("A_k_oracle: s must be at least 3");
  return GaussSumTable(k, s).A(m);
}

QuadraticValue A_pr_closed_s3(std::uint64_t p, unsigned r, std::int64_t m) {
  if (!is_prime(p)) throw InvalidInput("A_pr_closed_s3: p must be prime");
  if (m < 1) throw InvalidInput("A_pr_closed_s3: m must be positive");
  if (r == 0) return Rational(1);
  const unsigned rp = ord_p(m, p);
  const auto rr = static_cast<std::int64_t>(r);

  if (p == 2) {
    if (r % 2 == 1 && r > rp + 3) return Rational(0);
    if (r % 2 == 0 && r > rp + 2) return Rational(0);
    // 2^{3-r} m is an integer in the surviving range
    const std::int64_t n = (r <= 3) ? (m << (3 - r)) : (m >> (r - 3));
    if (r % 2 == 1 && ((n % 4) + 4) % 4 != 3) return Rational(0);
    return QuadraticValue::sqrt2_power(-(rr - 1)) * QuadraticValue::cos_pi_over_4(n - 3);
  }

  const auto pp = static_cast<std::int64_t>(p);
  if (r > rp + 1) return Rational(0);
  if (r % 2 == 1) {
    if (r < rp + 1) return Rational(0);
    // r = rp + 1: Legendre symbol of minus the p-free part of m
    std::int64_t unit = m;
    for (unsigned i = 0; i < rp; ++i) unit /= pp;
    return Rational(kronecker(-unit, pp)) * Rational::power(pp, -(rr + 1) / 2);
  }
  if (r == rp + 1) return -Rational::power(pp, -(rr / 2 + 1));
  return Rational(pp - 1) * Rational::power(pp, -(rr / 2 + 1));
}

LocalSingularFactor S_p_detailed(std::uint64_t p, std::int64_t m, int s, OracleCache& cache) {
  if (!is_prime(p)) throw InvalidInput("S_p: p must be prime");
  if (m < 1) throw InvalidInput("S_p: m must be positive");
  const unsigned rp = ord_p(m, p);

  if (s == 3) {
    const unsigned last = (p == 2) ? rp + 3 : rp + 1;
    QuadraticValue sum;
    for (unsigned r = 0; r <= last; ++r) sum += A_pr_closed_s3(p, r, m);
    if (!sum.is_rational()) {
      throw NumericalCheckFailed("S_p: sqrt(2) component survived at p=" + std::to_string(p) +
                                 ", m=" + std::to_string(m));
    }
    return {p, sum.rational_part(), LocalSource::closed_form, last + 1};
  }
  if (s != 4) throw InvalidInput("S_p: s must be 3 or 4");

  const unsigned needed = rp + 2;
  unsigned last = 0;
  {
    u128 pk = 1;
    for (unsigned r = 1; r <= rp + 4; ++r) {
      pk *= p;
      if (pk > kMaxOracleModulus) break;
      last = r;
    }
  }
  if (last < needed) {
    throw WorkBoundExceeded("S_p: p^" + std::to_string(needed) + " exceeds the Gauss-sum oracle bound for p=" +
                            std::to_string(p) + ", m=" + std::to_string(m));
  }
  Rational sum(1);
  std::uint64_t k = 1;
  const auto pp = static_cast<std::int64_t>(p);
  for (unsigned r = 1; r <= last; ++r) {
    k *= p;
    const double a = cache.table(k, 4).A(m);
    // A_{p^r}(m) has denominator dividing p^{2r} when s = 4
    const Rational scale = Rational::power(pp, 2 * static_cast<std::int64_t>(r));
    const double scaled = a * scale.to_double();
    const auto nearest = static_cast<std::int64_t>(std::llround(scaled));
    const Rational term = Rational(nearest) / scale;
    if (std::abs(a - term.to_double()) >= kRoundingTolerance) {
      throw NumericalCheckFailed("S_p: A_" + std::to_string(k) + "(" + std::to_string(m) +
                                 ") not close to a fraction with denominator p^2r");
    }
    if (r >= needed && nearest != 0) {
      throw NumericalCheckFailed("S_p: partial sums not stabilized at p=" + std::to_string(p) +
                                 ", m=" + std::to_string(m) + ", r=" + std::to_string(r));
    }
    sum += term;
  }
  return {p, sum, LocalSource::gauss_sum_oracle, last + 1};
}

Rational S_p(std::uint64_t p, std::int64_t m, int s, OracleCache& cache) {
  return S_p_detailed(p, m, s, cache).value;
}

Rational S_p(std::uint64_t p, std::int64_t m, int s) {
  OracleCache cache;
  return S_p(p, m, s, cache);
}

double singular_series(std::int64_t m, int s, std::uint64_t prime_cut, OracleCache& cache,
                       const SeriesOptions& options) {
  if (s != 3 && s != 4) throw InvalidInput("singular_series: s must be 3 or 4");
  if (m < 1) throw InvalidInput("singular_series: m must be positive");
  double product = 1.0;
  for (std::uint64_t p : primes_up_to(prime_cut)) {
    double factor;
    if (s == 4 && p > options.oracle_prime_limit) {
      factor = whittaker::w2_split_unramified(p, ord_p(m, p)).to_double();
    } else {
      factor = S_p(p, m, s, cache).to_double();
    }
    product *= factor;
    if (product == 0.0) break;
  }
  return product;
}

double rho_s(std::int64_t m, int s, std::uint64_t prime_cut, OracleCache& cache,
             const SeriesOptions& options) {
  const double series = singular_series(m, s, prime_cut, cache, options);
  const double md = static_cast<double>(m);
  // pi^{s/2} / Gamma(s/2): Gamma(3/2) = sqrt(pi)/2, Gamma(2) = 1
  const double prefactor = (s == 3) ? 2.0 * std::numbers::pi * std::sqrt(md)
                                    : std::numbers::pi * std::numbers::pi * md;
  return prefactor * series;
}

double rho_s(std::int64_t m, int s, std::uint64_t prime_cut) {
  OracleCache cache;
  return rho_s(m, s, prime_cut, cache);
}

}  // namespace qrep::singular
