#include "qrep/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qrep/errors.hpp"

namespace qrep {

BigInt Factorization::product() const {
  BigInt r = 1;
  for (const auto& pe : factors) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), big_u(pe.prime).get_mpz_t(), pe.exponent);
    r *= t;
  }
  return r;
}

unsigned Factorization::exponent_of(std::uint64_t p) const {
  for (const auto& pe : factors) {
    if (pe.prime == p) return pe.exponent;
  }
  return 0;
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& pe : factors) out.push_back(pe.prime);
  return out;
}

bool Factorization::squarefree() const {
  for (const auto& pe : factors) {
    if (pe.exponent > 1) return false;
  }
  return true;
}

unsigned ord_p(std::int64_t n, std::uint64_t p) {
  if (n <= 0) throw InvalidInput("ord_p: n must be positive");
  if (!is_prime(p)) throw InvalidInput("ord_p: " + std::to_string(p) + " is not prime");
  auto v = static_cast<std::uint64_t>(n);
  unsigned e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pe : f.factors) {
    const std::size_t n = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= pe.exponent; ++e) {
      pk *= pe.prime;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt sigma1_filtered(std::int64_t n, DivisorFilter filter) {
  const Factorization f = factor(n);
  BigInt total = 0;
  for (std::uint64_t d : divisors(f)) {
    if (filter == DivisorFilter::not_divisible_by_4 && d % 4 == 0) continue;
    if (filter == DivisorFilter::odd && d % 2 == 0) continue;
    total += big_u(d);
  }
  return total;
}

BigInt sigma1(std::int64_t n) { return sigma1_filtered(n, DivisorFilter::all); }

unsigned omega(std::int64_t n) { return static_cast<unsigned>(factor(n).factors.size()); }

int kronecker(std::int64_t a, std::int64_t b) {
  // Cohen, A Course in Computational Algebraic Number Theory, Alg. 1.4.10.
  // Bit tests on negative values rely on two's complement (guaranteed in C++20).
  static constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (b & 1) == 0) return 0;
  int v = 0;
  while ((b & 1) == 0) {
    ++v;
    b /= 2;
  }
  int k = (v & 1) ? kTab2[a & 7] : 1;
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  while (a != 0) {
    v = 0;
    while ((a & 1) == 0) {
      ++v;
      a /= 2;
    }
    if (v & 1) k *= kTab2[b & 7];
    if (a & b & 2) k = -k;
    const std::int64_t r = a < 0 ? -a : a;
    a = b % r;
    b = r;
  }
  return b == 1 ? k : 0;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  return factor(n < 0 ? -n : n).squarefree();
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  const std::int64_t q = d / 4;
  const std::int64_t rq = ((q % 4) + 4) % 4;
  return (rq == 2 || rq == 3) && is_squarefree(q);
}

FundamentalPart fundamental_part(std::int64_t D) {
  if (D >= 0) throw InvalidInput("fundamental_part: discriminant must be negative");
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r != 0 && r != 1) throw InvalidInput("fundamental_part: D must be 0 or 1 mod 4");
  // Squarefree kernel of |D|.
  const Factorization f = factor(-D);
  std::int64_t core = 1;
  std::int64_t root = 1;
  for (const auto& pe : f.factors) {
    const auto p = static_cast<std::int64_t>(pe.prime);
    if (pe.exponent % 2) core *= p;
    for (unsigned i = 0; i < pe.exponent / 2; ++i) root *= p;
  }
  std::int64_t d = -core;
  if (((d % 4) + 4) % 4 != 1) {
    d *= 4;
    root /= 2;  // D = 0 mod 4 here, so root is even
  }
  return {d, root};
}

int unit_count(std::int64_t d) {
  if (d == -3) return 6;
  if (d == -4) return 4;
  return 2;
}

DiscriminantData discriminant_data(std::int64_t m) {
  if (m <= 0) throw InvalidInput("discriminant_data: m must be positive");
  const FundamentalPart fp = fundamental_part(-4 * m);
  return {m, fp.d, fp.f, unit_count(fp.d)};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  // r <= 2^32 - 1 keeps r * r and (r + 1) * (r + 1) in range
  constexpr std::uint64_t kMaxRoot = 0xFFFFFFFFULL;
  auto r = std::min(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))), kMaxRoot);
  while (r * r > n) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace qrep
