#pragma once

#include <cstdint>
#include <vector>

#include "qrep/rational.hpp"

namespace qrep {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition. Factors are sorted by prime, exponents >= 1.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  BigInt product() const;
  unsigned exponent_of(std::uint64_t p) const;
  bool divisible_by(std::uint64_t p) const { return exponent_of(p) > 0; }
  std::vector<std::uint64_t> primes() const;
  bool squarefree() const;
};

// Throws InvalidInput for n <= 0.
Factorization factor(std::int64_t n);

// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Largest e with p^e | n. Throws InvalidInput if p is not prime or n <= 0.
unsigned ord_p(std::int64_t n, std::uint64_t p);

enum class DivisorFilter { all, not_divisible_by_4, odd };

BigInt sigma1(std::int64_t n);
BigInt sigma1_filtered(std::int64_t n, DivisorFilter filter);
std::vector<std::uint64_t> divisors(const Factorization& f);

// Number of distinct prime factors.
unsigned omega(std::int64_t n);

// Kronecker symbol (d/n) on its full domain.
int kronecker(std::int64_t d, std::int64_t n);

bool is_squarefree(std::int64_t n);
bool is_fundamental_discriminant(std::int64_t d);

// Writes a negative discriminant D (D = 0,1 mod 4) as d*f^2 with d fundamental.
struct FundamentalPart {
  std::int64_t d;
  std::int64_t f;
};
FundamentalPart fundamental_part(std::int64_t D);

// Number of roots of unity in Q(sqrt d) for fundamental d < 0.
int unit_count(std::int64_t d);

// -4m = d c^2 with d the fundamental discriminant of Q(sqrt(-m)).
struct DiscriminantData {
  std::int64_t m;
  std::int64_t d;
  std::int64_t c;
  int unit_count_w;

  int chi(std::int64_t n) const { return kronecker(d, n); }
};
DiscriminantData discriminant_data(std::int64_t m);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exponent);

}  // namespace qrep
