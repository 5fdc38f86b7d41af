#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "qrep/rational.hpp"

namespace qrep::hecke {

// Eichler order data: D squarefree, gcd(D, N) = 1.
struct EichlerSpec {
  std::int64_t D;
  std::int64_t N;

  // Throws InvalidInput on a violated invariant.
  static EichlerSpec make(std::int64_t D, std::int64_t N);
  // B(D) is definite iff D has an odd number of prime factors.
  bool definite() const;
};

// Which k enters the sign (-1)^{k+1}: the number of distinct prime factors
// of m, or of D.
enum class SignConvention { prime_factors_of_m, prime_factors_of_D };

const char* to_string(SignConvention convention);

// 24 m prod_{p | m, p !| ND} (p - p^{-ord_p m})/(p - 1)
//      prod_{p | N} (2p - p^{-(ord_p m - 1)} - p^{-ord_p m})/(p^2 - 1)
//      prod_{p | D} 1/((p - 1) p^{ord_p m})
Rational r_DN_magnitude(std::int64_t D, std::int64_t N, std::int64_t m);
Rational r_DN_closed(std::int64_t D, std::int64_t N, std::int64_t m, SignConvention convention);

// Indefinite D only.
Rational deg_T_closed(std::int64_t D, std::int64_t N, std::int64_t m);
Rational vol_X(std::int64_t D, std::int64_t N);

// Both recurrences relating r_{D,N} across D, Dp, Dq, Np, Nq, evaluated with
// the closed forms under the given sign convention.
bool ramified_recurrence_check(std::int64_t D, std::int64_t N, std::int64_t p, std::int64_t q, std::int64_t m,
                  SignConvention convention = SignConvention::prime_factors_of_D);

struct IntegerMatrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  friend IntegerMatrix2 operator*(const IntegerMatrix2& x, const IntegerMatrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend auto operator<=>(const IntegerMatrix2&, const IntegerMatrix2&) = default;
};

// Inverse of a determinant-one matrix.
IntegerMatrix2 sl2_inverse(const IntegerMatrix2& u);

// u * alpha = h with u in SL2(Z) and h = [[a, b], [0, d]], a, d > 0, 0 <= b < d.
struct HnfDecomposition {
  IntegerMatrix2 u;
  IntegerMatrix2 h;
};
HnfDecomposition hnf_decompose(const IntegerMatrix2& alpha);

// All h = [[a, b], [0, d]] with ad = m, 0 <= b < d.
std::vector<IntegerMatrix2> hnf_matrices(std::int64_t m);

// Point (c : d) of P^1(Z/N), reduced to the lexicographically smallest
// representative under multiplication by units mod N.
struct P1Point {
  std::int64_t c;
  std::int64_t d;
  friend auto operator<=>(const P1Point&, const P1Point&) = default;
};
P1Point p1_normalize(std::int64_t c, std::int64_t d, std::int64_t N);
std::vector<P1Point> p1_points(std::int64_t N);

// Complete invariant of the coset Gamma_0(N) alpha for det alpha > 0.
struct CosetInvariant {
  IntegerMatrix2 h;
  P1Point row;
  friend auto operator<=>(const CosetInvariant&, const CosetInvariant&) = default;
};
CosetInvariant coset_invariant(const IntegerMatrix2& alpha, std::int64_t N);

inline constexpr std::uint64_t kCosetWorkBound = 100'000'000ULL;

// Number of left Gamma_0(N) cosets in {ad - bc = m, c = 0 mod N}.
std::uint64_t coset_oracle(std::int64_t N, std::int64_t m, std::uint64_t work_bound = kCosetWorkBound);

}  // namespace qrep::hecke
