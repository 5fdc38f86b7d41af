#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"
#include "qrep/hecke.hpp"

using namespace qrep;
using namespace qrep::hecke;

namespace {

// beta lies in Gamma_0(N) alpha iff beta adj(alpha) / m is integral with
// lower-left entry divisible by N.
bool same_coset(const IntegerMatrix2& alpha, const IntegerMatrix2& beta, std::int64_t N, std::int64_t m) {
  const IntegerMatrix2 adj{alpha.d, -alpha.b, -alpha.c, alpha.a};
  const IntegerMatrix2 g = beta * adj;
  if (g.a % m || g.b % m || g.c % m || g.d % m) return false;
  return (g.c / m) % N == 0;
}

// Distinct left cosets among all matrices of M(N, m) with entries bounded by
// B. Every coset has a representative u^{-1} h with entries at most 2 N m.
std::size_t brute_force_cosets(std::int64_t N, std::int64_t m) {
  const std::int64_t B = 2 * N * m;
  std::vector<IntegerMatrix2> reps;
  const auto consider = [&](const IntegerMatrix2& x) {
    for (const auto& r : reps)
      if (same_coset(r, x, N, m)) return;
    reps.push_back(x);
  };
  for (std::int64_t c = -B; c <= B; c += 1) {
    if (c % N) continue;
    for (std::int64_t a = -B; a <= B; ++a)
      for (std::int64_t b = -B; b <= B; ++b) {
        if (a == 0) {
          if (-b * c != m) continue;
          for (std::int64_t d = -B; d <= B; ++d) consider({a, b, c, d});
        } else if ((m + b * c) % a == 0) {
          const std::int64_t d = (m + b * c) / a;
          if (d >= -B && d <= B) consider({a, b, c, d});
        }
      }
  }
  return reps.size();
}

bool indefinite_D(std::int64_t D) { return is_squarefree(D) && omega(D) % 2 == 0; }

}  // namespace

TEST(EichlerSpec, Invariants) {
  EXPECT_THROW(EichlerSpec::make(4, 1), InvalidInput);
  EXPECT_THROW(EichlerSpec::make(6, 3), InvalidInput);
  EXPECT_THROW(EichlerSpec::make(0, 1), InvalidInput);
  EXPECT_THROW(EichlerSpec::make(1, 0), InvalidInput);
  EXPECT_TRUE(EichlerSpec::make(2, 1).definite());
  EXPECT_FALSE(EichlerSpec::make(6, 5).definite());
  EXPECT_FALSE(EichlerSpec::make(1, 4).definite());
  EXPECT_THROW(deg_T_closed(2, 1, 3), InvalidInput);
  EXPECT_THROW(vol_X(30, 1), InvalidInput);
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(r_DN_magnitude(1, 1, 1), Rational(24));
  EXPECT_EQ(deg_T_closed(1, 1, 1), Rational(2));
  EXPECT_EQ(deg_T_closed(1, 1, 12), Rational(56));
  EXPECT_EQ(vol_X(1, 1), Rational(1, 6));
  EXPECT_EQ(vol_X(6, 1), Rational(1, 3));
  EXPECT_EQ(vol_X(1, 2), Rational(1, 2));
  // a p | N factor with ord_p m = 0 reads (p - 1)/(p^2 - 1) = 1/(p + 1)
  for (std::int64_t p : {2, 3, 5, 7}) EXPECT_EQ(r_DN_magnitude(1, p, 1), Rational(24, p + 1)) << p;
}

TEST(ClosedForms, DegreeForLevelOneIsTwiceSigma) {
  for (std::int64_t m = 1; m <= 1000; ++m) ASSERT_EQ(deg_T_closed(1, 1, m), Rational(BigInt(2 * sigma1(m)))) << m;
}

TEST(ClosedForms, DegreeIsAPositiveInteger) {
  for (std::int64_t D : {1, 6, 10, 15})
    for (std::int64_t N = 1; N <= 10; ++N) {
      if (std::gcd(D, N) != 1) continue;
      for (std::int64_t m = 1; m <= 40; ++m) {
        const Rational v = deg_T_closed(D, N, m);
        ASSERT_TRUE(v.is_integer() && v.sign() > 0) << D << " " << N << " " << m;
      }
    }
}

TEST(ClosedForms, SignConvention) {
  EXPECT_EQ(r_DN_closed(1, 1, 1, SignConvention::prime_factors_of_D), Rational(-24));
  EXPECT_EQ(r_DN_closed(2, 1, 1, SignConvention::prime_factors_of_D), Rational(24));
  EXPECT_EQ(r_DN_closed(1, 1, 2, SignConvention::prime_factors_of_m), r_DN_magnitude(1, 1, 2));
  EXPECT_STREQ(to_string(SignConvention::prime_factors_of_D), "k = number of prime factors of D");
}

TEST(ClosedForms, NormalizedDegreeIdentity) {
  for (std::int64_t D = 1; D <= 30; ++D) {
    if (!indefinite_D(D)) continue;
    for (std::int64_t N = 1; N <= 10; ++N) {
      if (std::gcd(D, N) != 1 || !is_squarefree(N)) continue;
      for (std::int64_t m = 1; m <= 50; ++m) {
        ASSERT_EQ(Rational(-2) * deg_T_closed(D, N, m) / vol_X(D, N),
                  r_DN_closed(D, N, m, SignConvention::prime_factors_of_D))
            << D << " " << N << " " << m;
      }
    }
  }
}

TEST(RamifiedRecurrence, SweepUnderPrimeFactorsOfD) {
  int checked = 0;
  for (std::int64_t D = 1; D <= 105; ++D) {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      for (std::int64_t q : {2, 3, 5, 7, 11, 13}) {
        if (p >= q || D * p * q > 105 || !is_squarefree(D * p * q)) continue;
        for (std::int64_t N = 1; N <= 6; ++N) {
          if (std::gcd(D * p * q, N) != 1) continue;
          for (std::int64_t m = 1; m <= 30; ++m) {
            ASSERT_TRUE(ramified_recurrence_check(D, N, p, q, m)) << D << " " << N << " " << p << " " << q << " " << m;
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(RamifiedRecurrence, FailsUnderPrimeFactorsOfM) {
  EXPECT_FALSE(ramified_recurrence_check(1, 1, 2, 3, 1, SignConvention::prime_factors_of_m));
}

TEST(RamifiedRecurrence, InputChecks) {
  EXPECT_THROW(ramified_recurrence_check(1, 1, 2, 2, 1), InvalidInput);
  EXPECT_THROW(ramified_recurrence_check(1, 1, 4, 3, 1), InvalidInput);
  EXPECT_THROW(ramified_recurrence_check(2, 1, 2, 3, 1), InvalidInput);
  EXPECT_THROW(ramified_recurrence_check(1, 2, 2, 3, 1), InvalidInput);
}

TEST(Hnf, Matrices) {
  for (std::int64_t m = 1; m <= 200; ++m) {
    const auto hs = hnf_matrices(m);
    ASSERT_EQ(static_cast<std::int64_t>(hs.size()), static_cast<std::int64_t>(sigma1(m).get_si())) << m;
    const std::set<IntegerMatrix2> unique(hs.begin(), hs.end());
    ASSERT_EQ(unique.size(), hs.size());
  }
}

TEST(Hnf, DecompositionIsUnique) {
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b)
      for (std::int64_t c = -6; c <= 6; ++c)
        for (std::int64_t d = -6; d <= 6; ++d) {
          const IntegerMatrix2 alpha{a, b, c, d};
          if (alpha.det() <= 0) continue;
          const auto dec = hnf_decompose(alpha);
          ASSERT_EQ(dec.u.det(), 1);
          ASSERT_EQ(dec.u * alpha, dec.h);
          ASSERT_EQ(dec.h.c, 0);
          ASSERT_GT(dec.h.a, 0);
          ASSERT_GT(dec.h.d, 0);
          ASSERT_GE(dec.h.b, 0);
          ASSERT_LT(dec.h.b, dec.h.d);
          // any other u' with u' alpha in HNF differs from u by an element
          // fixing an HNF from the left, which must be the identity
          for (const auto& h : hnf_matrices(alpha.det())) {
            const IntegerMatrix2 adj{alpha.d, -alpha.b, -alpha.c, alpha.a};
            const IntegerMatrix2 num = h * adj;
            const std::int64_t m = alpha.det();
            if (num.a % m || num.b % m || num.c % m || num.d % m) continue;
            ASSERT_EQ(h, dec.h);
          }
        }
  EXPECT_THROW(hnf_decompose({0, 1, 1, 0}), InvalidInput);
}

TEST(P1, PointCounts) {
  for (std::int64_t N = 1; N <= 60; ++N) {
    Rational psi(N);
    for (std::uint64_t p : factor(N).primes()) psi *= Rational(1) + Rational(1, static_cast<std::int64_t>(p));
    ASSERT_EQ(Rational(static_cast<std::int64_t>(p1_points(N).size())), psi) << N;
  }
  EXPECT_EQ(p1_normalize(3, 2, 5), p1_normalize(1, 4, 5));
  EXPECT_THROW(p1_normalize(2, 4, 6), InvalidInput);
}

TEST(Cosets, LevelOneIsSigma) {
  for (std::int64_t m = 1; m <= 300; ++m) ASSERT_EQ(coset_oracle(1, m), static_cast<std::uint64_t>(sigma1(m).get_ui())) << m;
}

TEST(Cosets, Examples) {
  EXPECT_EQ(coset_oracle(2, 2), 5u);
  EXPECT_EQ(coset_oracle(2, 3) * 2, deg_T_closed(1, 2, 3).to_integer().get_ui());
}

TEST(Cosets, MatchBruteForceClassCounting) {
  for (std::int64_t N = 1; N <= 6; ++N)
    for (std::int64_t m = 1; N * m <= 12; ++m)
      ASSERT_EQ(coset_oracle(N, m), brute_force_cosets(N, m)) << N << " " << m;
}

TEST(Cosets, TwiceCountIsTheDegree) {
  for (std::int64_t N : {1, 2, 3, 5, 6, 7, 10})
    for (std::int64_t m = 1; m <= 100; ++m)
      ASSERT_EQ(Rational(big_u(2 * coset_oracle(N, m))), deg_T_closed(1, N, m)) << N << " " << m;
}

TEST(Cosets, InvariantIsConstantOnCosets) {
  const IntegerMatrix2 g{1, 2, 3, 7};  // in Gamma_0(3)
  for (const auto& h : hnf_matrices(6)) {
    for (const IntegerMatrix2 u : {IntegerMatrix2{1, 0, 0, 1}, IntegerMatrix2{2, 1, 1, 1}, IntegerMatrix2{0, -1, 1, 0}}) {
      const IntegerMatrix2 alpha = u * h;
      if (alpha.c % 3) continue;
      ASSERT_EQ(coset_invariant(alpha, 3), coset_invariant(g * alpha, 3));
    }
  }
  EXPECT_THROW(coset_oracle(1000, 1000, 1000), WorkBoundExceeded);
}
