#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"
#include "qrep/lattice.hpp"
#include "qrep/repnum.hpp"
#include "qrep/singular.hpp"
#include "qrep/whittaker.hpp"

using namespace qrep;
using namespace qrep::singular;

namespace {

// A_k(m) straight from the definition: k^{-s} sum over units h and all
// x in (Z/k)^s of e(h (x_1^2 + ... + x_s^2 - m) / k).
std::complex<double> A_direct(std::int64_t k, std::int64_t m, int s) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(k), 0);
  hist[0] = 1;
  for (int i = 0; i < s; ++i) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(k), 0);
    for (std::int64_t v = 0; v < k; ++v) {
      if (!hist[static_cast<std::size_t>(v)]) continue;
      for (std::int64_t x = 0; x < k; ++x) next[static_cast<std::size_t>((v + x * x) % k)] += hist[static_cast<std::size_t>(v)];
    }
    hist = std::move(next);
  }
  std::complex<double> total = 0;
  for (std::int64_t h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    for (std::int64_t v = 0; v < k; ++v) {
      const std::int64_t e = ((h * (v - m)) % k + k) % k;
      total += static_cast<double>(hist[static_cast<std::size_t>(v)]) *
               std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(k));
    }
  }
  return total / std::pow(static_cast<double>(k), s);
}

}  // namespace

TEST(GaussSum, TrivialModulus) {
  for (std::int64_t m : {1, 2, 7, 100}) {
    EXPECT_NEAR(A_k_oracle(1, m, 3), 1.0, 1e-12);
    EXPECT_NEAR(A_k_oracle(1, m, 4), 1.0, 1e-12);
  }
}

TEST(GaussSum, TwoVanishesForFourSquares) {
  for (std::int64_t m = 1; m <= 20; ++m) EXPECT_NEAR(A_k_oracle(2, m, 4), 0.0, 1e-12);
}

TEST(GaussSum, MatchesDirectDefinition) {
  for (std::int64_t k = 1; k <= 30; ++k) {
    for (int s : {3, 4}) {
      const GaussSumTable t(static_cast<std::uint64_t>(k), s);
      for (std::int64_t m = 1; m <= 12; ++m) {
        const auto expect = A_direct(k, m, s);
        ASSERT_NEAR(t.A_complex(m).real(), expect.real(), 1e-9) << k << " " << m << " " << s;
        ASSERT_NEAR(t.A_complex(m).imag(), expect.imag(), 1e-9) << k << " " << m << " " << s;
      }
    }
  }
}

TEST(GaussSum, MultiplicativeInTheModulus) {
  OracleCache cache;
  for (std::uint64_t k1 = 2; k1 <= 40; ++k1) {
    for (std::uint64_t k2 = k1 + 1; k1 * k2 <= 500; ++k2) {
      if (std::gcd(k1, k2) != 1) continue;
      for (int s : {3, 4}) {
        const auto& a = cache.table(k1, s);
        const auto& b = cache.table(k2, s);
        const auto& ab = cache.table(k1 * k2, s);
        for (std::int64_t m = 1; m <= 100; ++m) {
          ASSERT_NEAR(ab.A(m), a.A(m) * b.A(m), 1e-9) << k1 << " " << k2 << " " << m;
        }
      }
    }
  }
}

TEST(GaussSum, RejectsLargeModulus) {
  EXPECT_THROW(GaussSumTable(kMaxOracleModulus + 1, 3), WorkBoundExceeded);
  EXPECT_THROW(GaussSumTable(0, 3), InvalidInput);
}

TEST(ClosedForm, MatchesOracle) {
  OracleCache cache;
  for (std::uint64_t p : primes_up_to(13)) {
    for (unsigned r = 1; ipow(p, r) <= 2000; ++r) {
      const auto& t = cache.table(ipow(p, r), 3);
      for (std::int64_t m = 1; m <= 200; ++m) {
        ASSERT_NEAR(A_pr_closed_s3(p, r, m).to_double(), t.A(m), 1e-9) << p << "^" << r << " " << m;
      }
    }
  }
}

TEST(ClosedForm, TwoAdicTermsSumToARational) {
  for (std::int64_t m = 1; m <= 200; ++m) {
    QuadraticValue sum(Rational(1));
    for (unsigned r = 1; r <= ord_p(m, 2) + 4; ++r) {
      sum += A_pr_closed_s3(2, r, m);
    }
    ASSERT_TRUE(sum.is_rational()) << m;
    ASSERT_EQ(sum.rational_part(), S_p(2, m, 3)) << m;
  }
}

TEST(LocalFactor, ThreeSquaresAgreeWithWhittakerValues) {
  for (std::int64_t m = 1; m <= 300; ++m) {
    ASSERT_EQ(S_p(2, m, 3), whittaker::w32_two_normalized(m)) << m;
    for (std::uint64_t p : primes_up_to(31)) {
      if (p == 2) continue;
      ASSERT_EQ(S_p(p, m, 3), whittaker::w32_odd(p, m)) << p << " " << m;
    }
  }
}

TEST(LocalFactor, FourSquaresAgreeWithDensities) {
  OracleCache cache;
  const auto lat = GramLattice::sum_of_squares(4);
  for (std::int64_t m = 1; m <= 100; ++m) {
    for (std::uint64_t p : primes_up_to(13)) {
      const auto f = S_p_detailed(p, m, 4, cache);
      ASSERT_EQ(f.source, LocalSource::gauss_sum_oracle);
      ASSERT_EQ(f.value, whittaker::density_oracle(lat, p, m, whittaker::density_precision(lat, p, m)))
          << p << " " << m;
    }
  }
}

TEST(LocalFactor, ThreeSquaresUseTheClosedForm) {
  OracleCache cache;
  const auto f = S_p_detailed(3, 9, 3, cache);
  EXPECT_EQ(f.source, LocalSource::closed_form);
  EXPECT_EQ(f.value, Rational(10, 9));
}

TEST(LocalFactor, OracleModulusBound) {
  OracleCache cache;
  EXPECT_THROW(S_p_detailed(191, 1, 4, cache), WorkBoundExceeded);
  EXPECT_NO_THROW(S_p_detailed(101, 1, 4, cache));
}

TEST(Rho, ApproachesRepresentationNumbers) {
  OracleCache cache;
  for (std::int64_t m : {1, 2, 3, 5, 6, 9, 10, 14}) {
    const double r3 = static_cast<double>(repnum::count_squares(3, m));
    const double r4 = static_cast<double>(repnum::count_squares(4, m));
    EXPECT_NEAR(rho_s(m, 3, 100000, cache), r3, 1e-2 * r3) << m;
    EXPECT_NEAR(rho_s(m, 4, 100000, cache), r4, 1e-3 * r4) << m;
  }
}

TEST(Rho, VanishesOnExcludedClass) {
  OracleCache cache;
  for (std::int64_t m : {7, 15, 28}) EXPECT_EQ(rho_s(m, 3, 1000, cache), 0.0) << m;
}

TEST(Rho, ShortCutIsInaccurate) {
  EXPECT_GT(std::abs(rho_s(5, 3, 2) - 24.0), 0.24);
}
