#include <gtest/gtest.h>

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"
#include "qrep/hecke.hpp"
#include "qrep/lattice.hpp"
#include "qrep/memo.hpp"
#include "qrep/quadform.hpp"
#include "qrep/repnum.hpp"

using namespace qrep;
using namespace qrep::repnum;

namespace {

// 2 U^T U for a unimodular upper-triangular U, so Q(x) = |U x|^2.
GramLattice skewed_three_squares() {
  const std::int64_t U[3][3] = {{1, 3, -2}, {0, 1, 5}, {0, 0, 1}};
  std::vector<std::int64_t> g(9, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) g[static_cast<std::size_t>(i * 3 + j)] += 2 * U[k][i] * U[k][j];
  return GramLattice("skewed", 3, g);
}

// Vectors of Z^4 with all coordinates odd and y_1^2 + ... + y_4^2 = n.
std::uint64_t odd_vectors(std::int64_t n) {
  std::uint64_t total = 0;
  const auto b = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n)));
  for (std::int64_t a = -b; a <= b; ++a)
    for (std::int64_t c = -b; c <= b; ++c)
      for (std::int64_t d = -b; d <= b; ++d)
        for (std::int64_t e = -b; e <= b; ++e)
          if ((a & c & d & e & 1) && a * a + c * c + d * d + e * e == n) ++total;
  return total;
}

}  // namespace

TEST(CountSquares, Examples) {
  EXPECT_EQ(count_squares(3, 1), 6u);
  EXPECT_EQ(count_squares(3, 3), 8u);
  EXPECT_EQ(count_squares(3, 7), 0u);
  EXPECT_EQ(count_squares(4, 1), 8u);
  EXPECT_EQ(count_squares(4, 2), 24u);
  EXPECT_EQ(count_squares(4, 0), 1u);
}

TEST(CountSquares, InputChecks) {
  EXPECT_THROW(count_squares(5, 3), InvalidInput);
  EXPECT_THROW(count_squares(3, -1), InvalidInput);
  EXPECT_THROW(count_squares(3, kCountWorkBound + 1), WorkBoundExceeded);
  EXPECT_THROW(count_squares_upto(4, 20000), WorkBoundExceeded);
}

TEST(CountSquares, UptoMatchesSingleCounts) {
  for (int k : {3, 4}) {
    const auto all = count_squares_upto(k, 400);
    ASSERT_EQ(all.size(), 401u);
    for (std::int64_t m = 0; m <= 400; ++m) ASSERT_EQ(all[static_cast<std::size_t>(m)], count_squares(k, m)) << m;
  }
}

TEST(CountSquares, IndependentOfWorkers) {
  for (int k : {3, 4}) {
    const auto one = count_squares_upto(k, 3000, 1);
    EXPECT_EQ(one, count_squares_upto(k, 3000, 3));
    EXPECT_EQ(one, count_squares_upto(k, 3000, 8));
  }
}

TEST(ClosedForms, FourSquares) {
  const auto counts = count_squares_upto(4, 5000);
  for (std::int64_t m = 1; m <= 5000; ++m) ASSERT_EQ(r4_closed(m), big_u(counts[static_cast<std::size_t>(m)])) << m;
}

TEST(ClosedForms, ThreeSquares) {
  MemoTables memo;
  const auto counts = count_squares_upto(3, 5000);
  for (std::int64_t m = 1; m <= 5000; ++m) {
    ASSERT_EQ(r3_closed(m), big_u(counts[static_cast<std::size_t>(m)])) << m;
    ASSERT_EQ(r3_closed(m, &memo), big_u(counts[static_cast<std::size_t>(m)])) << m;
  }
  EXPECT_GT(memo.hits(), 0u);
}

TEST(ClosedForms, ThreeSquaresVanishOnExcludedClass) {
  for (std::int64_t a = 0; a <= 3; ++a)
    for (std::int64_t k = 0; k <= 20; ++k) {
      const std::int64_t m = ipow(4, static_cast<unsigned>(a)) * (8 * k + 7);
      if (m <= kCountWorkBound) EXPECT_EQ(count_squares(3, m), 0u) << m;
      EXPECT_EQ(r3_closed(m), 0) << m;
    }
}

TEST(HurwitzRelation, HoldsAgainstBruteForce) {
  MemoTables memo;
  const auto counts = count_squares_upto(3, 3000);
  for (std::int64_t m = 1; m <= 3000; ++m) {
    ASSERT_EQ(hz_rhs(m, &memo), Rational(big_u(counts[static_cast<std::size_t>(m)]))) << m;
    ASSERT_TRUE(hz_relations_check(m, &memo)) << m;
  }
}

TEST(CountOrder, SumOfSquaresLattices) {
  const auto three = GramLattice::sum_of_squares(3);
  const auto four = GramLattice::sum_of_squares(4);
  for (std::int64_t m = 1; m <= 300; ++m) {
    ASSERT_EQ(count_order(three, m).count, count_squares(3, m)) << m;
    ASSERT_EQ(count_order(four, m).count, count_squares(4, m)) << m;
  }
  EXPECT_EQ(count_order(three, 5).lattice, three.name());
  EXPECT_THROW(count_order(three, 0), InvalidInput);
}

TEST(CountOrder, LipschitzIsFourSquares) {
  const auto counts = count_order_upto(GramLattice::lipschitz(), 2000, 2);
  const auto squares = count_squares_upto(4, 2000);
  EXPECT_EQ(counts, squares);
}

TEST(CountOrder, HurwitzAddsHalfIntegerVectors) {
  const auto h = GramLattice::hurwitz();
  for (std::int64_t m = 1; m <= 60; ++m) {
    ASSERT_EQ(count_order(h, m).count, count_squares(4, m) + odd_vectors(4 * m)) << m;
  }
}

TEST(CountOrder, HurwitzMatchesEichlerMagnitude) {
  const auto counts = count_order_upto(GramLattice::hurwitz(), 1000, 4);
  for (std::int64_t m = 1; m <= 1000; ++m) {
    ASSERT_EQ(Rational(big_u(counts[static_cast<std::size_t>(m)])), hecke::r_DN_magnitude(2, 1, m)) << m;
  }
}

TEST(CountOrder, SkewedGramMatchesSquares) {
  const auto lat = skewed_three_squares();
  EXPECT_FALSE(lat.is_diagonal());
  const auto counts = count_order_upto(lat, 1500, 3);
  for (std::int64_t m = 0; m <= 1500; ++m) {
    ASSERT_EQ(counts[static_cast<std::size_t>(m)], count_squares(3, m)) << m;
    if (m >= 1 && m <= 200) ASSERT_EQ(count_order(lat, m).count, count_squares(3, m)) << m;
  }
}

TEST(CountOrder, IndependentOfWorkers) {
  const auto h = GramLattice::hurwitz();
  EXPECT_EQ(count_order_upto(h, 1500, 1), count_order_upto(h, 1500, 5));
}
