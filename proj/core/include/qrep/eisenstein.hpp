#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qrep/memo.hpp"
#include "qrep/quadratic_value.hpp"
#include "qrep/rational.hpp"
#include "qrep/report.hpp"
#include "qrep/whittaker.hpp"

namespace qrep::eisenstein {

// coefficient * pi^pi_power * sqrt(m)^sqrt_m_power * zeta_8^zeta8_power.
// The coefficient lives in Q(sqrt 2) so that sqrt(2m) = sqrt 2 sqrt m and
// 1/(2 sqrt 2) stay exact.
struct SymbolicConstant {
  QuadraticValue coefficient{Rational(1)};
  int pi_power = 0;
  int sqrt_m_power = 0;
  int zeta8_power = 0;  // kept in [0, 8)

  static SymbolicConstant rational(Rational r);
  static SymbolicConstant make(QuadraticValue c, int pi, int sqrt_m, int zeta8);

  SymbolicConstant& operator*=(const SymbolicConstant& o);
  friend SymbolicConstant operator*(SymbolicConstant a, const SymbolicConstant& b) { return a *= b; }

  // Rewrites sqrt(m)^2 as m and zeta_8^4 as -1.
  SymbolicConstant simplified(std::int64_t m) const;
  bool cancelled() const;
  std::complex<double> evaluate(std::int64_t m) const;
  std::string str() const;
};

struct Assembly {
  std::int64_t m;
  SymbolicConstant constant;  // after simplification
  Rational value;
  std::vector<whittaker::LocalFactor> factors;
};

// Throw IncompleteCancellation if pi, zeta_8, sqrt(m) or sqrt 2 survive.
Assembly assemble_weight2_detailed(std::int64_t D, std::int64_t N, std::int64_t m);
Rational assemble_weight2(std::int64_t D, std::int64_t N, std::int64_t m);
Assembly assemble_weight32_detailed(std::int64_t m, MemoTables* memo = nullptr);
BigInt assemble_weight32(std::int64_t m, MemoTables* memo = nullptr);
Assembly assemble_foursquares_detailed(std::int64_t m);
BigInt assemble_foursquares(std::int64_t m);

// Floating-point replay of the three- and four-squares assemblies with the
// local factors at p | 2m taken from the density oracle.
double numeric_weight32(std::int64_t m);
double numeric_foursquares(std::int64_t m);

enum class GenusOneLattice { sum_of_three_squares, sum_of_four_squares, hurwitz };

const char* to_string(GenusOneLattice lattice);

// Assembled coefficient versus brute-force count for lo <= m <= hi.
Report siegel_weil_report(GenusOneLattice lattice, std::int64_t lo, std::int64_t hi, unsigned workers = 1);

}  // namespace qrep::eisenstein
