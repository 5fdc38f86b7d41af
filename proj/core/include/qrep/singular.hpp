#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qrep/quadratic_value.hpp"
#include "qrep/rational.hpp"

namespace qrep::singular {

// Largest modulus k the Gauss-sum oracle accepts. Table construction costs
// about k^2/2 complex multiply-adds; rounding error stays near k * 1e-16.
inline constexpr std::uint64_t kMaxOracleModulus = 30000;
inline constexpr double kImaginaryTolerance = 1e-9;
inline constexpr double kRoundingTolerance = 1e-6;

// ((1/k) sum_j e(h j^2 / k))^s for every h coprime to k, so that
// A_k(m) = sum_h table[h] e(-m h / k) costs O(k) for each further m.
class GaussSumTable {
 public:
  GaussSumTable(std::uint64_t k, int s, std::uint64_t max_modulus = kMaxOracleModulus);

  std::uint64_t modulus() const { return k_; }
  int exponent() const { return s_; }

  std::complex<double> A_complex(std::int64_t m) const;
  // Throws NumericalCheckFailed if |Im A_k(m)| exceeds kImaginaryTolerance.
  double A(std::int64_t m) const;

 private:
  std::uint64_t k_;
  int s_;
  std::vector<std::uint64_t> units_;
  std::vector<std::complex<double>> powered_;
  std::vector<std::complex<double>> roots_;  // e(v / k)
};

// Per-worker memo of Gauss-sum tables keyed by (k, s). Not thread safe; give
// each worker its own instance.
class OracleCache {
 public:
  const GaussSumTable& table(std::uint64_t k, int s);
  std::size_t size() const { return tables_.size(); }

 private:
  std::map<std::pair<std::uint64_t, int>, GaussSumTable> tables_;
};

double A_k_oracle(std::uint64_t k, std::int64_t m, int s);

// Closed form of A_{p^r}(m) for s = 3 (r >= 0).
QuadraticValue A_pr_closed_s3(std::uint64_t p, unsigned r, std::int64_t m);

enum class LocalSource { closed_form, gauss_sum_oracle, whittaker_value };

struct LocalSingularFactor {
  std::uint64_t p;
  Rational value;
  LocalSource source;
  unsigned terms;  // number of r values summed (0 for whittaker_value)
};

// S_p(m) = sum_r A_{p^r}(m) for s in {3, 4}. s = 3 sums the closed forms;
// s = 4 sums rounded oracle terms and checks that they vanish for
// r >= ord_p(m) + 2. Throws WorkBoundExceeded if p^{ord_p(m)+2} exceeds the
// oracle modulus bound.
LocalSingularFactor S_p_detailed(std::uint64_t p, std::int64_t m, int s, OracleCache& cache);
Rational S_p(std::uint64_t p, std::int64_t m, int s, OracleCache& cache);
Rational S_p(std::uint64_t p, std::int64_t m, int s);

struct SeriesOptions {
  // For s = 4, primes above this use the normalized Whittaker value
  // (1 - p^-2) sum_{i <= ord_p m} p^-i in place of the oracle.
  std::uint64_t oracle_prime_limit = 23;
};

// prod_{p <= prime_cut} S_p(m).
double singular_series(std::int64_t m, int s, std::uint64_t prime_cut, OracleCache& cache,
                       const SeriesOptions& options = {});
// pi^{s/2} / Gamma(s/2) * m^{s/2 - 1} * singular_series(m, s, prime_cut).
double rho_s(std::int64_t m, int s, std::uint64_t prime_cut, OracleCache& cache,
             const SeriesOptions& options = {});
double rho_s(std::int64_t m, int s, std::uint64_t prime_cut);

}  // namespace qrep::singular
