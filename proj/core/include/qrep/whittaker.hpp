#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qrep/lattice.hpp"
#include "qrep/rational.hpp"

namespace qrep::whittaker {

enum class CaseTag {
  split_unramified,  // p not dividing ND, weight 2
  split_N,           // p | N
  ramified_D,        // p | D, via the matching combination
  weight32_odd,      // sum of three squares, odd p
  weight32_two,      // sum of three squares, p = 2
  foursquares_two,   // Lipschitz order, p = 2
};

std::string_view to_string(CaseTag tag);

// Value of one local Euler/Whittaker factor. prime == nullopt stands for the
// archimedean place.
struct LocalFactor {
  std::optional<std::uint64_t> prime;
  CaseTag tag;
  Rational value;
};

// Weight-2 local values at e for the three Eichler-order cases, r = ord_p(m).
Rational w2_split_unramified(std::uint64_t p, unsigned r);  // (1-p^-2) sum_{i<=r} p^-i
Rational w2_split_N(std::uint64_t p, unsigned r);           // 2/p - p^{-r-1} - p^{-r-2}
Rational w2_ramified_D(std::uint64_t p, unsigned r);        // -p^{-r-2}(p+1)

// -2/(p-1) * split_unramified + (p+1)/(p-1) * split_N; must equal w2_ramified_D.
Rational ramified_matching_combination(std::uint64_t p, unsigned r);

struct Weight32Odd {
  Rational value;
  Rational euler_ratio;  // L_p(1, chi_d) / zeta_p(2)
  Rational b_p;          // p^{-t} sum_{l | p^t} l prod_{q | l}(1 - chi_d(q)/q)
  unsigned t_p;
  bool p_divides_d;
};

// Three-squares local value at an odd prime p. Throws InvalidInput for p = 2.
Weight32Odd w32_odd_parts(std::uint64_t p, std::int64_t m);
Rational w32_odd(std::uint64_t p, std::int64_t m);

struct Weight32Two {
  Rational L2;  // (1 - chi_d(2)/2)^{-1}
  Rational b2;  // (3/2) 2^{-t_2} (1 - chi_d(2))
  unsigned t_2;
  int chi_2;
  Rational normalized() const { return L2 * b2; }
};

// The raw 2-adic value is -zeta_8^{-1}/(2 sqrt 2) * L2 * b2; this returns the
// pieces and the normalized value L2 * b2.
Weight32Two w32_two_parts(std::int64_t m);
Rational w32_two_normalized(std::int64_t m);

// 2-adic factor for the Lipschitz lattice (sum of four squares).
Rational w2_two_foursquares_raw(std::int64_t m);
Rational foursquares_two_normalizer();  // gamma(V_2) |det G|_2^{1/2} = -1/4
Rational w2_two_foursquares_normalized(std::int64_t m);

// ---------------------------------------------------------------------------
// Local representation density oracle
//
// density = p^{-t(n-1)} #{x in (Z/p^t)^n : Q(x) = m mod p^t}.
// Diagonal Gram matrices are counted through value histograms of the
// individual coordinates (exact; cost ~ (number of square classes mod p^t)^2);
// anything else falls back to a full loop over (Z/p^t)^n.

enum class DensityMethod { automatic, full_enumeration };

inline constexpr std::uint64_t kDefaultDensityWorkBound = 4'000'000'000ULL;

// Representation counts for every residue mod p^t, reusable across m.
class DensityTable {
 public:
  // Throws WorkBoundExceeded if the estimated work exceeds work_bound.
  DensityTable(const GramLattice& lattice, std::uint64_t p, unsigned t,
               DensityMethod method = DensityMethod::automatic,
               std::uint64_t work_bound = kDefaultDensityWorkBound);

  std::uint64_t prime() const { return p_; }
  unsigned precision() const { return t_; }
  std::uint64_t modulus() const { return modulus_; }

  BigInt count(std::int64_t m) const;
  Rational density(std::int64_t m) const;

 private:
  std::uint64_t p_;
  unsigned t_;
  int dim_;
  std::uint64_t modulus_;
  // count(m) = sum_u left_[u] * right_[m - u]; in full-enumeration mode
  // right_ is empty and left_ holds the counts directly.
  std::vector<std::uint64_t> left_;
  std::vector<std::uint64_t> right_;
};

// Smallest precision accepted by density_oracle: ord_2(m) + 3 at p = 2,
// ord_p(m) + ord_p(det G) + 1 at odd p.
unsigned density_precision(const GramLattice& lattice, std::uint64_t p, std::int64_t m);

// Evaluates at t and t + 1 and throws NumericalCheckFailed if they differ.
// Throws InvalidInput when t < density_precision(lattice, p, m).
Rational density_oracle(const GramLattice& lattice, std::uint64_t p, std::int64_t m, unsigned t,
                        std::uint64_t work_bound = kDefaultDensityWorkBound);

}  // namespace qrep::whittaker
