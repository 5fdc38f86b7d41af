#include "qrep/repnum.hpp"

#include <cmath>
#include <string>

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"
#include "qrep/parallel.hpp"
#include "qrep/quadform.hpp"

namespace qrep::repnum {
namespace {

void check_bound(const char* who, std::int64_t m, std::int64_t work_bound) {
  if (m < 0) throw InvalidInput(std::string(who) + ": m must be nonnegative");
  if (m > work_bound) {
    throw WorkBoundExceeded(std::string(who) + ": m = " + std::to_string(m) + " exceeds work bound " +
                            std::to_string(work_bound));
  }
}

void check_dimension(int k) {
  if (k != 3 && k != 4) throw InvalidInput("count_squares: k must be 3 or 4");
}

// Number of y with y^2 = r (0, 1 or 2).
std::uint64_t square_roots(std::int64_t r) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  return is_square(static_cast<std::uint64_t>(r)) ? 2 : 0;
}

std::vector<std::uint64_t> add_histograms(const std::vector<std::vector<std::uint64_t>>& parts,
                                          std::size_t size) {
  std::vector<std::uint64_t> out(size, 0);
  for (const auto& h : parts) {
    for (std::size_t i = 0; i < size; ++i) out[i] += h[i];
  }
  return out;
}

// Exact Fincke-Pohst data: Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2.
struct Cholesky {
  int n;
  std::vector<std::vector<Rational>> q;
};

Cholesky rational_cholesky(const GramLattice& lat) {
  const int n = lat.dimension();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) q[i][j] = Rational(lat.gram(i, j), 2);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (int k = i + 1; k < n; ++k) {
      for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
  }
  return {n, q};
}

// Smallest and largest integer x with qii * (x + c)^2 <= R.
bool integer_range(const Rational& qii, const Rational& c, const Rational& R, std::int64_t& lo,
                   std::int64_t& hi) {
  if (R.sign() < 0) return false;
  const auto fits = [&](std::int64_t x) {
    const Rational t = Rational(x) + c;
    return qii * t * t <= R;
  };
  const double half = std::sqrt(R.to_double() / qii.to_double());
  const double center = -c.to_double();
  lo = static_cast<std::int64_t>(std::ceil(center - half));
  hi = static_cast<std::int64_t>(std::floor(center + half));
  while (fits(lo - 1)) --lo;
  while (lo <= hi && !fits(lo)) ++lo;
  while (fits(hi + 1)) ++hi;
  while (hi >= lo && !fits(hi)) --hi;
  return lo <= hi;
}

// Visits every x with Q(x) <= bound whose outermost coordinate equals `top`,
// adding Q(x) to the histogram.
void enumerate_slice(const GramLattice& lat, const Cholesky& ch, std::int64_t bound, std::int64_t top,
                     std::vector<std::uint64_t>& hist) {
  const int n = ch.n;
  std::vector<std::int64_t> x(n, 0);
  x[n - 1] = top;
  std::vector<Rational> remaining(n + 1);
  remaining[n] = Rational(bound);
  {
    const Rational t(top);
    remaining[n - 1] = remaining[n] - ch.q[n - 1][n - 1] * t * t;
  }
  if (remaining[n - 1].sign() < 0) return;

  auto recurse = [&](auto&& self, int i) -> void {
    Rational c;
    for (int j = i + 1; j < n; ++j) c += ch.q[i][j] * Rational(x[j]);
    std::int64_t lo, hi;
    if (!integer_range(ch.q[i][i], c, remaining[i + 1], lo, hi)) return;
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[i] = v;
      if (i == 0) {
        const std::int64_t value = lat.norm(x);
        hist[static_cast<std::size_t>(value)] += 1;
      } else {
        const Rational t = Rational(v) + c;
        remaining[i] = remaining[i + 1] - ch.q[i][i] * t * t;
        self(self, i - 1);
      }
    }
  };
  recurse(recurse, n - 2);
}

}  // namespace

std::uint64_t count_squares(int k, std::int64_t m, std::int64_t work_bound) {
  check_dimension(k);
  check_bound("count_squares", m, work_bound);
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(m)));
  std::uint64_t total = 0;
  for (std::int64_t a = -s; a <= s; ++a) {
    for (std::int64_t b = -s; b <= s; ++b) {
      const std::int64_t ab = a * a + b * b;
      if (ab > m) continue;
      if (k == 3) {
        total += square_roots(m - ab);
        continue;
      }
      for (std::int64_t c = -s; c <= s; ++c) {
        total += square_roots(m - ab - c * c);
      }
    }
  }
  return total;
}

std::vector<std::uint64_t> count_squares_upto(int k, std::int64_t max_m, unsigned workers,
                                              std::int64_t work_bound) {
  check_dimension(k);
  check_bound("count_squares_upto", max_m, work_bound);
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(max_m)));
  const auto size = static_cast<std::size_t>(max_m + 1);
  const auto tops = static_cast<std::size_t>(2 * s + 1);
  auto parts = parallel_map<std::vector<std::uint64_t>>(tops, workers, [&](std::size_t idx, unsigned) {
    std::vector<std::uint64_t> hist(size, 0);
    const std::int64_t a = static_cast<std::int64_t>(idx) - s;
    const std::int64_t ra = max_m - a * a;
    const auto sb = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(ra)));
    for (std::int64_t b = -sb; b <= sb; ++b) {
      const std::int64_t rb = ra - b * b;
      const auto sc = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rb)));
      for (std::int64_t c = -sc; c <= sc; ++c) {
        const std::int64_t abc = a * a + b * b + c * c;
        if (k == 3) {
          hist[static_cast<std::size_t>(abc)] += 1;
          continue;
        }
        const auto sd = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(max_m - abc)));
        for (std::int64_t d = -sd; d <= sd; ++d) hist[static_cast<std::size_t>(abc + d * d)] += 1;
      }
    }
    return hist;
  });
  return add_histograms(parts, size);
}

BigInt r4_closed(std::int64_t m) {
  if (m < 1) throw InvalidInput("r4_closed: m must be positive");
  return 8 * sigma1_filtered(m, DivisorFilter::not_divisible_by_4);
}

BigInt r3_closed(std::int64_t m, MemoTables* memo) {
  if (m < 1) throw InvalidInput("r3_closed: m must be positive");
  const DiscriminantData dd = discriminant_data(m);
  const int chi2 = dd.chi(2);
  if (chi2 == 1) return 0;
  const quadform::ClassData cd = memo ? memo->class_number(dd.d) : quadform::class_number(dd.d);
  const auto factorize = [memo](std::int64_t n) { return memo ? memo->factor(n) : factor(n); };
  Rational sum;
  for (std::uint64_t l : divisors(factorize(dd.c))) {
    if (l % 2 == 0) continue;
    Rational term(static_cast<std::int64_t>(l));
    for (std::uint64_t p : factorize(static_cast<std::int64_t>(l)).primes()) {
      term *= Rational(1) - Rational(dd.chi(static_cast<std::int64_t>(p)), static_cast<std::int64_t>(p));
    }
    sum += term;
  }
  const Rational value = Rational(24 * cd.h, cd.w) * Rational(1 - chi2) * sum;
  return value.to_integer();
}

Rational hz_rhs(std::int64_t m, MemoTables* memo) {
  if (m < 1) throw InvalidInput("hz_rhs: m must be positive");
  if (m % 4 == 0) return hz_rhs(m / 4, memo);
  if (m % 4 == 1 || m % 4 == 2) return Rational(12) * quadform::hurwitz_H(4 * m, memo);
  if (m % 8 == 3) return Rational(24) * quadform::hurwitz_H(m, memo);
  return Rational(0);
}

bool hz_relations_check(std::int64_t m, MemoTables* memo) { return Rational(r3_closed(m, memo)) == hz_rhs(m, memo); }

CountResult count_order(const GramLattice& lattice, std::int64_t m, std::int64_t work_bound) {
  if (m < 1) throw InvalidInput("count_order: m must be positive");
  check_bound("count_order", m, work_bound);
  const Cholesky ch = rational_cholesky(lattice);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(m + 1), 0);
  std::int64_t lo, hi;
  integer_range(ch.q[ch.n - 1][ch.n - 1], Rational(0), Rational(m), lo, hi);
  for (std::int64_t top = lo; top <= hi; ++top) enumerate_slice(lattice, ch, m, top, hist);
  return {m, hist[static_cast<std::size_t>(m)], lattice.name()};
}

std::vector<std::uint64_t> count_order_upto(const GramLattice& lattice, std::int64_t max_m, unsigned workers,
                                            std::int64_t work_bound) {
  check_bound("count_order_upto", max_m, work_bound);
  const Cholesky ch = rational_cholesky(lattice);
  const auto size = static_cast<std::size_t>(max_m + 1);
  std::int64_t lo, hi;
  if (!integer_range(ch.q[ch.n - 1][ch.n - 1], Rational(0), Rational(max_m), lo, hi)) {
    return std::vector<std::uint64_t>(size, 0);
  }
  auto parts = parallel_map<std::vector<std::uint64_t>>(
      static_cast<std::size_t>(hi - lo + 1), workers, [&](std::size_t idx, unsigned) {
        std::vector<std::uint64_t> hist(size, 0);
        enumerate_slice(lattice, ch, max_m, lo + static_cast<std::int64_t>(idx), hist);
        return hist;
      });
  return add_histograms(parts, size);
}

}  // namespace qrep::repnum
