#include "qrep/eisenstein.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qrep/arith.hpp"
#include "qrep/errors.hpp"
#include "qrep/hecke.hpp"
#include "qrep/lattice.hpp"
#include "qrep/parallel.hpp"
#include "qrep/quadform.hpp"
#include "qrep/repnum.hpp"

namespace qrep::eisenstein {
namespace {

int mod8(int k) { return ((k % 8) + 8) % 8; }

// 1 - p^-2, the local factor of 1/zeta(2)
Rational zeta_p2_inverse(std::uint64_t p) {
  return Rational(1) - Rational::power(static_cast<std::int64_t>(p), -2);
}

SymbolicConstant inverse_zeta2() { return SymbolicConstant::make(Rational(6), -2, 0, 0); }

Assembly finish(std::int64_t m, const SymbolicConstant& raw, std::vector<whittaker::LocalFactor> factors,
                const char* who) {
  const SymbolicConstant c = raw.simplified(m);
  if (!c.cancelled()) {
    throw IncompleteCancellation(std::string(who) + "(m=" + std::to_string(m) + ") left " + c.str());
  }
  return {m, c, c.coefficient.rational_part(), std::move(factors)};
}

std::vector<std::uint64_t> primes_of(std::int64_t n) { return factor(n).primes(); }

}  // namespace

SymbolicConstant SymbolicConstant::rational(Rational r) { return make(QuadraticValue(std::move(r)), 0, 0, 0); }

SymbolicConstant SymbolicConstant::make(QuadraticValue c, int pi, int sqrt_m, int zeta8) {
  SymbolicConstant s;
  s.coefficient = std::move(c);
  s.pi_power = pi;
  s.sqrt_m_power = sqrt_m;
  s.zeta8_power = mod8(zeta8);
  return s;
}

SymbolicConstant& SymbolicConstant::operator*=(const SymbolicConstant& o) {
  coefficient *= o.coefficient;
  pi_power += o.pi_power;
  sqrt_m_power += o.sqrt_m_power;
  zeta8_power = mod8(zeta8_power + o.zeta8_power);
  return *this;
}

SymbolicConstant SymbolicConstant::simplified(std::int64_t m) const {
  SymbolicConstant s = *this;
  while (s.sqrt_m_power >= 2) {
    s.coefficient *= QuadraticValue(Rational(m));
    s.sqrt_m_power -= 2;
  }
  while (s.sqrt_m_power <= -2) {
    s.coefficient /= QuadraticValue(Rational(m));
    s.sqrt_m_power += 2;
  }
  if (s.sqrt_m_power != 0 && is_square(static_cast<std::uint64_t>(m))) {
    const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(m)));
    if (s.sqrt_m_power > 0) {
      s.coefficient *= QuadraticValue(Rational(root));
    } else {
      s.coefficient /= QuadraticValue(Rational(root));
    }
    s.sqrt_m_power = 0;
  }
  return s;
}

bool SymbolicConstant::cancelled() const {
  return pi_power == 0 && zeta8_power == 0 && sqrt_m_power == 0 && coefficient.is_rational();
}

std::complex<double> SymbolicConstant::evaluate(std::int64_t m) const {
  const double magnitude = coefficient.to_double() * std::pow(std::numbers::pi, pi_power) *
                           std::pow(static_cast<double>(m), 0.5 * sqrt_m_power);
  return std::polar(1.0, std::numbers::pi * zeta8_power / 4.0) * magnitude;
}

std::string SymbolicConstant::str() const {
  std::ostringstream out;
  out << "(" << coefficient.str() << ")";
  if (pi_power) out << " pi^" << pi_power;
  if (sqrt_m_power) out << " sqrt(m)^" << sqrt_m_power;
  if (zeta8_power) out << " zeta8^" << zeta8_power;
  return out.str();
}

Assembly assemble_weight2_detailed(std::int64_t D, std::int64_t N, std::int64_t m) {
  hecke::EichlerSpec::make(D, N);
  if (m < 1) throw InvalidInput("assemble_weight2: m must be positive");
  // archimedean value -4 pi^2 m, and prod_p (1 - p^-2) = 6 / pi^2
  SymbolicConstant total = SymbolicConstant::make(Rational(-4 * m), 2, 0, 0) * inverse_zeta2();
  std::vector<whittaker::LocalFactor> factors;
  for (std::uint64_t p : primes_of(D * N * m)) {
    const auto pp = static_cast<std::int64_t>(p);
    const unsigned r = ord_p(m, p);
    whittaker::LocalFactor f{p, whittaker::CaseTag::split_unramified, Rational(0)};
    if (D % pp == 0) {
      f = {p, whittaker::CaseTag::ramified_D, whittaker::w2_ramified_D(p, r)};
    } else if (N % pp == 0) {
      f = {p, whittaker::CaseTag::split_N, whittaker::w2_split_N(p, r)};
    } else {
      f.value = whittaker::w2_split_unramified(p, r);
    }
    total *= SymbolicConstant::rational(f.value / zeta_p2_inverse(p));
    factors.push_back(std::move(f));
  }
  return finish(m, total, std::move(factors), "assemble_weight2");
}

Rational assemble_weight2(std::int64_t D, std::int64_t N, std::int64_t m) {
  return assemble_weight2_detailed(D, N, m).value;
}

Assembly assemble_weight32_detailed(std::int64_t m, MemoTables* memo) {
  if (m < 1) throw InvalidInput("assemble_weight32: m must be positive");
  const DiscriminantData dd = discriminant_data(m);
  const quadform::ClassData cd = memo ? memo->class_number(dd.d) : quadform::class_number(dd.d);
  const QuadraticValue sqrt2 = QuadraticValue::sqrt2();
  std::vector<whittaker::LocalFactor> factors;

  // -4 pi sqrt(2m) zeta_8
  SymbolicConstant total = SymbolicConstant::make(QuadraticValue(Rational(-4)) * sqrt2, 1, 1, 1);
  // 2-adic value -zeta_8^{-1} / (2 sqrt 2) * L_2 b_2
  const whittaker::Weight32Two two = whittaker::w32_two_parts(m);
  total *= SymbolicConstant::make(QuadraticValue(Rational(-1, 2)) / sqrt2, 0, 0, -1);
  total *= SymbolicConstant::rational(two.normalized());
  factors.push_back({2, whittaker::CaseTag::weight32_two, two.normalized()});
  // prod_{p odd} L_p / zeta_p(2) = (L(1, chi) / L_2) * zeta_2(2) / zeta(2),
  // with L(1, chi) = 2 pi h / (w sqrt|d|) and sqrt|d| = 2 sqrt(m) / c
  total *= SymbolicConstant::make(Rational(cd.h * dd.c, cd.w), 1, -1, 0);
  total *= SymbolicConstant::rational(Rational(1) / two.L2 / zeta_p2_inverse(2));
  total *= inverse_zeta2();
  // odd primes where the local value differs from L_p / zeta_p(2)
  for (std::uint64_t p : primes_of(m)) {
    if (p == 2) continue;
    const whittaker::Weight32Odd odd = whittaker::w32_odd_parts(p, m);
    total *= SymbolicConstant::rational(odd.value / odd.euler_ratio);
    factors.push_back({p, whittaker::CaseTag::weight32_odd, odd.value});
  }
  return finish(m, total, std::move(factors), "assemble_weight32");
}

BigInt assemble_weight32(std::int64_t m, MemoTables* memo) {
  return assemble_weight32_detailed(m, memo).value.to_integer();
}

Assembly assemble_foursquares_detailed(std::int64_t m) {
  if (m < 1) throw InvalidInput("assemble_foursquares: m must be positive");
  SymbolicConstant total = SymbolicConstant::make(Rational(-4 * m), 2, 0, 0) * inverse_zeta2();
  std::vector<whittaker::LocalFactor> factors;
  for (std::uint64_t p : primes_of(2 * m)) {
    whittaker::LocalFactor f{p, whittaker::CaseTag::split_unramified, Rational(0)};
    if (p == 2) {
      f = {p, whittaker::CaseTag::foursquares_two, whittaker::w2_two_foursquares_raw(m)};
    } else {
      f.value = whittaker::w2_split_unramified(p, ord_p(m, p));
    }
    total *= SymbolicConstant::rational(f.value / zeta_p2_inverse(p));
    factors.push_back(std::move(f));
  }
  return finish(m, total, std::move(factors), "assemble_foursquares");
}

BigInt assemble_foursquares(std::int64_t m) { return assemble_foursquares_detailed(m).value.to_integer(); }

double numeric_weight32(std::int64_t m) {
  if (m < 1) throw InvalidInput("numeric_weight32: m must be positive");
  using std::numbers::pi;
  const GramLattice lat = GramLattice::sum_of_squares(3);
  const DiscriminantData dd = discriminant_data(m);
  const std::complex<double> zeta8 = std::polar(1.0, pi / 4.0);
  const double md = static_cast<double>(m);

  const std::complex<double> arch = -4.0 * pi * std::sqrt(2.0 * md) * zeta8;
  const double w2 = whittaker::density_oracle(lat, 2, m, whittaker::density_precision(lat, 2, m)).to_double();
  const std::complex<double> raw2 = -1.0 / (zeta8 * 2.0 * std::sqrt(2.0)) * w2;
  const double L2 = 1.0 / (1.0 - dd.chi(2) / 2.0);
  const double L = quadform::class_number_formula_L(dd.d);
  double odd = L / L2 * (4.0 / 3.0) / (pi * pi / 6.0);
  for (std::uint64_t p : primes_of(m)) {
    if (p == 2) continue;
    const double pd = static_cast<double>(p);
    const double euler = (1.0 - 1.0 / (pd * pd)) / (1.0 - dd.chi(static_cast<std::int64_t>(p)) / pd);
    odd *= whittaker::density_oracle(lat, p, m, whittaker::density_precision(lat, p, m)).to_double() / euler;
  }
  return (arch * raw2 * odd).real();
}

double numeric_foursquares(std::int64_t m) {
  if (m < 1) throw InvalidInput("numeric_foursquares: m must be positive");
  using std::numbers::pi;
  const GramLattice lat = GramLattice::sum_of_squares(4);
  double value = -4.0 * pi * pi * static_cast<double>(m) * 6.0 / (pi * pi);
  for (std::uint64_t p : primes_of(2 * m)) {
    const double pd = static_cast<double>(p);
    double w = whittaker::density_oracle(lat, p, m, whittaker::density_precision(lat, p, m)).to_double();
    if (p == 2) w *= whittaker::foursquares_two_normalizer().to_double();
    value *= w / (1.0 - 1.0 / (pd * pd));
  }
  return value;
}

const char* to_string(GenusOneLattice lattice) {
  switch (lattice) {
    case GenusOneLattice::sum_of_three_squares: return "sum-of-3-squares";
    case GenusOneLattice::sum_of_four_squares: return "sum-of-4-squares";
    case GenusOneLattice::hurwitz: return "hurwitz";
  }
  return "?";
}

Report siegel_weil_report(GenusOneLattice lattice, std::int64_t lo, std::int64_t hi, unsigned workers) {
  if (lo < 1 || hi < lo) throw InvalidInput("siegel_weil_report: need 1 <= lo <= hi");
  std::vector<std::uint64_t> counts;
  switch (lattice) {
    case GenusOneLattice::sum_of_three_squares: counts = repnum::count_squares_upto(3, hi, workers); break;
    case GenusOneLattice::sum_of_four_squares: counts = repnum::count_squares_upto(4, hi, workers); break;
    case GenusOneLattice::hurwitz: counts = repnum::count_order_upto(GramLattice::hurwitz(), hi, workers); break;
  }
  const auto n = static_cast<std::size_t>(hi - lo + 1);
  auto rows = parallel_map<ReportRow>(n, workers, [&](std::size_t i, unsigned) {
    const std::int64_t m = lo + static_cast<std::int64_t>(i);
    Rational assembled;
    switch (lattice) {
      case GenusOneLattice::sum_of_three_squares: assembled = assemble_weight32_detailed(m).value; break;
      case GenusOneLattice::sum_of_four_squares: assembled = assemble_foursquares_detailed(m).value; break;
      case GenusOneLattice::hurwitz: assembled = assemble_weight2_detailed(2, 1, m).value; break;
    }
    const std::uint64_t count = counts[static_cast<std::size_t>(m)];
    ReportRow row;
    row.inputs = {{"lattice", to_string(lattice)}, {"m", std::to_string(m)}};
    row.expected = std::to_string(count);
    row.actual = assembled.str();
    row.pass = assembled == Rational(big_u(count));
    return row;
  });
  Report report;
  report.suite = std::string("siegel-weil/") + to_string(lattice);
  report.paper_ref = "I(tau, L) = sum_m r_gen(L)(m) q^m against assembled Eisenstein coefficients";
  report.rows = std::move(rows);
  return report;
}

}  // namespace qrep::eisenstein
