#include "qrep_cli/suites.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "qrep/arith.hpp"
#include "qrep/eisenstein.hpp"
#include "qrep/errors.hpp"
#include "qrep/hecke.hpp"
#include "qrep/lattice.hpp"
#include "qrep/parallel.hpp"
#include "qrep/repnum.hpp"
#include "qrep/singular.hpp"
#include "qrep/whittaker.hpp"

namespace qrep::cli {
namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

std::string str(std::int64_t v) { return std::to_string(v); }

ReportRow make_row(Inputs inputs, std::string expected, std::string actual) {
  ReportRow row;
  row.inputs = std::move(inputs);
  row.pass = expected == actual;
  row.expected = std::move(expected);
  row.actual = std::move(actual);
  return row;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

template <class F>
std::vector<ReportRow> rows_by_m(const MRange& range, unsigned workers, F&& per_m) {
  auto chunks = parallel_map<std::vector<ReportRow>>(range.size(), workers, [&](std::size_t i, unsigned w) {
    return per_m(range.lo + static_cast<std::int64_t>(i), w);
  });
  std::vector<ReportRow> rows;
  for (auto& c : chunks) {
    for (auto& r : c) rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<int> exponents(const RunConfig& config) {
  if (config.params.s) {
    if (*config.params.s != 3 && *config.params.s != 4) throw InvalidInput("--s must be 3 or 4");
    return {*config.params.s};
  }
  return {3, 4};
}

Rational normalized_whittaker(std::uint64_t p, std::int64_t m, int s) {
  if (s == 3) return p == 2 ? whittaker::w32_two_normalized(m) : whittaker::w32_odd(p, m);
  return p == 2 ? whittaker::w2_two_foursquares_normalized(m) : whittaker::w2_split_unramified(p, ord_p(m, p));
}

Report four_squares(const RunConfig& c, const MRange& r, MemoPool&) {
  const auto counts = repnum::count_squares_upto(4, r.hi, c.parallelism);
  Report rep{"four-squares", "r_4(m) = 8 sum_{d | m, 4 !| d} d", {}, {}};
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned) {
    return std::vector{make_row({{"m", str(m)}}, to_string(repnum::r4_closed(m)),
                                std::to_string(counts[static_cast<std::size_t>(m)]))};
  });
  return rep;
}

Report three_squares(const RunConfig& c, const MRange& r, MemoPool& memos) {
  const auto counts = repnum::count_squares_upto(3, r.hi, c.parallelism);
  Report rep{"three-squares",
             "r_3(m) = 24 h(d)/w (1 - chi_d(2)) sum_{l | c, l odd} l prod_{p | l} (1 - chi_d(p)/p)", {}, {}};
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned w) {
    return std::vector{make_row({{"m", str(m)}}, to_string(repnum::r3_closed(m, &memos.worker(w))),
                                std::to_string(counts[static_cast<std::size_t>(m)]))};
  });
  return rep;
}

Report hz(const RunConfig& c, const MRange& r, MemoPool& memos) {
  Report rep{"hz", "r_3(m) = 12 H(4m) if m = 1,2 mod 4; 24 H(m) if m = 3 mod 8; 0 if m = 7 mod 8; r_3(m/4) if 4 | m",
             {}, {}};
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned w) {
    MemoTables& memo = memos.worker(w);
    return std::vector{make_row({{"m", str(m)}}, repnum::hz_rhs(m, &memo).str(),
                                Rational(repnum::r3_closed(m, &memo)).str())};
  });
  return rep;
}

Report hardy(const RunConfig& c, const MRange& r, MemoPool&) {
  const auto ss = exponents(c);
  const auto primes = primes_up_to(static_cast<std::uint64_t>(c.params.pmax));
  std::vector<singular::OracleCache> caches(c.parallelism);
  Report rep{"hardy", "S_p(m) = W_p(1/2, m) for s = 3 and S_p(m) = W_p(1, m) for s = 4, normalized local factors", {},
             {}};
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned w) {
    std::vector<ReportRow> rows;
    for (int s : ss) {
      const GramLattice lat = GramLattice::sum_of_squares(s);
      for (std::uint64_t p : primes) {
        const Rational W = normalized_whittaker(p, m, s);
        const Inputs base{{"s", str(s)}, {"p", str(static_cast<std::int64_t>(p))}, {"m", str(m)}};
        Inputs in = base;
        in.insert(in.begin(), {"check", "singular"});
        rows.push_back(make_row(in, W.str(), singular::S_p(p, m, s, caches[w]).str()));
        if (static_cast<std::int64_t>(p) <= c.params.density_pmax && m <= c.params.density_mmax) {
          Inputs din = base;
          din.insert(din.begin(), {"check", "density"});
          const Rational d = whittaker::density_oracle(lat, p, m, whittaker::density_precision(lat, p, m));
          rows.push_back(make_row(din, W.str(), d.str()));
        }
      }
    }
    return rows;
  });
  return rep;
}

Report rho(const RunConfig& c, const MRange& r, MemoPool&) {
  const auto ss = exponents(c);
  std::vector<singular::OracleCache> caches(c.parallelism);
  std::map<int, std::vector<std::uint64_t>> counts;
  for (int s : ss) counts[s] = repnum::count_squares_upto(s, r.hi, c.parallelism);
  singular::SeriesOptions options;
  options.oracle_prime_limit = static_cast<std::uint64_t>(c.params.pmax);
  Report rep{"rho", "r_s(m) = rho_s(m) = pi^{s/2}/Gamma(s/2) m^{s/2-1} prod_p S_p(m), s = 3, 4", {}, {}};
  rep.notes.push_back("prime cut " + std::to_string(c.params.cut) + ", pass when |rho - r| <= 0.01 max(r, 1)");
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned w) {
    std::vector<ReportRow> rows;
    for (int s : ss) {
      const double count = static_cast<double>(counts[s][static_cast<std::size_t>(m)]);
      const double value = singular::rho_s(m, s, c.params.cut, caches[w], options);
      ReportRow row = make_row({{"s", str(s)}, {"m", str(m)}}, std::to_string(counts[s][static_cast<std::size_t>(m)]),
                               fixed(value));
      row.pass = std::abs(value - count) <= 1e-2 * std::max(count, 1.0);
      rows.push_back(std::move(row));
    }
    return rows;
  });
  return rep;
}

Report hecke_degree(const RunConfig& c, const MRange& r, MemoPool&) {
  std::vector<std::int64_t> levels = c.params.levels;
  if (levels.empty()) levels = {1, 2, 3, 5, 6, 7, 10};
  Report rep{"hecke-degree", "2 #(Gamma_0(N) \\ {ad - bc = m, c = 0 mod N}) = deg T_{1,N}(m)", {}, {}};
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned) {
    std::vector<ReportRow> rows;
    for (std::int64_t N : levels) {
      rows.push_back(make_row({{"N", str(N)}, {"m", str(m)}}, hecke::deg_T_closed(1, N, m).str(),
                              std::to_string(2 * hecke::coset_oracle(N, m))));
    }
    return rows;
  });
  return rep;
}

Report hurwitz(const RunConfig& c, const MRange& r, MemoPool&) {
  const auto counts = repnum::count_order_upto(GramLattice::hurwitz(), r.hi, c.parallelism);
  Report rep{"hurwitz", "r_{D,N}(m) = (-1)^{k+1} 24 m prod_{p !| ND} ... prod_{p | D} 1/((p-1) p^{ord_p m}), D = 2, N = 1",
             {}, {}};
  std::size_t match_D = 0, match_m = 0;
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned) {
    return std::vector{make_row({{"m", str(m)}}, std::to_string(counts[static_cast<std::size_t>(m)]),
                                hecke::r_DN_magnitude(2, 1, m).str())};
  });
  for (std::int64_t m = r.lo; m <= r.hi; ++m) {
    const Rational count(big_u(counts[static_cast<std::size_t>(m)]));
    if (hecke::r_DN_closed(2, 1, m, hecke::SignConvention::prime_factors_of_D) == count) ++match_D;
    if (hecke::r_DN_closed(2, 1, m, hecke::SignConvention::prime_factors_of_m) == count) ++match_m;
  }
  const std::size_t total = r.size();
  auto verdict = [&](hecke::SignConvention conv, std::size_t hits) {
    return std::string(hecke::to_string(conv)) + ": signed value equals the count for " + std::to_string(hits) +
           " of " + std::to_string(total) + " m";
  };
  rep.notes.push_back(verdict(hecke::SignConvention::prime_factors_of_D, match_D));
  rep.notes.push_back(verdict(hecke::SignConvention::prime_factors_of_m, match_m));
  std::string winner = "neither convention matches every m";
  if (match_D == total && match_m != total) winner = hecke::to_string(hecke::SignConvention::prime_factors_of_D);
  if (match_m == total && match_D != total) winner = hecke::to_string(hecke::SignConvention::prime_factors_of_m);
  if (match_m == total && match_D == total) winner = "both conventions match on this range";
  rep.notes.push_back("matching sign convention: " + winner);
  return rep;
}

Report recurrence(const RunConfig& c, const MRange& r, MemoPool&) {
  struct Tuple {
    std::int64_t D, N, p, q;
  };
  std::vector<Tuple> tuples;
  const auto primes = primes_up_to(105);
  for (std::int64_t D = 1; D <= 105; ++D) {
    if (!is_squarefree(D)) continue;
    for (std::uint64_t up : primes) {
      for (std::uint64_t uq : primes) {
        const auto p = static_cast<std::int64_t>(up), q = static_cast<std::int64_t>(uq);
        if (p == q || D * p * q > 105 || !is_squarefree(D * p * q)) continue;
        for (std::int64_t N = 1; N <= 6; ++N) {
          if (std::gcd(D * p * q, N) == 1) tuples.push_back({D, N, p, q});
        }
      }
    }
  }
  Report rep{"recurrence",
             "-2/(q-1) r_{Dp,N} + (q+1)/(q-1) r_{Dp,Nq} = -2/(p-1) r_{Dq,N} + (p+1)/(p-1) r_{Dq,Np} and "
             "r_{Dp,N} = -2/(p-1) r_{D,N} + (p+1)/(p-1) r_{D,Np}",
             {}, {}};
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned) {
    std::vector<ReportRow> rows;
    for (const Tuple& t : tuples) {
      const bool ok = hecke::ramified_recurrence_check(t.D, t.N, t.p, t.q, m);
      rows.push_back(make_row({{"D", str(t.D)}, {"N", str(t.N)}, {"p", str(t.p)}, {"q", str(t.q)}, {"m", str(m)}},
                              "true", ok ? "true" : "false"));
    }
    return rows;
  });
  rep.notes.push_back(std::string("signs evaluated with ") +
                      hecke::to_string(hecke::SignConvention::prime_factors_of_D));
  return rep;
}

Report normalized_degree(const RunConfig& c, const MRange& r, MemoPool&) {
  std::vector<std::pair<std::int64_t, std::int64_t>> specs;
  for (std::int64_t D = 1; D <= 30; ++D) {
    if (!is_squarefree(D) || omega(D) % 2 != 0) continue;
    for (std::int64_t N = 1; N <= 10; ++N) {
      if (std::gcd(D, N) == 1) specs.emplace_back(D, N);
    }
  }
  Report rep{"normalized-degree", "r_{D,N}(m) = -2/vol(X_0^D(N)) deg T_{D,N}(m)", {}, {}};
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned) {
    std::vector<ReportRow> rows;
    for (const auto& [D, N] : specs) {
      const Rational lhs = Rational(-2) * hecke::deg_T_closed(D, N, m) / hecke::vol_X(D, N);
      rows.push_back(make_row({{"D", str(D)}, {"N", str(N)}, {"m", str(m)}},
                              hecke::r_DN_closed(D, N, m, hecke::SignConvention::prime_factors_of_D).str(), lhs.str()));
    }
    return rows;
  });
  rep.notes.push_back(std::string("r_{D,N} evaluated with ") +
                      hecke::to_string(hecke::SignConvention::prime_factors_of_D));
  return rep;
}

Report assembly(const RunConfig& c, const MRange& r, MemoPool& memos) {
  static const std::vector<std::pair<std::int64_t, std::int64_t>> specs = {
      {1, 1}, {1, 2}, {1, 6}, {2, 1}, {2, 3}, {3, 1}, {6, 1}, {6, 5}, {30, 1}};
  Report rep{"assembly",
             "-4 pi^2 m prod_p W_{m,p} and -4 pi sqrt(2m) zeta_8 prod_p W_{m,p} with zeta(2) = pi^2/6 and "
             "L(1, chi_d) = 2 pi h/(w sqrt|d|)",
             {}, {}};
  auto attempt = [](auto&& f) -> std::string {
    try {
      const eisenstein::Assembly a = f();
      return a.value.str();
    } catch (const IncompleteCancellation& e) {
      return std::string("incomplete: ") + e.what();
    }
  };
  rep.rows = rows_by_m(r, c.parallelism, [&](std::int64_t m, unsigned w) {
    std::vector<ReportRow> rows;
    for (const auto& [D, N] : specs) {
      rows.push_back(make_row({{"kind", "weight2"}, {"D", str(D)}, {"N", str(N)}, {"m", str(m)}},
                              hecke::r_DN_closed(D, N, m, hecke::SignConvention::prime_factors_of_D).str(),
                              attempt([&] { return eisenstein::assemble_weight2_detailed(D, N, m); })));
    }
    rows.push_back(make_row({{"kind", "weight32"}, {"D", "-"}, {"N", "-"}, {"m", str(m)}},
                            Rational(repnum::r3_closed(m, &memos.worker(w))).str(),
                            attempt([&] { return eisenstein::assemble_weight32_detailed(m, &memos.worker(w)); })));
    rows.push_back(make_row({{"kind", "foursquares"}, {"D", "-"}, {"N", "-"}, {"m", str(m)}},
                            Rational(repnum::r4_closed(m)).str(),
                            attempt([&] { return eisenstein::assemble_foursquares_detailed(m); })));
    return rows;
  });
  return rep;
}

Report siegel_weil(const RunConfig& c, const MRange& r, MemoPool&) {
  using eisenstein::GenusOneLattice;
  std::vector<GenusOneLattice> lattices;
  if (!c.params.lattice) {
    lattices = {GenusOneLattice::sum_of_three_squares, GenusOneLattice::sum_of_four_squares, GenusOneLattice::hurwitz};
  } else if (*c.params.lattice == "sum-of-3-squares") {
    lattices = {GenusOneLattice::sum_of_three_squares};
  } else if (*c.params.lattice == "sum-of-4-squares") {
    lattices = {GenusOneLattice::sum_of_four_squares};
  } else if (*c.params.lattice == "hurwitz") {
    lattices = {GenusOneLattice::hurwitz};
  } else {
    throw InvalidInput("--lattice must be sum-of-3-squares, sum-of-4-squares or hurwitz");
  }
  Report out;
  for (GenusOneLattice l : lattices) {
    Report part = eisenstein::siegel_weil_report(l, r.lo, r.hi, c.parallelism);
    out.paper_ref = part.paper_ref;
    for (auto& row : part.rows) out.rows.push_back(std::move(row));
  }
  out.suite = lattices.size() == 1 ? std::string("siegel-weil/") + eisenstein::to_string(lattices.front())
                                   : "siegel-weil";
  return out;
}

using SuiteFn = Report (*)(const RunConfig&, const MRange&, MemoPool&);

const std::vector<std::pair<std::string, std::pair<SuiteFn, MRange>>>& registry() {
  static const std::vector<std::pair<std::string, std::pair<SuiteFn, MRange>>> table = {
      {"four-squares", {four_squares, {1, 10000}}},
      {"three-squares", {three_squares, {1, 10000}}},
      {"hz", {hz, {1, 5000}}},
      {"hardy", {hardy, {1, 200}}},
      {"rho", {rho, {1, 100}}},
      {"hecke-degree", {hecke_degree, {1, 100}}},
      {"hurwitz", {hurwitz, {1, 500}}},
      {"recurrence", {recurrence, {1, 30}}},
      {"normalized-degree", {normalized_degree, {1, 50}}},
      {"assembly", {assembly, {1, 1000}}},
      {"siegel-weil", {siegel_weil, {1, 100}}},
  };
  return table;
}

}  // namespace

MemoPool::MemoPool(const MemoTables::Table* base, unsigned workers) : base_(base) {
  for (unsigned i = 0; i < std::max(1u, workers); ++i) memos_.emplace_back(base);
}

MemoTables::Table MemoPool::merged() const {
  MemoTables::Table out = base_ ? *base_ : MemoTables::Table{};
  for (const auto& m : memos_) out.insert(m.additions().begin(), m.additions().end());
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.first);
    return v;
  }();
  return names;
}

MRange default_m_range(const std::string& suite) {
  for (const auto& e : registry()) {
    if (e.first == suite) return e.second.second;
  }
  throw InvalidInput("unknown suite '" + suite + "'");
}

Report run_suite(const RunConfig& config, MemoPool& memos) {
  for (const auto& e : registry()) {
    if (e.first != config.params.suite) continue;
    const MRange range = config.m_range.value_or(e.second.second);
    if (range.lo < 1 || range.hi < range.lo) throw InvalidInput("--m must be a nonempty range of positive integers");
    return e.second.first(config, range, memos);
  }
  throw InvalidInput("unknown suite '" + config.params.suite + "'");
}

}  // namespace qrep::cli
