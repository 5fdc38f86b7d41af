#include "qrep_cli/cli.hpp"

#include <cstdio>
#include <sstream>

#include "CLI11.hpp"
#include "qrep/arith.hpp"
#include "qrep/errors.hpp"
#include "qrep/hecke.hpp"
#include "qrep/lattice.hpp"
#include "qrep/parallel.hpp"
#include "qrep/repnum.hpp"
#include "qrep/singular.hpp"
#include "qrep/whittaker.hpp"
#include "qrep_cli/cache.hpp"
#include "qrep_cli/output.hpp"
#include "qrep_cli/suites.hpp"

namespace qrep::cli {
namespace {

struct HelpRequested {
  std::string text;
  int code;
};

struct CommonFlags {
  std::string m;
  std::string format = "json";
  unsigned parallel = 1;
  std::string cache;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--m", flags.m, "m or lo..hi (inclusive)");
  sub->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  sub->add_option("--parallel", flags.parallel, "worker threads")->check(CLI::Range(1u, 1024u));
  sub->add_option("--cache", flags.cache, "key<TAB>value memo file for class numbers and factorizations");
}

GramLattice named_lattice(const std::string& name) {
  if (name == "sum-of-3-squares") return GramLattice::sum_of_squares(3);
  if (name == "sum-of-4-squares") return GramLattice::sum_of_squares(4);
  if (name == "lipschitz") return GramLattice::lipschitz();
  if (name == "hurwitz") return GramLattice::hurwitz();
  throw InvalidInput("unknown lattice '" + name + "'");
}

std::string fixed(double v, int digits) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

const MRange& require_range(const RunConfig& c) {
  if (!c.m_range) throw InvalidInput(std::string(to_string(c.command)) + ": --m is required");
  return *c.m_range;
}

std::uint64_t require_prime(const RunConfig& c) {
  if (!c.params.p) throw InvalidInput("--p is required");
  if (*c.params.p < 2 || !is_prime(static_cast<std::uint64_t>(*c.params.p))) throw InvalidInput("--p must be prime");
  return static_cast<std::uint64_t>(*c.params.p);
}

template <class F>
std::vector<std::vector<Json>> rows_by_m(const RunConfig& c, const MRange& r, F&& f) {
  return parallel_map<std::vector<Json>>(r.size(), c.parallelism, [&](std::size_t i, unsigned w) {
    return f(r.lo + static_cast<std::int64_t>(i), w);
  });
}

Table rep_table(const RunConfig& c, MemoPool& memos) {
  const MRange& r = require_range(c);
  Table t;
  t.command = "rep";
  const auto& p = c.params;
  const int chosen = (p.squares ? 1 : 0) + (p.order ? 1 : 0) + (p.closed ? 1 : 0);
  if (chosen != 1) throw InvalidInput("rep: choose exactly one of --squares, --order, --closed");
  if (p.squares || p.order) {
    std::vector<std::uint64_t> counts;
    if (p.squares) {
      t.params["squares"] = *p.squares;
      counts = repnum::count_squares_upto(*p.squares, r.hi, c.parallelism);
    } else {
      t.params["order"] = *p.order;
      if (*p.order != "lipschitz" && *p.order != "hurwitz") throw InvalidInput("--order must be lipschitz or hurwitz");
      counts = repnum::count_order_upto(named_lattice(*p.order), r.hi, c.parallelism);
    }
    t.columns = {"m", "count"};
    for (std::int64_t m = r.lo; m <= r.hi; ++m) t.rows.push_back({m, counts[static_cast<std::size_t>(m)]});
    return t;
  }
  t.params["closed"] = *p.closed;
  t.columns = {"m", "value"};
  if (*p.closed != "r3" && *p.closed != "r4") throw InvalidInput("--closed must be r3 or r4");
  const bool three = *p.closed == "r3";
  t.rows = rows_by_m(c, r, [&](std::int64_t m, unsigned w) {
    const BigInt v = three ? repnum::r3_closed(m, &memos.worker(w)) : repnum::r4_closed(m);
    return std::vector<Json>{m, qrep::to_string(v)};
  });
  return t;
}

Table whittaker_table(const RunConfig& c) {
  const MRange& r = require_range(c);
  const std::uint64_t p = require_prime(c);
  const std::string& kind = c.params.local_case;
  Table t;
  t.command = "whittaker";
  t.params["case"] = kind;
  t.params["p"] = p;
  t.columns = {"m", "p", "ord_p_m", "value"};
  std::optional<GramLattice> lattice;
  if (kind == "density") {
    if (!c.params.lattice) throw InvalidInput("whittaker --case density needs --lattice");
    lattice = named_lattice(*c.params.lattice);
    t.params["lattice"] = *c.params.lattice;
  } else if (c.params.lattice) {
    throw InvalidInput("--lattice only applies to --case density");
  }
  if (kind == "foursquares-two" && p != 2) throw InvalidInput("--case foursquares-two needs --p 2");
  static const std::vector<std::string> known = {"split-unramified", "split-N", "ramified-D", "matching",
                                                 "weight32", "foursquares-two", "density"};
  if (std::find(known.begin(), known.end(), kind) == known.end()) throw InvalidInput("unknown --case '" + kind + "'");
  t.rows = rows_by_m(c, r, [&](std::int64_t m, unsigned) {
    const unsigned e = ord_p(m, p);
    Rational v;
    if (kind == "split-unramified") v = whittaker::w2_split_unramified(p, e);
    else if (kind == "split-N") v = whittaker::w2_split_N(p, e);
    else if (kind == "ramified-D") v = whittaker::w2_ramified_D(p, e);
    else if (kind == "matching") v = whittaker::ramified_matching_combination(p, e);
    else if (kind == "weight32") v = p == 2 ? whittaker::w32_two_normalized(m) : whittaker::w32_odd(p, m);
    else if (kind == "foursquares-two") v = whittaker::w2_two_foursquares_normalized(m);
    else v = whittaker::density_oracle(*lattice, p, m, whittaker::density_precision(*lattice, p, m));
    return std::vector<Json>{m, p, e, v.str()};
  });
  return t;
}

Table singular_table(const RunConfig& c) {
  const MRange& r = require_range(c);
  const auto& p = c.params;
  if (!p.s || (*p.s != 3 && *p.s != 4)) throw InvalidInput("singular: --s 3 or --s 4 is required");
  const int s = *p.s;
  std::vector<singular::OracleCache> caches(c.parallelism);
  Table t;
  t.command = "singular";
  t.params["s"] = s;
  if (p.rho) {
    singular::SeriesOptions options;
    options.oracle_prime_limit = static_cast<std::uint64_t>(p.pmax);
    t.params["cut"] = p.cut;
    t.columns = {"m", "rho"};
    t.rows = rows_by_m(c, r, [&](std::int64_t m, unsigned w) {
      return std::vector<Json>{m, fixed(singular::rho_s(m, s, p.cut, caches[w], options), 6)};
    });
    return t;
  }
  if (p.gauss_k) {
    const std::uint64_t k = *p.gauss_k;
    t.params["k"] = k;
    t.columns = {"m", "A_k"};
    const singular::GaussSumTable table(k, s);
    t.rows = rows_by_m(c, r, [&](std::int64_t m, unsigned) { return std::vector<Json>{m, fixed(table.A(m), 12)}; });
    return t;
  }
  const std::uint64_t prime = require_prime(c);
  t.params["p"] = prime;
  t.columns = {"m", "S_p", "terms"};
  t.rows = rows_by_m(c, r, [&](std::int64_t m, unsigned w) {
    const auto f = singular::S_p_detailed(prime, m, s, caches[w]);
    return std::vector<Json>{m, f.value.str(), f.terms};
  });
  return t;
}

Table hecke_table(const RunConfig& c) {
  const auto& p = c.params;
  const int chosen = (p.degree ? 1 : 0) + (p.rdn ? 1 : 0) + (p.volume ? 1 : 0) + (p.cosets ? 1 : 0);
  if (chosen != 1) throw InvalidInput("hecke: choose exactly one of --degree, --rdn, --volume, --cosets");
  hecke::EichlerSpec::make(p.D, p.N);
  Table t;
  t.command = "hecke";
  t.params["D"] = p.D;
  t.params["N"] = p.N;
  if (p.volume) {
    t.columns = {"D", "N", "vol"};
    t.rows.push_back({p.D, p.N, hecke::vol_X(p.D, p.N).str()});
    return t;
  }
  const MRange& r = require_range(c);
  if (p.degree) {
    t.columns = {"m", "deg"};
    t.rows = rows_by_m(c, r, [&](std::int64_t m, unsigned) {
      return std::vector<Json>{m, hecke::deg_T_closed(p.D, p.N, m).str()};
    });
  } else if (p.rdn) {
    t.columns = {"m", "r_k_on_D", "r_k_on_m"};
    t.rows = rows_by_m(c, r, [&](std::int64_t m, unsigned) {
      return std::vector<Json>{m, hecke::r_DN_closed(p.D, p.N, m, hecke::SignConvention::prime_factors_of_D).str(),
                               hecke::r_DN_closed(p.D, p.N, m, hecke::SignConvention::prime_factors_of_m).str()};
    });
  } else {
    if (p.D != 1) throw InvalidInput("hecke --cosets is defined for D = 1");
    t.columns = {"m", "cosets"};
    t.rows = rows_by_m(c, r, [&](std::int64_t m, unsigned) {
      return std::vector<Json>{m, hecke::coset_oracle(p.N, m)};
    });
  }
  return t;
}

constexpr const char* kRepFooter =
    "CSV columns: m,count (--squares, --order) or m,value (--closed).";
constexpr const char* kWhittakerFooter =
    "Cases: split-unramified, split-N, ramified-D, matching, weight32, foursquares-two, density.\n"
    "CSV columns: m,p,ord_p_m,value.";
constexpr const char* kSingularFooter =
    "CSV columns: m,S_p,terms (local factor), m,rho (--rho), m,A_k (--gauss-k).";
constexpr const char* kHeckeFooter =
    "CSV columns: m,deg (--degree), m,r_k_on_D,r_k_on_m (--rdn), D,N,vol (--volume), m,cosets (--cosets).";
constexpr const char* kVerifyFooter =
    "CSV columns: the suite's input keys, then expected,actual,pass.\n"
    "Exit status 1 when any row fails.";

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Representation numbers, local densities, singular series and Hecke degrees", "qrep"};
  app.require_subcommand(1);
  RunConfig config;
  CommonFlags flags;
  auto& p = config.params;

  auto* rep = app.add_subcommand("rep", "lattice point counts and closed formulas");
  rep->add_option("--squares", p.squares, "sum of k squares, k = 3 or 4")->check(CLI::IsMember({3, 4}));
  rep->add_option("--order", p.order, "quaternion order: lipschitz or hurwitz");
  rep->add_option("--closed", p.closed, "closed formula: r3 or r4");
  rep->footer(kRepFooter);

  auto* wh = app.add_subcommand("whittaker", "local Whittaker values and density oracle");
  wh->add_option("--case", p.local_case, "local case");
  wh->add_option("--p", p.p, "prime");
  wh->add_option("--lattice", p.lattice, "lattice for --case density");
  wh->footer(kWhittakerFooter);

  auto* sg = app.add_subcommand("singular", "singular series local factors and rho_s");
  sg->add_option("--s", p.s, "number of squares, 3 or 4");
  sg->add_option("--p", p.p, "prime for the local factor S_p");
  sg->add_flag("--rho", p.rho, "truncated product rho_s(m)");
  sg->add_option("--cut", p.cut, "prime cut for --rho");
  sg->add_option("--pmax", p.pmax, "s = 4: largest prime evaluated by Gauss sums in --rho");
  sg->add_option("--gauss-k", p.gauss_k, "print A_k(m) from the Gauss-sum oracle");
  sg->footer(kSingularFooter);

  auto* hk = app.add_subcommand("hecke", "r_{D,N}(m), deg T_{D,N}(m), volume, coset counts");
  hk->add_flag("--degree", p.degree, "deg T_{D,N}(m)");
  hk->add_flag("--rdn", p.rdn, "r_{D,N}(m) under both sign conventions");
  hk->add_flag("--volume", p.volume, "vol(X_0^D(N))");
  hk->add_flag("--cosets", p.cosets, "coset count K(N, m) for D = 1");
  hk->add_option("--D", p.D, "squarefree D");
  hk->add_option("--N", p.N, "level N");
  hk->footer(kHeckeFooter);

  auto* vf = app.add_subcommand("verify", "verification suites");
  vf->add_option("--suite", p.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  vf->add_option("--s", p.s, "hardy, rho: restrict to s = 3 or 4");
  vf->add_option("--pmax", p.pmax, "hardy: largest prime; rho: largest Gauss-sum prime for s = 4");
  vf->add_option("--cut", p.cut, "rho: prime cut");
  vf->add_option("--density-pmax", p.density_pmax, "hardy: largest prime for density rows");
  vf->add_option("--density-mmax", p.density_mmax, "hardy: largest m for density rows");
  vf->add_option("--levels", p.levels, "hecke-degree: levels N")->delimiter(',');
  vf->add_option("--lattice", p.lattice, "siegel-weil: sum-of-3-squares, sum-of-4-squares or hurwitz");
  vf->footer(kVerifyFooter);

  for (auto* sub : {rep, wh, sg, hk, vf}) add_common(sub, flags);

  std::vector<const char*> argv{"qrep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream text;
    const int code = app.exit(e, text, text);
    throw HelpRequested{text.str(), code};
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream text;
    const int code = app.exit(e, text, text);
    throw HelpRequested{text.str(), code};
  } catch (const CLI::ParseError& e) {
    throw InvalidInput(e.what());
  }

  if (rep->parsed()) config.command = Command::rep;
  if (wh->parsed()) config.command = Command::whittaker;
  if (sg->parsed()) config.command = Command::singular;
  if (hk->parsed()) config.command = Command::hecke;
  if (vf->parsed()) config.command = Command::verify;
  if (!flags.m.empty()) config.m_range = parse_m_range(flags.m);
  config.output_format = flags.format == "csv"        ? OutputFormat::csv
                         : flags.format == "markdown" ? OutputFormat::markdown
                                                      : OutputFormat::json;
  config.parallelism = flags.parallel;
  if (!flags.cache.empty()) config.cache_path = flags.cache;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.parallelism < 1) throw InvalidInput("parallelism must be at least 1");
    MemoTables::Table base;
    if (config.cache_path) base = load_cache(*config.cache_path);
    MemoPool memos(&base, config.parallelism);
    std::ostringstream buffer;
    int code = kExitOk;
    switch (config.command) {
      case Command::rep: write_table(rep_table(config, memos), config.output_format, buffer); break;
      case Command::whittaker: write_table(whittaker_table(config), config.output_format, buffer); break;
      case Command::singular: write_table(singular_table(config), config.output_format, buffer); break;
      case Command::hecke: write_table(hecke_table(config), config.output_format, buffer); break;
      case Command::verify: {
        const Report report = run_suite(config, memos);
        write_report(report, config.output_format, buffer);
        if (!report.ok()) {
          code = kExitVerificationFailed;
          err << "qrep: " << report.failed() << " of " << report.rows.size() << " rows failed in suite "
              << report.suite << "\n";
        }
        break;
      }
    }
    out << buffer.str();
    if (config.cache_path) save_cache(*config.cache_path, memos.merged());
    return code;
  } catch (const InvalidInput& e) {
    err << "qrep: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const WorkBoundExceeded& e) {
    err << "qrep: work bound exceeded: " << e.what() << "\n";
    return kExitWorkBound;
  } catch (const NumericalCheckFailed& e) {
    err << "qrep: numerical check failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const IncompleteCancellation& e) {
    err << "qrep: incomplete cancellation: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return h.code == 0 ? kExitOk : kExitInvalidInput;
  } catch (const InvalidInput& e) {
    err << "qrep: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return run(config, out, err);
}

}  // namespace qrep::cli
