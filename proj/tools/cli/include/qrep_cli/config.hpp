#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrep/rational.hpp"

namespace qrep::cli {

enum class Command { rep, whittaker, singular, hecke, verify };
enum class OutputFormat { json, csv, markdown };

struct MRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
  std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
};

// "a..b" or a single integer. Throws InvalidInput.
MRange parse_m_range(std::string_view text);

struct RunParams {
  // rep
  std::optional<int> squares;
  std::optional<std::string> order;   // lipschitz | hurwitz
  std::optional<std::string> closed;  // r3 | r4 | hz
  // whittaker
  std::string local_case = "split-unramified";
  std::optional<std::string> lattice;
  // whittaker, singular
  std::optional<std::int64_t> p;
  std::optional<int> s;
  std::optional<std::uint64_t> gauss_k;
  bool rho = false;
  std::uint64_t cut = 100000;
  // hecke
  std::int64_t D = 1;
  std::int64_t N = 1;
  bool degree = false;
  bool rdn = false;
  bool volume = false;
  bool cosets = false;
  // verify
  std::string suite;
  std::int64_t pmax = 23;
  std::int64_t density_pmax = 7;
  std::int64_t density_mmax = 100;
  std::vector<std::int64_t> levels;
};

struct RunConfig {
  Command command = Command::rep;
  std::optional<MRange> m_range;  // required except for verify, which has per-suite defaults
  RunParams params;
  OutputFormat output_format = OutputFormat::json;
  unsigned parallelism = 1;
  std::optional<std::string> cache_path;
};

std::string_view to_string(Command command);
using qrep::to_string;

}  // namespace qrep::cli
