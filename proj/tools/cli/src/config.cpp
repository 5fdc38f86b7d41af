#include "qrep_cli/config.hpp"

#include <charconv>
#include <string>

#include "qrep/errors.hpp"

namespace qrep::cli {
namespace {

std::int64_t parse_bound(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput("--m: '" + std::string(s) + "' is not an integer");
  }
  return v;
}

}  // namespace

MRange parse_m_range(std::string_view text) {
  MRange r;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    r.lo = parse_bound(text.substr(0, dots));
    r.hi = parse_bound(text.substr(dots + 2));
  } else {
    r.lo = r.hi = parse_bound(text);
  }
  if (r.lo < 1) throw InvalidInput("--m: values must be positive");
  if (r.hi < r.lo) throw InvalidInput("--m: empty range");
  return r;
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::rep: return "rep";
    case Command::whittaker: return "whittaker";
    case Command::singular: return "singular";
    case Command::hecke: return "hecke";
    case Command::verify: return "verify";
  }
  return "?";
}

}  // namespace qrep::cli
