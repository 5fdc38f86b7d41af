#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qrep_cli/config.hpp"

namespace qrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitWorkBound = 3;

// args excludes the program name. Throws InvalidInput on bad flags.
RunConfig parse_args(const std::vector<std::string>& args);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run, mapping parse failures to kExitInvalidInput and --help
// to kExitOk.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrep::cli
