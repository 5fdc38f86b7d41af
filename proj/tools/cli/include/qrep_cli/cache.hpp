#pragma once

#include <string>

#include "qrep/memo.hpp"

namespace qrep::cli {

// Flat key<TAB>value file. A missing file loads as an empty table. Malformed
// lines throw InvalidInput.
MemoTables::Table load_cache(const std::string& path);
// Writes entries sorted by key, replacing the file atomically.
void save_cache(const std::string& path, const MemoTables::Table& table);

}  // namespace qrep::cli
