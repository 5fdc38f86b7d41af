#include "qrep_cli/cache.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qrep/errors.hpp"

namespace qrep::cli {
namespace {

std::int64_t parse_int(std::string_view s, const std::string& where) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidInput(where + ": expected a decimal integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

MemoTables::Table load_cache(const std::string& path) {
  MemoTables::Table table;
  std::ifstream in(path);
  if (!in) {
    if (std::filesystem::exists(path)) throw InvalidInput("cache: cannot read " + path);
    return table;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw InvalidInput(where + ": missing tab");
    const std::string_view view(line);
    const std::int64_t key = parse_int(view.substr(0, tab), where);
    const std::int64_t value = parse_int(view.substr(tab + 1), where);
    if (!table.emplace(key, value).second) throw InvalidInput(where + ": duplicate key");
  }
  validate_memo_table(table);
  return table;
}

void save_cache(const std::string& path, const MemoTables::Table& table) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InvalidInput("cache: cannot write " + tmp);
    for (const auto& [k, v] : table) out << k << '\t' << v << '\n';
    if (!out) throw InvalidInput("cache: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qrep::cli
