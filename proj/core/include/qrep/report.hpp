#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qrep {

struct ReportRow {
  std::vector<std::pair<std::string, std::string>> inputs;  // ordered
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::string paper_ref;  // formula the suite exercises
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;

  std::size_t passed() const;
  std::size_t failed() const { return rows.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

}  // namespace qrep
