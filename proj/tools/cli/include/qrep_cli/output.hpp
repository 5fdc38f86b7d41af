#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qrep/report.hpp"
#include "qrep_cli/config.hpp"

namespace qrep::cli {

using Json = nlohmann::ordered_json;

// Result of a compute command: fixed columns, one row per input.
struct Table {
  std::string command;
  Json params = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

void write_table(const Table& table, OutputFormat format, std::ostream& out);
void write_report(const Report& report, OutputFormat format, std::ostream& out);

Json report_to_json(const Report& report);

}  // namespace qrep::cli
