#include "qrep_cli/output.hpp"

#include <charconv>

namespace qrep::cli {
namespace {

// Integers travel as JSON numbers; everything else (rationals as "num/den")
// stays a string.
Json scalar(const std::string& text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec == std::errc() && ptr == end && !text.empty()) return v;
  return text;
}

std::string plain(const Json& cell) { return cell.is_string() ? cell.get<std::string>() : cell.dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
  out << "\n";
}

void md_line(const std::vector<std::string>& cells, std::ostream& out) {
  out << "|";
  for (const auto& c : cells) out << " " << c << " |";
  out << "\n";
}

void md_rule(std::size_t n, std::ostream& out) {
  out << "|";
  for (std::size_t i = 0; i < n; ++i) out << "---|";
  out << "\n";
}

std::vector<std::string> report_columns(const Report& report) {
  std::vector<std::string> cols;
  if (!report.rows.empty()) {
    for (const auto& [k, v] : report.rows.front().inputs) cols.push_back(k);
  }
  cols.insert(cols.end(), {"expected", "actual", "pass"});
  return cols;
}

std::vector<std::string> report_cells(const ReportRow& row) {
  std::vector<std::string> cells;
  for (const auto& [k, v] : row.inputs) cells.push_back(v);
  cells.insert(cells.end(), {row.expected, row.actual, row.pass ? "true" : "false"});
  return cells;
}

}  // namespace

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::json: {
      Json doc;
      doc["command"] = table.command;
      doc["params"] = table.params;
      doc["columns"] = table.columns;
      Json rows = Json::array();
      for (const auto& r : table.rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = r[i];
        rows.push_back(std::move(obj));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: {
      csv_line(table.columns, out);
      for (const auto& r : table.rows) {
        std::vector<std::string> cells;
        for (const auto& c : r) cells.push_back(plain(c));
        csv_line(cells, out);
      }
      break;
    }
    case OutputFormat::markdown: {
      md_line(table.columns, out);
      md_rule(table.columns.size(), out);
      for (const auto& r : table.rows) {
        std::vector<std::string> cells;
        for (const auto& c : r) cells.push_back(plain(c));
        md_line(cells, out);
      }
      break;
    }
  }
}

Json report_to_json(const Report& report) {
  Json doc;
  doc["suite"] = report.suite;
  doc["paper_ref"] = report.paper_ref;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json inputs = Json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = scalar(v);
    rows.push_back({{"inputs", std::move(inputs)}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
  }
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"pass", report.passed()}, {"fail", report.failed()}};
  if (!report.notes.empty()) doc["notes"] = report.notes;
  return doc;
}

void write_report(const Report& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::json: out << report_to_json(report).dump(2) << "\n"; break;
    case OutputFormat::csv:
      csv_line(report_columns(report), out);
      for (const auto& r : report.rows) csv_line(report_cells(r), out);
      break;
    case OutputFormat::markdown: {
      out << "### " << report.suite << "\n\n" << "`" << report.paper_ref << "`\n\n";
      const auto cols = report_columns(report);
      md_line(cols, out);
      md_rule(cols.size(), out);
      for (const auto& r : report.rows) md_line(report_cells(r), out);
      out << "\npass " << report.passed() << ", fail " << report.failed() << "\n";
      for (const auto& n : report.notes) out << "\n- " << n;
      if (!report.notes.empty()) out << "\n";
      break;
    }
  }
}

}  // namespace qrep::cli
