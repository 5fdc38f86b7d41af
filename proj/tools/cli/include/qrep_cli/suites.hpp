#pragma once

#include <string>
#include <vector>

#include "qrep/memo.hpp"
#include "qrep/report.hpp"
#include "qrep_cli/config.hpp"

namespace qrep::cli {

// One memo per worker over a shared read-only base.
class MemoPool {
 public:
  MemoPool(const MemoTables::Table* base, unsigned workers);
  MemoTables& worker(unsigned index) { return memos_[index]; }
  MemoTables::Table merged() const;

 private:
  const MemoTables::Table* base_;
  std::vector<MemoTables> memos_;
};

const std::vector<std::string>& suite_names();
MRange default_m_range(const std::string& suite);

// Throws InvalidInput for an unknown suite.
Report run_suite(const RunConfig& config, MemoPool& memos);

}  // namespace qrep::cli
