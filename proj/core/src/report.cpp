#include "qrep/report.hpp"

#include <algorithm>

namespace qrep {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; }));
}

}  // namespace qrep
