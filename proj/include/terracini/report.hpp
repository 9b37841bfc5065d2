#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "terracini/classifier.hpp"

namespace terracini {

enum class ReportFormat { kTsv, kJson };

[[nodiscard]] std::optional<ReportFormat> parse_format(std::string_view name);

// One serialized report line. m is absent for joins whose orders are not all
// equal (they have no single order to put in the column); error is non-empty
// for cells that failed, and then the numeric fields are meaningless and are
// serialized as "-" in TSV / omitted in JSON.
struct RowRecord {
  int d = 0;
  std::optional<int> m;
  int h = 0;
  std::int64_t ambient = 0;
  std::int64_t expdim = 0;
  std::int64_t dim = 0;
  std::int64_t defect = 0;
  std::string predicted;
  std::string agreement;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string error;

  [[nodiscard]] bool operator==(const RowRecord& other) const = default;
};

// The prime/seed/trials columns echo the master config of the run, not the
// per-cell sub-seeds.
[[nodiscard]] RowRecord to_record(const SweepRow& row, const TrialConfig& config);

[[nodiscard]] std::string emit_report(const std::vector<RowRecord>& rows,
                                      ReportFormat format, const TrialConfig& config);

[[nodiscard]] std::string emit_report(const std::vector<SweepRow>& rows,
                                      ReportFormat format, const TrialConfig& config);

// Inverse of the JSON emitter, for round-tripping reports.
[[nodiscard]] std::vector<RowRecord> parse_report_json(const std::string& text);

}  // namespace terracini
