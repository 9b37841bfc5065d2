#include "terracini/report.hpp"

#include <json.hpp>
#include <sstream>

#include "terracini/version.hpp"

namespace terracini {

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "tsv") return ReportFormat::kTsv;
  if (name == "json") return ReportFormat::kJson;
  return std::nullopt;
}

RowRecord to_record(const SweepRow& row, const TrialConfig& config) {
  RowRecord rec;
  rec.d = row.d;
  rec.m = row.m;
  rec.h = row.h;
  rec.predicted = to_string(row.predicted);
  rec.agreement = to_string(row.agreement);
  rec.prime = config.prime;
  rec.seed = config.seed;
  rec.trials = config.trials;
  rec.error = row.error;
  if (row.analysis) {
    rec.ambient = row.analysis->spec.ambient_dim();
    rec.expdim = row.analysis->expected_dim;
    rec.dim = row.analysis->dim;
    rec.defect = row.analysis->defect;
    if (!row.analysis->spec.uniform_orders()) rec.m.reset();
  }
  return rec;
}

namespace {

constexpr std::string_view kTsvHeader =
    "d\tm\th\tambient\texpdim\tdim\tdefect\tpredicted\tagreement\tprime\tseed\ttrials";

void append_tsv_row(std::ostringstream& out, const RowRecord& r) {
  out << r.d << '\t';
  if (r.m)
    out << *r.m;
  else
    out << '-';
  out << '\t' << r.h << '\t';
  if (r.error.empty()) {
    out << r.ambient << '\t' << r.expdim << '\t' << r.dim << '\t' << r.defect << '\t'
        << r.predicted;
  } else {
    out << "-\t-\t-\t-\terror";
  }
  out << '\t' << r.agreement << '\t' << r.prime << '\t' << r.seed << '\t' << r.trials
      << '\n';
}

nlohmann::json json_row(const RowRecord& r) {
  nlohmann::json j;
  j["d"] = r.d;
  if (r.m)
    j["m"] = *r.m;
  else
    j["m"] = nullptr;
  j["h"] = r.h;
  j["predicted"] = r.predicted;
  if (r.error.empty()) {
    j["ambient"] = r.ambient;
    j["expdim"] = r.expdim;
    j["dim"] = r.dim;
    j["defect"] = r.defect;
  } else {
    j["error"] = r.error;
  }
  j["agreement"] = r.agreement;
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  return j;
}

}  // namespace

std::string emit_report(const std::vector<RowRecord>& rows, ReportFormat format,
                        const TrialConfig& config) {
  if (format == ReportFormat::kTsv) {
    std::ostringstream out;
    out << kTsvHeader << '\n';
    for (const RowRecord& r : rows) append_tsv_row(out, r);
    return out.str();
  }
  nlohmann::json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["config"] = {{"prime", config.prime}, {"seed", config.seed}, {"trials", config.trials}};
  j["rows"] = nlohmann::json::array();
  for (const RowRecord& r : rows) j["rows"].push_back(json_row(r));
  return j.dump(2) + "\n";
}

std::string emit_report(const std::vector<SweepRow>& rows, ReportFormat format,
                        const TrialConfig& config) {
  std::vector<RowRecord> records;
  records.reserve(rows.size());
  for (const SweepRow& row : rows) records.push_back(to_record(row, config));
  return emit_report(records, format, config);
}

std::vector<RowRecord> parse_report_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::vector<RowRecord> out;
  for (const nlohmann::json& jr : j.at("rows")) {
    RowRecord r;
    r.d = jr.at("d").get<int>();
    if (!jr.at("m").is_null()) r.m = jr.at("m").get<int>();
    r.h = jr.at("h").get<int>();
    r.predicted = jr.at("predicted").get<std::string>();
    if (jr.contains("error")) {
      r.error = jr.at("error").get<std::string>();
    } else {
      r.ambient = jr.at("ambient").get<std::int64_t>();
      r.expdim = jr.at("expdim").get<std::int64_t>();
      r.dim = jr.at("dim").get<std::int64_t>();
      r.defect = jr.at("defect").get<std::int64_t>();
    }
    r.agreement = jr.at("agreement").get<std::string>();
    r.prime = jr.at("prime").get<std::uint64_t>();
    r.seed = jr.at("seed").get<std::uint64_t>();
    r.trials = jr.at("trials").get<int>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace terracini
