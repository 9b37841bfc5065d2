#include "terracini/classifier.hpp"

#include <stdexcept>

namespace terracini {

namespace {

// Window membership for the defective case lists. Bounds with rational
// endpoints are compared by cross-multiplication, so everything stays in
// exact integer arithmetic. `shift` selects the variant: the lists differ
// only by m+2 (ambient-saturating regime) versus m+1 (parameter-limited
// regime) in the lower endpoints, and by the paired upper endpoints.
char defective_case(int d, int m, int h, Regime regime) {
  const std::int64_t dd = d;
  const std::int64_t mm = m;
  const std::int64_t lo = regime == Regime::kFormer ? mm + 2 : mm + 1;
  const std::int64_t hi_a = regime == Regime::kFormer ? 2 * mm + 2 : 2 * mm;
  const std::int64_t hi_c2 = regime == Regime::kFormer ? 5 * mm + 8 : 5 * mm + 3;
  const std::int64_t hi_e3 = regime == Regime::kFormer ? 8 * mm + 14 : 8 * mm + 6;
  const std::int64_t hi_f6 = regime == Regime::kFormer ? 17 * mm + 32 : 17 * mm + 15;
  switch (h) {
    case 1:
      if (lo <= dd && dd <= hi_a) return 'a';
      break;
    case 2:
      if (3 * lo <= 2 * dd && dd <= hi_a) return 'b';
      break;
    case 4:
      if (2 * lo <= dd && 2 * dd <= hi_c2) return 'c';
      break;
    case 5:
      if (12 * lo <= 5 * dd && 2 * dd <= hi_c2) return 'd';
      break;
    case 6:
      if (21 * lo <= 8 * dd && 3 * dd <= hi_e3) return 'e';
      break;
    case 7:
      if (48 * lo <= 17 * dd && 6 * dd <= hi_f6) return 'f';
      break;
    default:
      break;
  }
  return 0;
}

// Non-defectivity criterion: outside the (closure of the) defective window
// for h in {1,2,4,5,6,7}, and everywhere for h = 3 or h >= 8. Established
// only for m <= 18; the caller enforces that guard.
char nondefective_case(int d, int m, int h) {
  const std::int64_t dd = d;
  const std::int64_t mm = m;
  switch (h) {
    case 1:
      return (dd < mm + 1 || dd > 2 * mm + 2) ? 'a' : 0;
    case 2:
      return (2 * dd < 3 * (mm + 1) || dd > 2 * mm + 2) ? 'b' : 0;
    case 4:
      return (dd < 2 * mm + 2 || 2 * dd > 5 * mm + 8) ? 'c' : 0;
    case 5:
      return (5 * dd < 12 * (mm + 1) || 2 * dd > 5 * mm + 8) ? 'd' : 0;
    case 6:
      return (8 * dd < 21 * (mm + 1) || 3 * dd > 8 * mm + 14) ? 'e' : 0;
    case 7:
      return (17 * dd < 48 * (mm + 1) || 6 * dd > 17 * mm + 32) ? 'f' : 0;
    default:
      return 'g';  // h == 3 or h >= 8
  }
}

}  // namespace

PredictedStatus predicted_status(int d, int m, int h) {
  if (d < 1 || m < 1 || h < 1)
    throw std::domain_error("predicted_status: requires d, m, h >= 1");
  // Ambient coordinate count vs tangent-frame row count, both doubled to
  // stay integral: (d+2)(d+1)/2 vs 2(h+1) + (h+1)(m+2)(m+1)/2.
  const std::int64_t lhs2 = (static_cast<std::int64_t>(d) + 2) * (d + 1);
  const std::int64_t rhs2 =
      4 * (h + 1LL) + (h + 1LL) * (m + 2LL) * (m + 1);

  if (lhs2 <= rhs2) {
    if (const char c = defective_case(d, m, h, Regime::kFormer))
      return PredictedStatus{Verdict::kDefective, Regime::kFormer, c};
  }
  if (lhs2 >= rhs2) {
    if (const char c = defective_case(d, m, h, Regime::kLatter))
      return PredictedStatus{Verdict::kDefective, Regime::kLatter, c};
  }
  if (m <= 18) {
    if (const char c = nondefective_case(d, m, h))
      return PredictedStatus{Verdict::kNonDefective, Regime::kFormer, c};
  }
  return PredictedStatus{};
}

std::string to_string(const PredictedStatus& status) {
  switch (status.verdict) {
    case Verdict::kDefective:
      return std::string("defective:") +
             (status.regime == Regime::kFormer ? "former:" : "latter:") +
             status.case_label;
    case Verdict::kNonDefective:
      return std::string("nondefective:") + status.case_label;
    case Verdict::kUnclassified:
      return "unclassified";
  }
  return "unclassified";
}

std::string to_string(Agreement agreement) {
  switch (agreement) {
    case Agreement::kMatch:
      return "match";
    case Agreement::kMismatch:
      return "mismatch";
    case Agreement::kNotApplicable:
      return "n/a";
  }
  return "n/a";
}

Agreement classify_agreement(const PredictedStatus& predicted, Eigen::Index defect) {
  switch (predicted.verdict) {
    case Verdict::kDefective:
      return defect > 0 ? Agreement::kMatch : Agreement::kMismatch;
    case Verdict::kNonDefective:
      return defect == 0 ? Agreement::kMatch : Agreement::kMismatch;
    case Verdict::kUnclassified:
      return Agreement::kNotApplicable;
  }
  return Agreement::kNotApplicable;
}

SweepRow sweep_cell(int d, int m, int h, const TrialConfig& config) {
  SweepRow row;
  row.d = d;
  row.m = m;
  row.h = h;
  try {
    row.predicted = predicted_status(d, m, h);
    const TrialConfig cell_config{
        config.prime,
        derive_seed(config.seed,
                    {static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(m),
                     static_cast<std::uint64_t>(h)}),
        config.trials};
    const JoinSpec spec(2, d, std::vector<int>(static_cast<std::size_t>(h) + 1, m));
    row.analysis = analyze_join(spec, cell_config);
    row.agreement = classify_agreement(row.predicted, row.analysis->defect);
  } catch (const std::exception& e) {
    row.analysis.reset();
    row.agreement = Agreement::kNotApplicable;
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> sweep(SweepRange d_range, SweepRange m_range, SweepRange h_range,
                            const TrialConfig& config) {
  std::vector<SweepRow> rows;
  for (int d = d_range.lo; d <= d_range.hi; ++d)
    for (int m = m_range.lo; m <= m_range.hi; ++m)
      for (int h = h_range.lo; h <= h_range.hi; ++h) rows.push_back(sweep_cell(d, m, h, config));
  return rows;
}

}  // namespace terracini
