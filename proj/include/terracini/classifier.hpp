#pragma once

#include <optional>
#include <string>
#include <vector>

#include "terracini/config.hpp"
#include "terracini/join.hpp"

namespace terracini {

enum class Verdict { kDefective, kNonDefective, kUnclassified };

// Which of the two parameter-count regimes the defective window lives in:
// kFormer when the ambient coordinate count is at most the tangent-frame row
// count (the join could fill the ambient space), kLatter when it is at least
// that count (the parameter count is the binding side). At equality both
// case lists are consulted, kFormer first.
enum class Regime { kFormer, kLatter };

struct PredictedStatus {
  Verdict verdict = Verdict::kUnclassified;
  Regime regime = Regime::kFormer;  // meaningful only when kDefective
  char case_label = 0;              // 'a'..'f' defective, 'a'..'g' non-defective
};

// Closed-form classification of Sec_h(T(m, V_{2,d})): defective windows and
// the non-defectivity criterion (the latter established only for m <= 18;
// outside that range nothing is claimed and cells fall back to
// kUnclassified). Throws std::domain_error unless d, m, h >= 1.
[[nodiscard]] PredictedStatus predicted_status(int d, int m, int h);

// "defective:former:a", "nondefective:g", "unclassified".
[[nodiscard]] std::string to_string(const PredictedStatus& status);

enum class Agreement { kMatch, kMismatch, kNotApplicable };

[[nodiscard]] std::string to_string(Agreement agreement);

// Mismatch iff the prediction and the computed defect disagree; unclassified
// cells are kNotApplicable.
[[nodiscard]] Agreement classify_agreement(const PredictedStatus& predicted,
                                           Eigen::Index defect);

struct SweepRow {
  int d = 0;
  int m = 0;
  int h = 0;
  PredictedStatus predicted;
  std::optional<JoinAnalysis> analysis;  // absent when error is set
  Agreement agreement = Agreement::kNotApplicable;
  std::string error;  // non-empty if this cell failed
};

struct SweepRange {
  int lo;
  int hi;  // inclusive; lo > hi yields no cells
};

// Evaluates every (d, m, h) cell of the cube in lexicographic order. Each
// cell runs under a sub-seed derived from (seed, d, m, h), so its row is
// identical whether computed alone or inside any enclosing sweep. A cell
// that throws becomes a row with the error field set instead of aborting
// the sweep.
[[nodiscard]] std::vector<SweepRow> sweep(SweepRange d_range, SweepRange m_range,
                                          SweepRange h_range, const TrialConfig& config);

// The single cell (d, m, h) exactly as sweep would produce it.
[[nodiscard]] SweepRow sweep_cell(int d, int m, int h, const TrialConfig& config);

}  // namespace terracini
