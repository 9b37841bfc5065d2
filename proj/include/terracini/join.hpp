#pragma once

#include <cstdint>
#include <vector>

#include "terracini/config.hpp"
#include "terracini/matrix.hpp"
#include "terracini/osculating.hpp"

namespace terracini {

// J(m_0, ..., m_h; V_{n,d}): the join of the osculating varieties of orders
// m_i of the degree-d Veronese variety of P^n. With all orders equal to m
// this is the h-secant variety of the order-m osculating variety.
class JoinSpec {
 public:
  JoinSpec(int n, int d, std::vector<int> orders);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] const std::vector<int>& orders() const { return orders_; }
  [[nodiscard]] int h() const { return static_cast<int>(orders_.size()) - 1; }
  [[nodiscard]] Eigen::Index ambient_dim() const;  // C(d+n, n) - 1
  [[nodiscard]] bool uniform_orders() const;

  [[nodiscard]] bool operator==(const JoinSpec& other) const {
    return n_ == other.n_ && d_ == other.d_ && orders_ == other.orders_;
  }

 private:
  int n_;
  int d_;
  std::vector<int> orders_;
};

// min((h+1)n + sum_i C(m_i+n, n) - 1, ambient): the parameter count of the
// join clamped to the ambient projective space.
[[nodiscard]] Eigen::Index expected_join_dim(const JoinSpec& spec);

// Rows spanning the tangent space of the join at a general point of the
// span of general points p_i: per point, the full order-m_i osculating
// frame followed by n weighted rows, the j-th being
//   sum over |I| = m_i of lambda_i[I] * (derivative row of order I + e_j),
// with every weight nonzero. The projective dimension of the join is
// rank(rows) - 1.
struct TerraciniFrame {
  FpMatrix rows;
  std::vector<FpVector> points;
  // One weight per exact-order-m_i multi-index, in the order those indices
  // appear at the tail of multiindices_up_to(n, m_i).
  std::vector<std::vector<std::uint64_t>> lambdas;
  // Order-(m_i + 1) osculating frame per point; the first C(m_i+n, n) rows
  // of upper_frames[i] are the derivative block of point i in rows.
  std::vector<FpMatrix> upper_frames;
};

[[nodiscard]] TerraciniFrame terracini_frame(const JoinSpec& spec,
                                             const std::vector<FpVector>& points,
                                             const PrimeField& field, Rng& rng);

// Everything the randomized evaluation of one join cell yields. Dimensions
// are maximized over config.trials independent samples; random points only
// ever lose rank against general position, so each is a certified lower
// bound that equals the true dimension except with negligible probability.
struct JoinAnalysis {
  JoinSpec spec;
  Eigen::Index expected_dim;
  Eigen::Index dim;
  Eigen::Index defect;          // expected_dim - dim
  Eigen::Index span_dim;        // span of the order-m_i osculating spaces
  Eigen::Index span_expected;   // min(sum C(m_i+n, n) - 1, ambient)
  Eigen::Index delta_span;      // span_expected - span_dim
  Eigen::Index upper_span_dim;  // span of the order-(m_i + 1) osculating spaces
  // The tangent space lay inside the order-(m_i + 1) span in every trial.
  bool tangent_in_upper_span;
  // The order-(m_i + 1) spaces span independently and their count fits the
  // ambient space; that certifies dim == expected_dim.
  bool nondefective_certified;
  // Hypotheses of the tangent-space identity: n = 2, equal orders, the
  // order-m span of expected dimension, and the join deficient.
  bool tangent_check_applies;
  // Under those hypotheses, the tangent space has the same dimension as the
  // order-(m + 1) span (with containment, equality as subspaces).
  bool tangent_spans_equal;
  std::uint64_t prime;
  std::uint64_t seed;
  int trials;
};

[[nodiscard]] JoinAnalysis analyze_join(const JoinSpec& spec, const TrialConfig& config);

struct DimensionReport {
  JoinSpec spec;
  Eigen::Index expected_dim;
  Eigen::Index dim;
  Eigen::Index defect;
  Eigen::Index upper_span_dim;
  bool nondefective_certified;
  bool tangent_check_applies;
  bool tangent_spans_equal;
  std::uint64_t prime;
  std::uint64_t seed;
  int trials;
};

[[nodiscard]] DimensionReport join_dim(const JoinSpec& spec, const TrialConfig& config);

// Upper bound on the join dimension from the deficiency of the order-m_i
// span: dim <= (h+1)n + sum C(m_i+n, n) - 1 - delta_span. Rank arithmetic
// (the tangent rows are the span rows plus (h+1)n more) makes the bound
// unconditional; it is reported as applicable when the deficiency-corrected
// parameter count fits the ambient space, i.e. when it says something a
// dimension count does not.
struct DeficiencyBound {
  bool applicable;
  Eigen::Index span_dim;
  Eigen::Index delta_span;
  Eigen::Index bound;
  bool holds;  // dim <= bound
};

[[nodiscard]] DeficiencyBound span_deficiency_bound(const JoinAnalysis& analysis);
[[nodiscard]] DeficiencyBound span_deficiency_bound(const JoinSpec& spec,
                                                    const TrialConfig& config);

}  // namespace terracini
