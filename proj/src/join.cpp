#include "terracini/join.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "terracini/rank.hpp"

namespace terracini {

JoinSpec::JoinSpec(int n, int d, std::vector<int> orders)
    : n_(n), d_(d), orders_(std::move(orders)) {
  if (n_ < 1) throw std::invalid_argument("JoinSpec: n must be >= 1");
  if (d_ < 0) throw std::invalid_argument("JoinSpec: d must be >= 0");
  if (orders_.empty()) throw std::invalid_argument("JoinSpec: at least one order");
  for (int m : orders_)
    if (m < 0) throw std::invalid_argument("JoinSpec: orders must be >= 0");
}

Eigen::Index JoinSpec::ambient_dim() const { return binomial(d_ + n_, n_) - 1; }

bool JoinSpec::uniform_orders() const {
  return std::all_of(orders_.begin(), orders_.end(),
                     [&](int m) { return m == orders_.front(); });
}

Eigen::Index expected_join_dim(const JoinSpec& spec) {
  std::int64_t params = static_cast<std::int64_t>(spec.orders().size()) * spec.n() - 1;
  for (int m : spec.orders()) params += binomial(m + spec.n(), spec.n());
  return std::min<std::int64_t>(params, spec.ambient_dim());
}

namespace {

std::vector<int> key_of(const MultiIndex& alpha) {
  return std::vector<int>(alpha.data(), alpha.data() + alpha.size());
}

}  // namespace

TerraciniFrame terracini_frame(const JoinSpec& spec, const std::vector<FpVector>& points,
                               const PrimeField& field, Rng& rng) {
  const int n = spec.n();
  const int d = spec.d();
  const std::vector<int>& orders = spec.orders();
  if (points.size() != orders.size())
    throw std::invalid_argument("terracini_frame: points/orders size mismatch");

  const Eigen::Index cols = binomial(d + n, n);
  Eigen::Index rows = 0;
  for (int m : orders) rows += binomial(m + n, n) + n;

  TerraciniFrame frame;
  frame.points = points;
  frame.rows.resize(rows, cols);
  Eigen::Index at = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const int m = orders[i];
    FpMatrix upper = osculating_frame(field, n, d, points[i], m + 1);

    const std::vector<MultiIndex> alphas = multiindices_up_to(n, m + 1);
    std::map<std::vector<int>, Eigen::Index> row_of;
    for (std::size_t r = 0; r < alphas.size(); ++r)
      row_of[key_of(alphas[r])] = static_cast<Eigen::Index>(r);

    // Derivative block: every row of order <= m, a prefix of the order
    // (m + 1) frame.
    const Eigen::Index block = binomial(m + n, n);
    frame.rows.middleRows(at, block) = upper.topRows(block);
    at += block;

    // Weighted rows: for each coordinate direction j, combine the exact
    // order-(m + 1) rows indexed I + e_j over the top-order indices I.
    const Eigen::Index top_begin = binomial(m - 1 + n, n);  // 0 when m == 0
    std::vector<std::uint64_t> lambda;
    for (Eigen::Index t = top_begin; t < block; ++t)
      lambda.push_back(rng.nonzero_field_element(field));

    for (int j = 0; j < n; ++j) {
      for (Eigen::Index c = 0; c < cols; ++c) frame.rows(at + j, c) = 0;
      for (Eigen::Index t = top_begin; t < block; ++t) {
        MultiIndex bumped = alphas[static_cast<std::size_t>(t)];
        bumped[j] += 1;
        const Eigen::Index src = row_of.at(key_of(bumped));
        const std::uint64_t weight = lambda[static_cast<std::size_t>(t - top_begin)];
        for (Eigen::Index c = 0; c < cols; ++c) {
          frame.rows(at + j, c) =
              field.add(frame.rows(at + j, c), field.mul(weight, upper(src, c)));
        }
      }
    }
    at += n;

    frame.lambdas.push_back(std::move(lambda));
    frame.upper_frames.push_back(std::move(upper));
  }
  return frame;
}

JoinAnalysis analyze_join(const JoinSpec& spec, const TrialConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("analyze_join: trials must be >= 1");
  const PrimeField field(config.prime);
  const int n = spec.n();
  const std::vector<int>& orders = spec.orders();
  const Eigen::Index ambient = spec.ambient_dim();

  Eigen::Index rank_tangent = 0;
  Eigen::Index rank_span = 0;
  Eigen::Index rank_upper = 0;
  bool contained = true;
  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng(derive_seed(config.seed, {static_cast<std::uint64_t>(trial)}));
    const auto points =
        sample_distinct_points(n, static_cast<int>(orders.size()), field, rng);
    const TerraciniFrame frame = terracini_frame(spec, points, field, rng);

    std::vector<FpMatrix> lower_blocks;
    for (std::size_t i = 0; i < orders.size(); ++i)
      lower_blocks.push_back(frame.upper_frames[i].topRows(binomial(orders[i] + n, n)));
    const FpMatrix upper = vstack(frame.upper_frames);

    rank_tangent = std::max(rank_tangent, rank_mod_p(frame.rows, field));
    rank_span = std::max(rank_span, rank_mod_p(vstack(lower_blocks), field));
    const Eigen::Index upper_rank = rank_mod_p(upper, field);
    rank_upper = std::max(rank_upper, upper_rank);
    contained = contained &&
                rank_mod_p(vstack<std::uint64_t>({frame.rows, upper}), field) == upper_rank;
  }

  JoinAnalysis a{spec,  0, 0, 0, 0, 0, 0, 0, contained, false, false, false,
                 config.prime, config.seed, config.trials};
  a.expected_dim = expected_join_dim(spec);
  a.dim = rank_tangent - 1;
  a.defect = a.expected_dim - a.dim;
  a.span_dim = rank_span - 1;
  std::int64_t span_count = -1;
  std::int64_t upper_count = -1;
  for (int m : orders) {
    span_count += binomial(m + n, n);
    upper_count += binomial(m + n + 1, n);
  }
  a.span_expected = std::min<std::int64_t>(span_count, ambient);
  a.delta_span = a.span_expected - a.span_dim;
  a.upper_span_dim = rank_upper - 1;
  a.nondefective_certified = ambient >= upper_count && a.upper_span_dim == upper_count;
  a.tangent_check_applies = n == 2 && spec.uniform_orders() &&
                            a.span_dim == a.span_expected && a.dim < a.expected_dim;
  a.tangent_spans_equal = a.tangent_check_applies && a.dim == a.upper_span_dim;
  return a;
}

DimensionReport join_dim(const JoinSpec& spec, const TrialConfig& config) {
  const JoinAnalysis a = analyze_join(spec, config);
  return DimensionReport{a.spec,
                         a.expected_dim,
                         a.dim,
                         a.defect,
                         a.upper_span_dim,
                         a.nondefective_certified,
                         a.tangent_check_applies,
                         a.tangent_spans_equal,
                         a.prime,
                         a.seed,
                         a.trials};
}

DeficiencyBound span_deficiency_bound(const JoinAnalysis& analysis) {
  const JoinSpec& spec = analysis.spec;
  std::int64_t param_top =
      static_cast<std::int64_t>(spec.orders().size()) * spec.n() - 1;
  for (int m : spec.orders()) param_top += binomial(m + spec.n(), spec.n());
  const Eigen::Index bound = param_top - analysis.delta_span;
  return DeficiencyBound{spec.ambient_dim() >= bound, analysis.span_dim,
                         analysis.delta_span, bound, analysis.dim <= bound};
}

DeficiencyBound span_deficiency_bound(const JoinSpec& spec, const TrialConfig& config) {
  return span_deficiency_bound(analyze_join(spec, config));
}

}  // namespace terracini
