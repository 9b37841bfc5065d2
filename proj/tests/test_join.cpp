#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "terracini/combinatorics.hpp"
#include "terracini/join.hpp"
#include "terracini/osculating.hpp"
#include "terracini/rng.hpp"

namespace {

using terracini::analyze_join;
using terracini::binomial;
using terracini::derive_seed;
using terracini::expected_join_dim;
using terracini::JoinAnalysis;
using terracini::JoinSpec;
using terracini::kDefaultPrime;
using terracini::PrimeField;
using terracini::Rng;
using terracini::span_deficiency_bound;
using terracini::terracini_frame;
using terracini::TrialConfig;

}  // namespace

TEST_CASE("JoinSpec validates and exposes its shape") {
  const JoinSpec spec(2, 4, {2, 1, 0});
  CHECK(spec.n() == 2);
  CHECK(spec.d() == 4);
  CHECK(spec.h() == 2);
  CHECK(spec.ambient_dim() == 14);
  CHECK_FALSE(spec.uniform_orders());
  CHECK(JoinSpec(2, 3, {1, 1}).uniform_orders());
  CHECK(spec == JoinSpec(2, 4, {2, 1, 0}));
  CHECK_FALSE(spec == JoinSpec(2, 4, {2, 1, 1}));

  CHECK_THROWS_AS(JoinSpec(0, 3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(JoinSpec(2, -1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(JoinSpec(2, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(JoinSpec(2, 3, {1, -1}), std::invalid_argument);
}

TEST_CASE("expected_join_dim counts parameters and clamps to the ambient space") {
  CHECK(expected_join_dim(JoinSpec(2, 3, {1, 1})) == 9);
  CHECK(expected_join_dim(JoinSpec(2, 4, {2, 2})) == 14);  // clamped from 15
  CHECK(expected_join_dim(JoinSpec(2, 5, {1, 1})) == 9);
  CHECK(expected_join_dim(JoinSpec(2, 4, {0, 0, 0, 0, 0})) == 14);
  CHECK(expected_join_dim(JoinSpec(2, 2, {1})) == 4);
  CHECK(expected_join_dim(JoinSpec(1, 3, {1, 1})) == 3);
  CHECK(expected_join_dim(JoinSpec(2, 1, {3, 2})) == 2);  // tiny ambient clamp
}

TEST_CASE("join dimensions of landmark cells") {
  const TrialConfig config;

  const JoinAnalysis two_tangents = analyze_join(JoinSpec(2, 3, {1, 1}), config);
  CHECK(two_tangents.expected_dim == 9);
  CHECK(two_tangents.dim == 8);
  CHECK(two_tangents.defect == 1);

  const JoinAnalysis two_osc = analyze_join(JoinSpec(2, 4, {2, 2}), config);
  CHECK(two_osc.expected_dim == 14);
  CHECK(two_osc.dim == 13);
  CHECK(two_osc.defect == 1);

  const JoinAnalysis filling = analyze_join(JoinSpec(2, 5, {1, 1}), config);
  CHECK(filling.expected_dim == 9);
  CHECK(filling.dim == 9);
  CHECK(filling.defect == 0);

  // all orders zero is the classical five-point secant of the quartic
  // Veronese surface, defective by one
  const JoinAnalysis secant = analyze_join(JoinSpec(2, 4, {0, 0, 0, 0, 0}), config);
  CHECK(secant.expected_dim == 14);
  CHECK(secant.dim == 13);
  CHECK(secant.defect == 1);

  // the tangent developable of the quadratic Veronese surface is a
  // hypersurface-filling variety of dimension 4
  const JoinAnalysis tangent_variety = analyze_join(JoinSpec(2, 2, {1}), config);
  CHECK(tangent_variety.expected_dim == 4);
  CHECK(tangent_variety.dim == 4);
  CHECK(tangent_variety.defect == 0);
}

TEST_CASE("order zero joins match first-order span dimensions") {
  // A point of order 0 contributes its tangent space: the join of h+1
  // order-0 points has the dimension of the span of h+1 tangent planes.
  const TrialConfig config;
  const PrimeField field(config.prime);
  for (int d = 2; d <= 5; ++d) {
    for (int count = 2; count <= 4; ++count) {
      const JoinAnalysis a =
          analyze_join(JoinSpec(2, d, std::vector<int>(count, 0)), config);
      Rng rng(derive_seed(config.seed, {static_cast<std::uint64_t>(d)}));
      const auto pts = terracini::sample_distinct_points(2, count, field, rng);
      const Eigen::Index span =
          terracini::osculating_span_dim(2, d, pts, std::vector<int>(count, 1), field);
      CHECK(a.dim == span);
    }
  }
}

TEST_CASE("terracini_frame shape and block structure") {
  const TrialConfig config;
  const PrimeField field(config.prime);
  Rng rng(derive_seed(config.seed, {0}));
  const JoinSpec spec(2, 5, {2, 1});
  const auto pts = terracini::sample_distinct_points(2, 2, field, rng);
  const auto frame = terracini_frame(spec, pts, field, rng);

  // rows: (C(4,2) + 2) + (C(3,2) + 2) = 8 + 5
  REQUIRE(frame.rows.rows() == 13);
  REQUIRE(frame.rows.cols() == 21);
  REQUIRE(frame.upper_frames.size() == 2);
  CHECK(frame.upper_frames[0].rows() == binomial(3 + 2, 2));
  CHECK(frame.upper_frames[1].rows() == binomial(2 + 2, 2));

  // derivative blocks are prefixes of the order-(m+1) frames
  CHECK((frame.rows.topRows(6).array() == frame.upper_frames[0].topRows(6).array())
            .all());
  CHECK((frame.rows.middleRows(8, 3).array() ==
         frame.upper_frames[1].topRows(3).array())
            .all());

  // one weight per exact-top-order index, all nonzero
  REQUIRE(frame.lambdas.size() == 2);
  CHECK(frame.lambdas[0].size() == 3);  // order-2 indices in two variables
  CHECK(frame.lambdas[1].size() == 2);
  for (const auto& lambda : frame.lambdas)
    for (std::uint64_t w : lambda) CHECK(w != 0);

  CHECK_THROWS_AS(
      (void)terracini_frame(spec, {pts[0]}, field, rng), std::invalid_argument);
}

TEST_CASE("computed join dimension never exceeds the expectation") {
  const TrialConfig config;
  for (int d = 1; d <= 5; ++d) {
    for (int m = 0; m <= 3; ++m) {
      for (int count = 1; count <= 3; ++count) {
        const JoinAnalysis a =
            analyze_join(JoinSpec(2, d, std::vector<int>(count, m)), config);
        CAPTURE(d);
        CAPTURE(m);
        CAPTURE(count);
        CHECK(a.dim <= a.expected_dim);
        CHECK(a.defect >= 0);
        CHECK(a.span_dim <= a.span_expected);
        CHECK(a.delta_span >= 0);
        CHECK(a.tangent_in_upper_span);
        CHECK(a.dim <= a.upper_span_dim);
        if (a.nondefective_certified) CHECK(a.defect == 0);
        if (a.tangent_check_applies) CHECK(a.tangent_spans_equal);
      }
    }
  }
}

TEST_CASE("deficiency bound on the quartic two-point cell") {
  const TrialConfig config;
  const auto analysis = analyze_join(JoinSpec(2, 4, {2, 2}), config);
  const auto bound = span_deficiency_bound(analysis);
  CHECK(bound.applicable);
  CHECK(bound.delta_span == 1);
  CHECK(bound.span_dim == 10);
  CHECK(bound.bound == 14);
  CHECK(bound.holds);

  // same numbers through the convenience overload
  const auto direct = span_deficiency_bound(JoinSpec(2, 4, {2, 2}), config);
  CHECK(direct.applicable == bound.applicable);
  CHECK(direct.bound == bound.bound);
}

TEST_CASE("deficiency bound does not apply when the count overshoots the space") {
  // Two order-2 points on the cubic Veronese surface: the deficiency-
  // corrected parameter count is 14 in a P^9, so the bound is vacuous
  // there and must be reported as not applicable.
  const TrialConfig config;
  const auto bound = span_deficiency_bound(JoinSpec(2, 3, {2, 2}), config);
  CHECK_FALSE(bound.applicable);
  CHECK(bound.delta_span == 1);
  CHECK(bound.bound == 14);
  CHECK(bound.holds);  // rank arithmetic still satisfies the inequality
}

TEST_CASE("tangent space checks on deficient and filling cells") {
  const TrialConfig config;

  const JoinAnalysis deficient = analyze_join(JoinSpec(2, 3, {1, 1}), config);
  CHECK(deficient.span_dim == deficient.span_expected);  // order-1 span is full
  CHECK(deficient.tangent_check_applies);
  CHECK(deficient.tangent_spans_equal);
  CHECK(deficient.upper_span_dim == 8);

  const JoinAnalysis shifted = analyze_join(JoinSpec(2, 4, {2, 2}), config);
  CHECK_FALSE(shifted.tangent_check_applies);  // its order-2 span is deficient

  const JoinAnalysis filling = analyze_join(JoinSpec(2, 5, {1, 1}), config);
  CHECK_FALSE(filling.tangent_check_applies);  // not deficient
  CHECK(filling.nondefective_certified);
}

TEST_CASE("analysis reproduces across primes and seeds") {
  const JoinSpec spec(2, 4, {1, 1, 1});
  const JoinAnalysis base = analyze_join(spec, TrialConfig{});
  const std::uint64_t primes[] = {kDefaultPrime, 1000000007};
  const std::uint64_t seeds[] = {1, 9};
  for (std::uint64_t prime : primes) {
    for (std::uint64_t seed : seeds) {
      const JoinAnalysis again = analyze_join(spec, TrialConfig{prime, seed, 3});
      CHECK(again.dim == base.dim);
      CHECK(again.span_dim == base.span_dim);
      CHECK(again.upper_span_dim == base.upper_span_dim);
    }
  }
  const JoinAnalysis rerun = analyze_join(spec, TrialConfig{});
  CHECK(rerun.dim == base.dim);
  CHECK(rerun.prime == base.prime);
  CHECK(rerun.seed == base.seed);
}

TEST_CASE("analyze_join validates the trial count") {
  CHECK_THROWS_AS((void)analyze_join(JoinSpec(2, 3, {1}), TrialConfig{kDefaultPrime, 1, 0}),
                  std::invalid_argument);
}
