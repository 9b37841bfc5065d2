#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "terracini/combinatorics.hpp"
#include "terracini/matrix.hpp"
#include "terracini/osculating.hpp"
#include "terracini/rank.hpp"
#include "terracini/rng.hpp"

namespace {

using terracini::binomial;
using terracini::FpVector;
using terracini::Integer;
using terracini::IntegerRing;
using terracini::IntMatrix;
using terracini::IntVector;
using terracini::kDefaultPrime;
using terracini::osculating_frame;
using terracini::osculating_span_dim;
using terracini::PrimeField;
using terracini::Rng;
using terracini::veronese_point;

IntVector ipoint(std::initializer_list<std::int64_t> coords) {
  IntVector p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index at = 0;
  for (std::int64_t c : coords) p[at++] = Integer(c);
  return p;
}

bool matrices_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("veronese_point layout for the quadratic Veronese of the plane") {
  const IntegerRing ring;
  const IntVector p = ipoint({3, 7});
  const IntVector v = veronese_point(ring, 2, 2, p);
  REQUIRE(v.size() == 6);
  CHECK(v[0] == 1);   // 1
  CHECK(v[1] == 3);   // t
  CHECK(v[2] == 7);   // u
  CHECK(v[3] == 9);   // t^2
  CHECK(v[4] == 21);  // tu
  CHECK(v[5] == 49);  // u^2
}

TEST_CASE("veronese_point validates arguments") {
  const IntegerRing ring;
  CHECK_THROWS_AS((void)veronese_point(ring, 2, 2, ipoint({1})), std::invalid_argument);
  CHECK_THROWS_AS((void)veronese_point(ring, 0, 2, ipoint({})), std::invalid_argument);
  CHECK_THROWS_AS((void)veronese_point(ring, 1, -1, ipoint({1})), std::invalid_argument);
}

TEST_CASE("osculating_frame first-order rows are value and gradient") {
  const IntegerRing ring;
  const IntMatrix frame = osculating_frame(ring, 2, 2, ipoint({3, 7}), 1);
  REQUIRE(frame.rows() == 3);
  REQUIRE(frame.cols() == 6);

  IntMatrix expected(3, 6);
  expected << Integer(1), Integer(3), Integer(7), Integer(9), Integer(21), Integer(49),
      Integer(0), Integer(1), Integer(0), Integer(6), Integer(7), Integer(0),
      Integer(0), Integer(0), Integer(1), Integer(0), Integer(3), Integer(14);
  CHECK(matrices_equal(frame, expected));
}

TEST_CASE("osculating_frame on the rational normal curve") {
  const IntegerRing ring;
  const IntMatrix frame = osculating_frame(ring, 1, 3, ipoint({2}), 2);
  REQUIRE(frame.rows() == 3);
  REQUIRE(frame.cols() == 4);

  IntMatrix expected(3, 4);  // rows: f, f', f'' of t -> (1, t, t^2, t^3)
  expected << Integer(1), Integer(2), Integer(4), Integer(8),
      Integer(0), Integer(1), Integer(4), Integer(12),
      Integer(0), Integer(0), Integer(2), Integer(12);
  CHECK(matrices_equal(frame, expected));
}

TEST_CASE("osculating_frame row zero is the veronese point") {
  const IntegerRing ring;
  for (int d = 0; d <= 4; ++d) {
    const IntVector p = ipoint({2, -3});
    const IntMatrix frame = osculating_frame(ring, 2, d, p, 2);
    const IntVector v = veronese_point(ring, 2, d, p);
    REQUIRE(frame.cols() == v.size());
    for (Eigen::Index j = 0; j < v.size(); ++j) CHECK(frame(0, j) == v[j]);
  }
}

TEST_CASE("frames of increasing order are prefixes of each other") {
  const IntegerRing ring;
  const IntVector p = ipoint({5, -2});
  const IntMatrix small = osculating_frame(ring, 2, 4, p, 2);
  const IntMatrix large = osculating_frame(ring, 2, 4, p, 4);
  REQUIRE(small.rows() == 6);
  REQUIRE(large.rows() == 15);
  CHECK(matrices_equal(small, large.topRows(6)));
}

TEST_CASE("orders above the degree append zero rows and saturate the span") {
  const IntegerRing ring;
  const IntMatrix frame = osculating_frame(ring, 1, 2, ipoint({3}), 4);
  REQUIRE(frame.rows() == 5);
  for (Eigen::Index i = 3; i < 5; ++i)
    for (Eigen::Index j = 0; j < frame.cols(); ++j) CHECK(frame(i, j) == 0);

  const PrimeField field(kDefaultPrime);
  Rng rng(1);
  const auto pts = terracini::sample_distinct_points(1, 1, field, rng);
  CHECK(osculating_span_dim(1, 2, pts, {4}, field) == 2);  // all of P^2
}

TEST_CASE("single osculating space has the expected dimension") {
  const PrimeField field(kDefaultPrime);
  Rng rng(5);
  for (int d = 1; d <= 5; ++d) {
    for (int m = 0; m <= d + 1; ++m) {
      const auto pts = terracini::sample_distinct_points(2, 1, field, rng);
      const Eigen::Index expected =
          std::min(binomial(m + 2, 2), binomial(d + 2, 2)) - 1;
      CHECK(osculating_span_dim(2, d, pts, {m}, field) == expected);
    }
  }
}

TEST_CASE("two second-order spaces on the cubic Veronese surface are deficient") {
  // Stacked frames give 12 rows in P^9 and expectation min(11, 9) = 9, but
  // the span misses a hyperplane: its dimension is 8.
  const PrimeField field(kDefaultPrime);
  Rng rng(17);
  const auto pts = terracini::sample_distinct_points(2, 2, field, rng);
  CHECK(osculating_span_dim(2, 3, pts, {2, 2}, field) == 8);
}

TEST_CASE("span dimension is monotone in the orders") {
  const PrimeField field(kDefaultPrime);
  Rng rng(23);
  const auto pts = terracini::sample_distinct_points(2, 3, field, rng);
  Eigen::Index previous = -1;
  for (int m = 0; m <= 5; ++m) {
    const Eigen::Index now = osculating_span_dim(2, 4, pts, {m, m, m}, field);
    CHECK(now >= previous);
    previous = now;
  }
  CHECK(osculating_span_dim(2, 4, {}, {}, field) == -1);
}

TEST_CASE("sample_distinct_points yields pairwise distinct reproducible points") {
  const PrimeField field(kDefaultPrime);
  Rng rng_a(77);
  Rng rng_b(77);
  const auto pts_a = terracini::sample_distinct_points(2, 40, field, rng_a);
  const auto pts_b = terracini::sample_distinct_points(2, 40, field, rng_b);
  REQUIRE(pts_a.size() == 40);
  for (std::size_t i = 0; i < pts_a.size(); ++i) {
    CHECK((pts_a[i].array() == pts_b[i].array()).all());
    for (std::size_t j = i + 1; j < pts_a.size(); ++j)
      CHECK_FALSE((pts_a[i].array() == pts_a[j].array()).all());
  }
}

TEST_CASE("osculating_span_dim validates its inputs") {
  const PrimeField field(kDefaultPrime);
  Rng rng(3);
  const auto pts = terracini::sample_distinct_points(2, 2, field, rng);
  CHECK_THROWS_AS((void)osculating_span_dim(2, 3, pts, {1}, field),
                  std::invalid_argument);
}
