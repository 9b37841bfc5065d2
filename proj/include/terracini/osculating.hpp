#pragma once

#include <stdexcept>
#include <vector>

#include "terracini/combinatorics.hpp"
#include "terracini/matrix.hpp"
#include "terracini/rng.hpp"

namespace terracini {

// Image of the affine point t under the degree-d Veronese map of A^n:
// one coordinate per entry of monomial_basis(n, d), x_0 evaluated at 1.
template <typename Ring>
[[nodiscard]] DenseVector<typename Ring::Scalar> veronese_point(
    const Ring& ring, int n, int d, const DenseVector<typename Ring::Scalar>& point) {
  if (n < 1 || d < 0 || point.size() != n)
    throw std::invalid_argument("veronese_point: bad arguments");
  using Scalar = typename Ring::Scalar;
  const std::vector<MultiIndex> monomials = monomial_basis(n, d);
  DenseVector<Scalar> out(static_cast<Eigen::Index>(monomials.size()));
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    Scalar v = ring.from_int(1);
    for (int j = 0; j < n; ++j)
      v = ring.mul(v, ring.pow(point[j], static_cast<std::uint64_t>(monomials[c][j + 1])));
    out[static_cast<Eigen::Index>(c)] = v;
  }
  return out;
}

// Order-m osculating frame of the degree-d Veronese of A^n at t. Row k is
// the alpha_k-th partial derivative of the monomial parametrization, alpha_k
// running over multiindices_up_to(n, m); columns follow monomial_basis(n, d).
// Row 0 is the Veronese point itself. Orders m > d are allowed: derivatives
// of order above the degree of a monomial vanish, so the extra rows are
// zero row by row, never an error.
template <typename Ring>
[[nodiscard]] DenseMatrix<typename Ring::Scalar> osculating_frame(
    const Ring& ring, int n, int d, const DenseVector<typename Ring::Scalar>& point,
    int m) {
  if (n < 1 || d < 0 || m < 0 || point.size() != n)
    throw std::invalid_argument("osculating_frame: bad arguments");
  using Scalar = typename Ring::Scalar;
  const std::vector<MultiIndex> alphas = multiindices_up_to(n, m);
  const std::vector<MultiIndex> monomials = monomial_basis(n, d);

  std::vector<std::vector<Scalar>> powers(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    powers[j].resize(static_cast<std::size_t>(d) + 1);
    powers[j][0] = ring.from_int(1);
    for (int e = 1; e <= d; ++e) powers[j][e] = ring.mul(powers[j][e - 1], point[j]);
  }

  std::vector<MultiIndex> affine;
  affine.reserve(monomials.size());
  for (const MultiIndex& mono : monomials) affine.push_back(mono.tail(n));

  DenseMatrix<Scalar> frame(static_cast<Eigen::Index>(alphas.size()),
                            static_cast<Eigen::Index>(monomials.size()));
  for (std::size_t r = 0; r < alphas.size(); ++r) {
    for (std::size_t c = 0; c < affine.size(); ++c) {
      const auto deriv = derive_monomial(affine[c], alphas[r]);
      if (!deriv) {
        frame(r, c) = ring.from_int(0);
        continue;
      }
      Scalar v = ring.from_int(deriv->coefficient);
      for (int j = 0; j < n; ++j) v = ring.mul(v, powers[j][deriv->exponents[j]]);
      frame(r, c) = v;
    }
  }
  return frame;
}

// Projective dimension of the span of the order-orders[i] osculating spaces
// at the given points: rank of the stacked frames minus one (-1 for the
// empty span).
[[nodiscard]] Eigen::Index osculating_span_dim(int n, int d,
                                               const std::vector<FpVector>& points,
                                               const std::vector<int>& orders,
                                               const PrimeField& field);

// count pairwise-distinct uniform points of F_p^n.
[[nodiscard]] std::vector<FpVector> sample_distinct_points(int n, int count,
                                                           const PrimeField& field,
                                                           Rng& rng);

}  // namespace terracini
