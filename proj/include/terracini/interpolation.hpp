#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "terracini/combinatorics.hpp"
#include "terracini/config.hpp"
#include "terracini/matrix.hpp"

namespace terracini {

// L_d(mu_1, ..., mu_k): plane curves of degree d with a point of
// multiplicity >= mu_i at each of k general points. Multiplicities are kept
// sorted non-increasing (zeros allowed, they impose nothing).
class LinearSystemSpec {
 public:
  LinearSystemSpec(int degree, std::vector<int> multiplicities);

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const std::vector<int>& multiplicities() const { return mults_; }

  [[nodiscard]] bool operator==(const LinearSystemSpec& other) const {
    return degree_ == other.degree_ && mults_ == other.mults_;
  }

 private:
  int degree_;
  std::vector<int> mults_;
};

// d(d+3)/2 - sum mu_i(mu_i+1)/2.
[[nodiscard]] std::int64_t virtual_dim(const LinearSystemSpec& sys);

// max(virtual_dim, -1): a linear system is at worst empty.
[[nodiscard]] std::int64_t expected_dim(const LinearSystemSpec& sys);

// Matrix of the vanishing conditions at the given points: for each point
// with mu_i >= 1, one row per derivative order alpha with |alpha| <= mu_i-1
// (in multiindices_up_to order), columns over monomial_basis(2, d). A curve
// lies in the system iff its coefficient vector is in the right kernel.
// Built directly from derive_monomial so it cross-checks the osculating
// frame construction entry for entry rather than calling it.
template <typename Ring>
[[nodiscard]] DenseMatrix<typename Ring::Scalar> conditions_matrix(
    const Ring& ring, const LinearSystemSpec& sys,
    const std::vector<DenseVector<typename Ring::Scalar>>& points) {
  using Scalar = typename Ring::Scalar;
  const int d = sys.degree();
  const std::vector<int>& mults = sys.multiplicities();
  if (points.size() != mults.size())
    throw std::invalid_argument("conditions_matrix: points/multiplicities mismatch");

  const std::vector<MultiIndex> monomials = monomial_basis(2, d);
  const Eigen::Index cols = static_cast<Eigen::Index>(monomials.size());
  Eigen::Index rows = 0;
  for (int mu : mults)
    if (mu >= 1) rows += binomial(mu + 1, 2);

  DenseMatrix<Scalar> conditions(rows, cols);
  Eigen::Index at = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i] < 1) continue;
    const DenseVector<Scalar>& p = points[i];
    for (const MultiIndex& alpha : multiindices_up_to(2, mults[i] - 1)) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        const MultiIndex beta = monomials[static_cast<std::size_t>(c)].tail(2);
        const auto deriv = derive_monomial(beta, alpha);
        if (!deriv) {
          conditions(at, c) = ring.from_int(0);
          continue;
        }
        Scalar v = ring.from_int(deriv->coefficient);
        for (int j = 0; j < 2; ++j)
          v = ring.mul(v, ring.pow(p[j], static_cast<std::uint64_t>(deriv->exponents[j])));
        conditions(at, c) = v;
      }
      ++at;
    }
  }
  return conditions;
}

// Dimension of the system at random general points: C(d+2,2) - 1 - rank of
// the conditions matrix, the rank maximized over config.trials independent
// point samples (random points can only lose rank against general position,
// never gain it).
[[nodiscard]] Eigen::Index actual_dim(const LinearSystemSpec& sys,
                                      const TrialConfig& config);

struct InterpReport {
  LinearSystemSpec system;
  std::int64_t virtual_dim;
  std::int64_t expected_dim;
  std::int64_t actual_dim;
  std::int64_t speciality;  // actual - expected
  bool special;             // speciality > 0
  std::uint64_t prime;
  std::uint64_t seed;
  int trials;
};

[[nodiscard]] InterpReport speciality(const LinearSystemSpec& sys,
                                      const TrialConfig& config);

// One quadratic (Cremona) transformation based at the three points of
// largest multiplicity (degree d, top multiplicities a >= b >= c, padding
// with zeros below three slots):
//   d' = 2d - a - b - c,  a' = d - b - c,  b' = d - a - c,  c' = d - a - b,
// other multiplicities unchanged. The transform preserves the dimension of
// the system. When d' >= d it makes no progress and the input is returned
// unchanged (fixed_point). Negative output multiplicities are returned in
// slot order with has_negative set; such results are not linear systems and
// must not be fed to actual_dim.
struct CremonaResult {
  int degree;
  std::vector<int> multiplicities;
  bool has_negative;
  bool fixed_point;

  // Canonical view of a flag-free result; throws std::logic_error if
  // has_negative.
  [[nodiscard]] LinearSystemSpec system() const;
};

[[nodiscard]] CremonaResult cremona_reduce(const LinearSystemSpec& sys);

}  // namespace terracini
