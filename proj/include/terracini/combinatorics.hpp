#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

namespace terracini {

// Exponent vector of length n: derivative orders (alpha) or the affine
// exponents of a monomial (beta). Entries are non-negative.
using MultiIndex = Eigen::ArrayXi;

// C(a, b); 0 when b < 0 or b > a (so b > a is not an error). Throws
// std::overflow_error if the result does not fit in 64 bits.
[[nodiscard]] std::int64_t binomial(std::int64_t a, std::int64_t b);

// All alpha in n variables with |alpha| <= m. Graded order: total order 0
// first, then 1, and so on; within a grade, lexicographic with the leftmost
// coordinate most significant and larger entries first. The result for
// (n, m) is a prefix of the result for (n, m+1), and its length is
// C(m+n, n). This enumeration also fixes the column order of
// monomial_basis, so it is part of the frozen matrix layout.
[[nodiscard]] std::vector<MultiIndex> multiindices_up_to(int n, int m);

// Exponent vectors (length n+1, entries summing to d) of the degree-d
// monomials in x_0..x_n, C(d+n, n) of them. Ordered so that the affine
// exponents (beta_1..beta_n) run through multiindices_up_to(n, d);
// equivalently, descending lexicographic with x_0 heaviest, so x_0^d is
// first.
[[nodiscard]] std::vector<MultiIndex> monomial_basis(int n, int d);

struct MonomialDerivative {
  std::int64_t coefficient;  // falling-factorial product, always positive
  MultiIndex exponents;      // beta - alpha
};

// Applies the partial derivative of multi-order alpha to the affine
// monomial t^beta. Returns nullopt when the derivative vanishes
// identically, i.e. alpha_j > beta_j for some j.
[[nodiscard]] std::optional<MonomialDerivative> derive_monomial(
    const MultiIndex& beta, const MultiIndex& alpha);

}  // namespace terracini
