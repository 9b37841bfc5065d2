#pragma once

#include "terracini/matrix.hpp"

namespace terracini {

// Row rank over F_p by Gaussian elimination. The pivot in each column is
// the first row with a nonzero entry, so the result is deterministic for a
// given matrix. Entries must already be reduced mod p.
[[nodiscard]] Eigen::Index rank_mod_p(FpMatrix m, const PrimeField& field);

// Exact rank over the integers by fraction-free (Bareiss) elimination, for
// certifying small cases independently of any modulus. Intermediate entries
// are minors of the input, so every division is exact. Throws
// std::length_error when rows * cols > 2500; use rank_mod_p beyond that.
[[nodiscard]] Eigen::Index rank_exact_integer(IntMatrix m);

}  // namespace terracini
