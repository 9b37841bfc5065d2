#include "terracini/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace terracini {

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  // Multiply factors in order; every partial product is itself C(a-b+i, i),
  // so the division is exact and intermediate values never exceed the final
  // result.
  unsigned __int128 acc = 1;
  constexpr auto kMax =
      static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
  for (std::int64_t i = 1; i <= b; ++i) {
    acc = acc * static_cast<unsigned __int128>(a - b + i) /
          static_cast<unsigned __int128>(i);
    if (acc > kMax) throw std::overflow_error("binomial: result exceeds 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

namespace {

void emit_grade(int n, int remaining, int pos, MultiIndex& scratch,
                std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    scratch[pos] = remaining;
    out.push_back(scratch);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    scratch[pos] = v;
    emit_grade(n, remaining - v, pos + 1, scratch, out);
  }
}

}  // namespace

std::vector<MultiIndex> multiindices_up_to(int n, int m) {
  if (n < 1) throw std::invalid_argument("multiindices_up_to: n must be >= 1");
  if (m < 0) throw std::invalid_argument("multiindices_up_to: m must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(binomial(m + n, n)));
  MultiIndex scratch(n);
  for (int grade = 0; grade <= m; ++grade) emit_grade(n, grade, 0, scratch, out);
  return out;
}

std::vector<MultiIndex> monomial_basis(int n, int d) {
  if (n < 1) throw std::invalid_argument("monomial_basis: n must be >= 1");
  if (d < 0) throw std::invalid_argument("monomial_basis: d must be >= 0");
  const std::vector<MultiIndex> affine = multiindices_up_to(n, d);
  std::vector<MultiIndex> out;
  out.reserve(affine.size());
  for (const MultiIndex& tail : affine) {
    MultiIndex mono(n + 1);
    mono[0] = d - tail.sum();
    mono.tail(n) = tail;
    out.push_back(std::move(mono));
  }
  return out;
}

std::optional<MonomialDerivative> derive_monomial(const MultiIndex& beta,
                                                  const MultiIndex& alpha) {
  if (beta.size() != alpha.size())
    throw std::invalid_argument("derive_monomial: length mismatch");
  if ((beta < 0).any() || (alpha < 0).any())
    throw std::invalid_argument("derive_monomial: negative exponent");
  if ((alpha > beta).any()) return std::nullopt;
  __int128 coeff = 1;
  constexpr auto kMax =
      static_cast<__int128>(std::numeric_limits<std::int64_t>::max());
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    for (int t = 0; t < alpha[j]; ++t) {
      coeff *= beta[j] - t;
      if (coeff > kMax)
        throw std::overflow_error("derive_monomial: coefficient exceeds 64 bits");
    }
  }
  return MonomialDerivative{static_cast<std::int64_t>(coeff), beta - alpha};
}

}  // namespace terracini
