#pragma once

#include <cstdint>

namespace terracini {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
[[nodiscard]] bool is_prime(std::uint64_t n);

// Arithmetic in F_p. The modulus must be prime, greater than 2^20 (so that
// random-point rank certificates are convincing) and less than 2^62 (so
// that sums of two reduced elements stay in range). Elements are reduced
// representatives in [0, p).
class PrimeField {
 public:
  using Scalar = std::uint64_t;

  explicit PrimeField(std::uint64_t modulus);

  [[nodiscard]] std::uint64_t modulus() const { return p_; }

  [[nodiscard]] Scalar add(Scalar a, Scalar b) const {
    const Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  [[nodiscard]] Scalar sub(Scalar a, Scalar b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  [[nodiscard]] Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }

  [[nodiscard]] Scalar mul(Scalar a, Scalar b) const {
    if (fits_word_) return a * b % p_;
    return static_cast<Scalar>(static_cast<unsigned __int128>(a) * b % p_);
  }

  [[nodiscard]] Scalar pow(Scalar base, std::uint64_t exponent) const;

  // Inverse by Fermat; throws std::domain_error on zero.
  [[nodiscard]] Scalar inv(Scalar a) const;

  // Reduce an arbitrary signed integer into [0, p).
  [[nodiscard]] Scalar from_int(std::int64_t v) const;

 private:
  std::uint64_t p_;
  bool fits_word_;  // p < 2^32: products of reduced elements fit in 64 bits
};

}  // namespace terracini
