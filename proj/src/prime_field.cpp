#include "terracini/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace terracini {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is exact for every n < 3.3 * 10^24, so for all of uint64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (p_ <= (1ULL << 20))
    throw std::invalid_argument("PrimeField: modulus must exceed 2^20, got " +
                                std::to_string(p_));
  if (p_ >= (1ULL << 62))
    throw std::invalid_argument("PrimeField: modulus must be below 2^62, got " +
                                std::to_string(p_));
  if (!is_prime(p_))
    throw std::invalid_argument("PrimeField: modulus is not prime: " +
                                std::to_string(p_));
  fits_word_ = p_ < (1ULL << 32);
}

PrimeField::Scalar PrimeField::pow(Scalar base, std::uint64_t exponent) const {
  Scalar acc = 1;
  while (exponent > 0) {
    if (exponent & 1) acc = mul(acc, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return acc;
}

PrimeField::Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

PrimeField::Scalar PrimeField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Scalar>(r);
}

}  // namespace terracini
