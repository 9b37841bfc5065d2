#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <vector>

#include "terracini/prime_field.hpp"

namespace terracini {

// splitmix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds coordinates (cell indices, trial numbers) into a master seed so that
// every cell of a sweep draws from its own stream and results do not depend
// on evaluation order.
[[nodiscard]] inline std::uint64_t derive_seed(
    std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t s = mix64(seed);
  for (std::uint64_t part : parts) s = mix64(s ^ part);
  return s;
}

[[nodiscard]] inline std::uint64_t derive_seed(std::uint64_t seed,
                                               const std::vector<std::uint64_t>& parts) {
  std::uint64_t s = mix64(seed);
  for (std::uint64_t part : parts) s = mix64(s ^ part);
  return s;
}

// mt19937_64 behind a sampler whose output is pinned by the standard.
// std::uniform_int_distribution is implementation-defined, so reports would
// not reproduce across toolchains with it; rejection sampling on the raw
// engine output is portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform over [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t limit = (-bound) % bound;  // 2^64 mod bound
    std::uint64_t x = engine_();
    while (x < limit) x = engine_();
    return x % bound;
  }

  std::uint64_t field_element(const PrimeField& field) {
    return below(field.modulus());
  }

  std::uint64_t nonzero_field_element(const PrimeField& field) {
    return 1 + below(field.modulus() - 1);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace terracini
