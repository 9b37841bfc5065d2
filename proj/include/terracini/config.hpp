#pragma once

#include <cstdint>

#include "terracini/prime_field.hpp"

namespace terracini {

// Parameters for randomized rank computations. Ranks at random points bound
// the general-position rank from below, so every dimension reported under a
// TrialConfig is a certified lower bound and matches the true value except
// with probability O(trials * degree / prime).
struct TrialConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 42;
  int trials = 3;
};

}  // namespace terracini
