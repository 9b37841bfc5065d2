#include "terracini/interpolation.hpp"

#include <algorithm>
#include <functional>

#include "terracini/osculating.hpp"
#include "terracini/rank.hpp"

namespace terracini {

LinearSystemSpec::LinearSystemSpec(int degree, std::vector<int> multiplicities)
    : degree_(degree), mults_(std::move(multiplicities)) {
  if (degree_ < 0)
    throw std::invalid_argument("LinearSystemSpec: degree must be >= 0");
  for (int mu : mults_)
    if (mu < 0)
      throw std::invalid_argument("LinearSystemSpec: multiplicities must be >= 0");
  std::sort(mults_.begin(), mults_.end(), std::greater<int>());
}

std::int64_t virtual_dim(const LinearSystemSpec& sys) {
  const std::int64_t d = sys.degree();
  std::int64_t v = d * (d + 3) / 2;
  for (int mu : sys.multiplicities()) v -= static_cast<std::int64_t>(mu) * (mu + 1) / 2;
  return v;
}

std::int64_t expected_dim(const LinearSystemSpec& sys) {
  return std::max<std::int64_t>(virtual_dim(sys), -1);
}

Eigen::Index actual_dim(const LinearSystemSpec& sys, const TrialConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("actual_dim: trials must be >= 1");
  const PrimeField field(config.prime);
  const int k = static_cast<int>(sys.multiplicities().size());
  Eigen::Index best_rank = 0;
  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng(derive_seed(config.seed, {static_cast<std::uint64_t>(trial)}));
    const auto points = sample_distinct_points(2, k, field, rng);
    const FpMatrix conditions = conditions_matrix(field, sys, points);
    best_rank = std::max(best_rank, rank_mod_p(conditions, field));
  }
  return binomial(sys.degree() + 2, 2) - 1 - best_rank;
}

InterpReport speciality(const LinearSystemSpec& sys, const TrialConfig& config) {
  const std::int64_t virt = virtual_dim(sys);
  const std::int64_t expected = expected_dim(sys);
  const std::int64_t actual = actual_dim(sys, config);
  const std::int64_t e = actual - expected;
  return InterpReport{sys,      virt,        expected,    actual, e,
                      e > 0,    config.prime, config.seed, config.trials};
}

LinearSystemSpec CremonaResult::system() const {
  if (has_negative)
    throw std::logic_error("CremonaResult: negative multiplicity, not a linear system");
  return LinearSystemSpec(degree, multiplicities);
}

CremonaResult cremona_reduce(const LinearSystemSpec& sys) {
  const int d = sys.degree();
  std::vector<int> mu = sys.multiplicities();
  while (mu.size() < 3) mu.push_back(0);
  const int a = mu[0];
  const int b = mu[1];
  const int c = mu[2];
  const int dp = 2 * d - a - b - c;
  if (dp >= d) return CremonaResult{d, sys.multiplicities(), false, true};
  mu[0] = d - b - c;
  mu[1] = d - a - c;
  mu[2] = d - a - b;
  const bool negative = dp < 0 || mu[0] < 0 || mu[1] < 0 || mu[2] < 0;
  return CremonaResult{dp, std::move(mu), negative, false};
}

}  // namespace terracini
