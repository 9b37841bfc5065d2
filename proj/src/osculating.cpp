#include "terracini/osculating.hpp"

#include <stdexcept>

#include "terracini/rank.hpp"

namespace terracini {

Eigen::Index osculating_span_dim(int n, int d, const std::vector<FpVector>& points,
                                 const std::vector<int>& orders,
                                 const PrimeField& field) {
  if (points.size() != orders.size())
    throw std::invalid_argument("osculating_span_dim: points/orders size mismatch");
  std::vector<FpMatrix> frames;
  frames.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    frames.push_back(osculating_frame(field, n, d, points[i], orders[i]));
  if (frames.empty()) return -1;
  return rank_mod_p(vstack(frames), field) - 1;
}

std::vector<FpVector> sample_distinct_points(int n, int count, const PrimeField& field,
                                             Rng& rng) {
  if (n < 1 || count < 0)
    throw std::invalid_argument("sample_distinct_points: bad arguments");
  std::vector<FpVector> points;
  points.reserve(static_cast<std::size_t>(count));
  while (points.size() < static_cast<std::size_t>(count)) {
    FpVector p(n);
    for (int j = 0; j < n; ++j) p[j] = rng.field_element(field);
    bool fresh = true;
    for (const FpVector& q : points) {
      if ((q.array() == p.array()).all()) {
        fresh = false;
        break;
      }
    }
    if (fresh) points.push_back(std::move(p));
  }
  return points;
}

}  // namespace terracini
