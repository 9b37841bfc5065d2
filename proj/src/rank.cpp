#include "terracini/rank.hpp"

#include <stdexcept>
#include <string>

namespace terracini {

Eigen::Index rank_mod_p(FpMatrix m, const PrimeField& field) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const std::uint64_t inv = field.inv(m(rank, col));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      const std::uint64_t factor = field.mul(m(i, col), inv);
      m(i, col) = 0;
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        if (m(rank, j) != 0) m(i, j) = field.sub(m(i, j), field.mul(factor, m(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

Eigen::Index rank_exact_integer(IntMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  if (rows * cols > 2500)
    throw std::length_error("rank_exact_integer: " + std::to_string(rows) + "x" +
                            std::to_string(cols) +
                            " exceeds the 2500-entry certification limit");
  Integer prev(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j)
        m(i, j) = (m(rank, col) * m(i, j) - m(i, col) * m(rank, j)) / prev;
      m(i, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace terracini
