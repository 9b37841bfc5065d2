#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "terracini/prime_field.hpp"

namespace terracini {

using Integer = boost::multiprecision::cpp_int;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using FpMatrix = DenseMatrix<std::uint64_t>;
using FpVector = DenseVector<std::uint64_t>;
using IntMatrix = DenseMatrix<Integer>;
using IntVector = DenseVector<Integer>;

// Exact integer coefficients with the same surface as PrimeField, so the
// matrix builders instantiate over either ring.
struct IntegerRing {
  using Scalar = Integer;
  [[nodiscard]] static Scalar from_int(std::int64_t v) { return Scalar(v); }
  [[nodiscard]] static Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
  [[nodiscard]] static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  [[nodiscard]] static Scalar pow(Scalar base, std::uint64_t exponent) {
    Scalar acc(1);
    while (exponent > 0) {
      if (exponent & 1) acc *= base;
      base *= base;
      exponent >>= 1;
    }
    return acc;
  }
};

template <typename Scalar>
[[nodiscard]] DenseMatrix<Scalar> vstack(const std::vector<DenseMatrix<Scalar>>& blocks) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  for (const auto& block : blocks) {
    if (cols == 0) cols = block.cols();
    if (block.cols() != cols && block.rows() > 0)
      throw std::invalid_argument("vstack: column counts differ");
    rows += block.rows();
  }
  DenseMatrix<Scalar> out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& block : blocks) {
    out.middleRows(at, block.rows()) = block;
    at += block.rows();
  }
  return out;
}

[[nodiscard]] inline FpMatrix reduce_mod(const IntMatrix& m, const PrimeField& field) {
  const Integer p(field.modulus());
  FpMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Integer r = m(i, j) % p;
      if (r < 0) r += p;
      out(i, j) = r.convert_to<std::uint64_t>();
    }
  }
  return out;
}

}  // namespace terracini
