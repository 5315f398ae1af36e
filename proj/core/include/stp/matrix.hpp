#pragma once

// Dense matrices and vectors of exact rationals, row-major storage.

#include "stp/rational.hpp"

#include <cstddef>
#include <vector>

namespace stp {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);  // zero-filled

  // Builds from explicit rows; throws std::invalid_argument on ragged input.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector data_;
};

RationalMatrix transpose(const RationalMatrix& m);
RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

}  // namespace stp
