#pragma once

#include "cb/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cb {

using RatVector = std::vector<Rat>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  void set_row(std::size_t r, const RatVector& values);
  void swap_rows(std::size_t a, std::size_t b);

  RatMatrix without_row_col(std::size_t r, std::size_t c) const;
  RatMatrix without_col(std::size_t c) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact determinant. Closed-form cofactor expansion up to 3x3, otherwise
/// Bareiss elimination on the row-wise denominator-cleared integer matrix.
/// Throws ShapeError for non-square input.
Rat ff_determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {v : m v = 0}. Each vector is primitive and integral with a
/// positive first nonzero entry.
std::vector<RatVector> right_nullspace(const RatMatrix& m);

/// Scales a nonzero vector to the primitive integer representative with
/// positive first nonzero entry. The zero vector is returned unchanged.
RatVector primitive_integer_vector(const RatVector& v);

}  // namespace cb
