#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nk/errors.hpp"

namespace nk::linalg {

/// Exact arbitrary-precision integer scalar used throughout the exact paths.
using Int = boost::multiprecision::cpp_int;

/// Dense matrix over Int, row-major.  All arithmetic is exact; there is no
/// overflow anywhere in the exact pipeline.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  /// Row-major nested list, e.g. IntMatrix({{2, 1}, {1, 1}}).
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols);
  static IntMatrix diagonal(const std::vector<Int>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Int>& entries() const { return entries_; }

  IntMatrix transposed() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += c * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  /// col i += c * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& c, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::vector<Int> apply(const std::vector<Int>& x) const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
/// Throws DimensionError on non-square input.
Int det_exact(const IntMatrix& m);

/// identity(n) - m
IntMatrix identity_minus(const IntMatrix& m);

}  // namespace nk::linalg
