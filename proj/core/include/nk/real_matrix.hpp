#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nk/errors.hpp"
#include "nk/int_matrix.hpp"

namespace nk::linalg {

/// Double-precision companion of IntMatrix for the numerical fixed-point
/// engine.  Mirrors the layout API so block assembly code can be shared.
class RealMatrix {
 public:
  RealMatrix() : rows_(0), cols_(0) {}
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}
  RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static RealMatrix identity(std::size_t n);
  static RealMatrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  friend RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

  std::vector<double> apply(const std::vector<double>& x) const;

 private:
  std::size_t rows_, cols_;
  std::vector<double> entries_;
};

/// Determinant via partial-pivot LU in double precision.
double det_real(const RealMatrix& m);

/// Solves m * x = b with partial pivoting.  Returns false when the pivot
/// falls below `singular_tol` (system treated as singular).
bool solve_real(const RealMatrix& m, const std::vector<double>& b,
                std::vector<double>& x, double singular_tol = 1e-14);

/// Smallest singular value, computed by Jacobi eigenvalue iteration on
/// m^T m.  Used by the perturbation amplitude guard.
double min_singular_value(const RealMatrix& m);

}  // namespace nk::linalg
