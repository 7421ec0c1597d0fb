#pragma once

#include <optional>
#include <vector>

#include "nk/int_matrix.hpp"

namespace nk::linalg {

/// U * M * V = D with U, V unimodular and d_1 | d_2 | ... , d_i >= 0.
/// The inverses are tracked during elimination so that callers can move
/// between source coordinates and Smith coordinates exactly.
struct SmithDecomposition {
  IntMatrix u, d, v;
  IntMatrix u_inv, v_inv;

  std::vector<Int> diagonal() const;
};

/// Deterministic Smith normal form.  Pivot rule: smallest absolute value
/// among nonzero entries of the working submatrix, lowest row index (then
/// lowest column index) on ties.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Structure of Z^n / (M Z^n) for square M, read off the Smith form.
/// Canonical labels live in Smith coordinates: the label of x is
/// (U x) mod d, coordinate i reduced to [0, d_i) when d_i > 0.
class CokernelStructure {
 public:
  CokernelStructure() = default;

  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool finite() const { return order_.has_value(); }
  /// Group order; only valid when finite().
  const Int& order() const { return *order_; }

  /// Canonical label of an integer vector (length n), in Smith coordinates.
  /// Coordinates with d_i = 0 are returned unreduced.
  std::vector<Int> canonical_label(const std::vector<Int>& x) const;

  /// All canonical labels, enumerated in lexicographic order.  Only
  /// available when finite; throws CapError when the order exceeds `cap`.
  std::vector<std::vector<Int>> coset_representatives(
      const Int& cap = Int(1000000)) const;

  /// A source-coordinate representative of the coset with the given label:
  /// the exact preimage U^{-1} * label.
  std::vector<Int> representative_in_source(const std::vector<Int>& label) const;

  const SmithDecomposition& smith() const { return smith_; }
  std::size_t dimension() const { return factors_.size(); }

 private:
  friend CokernelStructure cokernel(const IntMatrix& m);
  SmithDecomposition smith_;
  std::vector<Int> factors_;
  std::optional<Int> order_;
};

/// Cokernel of a square integer matrix.
CokernelStructure cokernel(const IntMatrix& m);

}  // namespace nk::linalg
