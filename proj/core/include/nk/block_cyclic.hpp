#pragma once

#include <cstddef>
#include <vector>

#include "nk/errors.hpp"
#include "nk/int_matrix.hpp"
#include "nk/real_matrix.hpp"

namespace nk::linalg {

/// Assembles the km x km cyclic block matrix
///
///     [ 0    0    ...  0    B_m ]
///     [ B_1  0    ...  0    0   ]
///     [ 0    B_2  ...  0    0   ]
///     [ ...            ...      ]
///     [ 0    0    ... B_{m-1} 0 ]
///
/// from m square blocks of equal size k.  m = 1 yields the single block.
/// The same template instantiates the exact and the floating path.
template <typename Matrix>
Matrix block_cyclic(const std::vector<Matrix>& blocks) {
  const std::size_t m = blocks.size();
  if (m == 0) throw DimensionError("block_cyclic: empty block list");
  const std::size_t k = blocks[0].rows();
  for (const auto& b : blocks) {
    if (!b.is_square() || b.rows() != k)
      throw DimensionError("block_cyclic: blocks must be square and equal-sized");
  }
  if (m == 1) return blocks[0];

  Matrix n(k * m, k * m);
  auto place = [&](std::size_t block_row, std::size_t block_col, const Matrix& b) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        n(block_row * k + i, block_col * k + j) = b(i, j);
  };
  place(0, m - 1, blocks[m - 1]);
  for (std::size_t i = 0; i + 1 < m; ++i) place(i + 1, i, blocks[i]);
  return n;
}

/// Product B_m * ... * B_2 * B_1 (composition order: B_1 applied first).
template <typename Matrix>
Matrix cyclic_composition(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DimensionError("cyclic_composition: empty block list");
  Matrix acc = blocks[0];
  for (std::size_t i = 1; i < blocks.size(); ++i) acc = blocks[i] * acc;
  return acc;
}

/// Two independent evaluations of the same determinant:
///   lhs = det(I_{km} - block_cyclic(blocks))
///   rhs = det(I_k  - B_m ... B_2 B_1)
/// They agree exactly; the report makes the comparison explicit.
struct CyclicDetReport {
  Int lhs;
  Int rhs;
  bool equal = false;
};

CyclicDetReport cyclic_det_identity_check(const std::vector<IntMatrix>& blocks);

/// Floating variant used by the smooth engine at numerical fixed points.
struct CyclicDetReportReal {
  double lhs = 0.0;
  double rhs = 0.0;
  int sign_lhs = 0;  // 0 when |lhs| is below the threshold
  int sign_rhs = 0;
  bool signs_equal = false;
  bool conclusive = false;
};

CyclicDetReportReal cyclic_det_identity_check_real(
    const std::vector<RealMatrix>& blocks, double sign_threshold = 1e-8);

}  // namespace nk::linalg
