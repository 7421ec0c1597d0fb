#include "nk/block_cyclic.hpp"

#include <cmath>

namespace nk::linalg {

CyclicDetReport cyclic_det_identity_check(const std::vector<IntMatrix>& blocks) {
  CyclicDetReport r;
  r.lhs = det_exact(identity_minus(block_cyclic(blocks)));
  r.rhs = det_exact(identity_minus(cyclic_composition(blocks)));
  r.equal = (r.lhs == r.rhs);
  return r;
}

CyclicDetReportReal cyclic_det_identity_check_real(
    const std::vector<RealMatrix>& blocks, double sign_threshold) {
  CyclicDetReportReal r;
  auto id_minus = [](const RealMatrix& m) {
    return RealMatrix::identity(m.rows()) - m;
  };
  r.lhs = det_real(id_minus(block_cyclic(blocks)));
  r.rhs = det_real(id_minus(cyclic_composition(blocks)));
  auto sgn = [&](double v) {
    if (std::fabs(v) < sign_threshold) return 0;
    return v > 0 ? 1 : -1;
  };
  r.sign_lhs = sgn(r.lhs);
  r.sign_rhs = sgn(r.rhs);
  r.conclusive = (r.sign_lhs != 0 && r.sign_rhs != 0);
  r.signs_equal = r.conclusive && (r.sign_lhs == r.sign_rhs);
  return r;
}

}  // namespace nk::linalg
