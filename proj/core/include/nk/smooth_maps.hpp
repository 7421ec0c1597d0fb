#pragma once

#include <vector>

#include "nk/block_cyclic.hpp"
#include "nk/int_matrix.hpp"
#include "nk/real_matrix.hpp"
#include "nk/smith.hpp"

namespace nk::smooth {

using linalg::Int;
using linalg::IntMatrix;
using linalg::RealMatrix;

/// One trigonometric mode of the periodic perturbation:
///   adds (sin_coeff * sin(2 pi k.x) + cos_coeff * cos(2 pi k.x)) to the
///   named lift coordinate.  Integer frequencies keep the lift 1-periodic.
struct PerturbationMode {
  int coordinate = 0;
  std::vector<int> frequency;
  double sin_coeff = 0.0;
  double cos_coeff = 0.0;
};

/// Lift x -> A x + p(x) with A integral and p a trigonometric polynomial.
class SmoothTorusMap {
 public:
  SmoothTorusMap(IntMatrix linear_part, std::vector<PerturbationMode> modes = {});

  int dim() const { return static_cast<int>(linear_part_.rows()); }
  const IntMatrix& linear_part() const { return linear_part_; }
  const std::vector<PerturbationMode>& modes() const { return modes_; }

  std::vector<double> lift(const std::vector<double>& x) const;
  RealMatrix jacobian(const std::vector<double>& x) const;

  /// sup-norm bound on |p| per coordinate, summed over modes.
  double perturbation_sup() const;
  /// 2 pi * sum over modes of (|sin|+|cos|) * ||k||_1 — an upper bound on
  /// any operator norm of Dp.
  double jacobian_perturbation_bound() const;

 private:
  IntMatrix linear_part_;
  std::vector<PerturbationMode> modes_;
};

struct SolverConfig {
  double convergence_tol = 1e-12;       // max-norm of the lift residual
  double dedupe_radius = 1e-8;          // torus metric
  double transversality_threshold = 1e-8;  // |det(I - Df)| floor
  double label_rounding_tol = 1e-6;     // class label integer rounding
  int grid_density = 32;                // seeds per axis per offset cell
  int max_iterations = 50;
};

struct FixedPointNumeric {
  std::vector<double> coordinates;  // in [0,1)^n
  RealMatrix jacobian;
  int index = 0;                    // sign det(I - Df)
  std::vector<Int> class_label;     // Smith-coordinate coset label
  double residual = 0.0;
  double det_i_minus_df = 0.0;
  bool transversal = false;
};

struct FindReport {
  std::vector<FixedPointNumeric> points;
  Int expected_count = 0;   // |det(I - A)|
  bool count_ok = false;
  bool all_transversal = false;
  long long nonconverged_seeds = 0;
  long long merged_duplicates = 0;
  bool verdict = false;
};

/// Newton search from a uniform seed grid per integer offset cell.
/// Preconditions: det(I - A) != 0 (DegenerateError) and the perturbation
/// inside the amplitude guard (PreconditionError).
FindReport find_fixed_points(const SmoothTorusMap& f, const SolverConfig& cfg = {});

/// Canonical coset label of a verified fixed point: round(x - lift(x))
/// reduced modulo (I - A)Z^n.  Throws LabelError when the rounding
/// residual exceeds cfg.label_rounding_tol.
std::vector<Int> class_label(const SmoothTorusMap& f, const std::vector<double>& point,
                             const SolverConfig& cfg = {});

struct HopfReport {
  FindReport find;
  Int index_sum = 0;
  Int expected = 0;  // det(I - A)
  bool equal = false;
};

/// Sum of numerical indices against det(I - A), as integers.
HopfReport lefschetz_hopf_check(const SmoothTorusMap& f, const SolverConfig& cfg = {});

struct CyclicSmoothMap {
  std::vector<SmoothTorusMap> components;

  explicit CyclicSmoothMap(std::vector<SmoothTorusMap> comps)
      : components(std::move(comps)) {
    if (components.empty())
      throw DimensionError("CyclicSmoothMap: at least one component");
    for (const auto& c : components)
      if (c.dim() != components[0].dim())
        throw DimensionError("CyclicSmoothMap: components must share dimension");
  }
  int m() const { return static_cast<int>(components.size()); }
  int dim() const { return components[0].dim(); }
};

struct CyclicPointVerdict {
  std::vector<double> base_point;  // fixed point of the composed map
  linalg::CyclicDetReportReal dets;
  double rel_det_gap = 0.0;
};

struct CyclicJacobianReport {
  FindReport composed_find;
  std::vector<CyclicPointVerdict> points;
  bool all_signs_equal = false;
  bool all_conclusive = false;
  bool verdict = false;
};

/// At every fixed point of f_m o ... o f_1, assembles the block-cyclic N
/// from the component Jacobians along the orbit and compares
/// sign det(I_{mn} - N) with sign det(I_n - N_m ... N_1).
CyclicJacobianReport cyclic_jacobian_check(const CyclicSmoothMap& f,
                                           const SolverConfig& cfg = {});

struct FdReport {
  double max_abs_deviation = 0.0;
  double scale = 1.0;         // max(1, max |analytic entry|)
  double rel_deviation = 0.0;
  double step = 0.0;
  bool pass = false;
};

/// Analytic Jacobian against central finite differences at a point.
FdReport jacobian_fd_check(const SmoothTorusMap& f, const std::vector<double>& point,
                           double step = 1e-6, double rel_tol = 1e-5);

}  // namespace nk::smooth
