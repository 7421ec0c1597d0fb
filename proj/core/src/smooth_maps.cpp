#include "nk/smooth_maps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace nk::smooth {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double torus_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double t = std::fabs(a[i] - b[i]);
    t = std::min(t, 1.0 - t);
    d = std::max(d, t);
  }
  return d;
}

std::vector<double> wrap_unit(const std::vector<double>& x) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = x[i] - std::floor(x[i]);
    if (y[i] >= 1.0) y[i] = 0.0;  // guard against floor rounding at 1.0-eps
  }
  return y;
}

}  // namespace

SmoothTorusMap::SmoothTorusMap(IntMatrix linear_part,
                               std::vector<PerturbationMode> modes)
    : linear_part_(std::move(linear_part)), modes_(std::move(modes)) {
  if (!linear_part_.is_square())
    throw DimensionError("SmoothTorusMap: linear part must be square");
  for (const auto& m : modes_) {
    if (m.coordinate < 0 || m.coordinate >= dim())
      throw ValidationError("SmoothTorusMap: mode coordinate out of range");
    if (static_cast<int>(m.frequency.size()) != dim())
      throw ValidationError("SmoothTorusMap: frequency vector has wrong length");
  }
}

std::vector<double> SmoothTorusMap::lift(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw DimensionError("SmoothTorusMap::lift: wrong point dimension");
  std::vector<double> y(dim(), 0.0);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      y[i] += static_cast<double>(linear_part_(i, j)) * x[j];
  for (const auto& m : modes_) {
    double phase = 0.0;
    for (int j = 0; j < dim(); ++j) phase += m.frequency[j] * x[j];
    phase *= kTwoPi;
    y[m.coordinate] += m.sin_coeff * std::sin(phase) + m.cos_coeff * std::cos(phase);
  }
  return y;
}

RealMatrix SmoothTorusMap::jacobian(const std::vector<double>& x) const {
  RealMatrix j = RealMatrix::from_int(linear_part_);
  for (const auto& m : modes_) {
    double phase = 0.0;
    for (int c = 0; c < dim(); ++c) phase += m.frequency[c] * x[c];
    phase *= kTwoPi;
    double factor = m.sin_coeff * std::cos(phase) - m.cos_coeff * std::sin(phase);
    for (int c = 0; c < dim(); ++c)
      j(m.coordinate, c) += kTwoPi * m.frequency[c] * factor;
  }
  return j;
}

double SmoothTorusMap::perturbation_sup() const {
  double s = 0.0;
  for (const auto& m : modes_)
    s += std::sqrt(m.sin_coeff * m.sin_coeff + m.cos_coeff * m.cos_coeff);
  return s;
}

double SmoothTorusMap::jacobian_perturbation_bound() const {
  double s = 0.0;
  for (const auto& m : modes_) {
    double k1 = 0.0;
    for (int f : m.frequency) k1 += std::abs(f);
    s += (std::fabs(m.sin_coeff) + std::fabs(m.cos_coeff)) * k1;
  }
  return kTwoPi * s;
}

namespace {

// Uniform machinery over "lift systems" so plain smooth maps and composed
// cyclic maps share the Newton search.
struct LiftSystem {
  int dim;
  IntMatrix linear;  // exact linear part of the lift
  std::function<std::vector<double>(const std::vector<double>&)> eval;
  std::function<RealMatrix(const std::vector<double>&)> jac;
  double sup_bound;  // sup-norm bound of the periodic part
};

LiftSystem system_of(const SmoothTorusMap& f) {
  return LiftSystem{
      f.dim(), f.linear_part(),
      [&f](const std::vector<double>& x) { return f.lift(x); },
      [&f](const std::vector<double>& x) { return f.jacobian(x); },
      f.perturbation_sup()};
}

FindReport find_fixed_points_impl(const LiftSystem& sys, const SolverConfig& cfg) {
  const int n = sys.dim;
  IntMatrix b = linalg::identity_minus(sys.linear);
  Int d = linalg::det_exact(b);
  if (d == 0)
    throw DegenerateError("find_fixed_points: det(I - A) = 0");
  auto cok = linalg::cokernel(b);

  FindReport rep;
  rep.expected_count = d < 0 ? Int(-d) : d;

  // Offset box: v = (A - I)x + p(x) with x in [0,1)^n stays within the
  // column sums of A - I widened by the perturbation sup.
  std::vector<long long> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    double lo_d = 0.0, hi_d = 0.0;
    for (int j = 0; j < n; ++j) {
      double e = static_cast<double>(sys.linear(i, j)) - (i == j ? 1.0 : 0.0);
      if (e < 0)
        lo_d += e;
      else
        hi_d += e;
    }
    lo[i] = static_cast<long long>(std::floor(lo_d - sys.sup_bound));
    hi[i] = static_cast<long long>(std::ceil(hi_d + sys.sup_bound));
  }

  double cells = 1.0;
  for (int i = 0; i < n; ++i) cells *= static_cast<double>(hi[i] - lo[i] + 1);
  double seeds_per_cell = std::pow(std::max(1, cfg.grid_density), n);
  if (cells * seeds_per_cell > 2e7)
    throw CapError(
        "find_fixed_points: seed budget exceeded; lower grid_density or the "
        "linear part's entries");

  std::vector<std::vector<double>> accepted;
  std::vector<double> x(n), r(n), delta(n);

  auto newton_from = [&](const std::vector<double>& seed,
                         const std::vector<double>& offset) -> bool {
    x = seed;
    for (int it = 0; it < cfg.max_iterations; ++it) {
      std::vector<double> fx = sys.eval(x);
      double rn = 0.0;
      for (int i = 0; i < n; ++i) {
        r[i] = fx[i] - x[i] - offset[i];
        rn = std::max(rn, std::fabs(r[i]));
      }
      if (rn <= cfg.convergence_tol) return true;
      RealMatrix j = sys.jac(x);
      for (int i = 0; i < n; ++i) j(i, i) -= 1.0;
      for (int i = 0; i < n; ++i) r[i] = -r[i];
      if (!linalg::solve_real(j, r, delta)) return false;
      double step_norm = 0.0;
      for (int i = 0; i < n; ++i) {
        x[i] += delta[i];
        step_norm = std::max(step_norm, std::fabs(delta[i]));
      }
      if (step_norm > 1e6) return false;  // running away
    }
    return false;
  };

  // Odometer over offsets, uniform seed grid per cell.
  std::vector<long long> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo[i];
  const int g = std::max(1, cfg.grid_density);
  std::vector<int> sgrid(n, 0);
  for (;;) {
    std::vector<double> offset(n);
    for (int i = 0; i < n; ++i) offset[i] = static_cast<double>(v[i]);

    std::fill(sgrid.begin(), sgrid.end(), 0);
    for (;;) {
      std::vector<double> seed(n);
      for (int i = 0; i < n; ++i) seed[i] = (sgrid[i] + 0.5) / g;
      if (newton_from(seed, offset)) {
        accepted.push_back(wrap_unit(x));
      } else {
        ++rep.nonconverged_seeds;
      }
      int i = n - 1;
      while (i >= 0 && ++sgrid[i] == g) sgrid[i--] = 0;
      if (i < 0) break;
    }

    int i = n - 1;
    while (i >= 0 && ++v[i] > hi[i]) {
      v[i] = lo[i];
      --i;
    }
    if (i < 0) break;
  }

  // Deterministic merge: sort by coordinates, dedupe in the torus metric.
  std::sort(accepted.begin(), accepted.end());
  std::vector<std::vector<double>> unique_pts;
  for (const auto& p : accepted) {
    bool dup = false;
    for (const auto& q : unique_pts)
      if (torus_distance(p, q) <= cfg.dedupe_radius) {
        dup = true;
        ++rep.merged_duplicates;
        break;
      }
    if (!dup) unique_pts.push_back(p);
  }

  bool labels_ok = true;
  for (const auto& p : unique_pts) {
    FixedPointNumeric fp;
    fp.coordinates = p;
    std::vector<double> fx = sys.eval(p);
    double res = 0.0;
    std::vector<Int> w(n);
    for (int i = 0; i < n; ++i) {
      double u = fx[i] - p[i];
      long long nearest = std::llround(u);
      res = std::max(res, std::fabs(u - static_cast<double>(nearest)));
      w[i] = Int(-nearest);  // label uses x - f(x)
    }
    fp.residual = res;
    if (res > cfg.label_rounding_tol) labels_ok = false;
    fp.class_label = cok.canonical_label(w);
    fp.jacobian = sys.jac(p);
    RealMatrix imj = RealMatrix::identity(n) - fp.jacobian;
    fp.det_i_minus_df = linalg::det_real(imj);
    fp.transversal =
        std::fabs(fp.det_i_minus_df) >= cfg.transversality_threshold;
    fp.index = fp.det_i_minus_df > 0 ? 1 : (fp.det_i_minus_df < 0 ? -1 : 0);
    rep.points.push_back(std::move(fp));
  }

  rep.count_ok =
      (Int(static_cast<long long>(rep.points.size())) == rep.expected_count);
  rep.all_transversal = true;
  for (const auto& fp : rep.points)
    if (!fp.transversal) rep.all_transversal = false;
  rep.verdict = rep.count_ok && rep.all_transversal && labels_ok;
  return rep;
}

void check_amplitude_guard(const SmoothTorusMap& f) {
  if (f.modes().empty()) return;
  double sigma_min =
      linalg::min_singular_value(RealMatrix::from_int(linalg::identity_minus(f.linear_part())));
  if (f.jacobian_perturbation_bound() >= 0.5 * sigma_min)
    throw PreconditionError(
        "find_fixed_points: perturbation exceeds the amplitude guard "
        "(2pi sum (|s|+|c|)||k||_1 must stay below half the smallest "
        "singular value of I - A)");
}

}  // namespace

FindReport find_fixed_points(const SmoothTorusMap& f, const SolverConfig& cfg) {
  check_amplitude_guard(f);
  return find_fixed_points_impl(system_of(f), cfg);
}

std::vector<Int> class_label(const SmoothTorusMap& f, const std::vector<double>& point,
                             const SolverConfig& cfg) {
  const int n = f.dim();
  auto cok = linalg::cokernel(linalg::identity_minus(f.linear_part()));
  std::vector<double> fx = f.lift(point);
  std::vector<Int> w(n);
  for (int i = 0; i < n; ++i) {
    double u = fx[i] - point[i];
    long long nearest = std::llround(u);
    if (std::fabs(u - static_cast<double>(nearest)) > cfg.label_rounding_tol)
      throw LabelError("class_label: translation vector is not integral");
    w[i] = Int(-nearest);
  }
  return cok.canonical_label(w);
}

HopfReport lefschetz_hopf_check(const SmoothTorusMap& f, const SolverConfig& cfg) {
  HopfReport rep;
  rep.find = find_fixed_points(f, cfg);
  rep.expected = linalg::det_exact(linalg::identity_minus(f.linear_part()));
  for (const auto& p : rep.find.points) rep.index_sum += p.index;
  rep.equal = (rep.index_sum == rep.expected);
  return rep;
}

CyclicJacobianReport cyclic_jacobian_check(const CyclicSmoothMap& f,
                                           const SolverConfig& cfg) {
  // No per-component amplitude guard here: components may be degenerate
  // as standalone maps (shears, identities) while the composition is
  // transversal.  The count and transversality verdicts of the composed
  // search carry the precondition instead.

  // composed lift F_m o ... o F_1 as a lift system
  std::vector<IntMatrix> linear_blocks;
  for (const auto& c : f.components) linear_blocks.push_back(c.linear_part());
  LiftSystem sys;
  sys.dim = f.dim();
  sys.linear = linalg::cyclic_composition(linear_blocks);
  sys.eval = [&f](const std::vector<double>& x) {
    std::vector<double> y = x;
    for (const auto& c : f.components) y = c.lift(y);
    return y;
  };
  sys.jac = [&f](const std::vector<double>& x) {
    std::vector<double> y = x;
    RealMatrix j = RealMatrix::identity(f.dim());
    for (const auto& c : f.components) {
      j = c.jacobian(y) * j;
      y = c.lift(y);
    }
    return j;
  };
  // crude sup bound for the periodic part of the composition: propagate
  // component sups through the remaining linear parts
  double sup = 0.0;
  for (int i = 0; i < f.m(); ++i) {
    double amp = f.components[i].perturbation_sup();
    for (int j = i + 1; j < f.m(); ++j) {
      double row_norm = 1.0;
      const auto& a = f.components[j].linear_part();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        double s = 0.0;
        for (std::size_t c2 = 0; c2 < a.cols(); ++c2)
          s += std::fabs(static_cast<double>(a(r, c2)));
        row_norm = std::max(row_norm, s);
      }
      amp *= row_norm;
      amp += f.components[j].perturbation_sup();
    }
    sup += amp;
  }
  sys.sup_bound = sup;

  CyclicJacobianReport rep;
  rep.composed_find = find_fixed_points_impl(sys, cfg);

  rep.all_signs_equal = true;
  rep.all_conclusive = true;
  for (const auto& p : rep.composed_find.points) {
    CyclicPointVerdict v;
    v.base_point = p.coordinates;
    // orbit a_1 = x, a_{i+1} = F_i(a_i); blocks N_i = DF_i(a_i)
    std::vector<RealMatrix> blocks;
    std::vector<double> a = p.coordinates;
    for (const auto& c : f.components) {
      blocks.push_back(c.jacobian(a));
      a = c.lift(a);
    }
    v.dets = linalg::cyclic_det_identity_check_real(blocks,
                                                    cfg.transversality_threshold);
    double denom = std::max(1.0, std::fabs(v.dets.lhs));
    v.rel_det_gap = std::fabs(v.dets.lhs - v.dets.rhs) / denom;
    if (!v.dets.conclusive) rep.all_conclusive = false;
    if (v.dets.conclusive && !v.dets.signs_equal) rep.all_signs_equal = false;
    rep.points.push_back(std::move(v));
  }
  rep.verdict = rep.composed_find.verdict && rep.all_signs_equal && rep.all_conclusive;
  return rep;
}

FdReport jacobian_fd_check(const SmoothTorusMap& f, const std::vector<double>& point,
                           double step, double rel_tol) {
  const int n = f.dim();
  RealMatrix analytic = f.jacobian(point);
  FdReport rep;
  rep.step = step;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rep.scale = std::max(rep.scale, std::fabs(analytic(i, j)));
  for (int j = 0; j < n; ++j) {
    std::vector<double> xp = point, xm = point;
    xp[j] += step;
    xm[j] -= step;
    std::vector<double> fp = f.lift(xp), fm = f.lift(xm);
    for (int i = 0; i < n; ++i) {
      double fd = (fp[i] - fm[i]) / (2.0 * step);
      rep.max_abs_deviation =
          std::max(rep.max_abs_deviation, std::fabs(fd - analytic(i, j)));
    }
  }
  rep.rel_deviation = rep.max_abs_deviation / rep.scale;
  rep.pass = rep.rel_deviation <= rel_tol;
  return rep;
}

}  // namespace nk::smooth
