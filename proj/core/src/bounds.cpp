#include "nk/bounds.hpp"

#include <cstdlib>

namespace nk::bounds {

SurfaceSpec SurfaceSpec::from_genus(int genus, int multiplicity) {
  if (genus < 2)
    throw DomainError("SurfaceSpec: genus must be >= 2 for a hyperbolic surface");
  if (multiplicity < 1) throw DomainError("SurfaceSpec: multiplicity must be >= 1");
  return SurfaceSpec{2 - 2LL * genus, multiplicity};
}

SurfaceSpec SurfaceSpec::from_chi(long long chi, int multiplicity) {
  if (chi >= 0) throw DomainError("SurfaceSpec: chi must be negative");
  if (multiplicity < 1) throw DomainError("SurfaceSpec: multiplicity must be >= 1");
  return SurfaceSpec{chi, multiplicity};
}

std::pair<long long, long long> surface_index_interval(long long chi) {
  if (chi >= 0)
    throw DomainError("surface_index_interval: chi must be negative");
  return {2 * chi - 1, 1};
}

BoundReport check_index_multiset(const IndexMultiset& m) {
  if (m.chi >= 0)
    throw DomainError("check_index_multiset: chi must be negative");
  BoundReport r;
  auto [lower, upper] = surface_index_interval(m.chi);
  r.lower = lower;
  r.upper = upper;

  r.interval_ok = true;
  long long deficiency = 0;
  for (long long ind : m.indices) {
    if (ind < lower || ind > upper) {
      r.interval_ok = false;
      r.violations.push_back(
          {"interval", "index " + std::to_string(ind) + " outside [" +
                           std::to_string(lower) + ", " + std::to_string(upper) + "]"});
    }
    if (ind < -1) deficiency += ind + 1;
    r.lefschetz += ind;
    if (ind != 0) ++r.nielsen;
  }

  r.aggregate_ok = (deficiency >= 2 * m.chi);
  if (!r.aggregate_ok)
    r.violations.push_back(
        {"aggregate", "sum_{ind<-1}(ind+1) = " + std::to_string(deficiency) +
                          " < 2 chi = " + std::to_string(2 * m.chi)});

  r.ln_inequality_ok = (std::llabs(r.lefschetz - m.chi) <= r.nielsen - m.chi);
  if (!r.ln_inequality_ok)
    r.violations.push_back(
        {"lefschetz_nielsen",
         "|L - chi| = " + std::to_string(std::llabs(r.lefschetz - m.chi)) +
             " > N - chi = " + std::to_string(r.nielsen - m.chi)});

  r.verdict = r.interval_ok && r.aggregate_ok && r.ln_inequality_ok;
  return r;
}

Int product_bound(const std::vector<Int>& component_bounds) {
  if (component_bounds.empty())
    throw DomainError("product_bound: empty bound list");
  Int b = 1;
  for (const Int& c : component_bounds) {
    if (c < 1) throw DomainError("product_bound: bounds must be >= 1");
    b *= c;
  }
  return b;
}

Int hyperbolic_product_bound(const std::vector<SurfaceSpec>& surfaces) {
  if (surfaces.empty())
    throw DomainError("hyperbolic_product_bound: empty surface list");
  Int b = 1;
  for (const auto& s : surfaces) {
    if (s.chi >= 0)
      throw DomainError("hyperbolic_product_bound: chi must be negative");
    Int base = 2 * Int(s.chi) - 1;
    if (base < 0) base = -base;
    for (int j = 0; j < s.multiplicity; ++j) b *= base;
  }
  return b;
}

OracleCrossReport cross_check_with_oracle(const OracleSweepConfig& cfg) {
  OracleCrossReport r;
  r.product_bound_ok = true;
  for (const auto& tuple : cfg.tuples) {
    auto rep = torus::analyze_product(tuple);
    Int factor_bound = 1;
    bool vacuous = false;
    for (const auto& f : rep.factors) {
      Int fmax = 0;
      for (const auto& c : f.classes) {
        Int a = c.index < 0 ? Int(-c.index) : Int(c.index);
        if (a > fmax) fmax = a;
      }
      if (fmax == 0) vacuous = true;  // degenerate factor kills the product
      factor_bound *= fmax;
    }
    for (const auto& c : rep.product.classes) {
      Int a = c.index < 0 ? Int(-c.index) : Int(c.index);
      if (a > r.max_observed_index) r.max_observed_index = a;
      if (!vacuous && a > factor_bound) {
        r.product_bound_ok = false;
        r.failures.push_back("observed product index above the factor bound");
      }
    }
    ++r.tuples_checked;
  }

  r.multisets_ok = true;
  for (const auto& m : cfg.surface_multisets) {
    auto rep = check_index_multiset(m);
    if (!rep.verdict) {
      r.multisets_ok = false;
      r.failures.push_back("bundled surface multiset rejected");
    }
    ++r.multisets_checked;
  }

  r.verdict = r.product_bound_ok && r.multisets_ok;
  return r;
}

}  // namespace nk::bounds
