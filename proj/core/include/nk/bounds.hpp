#pragma once

#include <string>
#include <vector>

#include "nk/int_matrix.hpp"
#include "nk/torus_maps.hpp"

namespace nk::bounds {

using linalg::Int;

/// Closed surface with negative Euler characteristic, possibly taken with
/// a multiplicity (number of product copies).
struct SurfaceSpec {
  long long chi = 0;
  int multiplicity = 1;

  static SurfaceSpec from_genus(int genus, int multiplicity = 1);
  static SurfaceSpec from_chi(long long chi, int multiplicity = 1);
};

/// Per-class index interval (2 chi - 1, 1) for a hyperbolic surface.
/// Throws DomainError when chi >= 0.
std::pair<long long, long long> surface_index_interval(long long chi);

struct IndexMultiset {
  std::vector<long long> indices;  // one per fixed point class
  long long chi = 0;
};

struct Violation {
  std::string clause;  // "interval", "aggregate", "lefschetz_nielsen"
  std::string detail;
};

struct BoundReport {
  long long lower = 0;
  long long upper = 1;
  bool interval_ok = false;
  bool aggregate_ok = false;
  bool ln_inequality_ok = false;
  bool verdict = false;
  long long lefschetz = 0;  // sum of indices
  long long nielsen = 0;    // count of nonzero indices
  std::vector<Violation> violations;
};

/// Checks a class-index multiset against the surface constraints:
/// every index in [2 chi - 1, 1], the deficiency sum
/// sum_{ind < -1} (ind + 1) >= 2 chi, and |L - chi| <= N - chi.
BoundReport check_index_multiset(const IndexMultiset& m);

/// prod of per-factor bounds; DomainError when empty or any bound < 1.
Int product_bound(const std::vector<Int>& component_bounds);

/// prod |2 chi_i - 1|^{n_i}; DomainError when any chi >= 0.
Int hyperbolic_product_bound(const std::vector<SurfaceSpec>& surfaces);

struct OracleSweepConfig {
  std::vector<std::vector<torus::TorusMap>> tuples;
  std::vector<IndexMultiset> surface_multisets;
};

struct OracleCrossReport {
  std::size_t tuples_checked = 0;
  Int max_observed_index = 0;  // max |index| over all product classes
  bool product_bound_ok = false;
  std::size_t multisets_checked = 0;
  bool multisets_ok = false;
  bool verdict = false;
  std::vector<std::string> failures;
};

/// For every torus factor tuple: checks that no product-class index
/// exceeds the product of per-factor index maxima.  Bundled surface
/// multisets (chi < 0) additionally run through check_index_multiset.
OracleCrossReport cross_check_with_oracle(const OracleSweepConfig& cfg);

}  // namespace nk::bounds
