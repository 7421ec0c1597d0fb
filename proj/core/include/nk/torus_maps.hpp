#pragma once

#include <string>
#include <vector>

#include "nk/block_cyclic.hpp"
#include "nk/int_matrix.hpp"
#include "nk/smith.hpp"

namespace nk::torus {

using linalg::Int;
using linalg::IntMatrix;

/// Self-map of T^n determined by its action A on pi_1(T^n) = Z^n.
struct TorusMap {
  IntMatrix linear_part;

  explicit TorusMap(IntMatrix a) : linear_part(std::move(a)) {
    if (!linear_part.is_square())
      throw DimensionError("TorusMap: linear part must be square");
  }
  int dim() const { return static_cast<int>(linear_part.rows()); }
};

/// Fixed point class: a coset of (I - A)Z^n in Smith coordinates, with its
/// index.  On the torus every class of a non-degenerate map carries index
/// sgn det(I - A).
struct FixedPointClass {
  std::vector<Int> label;
  int index = 0;
  bool essential = false;
};

struct NielsenSummary {
  Int lefschetz = 0;                    // det(I - A)
  Int nielsen = 0;                      // |det(I - A)|, 0 when degenerate
  bool degenerate = false;              // det(I - A) == 0
  std::vector<FixedPointClass> classes; // empty when degenerate
};

/// Classes, indices, L and N of a torus map.  Classes are enumerated as
/// cokernel cosets; throws CapError when |det(I-A)| exceeds class_cap.
NielsenSummary analyze(const TorusMap& f, const Int& class_cap = Int(1000000));

/// Block-diagonal product map on the product torus.
TorusMap product_map(const std::vector<TorusMap>& fs);

struct ProductReport {
  NielsenSummary product;
  std::vector<NielsenSummary> factors;
  bool lefschetz_ok = false;   // L(prod) = prod L_i
  bool nielsen_ok = false;     // N(prod) = prod N_i
  bool classwise_ok = false;   // class split is a bijection with index products
  bool all_ok = false;
  std::vector<std::string> failures;
};

/// Analyzes the product map directly on the product torus and verifies the
/// three product identities class-by-class.
ProductReport analyze_product(const std::vector<TorusMap>& fs,
                              const Int& class_cap = Int(1000000));

/// tau o (f_1 x ... x f_m) with tau the m-cycle; all components share dim.
struct CyclicTorusMap {
  std::vector<TorusMap> components;

  explicit CyclicTorusMap(std::vector<TorusMap> comps)
      : components(std::move(comps)) {
    if (components.empty())
      throw DimensionError("CyclicTorusMap: at least one component");
    for (const auto& c : components)
      if (c.dim() != components[0].dim())
        throw DimensionError("CyclicTorusMap: components must share dimension");
  }
  int m() const { return static_cast<int>(components.size()); }
  int dim() const { return components[0].dim(); }
};

/// A_m ... A_2 A_1 on T^n.
TorusMap composed_map(const CyclicTorusMap& f);
/// The cyclic map on T^{mn}: linear part block_cyclic(A_1..A_m).
TorusMap cyclic_block_map(const CyclicTorusMap& f);

struct RhoPair {
  std::vector<Int> composed_label;
  std::vector<Int> cyclic_label;
  int composed_index = 0;
  int cyclic_index = 0;
};

/// Label correspondence class-of-composition -> class-of-cyclic-map:
/// the composed class with translation w maps to the cyclic class with
/// translation (w, 0, ..., 0).  Verified to be an index-preserving
/// bijection.  Throws DegenerateError when the composition is degenerate.
std::vector<RhoPair> rho_correspondence(const CyclicTorusMap& f,
                                        const Int& class_cap = Int(1000000));

struct CyclicReport {
  NielsenSummary composed;
  NielsenSummary cyclic;
  linalg::CyclicDetReport det_identity;
  bool lefschetz_ok = false;
  bool nielsen_ok = false;
  bool multiset_ok = false;  // index multisets agree
  bool rho_ok = false;       // bijection verified (vacuous when degenerate)
  bool all_ok = false;
  std::vector<std::string> failures;
};

/// Compares the composed map on T^n with the cyclic map on T^{mn}.
CyclicReport analyze_cyclic(const CyclicTorusMap& f,
                            const Int& class_cap = Int(1000000));

}  // namespace nk::torus
