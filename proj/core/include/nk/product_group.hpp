#pragma once

#include <string>
#include <vector>

#include "nk/automorphisms.hpp"
#include "nk/finite_group.hpp"

namespace nk::groups {

struct ProductFactor {
  FiniteGroup group;
  int multiplicity = 1;
};

/// G_1^{n_1} x ... x G_m^{n_m} with pairwise non-isomorphic factor types.
/// Construction verifies multiplicities, pairwise non-isomorphism (by
/// backtracking isomorphism search) and the total order cap.
class ProductGroupSpec {
 public:
  explicit ProductGroupSpec(std::vector<ProductFactor> factors,
                            long long order_cap = 5000);

  const std::vector<ProductFactor>& factors() const { return factors_; }
  int num_blocks() const { return static_cast<int>(factors_.size()); }
  int num_coordinates() const { return static_cast<int>(coord_block_.size()); }
  long long order() const { return order_; }

  /// Block index of a global coordinate.
  int coordinate_block(int c) const { return coord_block_[c]; }
  /// First global coordinate of a block.
  int block_start(int b) const { return block_start_[b]; }
  const FiniteGroup& coordinate_group(int c) const {
    return factors_[coord_block_[c]].group;
  }

 private:
  std::vector<ProductFactor> factors_;
  std::vector<int> coord_block_;
  std::vector<int> block_start_;
  long long order_ = 1;
};

/// Group-operations facade over tuple indices for the product of a spec.
/// Element index encoding is mixed-radix, coordinate 0 most significant.
/// Borrows the factor tables: the spec must outlive the facade.
class ProductGroup {
 public:
  explicit ProductGroup(const ProductGroupSpec& spec);

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inverse(int a) const;

  int num_coordinates() const { return static_cast<int>(radix_.size()); }
  std::vector<int> decode(int index) const;
  int encode(const std::vector<int>& tuple) const;
  /// Element with g at coordinate c and identity elsewhere.
  int embed(int c, int g) const;
  int component(int index, int c) const;

  /// Materialize a Cayley-table group (small products only).
  FiniteGroup to_finite_group(std::string name = "", int order_cap = 2000) const;

 private:
  std::vector<const FiniteGroup*> coord_group_;
  std::vector<int> radix_;
  std::vector<int> weight_;
  int order_;
};

/// sigma_i and phi_{i,j} per iso-block.  sigma[j] is the target copy of
/// source copy j inside the block; components[j] acts on source copy j.
struct ProductAutomorphism {
  struct Block {
    std::vector<int> sigma;
    std::vector<GroupAutomorphism> components;
  };
  std::vector<Block> blocks;
};

/// Rebuilds the image permutation of the product from decomposed data:
/// result(x)_{i, sigma_i(j)} = phi_{i,j}(x_{i,j}).
std::vector<int> compose_product_automorphism(const ProductGroupSpec& spec,
                                              const ProductAutomorphism& pa);

/// Splits an automorphism of the product into per-block permutations and
/// component automorphisms.  Preconditions: every factor type passes
/// is_unfactorizable, and `images` is an automorphism of the product.
/// The round trip compose(decompose(phi)) == phi is verified before return.
ProductAutomorphism decompose_product_automorphism(const ProductGroupSpec& spec,
                                                   const std::vector<int>& images);

namespace detail {
/// Decomposition core without the unfactorizability / automorphism
/// prechecks; exposed so the failure paths can be exercised directly.
ProductAutomorphism decompose_unchecked(const ProductGroupSpec& spec,
                                        const std::vector<int>& images);
}  // namespace detail

struct AutOrderReport {
  long long enumerated = 0;
  long long formula = 0;
  bool equal = false;
};

/// Brute-force |Aut(product)| against prod_i |Aut(G_i)|^{n_i} * n_i!.
AutOrderReport aut_order_check(const ProductGroupSpec& spec,
                               int factor_order_cap = 120,
                               std::size_t count_cap = 1000000);

}  // namespace nk::groups
