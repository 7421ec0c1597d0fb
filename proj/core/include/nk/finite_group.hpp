#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nk/errors.hpp"

namespace nk::groups {

/// Finite group given by its Cayley table.  table(a, b) is the index of
/// the product a*b.  Construction validates closure, two-sided identity,
/// inverses and associativity, so downstream code can trust the value.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<int> table, std::string name = "");

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  /// Dihedral group of the n-gon, order 2n (n >= 1).
  static FiniteGroup dihedral(int n);
  /// Quaternion group of order 8.
  static FiniteGroup quaternion();
  static FiniteGroup symmetric(int n);
  static FiniteGroup alternating(int n);
  /// Closure of permutation generators acting on {0..degree-1}.
  static FiniteGroup from_permutation_generators(
      int degree, const std::vector<std::vector<int>>& generators,
      std::string name = "", int order_cap = 5000);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    std::string name = "");

  int order() const { return order_; }
  int identity() const { return identity_; }
  const std::string& name() const { return name_; }

  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int g, int by) const { return mul(mul(by, g), inverse(by)); }
  int element_order(int a) const;

  const std::vector<int>& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  struct Trusted {};
  FiniteGroup(Trusted, int order, std::vector<int> table, std::string name);
  void compute_inverses();

  int order_;
  std::vector<int> table_;
  int identity_;
  std::string name_;
  std::vector<int> inverse_;
};

/// {g : gh = hg for all h}, in element order.
std::vector<int> center(const FiniteGroup& g);

/// Orbits of the conjugation action; classes ordered by smallest member,
/// members sorted.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

/// Closure of a generating set inside g, sorted.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

/// Every subgroup of g, as sorted element lists, in a deterministic order
/// (by size, then lexicographic).
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

struct FactorizationWitness {
  std::vector<int> h, k;
};

struct UnfactorizabilityResult {
  bool unfactorizable = false;
  /// Present exactly when unfactorizable is false: nontrivial element-wise
  /// commuting subgroups H, K with HK = G.
  std::optional<FactorizationWitness> witness;
};

/// Searches for nontrivial subgroups H, K with hk = kh pointwise and HK = G.
UnfactorizabilityResult is_unfactorizable(const FiniteGroup& g);

/// True iff g admits no internal direct product decomposition with both
/// factors nontrivial.
bool is_indecomposable(const FiniteGroup& g);

struct EquivalenceReport {
  bool unfactorizable = false;
  bool centerless = false;
  bool indecomposable = false;
  /// unfactorizable == (centerless && indecomposable); both sides computed
  /// by independent searches.
  bool consistent = false;
};

EquivalenceReport unfactorizable_equivalence_check(const FiniteGroup& g);

}  // namespace nk::groups
