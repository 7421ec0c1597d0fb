#include "nk/product_group.hpp"

#include <algorithm>
#include <set>

namespace nk::groups {

ProductGroupSpec::ProductGroupSpec(std::vector<ProductFactor> factors,
                                   long long order_cap)
    : factors_(std::move(factors)) {
  if (factors_.empty())
    throw ValidationError("ProductGroupSpec: at least one factor required");
  for (const auto& f : factors_)
    if (f.multiplicity < 1)
      throw ValidationError("ProductGroupSpec: multiplicity must be >= 1");

  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (find_isomorphism(factors_[i].group, factors_[j].group))
        throw ValidationError(
            "ProductGroupSpec: factor types must be pairwise non-isomorphic");

  for (std::size_t b = 0; b < factors_.size(); ++b) {
    block_start_.push_back(static_cast<int>(coord_block_.size()));
    for (int j = 0; j < factors_[b].multiplicity; ++j)
      coord_block_.push_back(static_cast<int>(b));
    for (int j = 0; j < factors_[b].multiplicity; ++j) {
      order_ *= factors_[b].group.order();
      if (order_ > order_cap)
        throw CapError("ProductGroupSpec: product order exceeds cap " +
                       std::to_string(order_cap));
    }
  }
}

ProductGroup::ProductGroup(const ProductGroupSpec& spec) {
  for (int c = 0; c < spec.num_coordinates(); ++c) {
    coord_group_.push_back(&spec.coordinate_group(c));
    radix_.push_back(spec.coordinate_group(c).order());
  }
  weight_.assign(radix_.size(), 1);
  for (int c = static_cast<int>(radix_.size()) - 2; c >= 0; --c)
    weight_[c] = weight_[c + 1] * radix_[c + 1];
  order_ = static_cast<int>(spec.order());
}

int ProductGroup::mul(int a, int b) const {
  int out = 0;
  for (std::size_t c = 0; c < radix_.size(); ++c) {
    int ac = (a / weight_[c]) % radix_[c];
    int bc = (b / weight_[c]) % radix_[c];
    out += coord_group_[c]->mul(ac, bc) * weight_[c];
  }
  return out;
}

int ProductGroup::inverse(int a) const {
  int out = 0;
  for (std::size_t c = 0; c < radix_.size(); ++c) {
    int ac = (a / weight_[c]) % radix_[c];
    out += coord_group_[c]->inverse(ac) * weight_[c];
  }
  return out;
}

std::vector<int> ProductGroup::decode(int index) const {
  std::vector<int> t(radix_.size());
  for (std::size_t c = 0; c < radix_.size(); ++c)
    t[c] = (index / weight_[c]) % radix_[c];
  return t;
}

int ProductGroup::encode(const std::vector<int>& tuple) const {
  if (tuple.size() != radix_.size())
    throw DimensionError("ProductGroup::encode: wrong tuple length");
  int out = 0;
  for (std::size_t c = 0; c < radix_.size(); ++c) {
    if (tuple[c] < 0 || tuple[c] >= radix_[c])
      throw ValidationError("ProductGroup::encode: component out of range");
    out += tuple[c] * weight_[c];
  }
  return out;
}

int ProductGroup::embed(int c, int g) const { return g * weight_[c]; }

int ProductGroup::component(int index, int c) const {
  return (index / weight_[c]) % radix_[c];
}

FiniteGroup ProductGroup::to_finite_group(std::string name, int order_cap) const {
  if (order_ > order_cap)
    throw CapError("to_finite_group: product order exceeds cap");
  std::vector<int> t(static_cast<std::size_t>(order_) * order_);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a * order_ + b] = mul(a, b);
  return FiniteGroup(order_, std::move(t), std::move(name));
}

std::vector<int> compose_product_automorphism(const ProductGroupSpec& spec,
                                              const ProductAutomorphism& pa) {
  if (static_cast<int>(pa.blocks.size()) != spec.num_blocks())
    throw ValidationError("compose: block count mismatch");
  ProductGroup p(spec);
  const int ncoord = p.num_coordinates();

  // global target coordinate and component map per source coordinate
  std::vector<int> target(ncoord);
  std::vector<const GroupAutomorphism*> comp(ncoord);
  for (int b = 0; b < spec.num_blocks(); ++b) {
    const auto& blk = pa.blocks[b];
    const int n_b = spec.factors()[b].multiplicity;
    if (static_cast<int>(blk.sigma.size()) != n_b ||
        static_cast<int>(blk.components.size()) != n_b)
      throw ValidationError("compose: block data size mismatch");
    std::vector<char> hit(n_b, 0);
    for (int j = 0; j < n_b; ++j) {
      int s = blk.sigma[j];
      if (s < 0 || s >= n_b || hit[s])
        throw ValidationError("compose: sigma is not a permutation");
      hit[s] = 1;
      target[spec.block_start(b) + j] = spec.block_start(b) + s;
      comp[spec.block_start(b) + j] = &blk.components[j];
      if (static_cast<int>(blk.components[j].images.size()) !=
          spec.factors()[b].group.order())
        throw ValidationError("compose: component automorphism size mismatch");
    }
  }

  std::vector<int> images(p.order());
  std::vector<int> out(ncoord);
  for (int x = 0; x < p.order(); ++x) {
    auto t = p.decode(x);
    for (int c = 0; c < ncoord; ++c) out[target[c]] = comp[c]->images[t[c]];
    images[x] = p.encode(out);
  }
  return images;
}

namespace detail {

ProductAutomorphism decompose_unchecked(const ProductGroupSpec& spec,
                                        const std::vector<int>& images) {
  ProductGroup p(spec);
  const int ncoord = p.num_coordinates();
  if (static_cast<int>(images.size()) != p.order())
    throw ValidationError("decompose: image vector has wrong length");

  // Locate, for each source coordinate, the unique coordinate its factor
  // is sent to; record the induced component map along the way.
  std::vector<int> target(ncoord, -1);
  std::vector<std::vector<int>> comp(ncoord);
  for (int c = 0; c < ncoord; ++c) {
    const FiniteGroup& fac = spec.coordinate_group(c);
    if (fac.order() == 1) {
      target[c] = c;  // trivial factor: nothing moves
      comp[c] = {0};
      continue;
    }
    int tgt = -1;
    for (int g = 0; g < fac.order(); ++g) {
      int y = images[p.embed(c, g)];
      for (int d = 0; d < ncoord; ++d) {
        int yd = p.component(y, d);
        if (yd == spec.coordinate_group(d).identity()) continue;
        if (tgt < 0) tgt = d;
        if (tgt != d)
          throw DecompositionError(
              "decompose: image of a factor meets several coordinates");
      }
    }
    if (tgt < 0)
      throw DecompositionError("decompose: factor image is trivial");
    if (spec.coordinate_block(tgt) != spec.coordinate_block(c))
      throw DecompositionError(
          "decompose: automorphism mixes non-isomorphic blocks");
    target[c] = tgt;
    comp[c].resize(fac.order());
    for (int g = 0; g < fac.order(); ++g)
      comp[c][g] = p.component(images[p.embed(c, g)], tgt);
  }

  ProductAutomorphism pa;
  for (int b = 0; b < spec.num_blocks(); ++b) {
    const int n_b = spec.factors()[b].multiplicity;
    const int start = spec.block_start(b);
    ProductAutomorphism::Block blk;
    blk.sigma.resize(n_b);
    blk.components.resize(n_b);
    std::vector<char> hit(n_b, 0);
    for (int j = 0; j < n_b; ++j) {
      int s = target[start + j] - start;
      if (s < 0 || s >= n_b || hit[s])
        throw DecompositionError("decompose: coordinate targets are not a permutation");
      hit[s] = 1;
      blk.sigma[j] = s;
      blk.components[j] = GroupAutomorphism{comp[start + j]};
      if (!is_automorphism(spec.factors()[b].group, blk.components[j].images))
        throw DecompositionError("decompose: component map is not an automorphism");
    }
    pa.blocks.push_back(std::move(blk));
  }

  if (compose_product_automorphism(spec, pa) != images)
    throw DecompositionError("decompose: round trip failed");
  return pa;
}

}  // namespace detail

ProductAutomorphism decompose_product_automorphism(const ProductGroupSpec& spec,
                                                   const std::vector<int>& images) {
  for (const auto& f : spec.factors())
    if (!is_unfactorizable(f.group).unfactorizable)
      throw PreconditionError("decompose: factor '" + f.group.name() +
                              "' is not unfactorizable");
  ProductGroup p(spec);
  if (!is_automorphism(p, images))
    throw ValidationError("decompose: images are not an automorphism of the product");
  return detail::decompose_unchecked(spec, images);
}

AutOrderReport aut_order_check(const ProductGroupSpec& spec, int factor_order_cap,
                               std::size_t count_cap) {
  AutOrderReport r;
  ProductGroup p(spec);
  r.enumerated = static_cast<long long>(enumerate_automorphisms(p, count_cap).size());
  r.formula = 1;
  for (const auto& f : spec.factors()) {
    long long aut = static_cast<long long>(
        automorphisms(f.group, factor_order_cap, count_cap).size());
    for (int j = 0; j < f.multiplicity; ++j) r.formula *= aut;
    for (int j = 2; j <= f.multiplicity; ++j) r.formula *= j;
  }
  r.equal = (r.enumerated == r.formula);
  return r;
}

}  // namespace nk::groups
