#include "nk/torus_maps.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nk::torus {

NielsenSummary analyze(const TorusMap& f, const Int& class_cap) {
  NielsenSummary s;
  IntMatrix b = linalg::identity_minus(f.linear_part);
  Int d = linalg::det_exact(b);
  if (d == 0) {
    s.degenerate = true;
    s.lefschetz = 0;
    s.nielsen = 0;
    return s;
  }
  s.lefschetz = d;
  s.nielsen = d < 0 ? Int(-d) : d;
  const int index = d < 0 ? -1 : 1;

  auto cok = linalg::cokernel(b);
  for (auto& label : cok.coset_representatives(class_cap)) {
    FixedPointClass c;
    c.label = std::move(label);
    c.index = index;
    c.essential = true;
    s.classes.push_back(std::move(c));
  }
  return s;
}

TorusMap product_map(const std::vector<TorusMap>& fs) {
  if (fs.empty()) throw DimensionError("product_map: empty factor list");
  std::size_t n = 0;
  for (const auto& f : fs) n += f.linear_part.rows();
  IntMatrix a(n, n);
  std::size_t off = 0;
  for (const auto& f : fs) {
    const std::size_t k = f.linear_part.rows();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        a(off + i, off + j) = f.linear_part(i, j);
    off += k;
  }
  return TorusMap(std::move(a));
}

ProductReport analyze_product(const std::vector<TorusMap>& fs, const Int& class_cap) {
  ProductReport rep;
  rep.product = analyze(product_map(fs), class_cap);
  Int l_expected = 1, n_expected = 1;
  for (const auto& f : fs) {
    rep.factors.push_back(analyze(f, class_cap));
    l_expected *= rep.factors.back().lefschetz;
    n_expected *= rep.factors.back().nielsen;
  }

  rep.lefschetz_ok = (rep.product.lefschetz == l_expected);
  if (!rep.lefschetz_ok)
    rep.failures.push_back("L(product) != product of L(f_i)");
  rep.nielsen_ok = (rep.product.nielsen == n_expected);
  if (!rep.nielsen_ok)
    rep.failures.push_back("N(product) != product of N(f_i)");

  // class-by-class: map each product class to its tuple of factor labels;
  // the map must be a bijection and indices must multiply
  rep.classwise_ok = true;
  if (!rep.product.degenerate) {
    std::vector<linalg::CokernelStructure> factor_cok;
    for (const auto& f : fs)
      factor_cok.push_back(linalg::cokernel(linalg::identity_minus(f.linear_part)));
    auto product_cok =
        linalg::cokernel(linalg::identity_minus(product_map(fs).linear_part));

    std::set<std::vector<Int>> seen;
    for (const auto& cls : rep.product.classes) {
      std::vector<Int> x = product_cok.representative_in_source(cls.label);
      std::vector<Int> combined;  // concatenated factor labels
      Int index_product = 1;
      std::size_t off = 0;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::size_t k = fs[i].linear_part.rows();
        std::vector<Int> xi(x.begin() + off, x.begin() + off + k);
        auto li = factor_cok[i].canonical_label(xi);
        combined.insert(combined.end(), li.begin(), li.end());
        off += k;
        index_product *= rep.factors[i].classes.empty()
                             ? Int(0)
                             : Int(rep.factors[i].classes.front().index);
      }
      if (!seen.insert(combined).second) {
        rep.classwise_ok = false;
        rep.failures.push_back("product class split is not injective");
        break;
      }
      if (Int(cls.index) != index_product) {
        rep.classwise_ok = false;
        rep.failures.push_back("class index != product of factor indices");
        break;
      }
    }
    if (rep.classwise_ok &&
        Int(static_cast<long long>(rep.product.classes.size())) != n_expected) {
      rep.classwise_ok = false;
      rep.failures.push_back("class count != product of factor class counts");
    }
  }

  rep.all_ok = rep.lefschetz_ok && rep.nielsen_ok && rep.classwise_ok;
  return rep;
}

TorusMap composed_map(const CyclicTorusMap& f) {
  std::vector<IntMatrix> blocks;
  for (const auto& c : f.components) blocks.push_back(c.linear_part);
  return TorusMap(linalg::cyclic_composition(blocks));
}

TorusMap cyclic_block_map(const CyclicTorusMap& f) {
  std::vector<IntMatrix> blocks;
  for (const auto& c : f.components) blocks.push_back(c.linear_part);
  return TorusMap(linalg::block_cyclic(blocks));
}

std::vector<RhoPair> rho_correspondence(const CyclicTorusMap& f, const Int& class_cap) {
  TorusMap comp = composed_map(f);
  TorusMap cyc = cyclic_block_map(f);
  auto comp_summary = analyze(comp, class_cap);
  if (comp_summary.degenerate)
    throw DegenerateError("rho_correspondence: composed map is degenerate");
  auto cyc_summary = analyze(cyc, class_cap);

  auto comp_cok = linalg::cokernel(linalg::identity_minus(comp.linear_part));
  auto cyc_cok = linalg::cokernel(linalg::identity_minus(cyc.linear_part));

  const std::size_t n = comp.linear_part.rows();
  const std::size_t mn = cyc.linear_part.rows();

  std::map<std::vector<Int>, int> cyclic_index_of;
  for (const auto& cls : cyc_summary.classes) cyclic_index_of[cls.label] = cls.index;

  std::vector<RhoPair> pairs;
  std::set<std::vector<Int>> hit;
  for (const auto& cls : comp_summary.classes) {
    // translation vector w of the composed class, then (w, 0, ..., 0)
    std::vector<Int> w = comp_cok.representative_in_source(cls.label);
    std::vector<Int> big(mn, Int(0));
    for (std::size_t i = 0; i < n; ++i) big[i] = w[i];
    RhoPair p;
    p.composed_label = cls.label;
    p.cyclic_label = cyc_cok.canonical_label(big);
    p.composed_index = cls.index;
    auto it = cyclic_index_of.find(p.cyclic_label);
    if (it == cyclic_index_of.end())
      throw Error("rho_correspondence: image label is not a class of the cyclic map");
    p.cyclic_index = it->second;
    if (!hit.insert(p.cyclic_label).second)
      throw Error("rho_correspondence: correspondence is not injective");
    pairs.push_back(std::move(p));
  }
  if (pairs.size() != cyc_summary.classes.size())
    throw Error("rho_correspondence: class counts differ");
  return pairs;
}

CyclicReport analyze_cyclic(const CyclicTorusMap& f, const Int& class_cap) {
  CyclicReport rep;
  rep.composed = analyze(composed_map(f), class_cap);
  rep.cyclic = analyze(cyclic_block_map(f), class_cap);

  std::vector<IntMatrix> blocks;
  for (const auto& c : f.components) blocks.push_back(c.linear_part);
  rep.det_identity = linalg::cyclic_det_identity_check(blocks);

  rep.lefschetz_ok = (rep.composed.lefschetz == rep.cyclic.lefschetz);
  if (!rep.lefschetz_ok) rep.failures.push_back("L(cyclic) != L(composed)");
  rep.nielsen_ok = (rep.composed.nielsen == rep.cyclic.nielsen);
  if (!rep.nielsen_ok) rep.failures.push_back("N(cyclic) != N(composed)");

  auto indices_of = [](const NielsenSummary& s) {
    std::vector<int> v;
    for (const auto& c : s.classes) v.push_back(c.index);
    std::sort(v.begin(), v.end());
    return v;
  };
  rep.multiset_ok = (indices_of(rep.composed) == indices_of(rep.cyclic));
  if (!rep.multiset_ok) rep.failures.push_back("index multisets differ");

  if (!rep.det_identity.equal)
    rep.failures.push_back("det(I - N) != det(I - A_m...A_1)");

  rep.rho_ok = true;
  if (!rep.composed.degenerate) {
    try {
      auto pairs = rho_correspondence(f, class_cap);
      for (const auto& p : pairs)
        if (p.composed_index != p.cyclic_index) {
          rep.rho_ok = false;
          rep.failures.push_back("rho correspondence does not preserve index");
          break;
        }
    } catch (const Error&) {
      rep.rho_ok = false;
      rep.failures.push_back("rho correspondence is not a bijection");
    }
  }

  rep.all_ok = rep.lefschetz_ok && rep.nielsen_ok && rep.multiset_ok &&
               rep.det_identity.equal && rep.rho_ok;
  return rep;
}

}  // namespace nk::torus
