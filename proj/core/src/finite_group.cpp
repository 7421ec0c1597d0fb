#include "nk/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nk::groups {

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  // (a b)(x) = a(b(x))
  std::vector<int> c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

bool is_permutation(const std::vector<int>& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::string name)
    : order_(order), table_(std::move(table)), identity_(-1), name_(std::move(name)) {
  if (order_ <= 0) throw ValidationError("FiniteGroup: order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw ValidationError("FiniteGroup: table size must be order^2");
  for (int v : table_)
    if (v < 0 || v >= order_)
      throw ValidationError("FiniteGroup: table entry out of range");

  // two-sided identity
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a)
      ok = (mul(e, a) == a && mul(a, e) == a);
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw ValidationError("FiniteGroup: no two-sided identity");

  // inverses
  compute_inverses();

  // associativity
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ValidationError("FiniteGroup: table is not associative");
}

FiniteGroup::FiniteGroup(Trusted, int order, std::vector<int> table, std::string name)
    : order_(order), table_(std::move(table)), identity_(0), name_(std::move(name)) {
  compute_inverses();
}

void FiniteGroup::compute_inverses() {
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0)
      throw ValidationError("FiniteGroup: element without inverse");
  }
}

int FiniteGroup::element_order(int a) const {
  int n = 1;
  int x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(1, {0}, "1"); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw ValidationError("cyclic: n must be positive");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup(Trusted{}, n, std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw ValidationError("dihedral: n must be >= 1");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return from_permutation_generators(n, {rot, refl}, "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion() {
  // elements: index = axis*2 + (sign<0), axis in {1,i,j,k}
  auto mul_q = [](int a, int b) {
    int ax = a / 2, bx = b / 2;
    int sign = ((a % 2) ^ (b % 2)) ? 1 : 0;
    static const int axis_mul[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    // sign of the axis product: i*i = -1, i*j = +k, j*i = -k, ...
    static const int sign_mul[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int cx = axis_mul[ax][bx];
    int cs = sign ^ sign_mul[ax][bx];
    return cx * 2 + cs;
  };
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a * 8 + b] = mul_q(a, b);
  return FiniteGroup(8, std::move(t), "Q8");
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw ValidationError("symmetric: n must be >= 1");
  if (n == 1) return trivial();
  std::vector<int> cycle(n), swap01(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  return from_permutation_generators(n, {swap01, cycle}, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::alternating(int n) {
  if (n < 3) return trivial();
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<int> big(n);
  std::iota(big.begin(), big.end(), 0);
  if (n % 2 == 1) {
    std::rotate(big.begin(), big.begin() + 1, big.end());
  } else {
    std::rotate(big.begin() + 1, big.begin() + 2, big.end());
  }
  return from_permutation_generators(n, {three, big}, "A" + std::to_string(n));
}

FiniteGroup FiniteGroup::from_permutation_generators(
    int degree, const std::vector<std::vector<int>>& generators, std::string name,
    int order_cap) {
  if (degree <= 0) throw ValidationError("permutation group: degree must be positive");
  for (const auto& g : generators)
    if (!is_permutation(g, degree))
      throw ValidationError("permutation group: generator is not a permutation");

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  elems.push_back(id);
  index[id] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      auto prod = compose_perm(elems[head], g);
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        if (static_cast<int>(elems.size()) > order_cap)
          throw CapError("permutation group: order exceeds cap " +
                         std::to_string(order_cap));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a * n + b] = index.at(compose_perm(elems[a], elems[b]));
  return FiniteGroup(Trusted{}, n, std::move(t), std::move(name));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                        std::string name) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / nb, xb = x % nb;
      int ya = y / nb, yb = y % nb;
      t[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
    }
  if (name.empty()) name = a.name() + "x" + b.name();
  FiniteGroup g(Trusted{}, n, std::move(t), std::move(name));
  // identity of the product is a.identity()*nb + b.identity(); Trusted assumes 0
  if (a.identity() != 0 || b.identity() != 0) {
    // fall back to the validating constructor to locate the identity
    return FiniteGroup(n, g.table(), g.name());
  }
  return g;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      central = (g.mul(a, b) == g.mul(b, a));
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::set<int> orbit;
    for (int h = 0; h < g.order(); ++h) orbit.insert(g.conjugate(a, h));
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int x : cls) seen[x] = 1;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  push(g.identity());
  for (int x : gens) {
    if (x < 0 || x >= g.order())
      throw ValidationError("generated_subgroup: element out of range");
    push(x);
  }
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      push(g.mul(elems[head], elems[j]));
      push(g.mul(elems[j], elems[head]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  std::vector<int> triv{g.identity()};
  found.insert(triv);
  queue.push_back(triv);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> h = queue[head];
    std::vector<char> in(g.order(), 0);
    for (int x : h) in[x] = 1;
    for (int a = 0; a < g.order(); ++a) {
      if (in[a]) continue;
      std::vector<int> gens = h;
      gens.push_back(a);
      auto s = generated_subgroup(g, gens);
      if (found.insert(s).second) queue.push_back(std::move(s));
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

// |H ∩ K| for sorted element lists
std::size_t intersection_size(const std::vector<int>& h, const std::vector<int>& k) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < h.size() && j < k.size()) {
    if (h[i] < k[j])
      ++i;
    else if (h[i] > k[j])
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool commute_pointwise(const FiniteGroup& g, const std::vector<int>& h,
                       const std::vector<int>& k) {
  for (int a : h)
    for (int b : k)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

}  // namespace

UnfactorizabilityResult is_unfactorizable(const FiniteGroup& g) {
  UnfactorizabilityResult r;
  if (g.order() == 1) {
    r.unfactorizable = true;
    return r;
  }
  auto subs = all_subgroups(g);
  const std::size_t order = static_cast<std::size_t>(g.order());
  // G itself is a legal H or K (then the partner must centralize all of G).
  for (const auto& h : subs) {
    if (h.size() == 1) continue;
    for (const auto& k : subs) {
      if (k.size() == 1) continue;
      if (h.size() * k.size() < order) continue;  // |HK| <= |H||K|
      if (h.size() * k.size() != order * intersection_size(h, k)) continue;
      if (!commute_pointwise(g, h, k)) continue;
      r.unfactorizable = false;
      r.witness = FactorizationWitness{h, k};
      return r;
    }
  }
  r.unfactorizable = true;
  return r;
}

bool is_indecomposable(const FiniteGroup& g) {
  if (g.order() == 1) return true;
  auto subs = all_subgroups(g);
  const std::size_t order = static_cast<std::size_t>(g.order());
  for (const auto& h : subs) {
    if (h.size() == 1 || h.size() == order) continue;
    for (const auto& k : subs) {
      if (k.size() == 1 || k.size() == order) continue;
      if (h.size() * k.size() != order) continue;
      if (intersection_size(h, k) != 1) continue;
      if (!commute_pointwise(g, h, k)) continue;
      return false;
    }
  }
  return true;
}

EquivalenceReport unfactorizable_equivalence_check(const FiniteGroup& g) {
  EquivalenceReport r;
  r.unfactorizable = is_unfactorizable(g).unfactorizable;
  r.centerless = (center(g).size() == 1);
  r.indecomposable = is_indecomposable(g);
  r.consistent = (r.unfactorizable == (r.centerless && r.indecomposable));
  return r;
}

}  // namespace nk::groups
