#include "nk/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nk/smith.hpp"

namespace nk::homology {

using linalg::Int;
using linalg::IntMatrix;

SimplicialComplex::SimplicialComplex(int vertices,
                                     std::vector<std::vector<int>> simplices)
    : vertices_(vertices) {
  if (vertices < 0) throw ValidationError("complex: negative vertex count");
  std::set<std::vector<int>> seen;
  int maxdim = -1;
  for (auto& s : simplices) {
    if (s.empty()) throw ValidationError("complex: empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("complex: repeated vertex in a simplex");
    if (s.front() < 0 || s.back() >= vertices)
      throw ValidationError("complex: vertex index out of range");
    if (!seen.insert(s).second)
      throw ValidationError("complex: duplicate simplex");
    maxdim = std::max(maxdim, static_cast<int>(s.size()) - 1);
  }
  by_dim_.resize(maxdim + 1);
  for (const auto& s : seen) by_dim_[s.size() - 1].push_back(s);
  // std::set order is lexicographic within a fixed size; per-dimension
  // vectors stay sorted because shorter-vs-longer never mix here.
  for (auto& dim : by_dim_) std::sort(dim.begin(), dim.end());

  // closure under faces
  for (int q = 1; q <= maxdim; ++q)
    for (const auto& s : by_dim_[q]) {
      std::vector<int> face(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        if (!seen.count(face))
          throw ValidationError("complex: missing face of a listed simplex");
      }
    }
}

SimplicialComplex SimplicialComplex::from_maximal(
    int vertices, std::vector<std::vector<int>> maximal) {
  std::set<std::vector<int>> closure;
  // all nonempty subsets of each maximal simplex
  for (auto& s : maximal) {
    std::sort(s.begin(), s.end());
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(s[i]);
      closure.insert(sub);
    }
  }
  return SimplicialComplex(
      vertices, std::vector<std::vector<int>>(closure.begin(), closure.end()));
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices(int q) const {
  static const std::vector<std::vector<int>> empty;
  if (q < 0 || q > dimension()) return empty;
  return by_dim_[q];
}

int SimplicialComplex::index_of(const std::vector<int>& sorted_simplex) const {
  const int q = static_cast<int>(sorted_simplex.size()) - 1;
  if (q < 0 || q > dimension()) return -1;
  const auto& v = by_dim_[q];
  auto it = std::lower_bound(v.begin(), v.end(), sorted_simplex);
  if (it == v.end() || *it != sorted_simplex) return -1;
  return static_cast<int>(it - v.begin());
}

std::size_t SimplicialComplex::total_simplices() const {
  std::size_t n = 0;
  for (const auto& d : by_dim_) n += d.size();
  return n;
}

std::vector<std::vector<int>> SimplicialComplex::all_simplices() const {
  std::vector<std::vector<int>> out;
  out.reserve(total_simplices());
  for (const auto& d : by_dim_)
    for (const auto& s : d) out.push_back(s);
  return out;
}

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& k) {
  std::vector<IntMatrix> out;
  for (int q = 1; q <= k.dimension(); ++q) {
    IntMatrix d(k.count(q - 1), k.count(q));
    const auto& simps = k.simplices(q);
    for (std::size_t j = 0; j < simps.size(); ++j) {
      const auto& s = simps[j];
      std::vector<int> face(s.size() - 1);
      int sign = 1;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        int row = k.index_of(face);
        d(row, j) += sign;
        sign = -sign;
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (int q = 0; q <= k.dimension(); ++q)
    chi += (q % 2 == 0) ? static_cast<long long>(k.count(q))
                        : -static_cast<long long>(k.count(q));
  return chi;
}

namespace {

// parity sign of the permutation sorting `v` (v must have distinct entries)
int sort_parity(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

}  // namespace

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  const auto all = k.all_simplices();
  std::map<std::vector<int>, int> bary;  // simplex of K -> vertex of Sd K
  for (std::size_t i = 0; i < all.size(); ++i) bary[all[i]] = static_cast<int>(i);

  // flags: strictly increasing chains of faces; vertex ids follow the
  // dimension-major canonical order so chains are automatically sorted
  std::vector<std::vector<int>> flags;
  std::vector<std::vector<int>> chain_stack;
  // grow chains upward: a chain ending at simplex s extends to any simplex
  // having s as a proper face
  std::vector<std::vector<std::vector<int>>> chains_by_end(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    chains_by_end[i].push_back({bary.at(all[i])});
    // proper faces of all[i]
    const auto& s = all[i];
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (1u << b)) sub.push_back(s[b]);
      int fv = bary.at(sub);
      for (const auto& c : chains_by_end[fv]) {
        auto ext = c;
        ext.push_back(bary.at(s));
        chains_by_end[i].push_back(std::move(ext));
      }
    }
  }
  for (auto& per_end : chains_by_end)
    for (auto& c : per_end) flags.push_back(std::move(c));
  return SimplicialComplex(static_cast<int>(all.size()), std::move(flags));
}

std::vector<IntMatrix> subdivision_chain_map(const SimplicialComplex& k,
                                             const SimplicialComplex& sd) {
  const auto all = k.all_simplices();
  std::map<std::vector<int>, int> bary;
  for (std::size_t i = 0; i < all.size(); ++i) bary[all[i]] = static_cast<int>(i);

  // sparse chains per simplex of K, by dimension
  using Chain = std::map<int, Int>;  // index of Sd-simplex (within its dim) -> coeff
  std::vector<std::vector<Chain>> lambda(k.dimension() + 1);

  for (int q = 0; q <= k.dimension(); ++q) {
    const auto& simps = k.simplices(q);
    lambda[q].resize(simps.size());
    for (std::size_t j = 0; j < simps.size(); ++j) {
      const auto& s = simps[j];
      if (q == 0) {
        std::vector<int> v{bary.at(s)};
        lambda[0][j][sd.index_of(v)] = 1;
        continue;
      }
      const int cone_vertex = bary.at(s);
      Chain out;
      // lambda(s) = cone over lambda(boundary s); the cone vertex is the
      // barycenter of s, whose id exceeds those of all its faces, so it is
      // appended last: prepending it instead would cost a (-1)^q parity.
      std::vector<int> face(s.size() - 1);
      int sign = 1;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        int face_idx = k.index_of(face);
        for (const auto& [sd_idx, coeff] : lambda[q - 1][face_idx]) {
          std::vector<int> simplex = sd.simplices(q - 1)[sd_idx];
          simplex.push_back(cone_vertex);
          int target = sd.index_of(simplex);
          if (target < 0)
            throw Error("subdivision_chain_map: flag missing in Sd complex");
          // appended-last cone of [u_0..u_{q-1}] equals (-1)^q times the
          // prepended cone; fold that parity in with the boundary sign
          Int term = coeff * sign * ((q % 2 == 0) ? 1 : -1);
          out[target] += term;
          if (out[target] == 0) out.erase(target);
        }
        sign = -sign;
      }
      lambda[q][j] = std::move(out);
    }
  }

  std::vector<IntMatrix> mats;
  for (int q = 0; q <= k.dimension(); ++q) {
    IntMatrix m(sd.count(q), k.count(q));
    for (std::size_t j = 0; j < lambda[q].size(); ++j)
      for (const auto& [row, coeff] : lambda[q][j]) m(row, j) = coeff;
    mats.push_back(std::move(m));
  }
  return mats;
}

std::vector<IntMatrix> induced_chain_map(const SimplicialComplex& src,
                                         const SimplicialComplex& dst,
                                         const std::vector<int>& vertex_images) {
  if (static_cast<int>(vertex_images.size()) != src.vertex_count())
    throw ValidationError("simplicial map: wrong number of vertex images");
  for (int v : vertex_images)
    if (v < 0 || v >= dst.vertex_count())
      throw ValidationError("simplicial map: image vertex out of range");

  // validation: image of every simplex must span a simplex of dst
  for (int q = 0; q <= src.dimension(); ++q)
    for (const auto& s : src.simplices(q)) {
      std::vector<int> img;
      for (int v : s) img.push_back(vertex_images[v]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (dst.index_of(img) < 0)
        throw ValidationError("simplicial map: simplex image spans no simplex");
    }

  std::vector<IntMatrix> mats;
  for (int q = 0; q <= src.dimension(); ++q) {
    IntMatrix m(dst.count(q), src.count(q));
    const auto& simps = src.simplices(q);
    for (std::size_t j = 0; j < simps.size(); ++j) {
      std::vector<int> img;
      for (int v : simps[j]) img.push_back(vertex_images[v]);
      std::vector<int> sorted = img;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        continue;  // collapsed: contributes zero
      int row = dst.index_of(sorted);
      m(row, j) = sort_parity(img);
    }
    mats.push_back(std::move(m));
  }
  return mats;
}

namespace {

// columns [rank, n) of V form a basis of ker M (saturated in Z^n)
IntMatrix kernel_basis(const IntMatrix& boundary, std::size_t domain_dim) {
  if (boundary.rows() == 0) {
    return IntMatrix::identity(domain_dim);
  }
  auto s = linalg::smith_normal_form(boundary);
  std::size_t rank = 0;
  for (const Int& d : s.diagonal())
    if (d != 0) ++rank;
  IntMatrix z(domain_dim, domain_dim - rank);
  for (std::size_t i = 0; i < domain_dim; ++i)
    for (std::size_t j = rank; j < domain_dim; ++j)
      z(i, j - rank) = s.v(i, j);
  return z;
}

// solves Z X = B exactly (columns of B must lie in the lattice spanned by Z)
IntMatrix solve_in_lattice(const IntMatrix& z, const IntMatrix& b) {
  auto s = linalg::smith_normal_form(z);
  const std::size_t zcols = z.cols();
  IntMatrix ub = s.u * b;
  IntMatrix y(zcols, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < zcols; ++i) {
      const Int& d = s.d(i, i);
      if (d == 0) {
        if (ub(i, j) != 0)
          throw Error("homology: vector outside cycle lattice");
        y(i, j) = 0;
        continue;
      }
      if (ub(i, j) % d != 0)
        throw Error("homology: non-integral cycle coordinates");
      y(i, j) = ub(i, j) / d;
    }
    for (std::size_t i = zcols; i < ub.rows(); ++i)
      if (ub(i, j) != 0) throw Error("homology: vector outside cycle lattice");
  }
  return s.v * y;
}

}  // namespace

std::vector<long long> betti_numbers(const SimplicialComplex& k) {
  std::vector<long long> betti;
  auto boundaries = boundary_matrices(k);
  auto rank_of = [](const IntMatrix& m) {
    auto s = linalg::smith_normal_form(m);
    long long r = 0;
    for (const Int& d : s.diagonal())
      if (d != 0) ++r;
    return r;
  };
  for (int q = 0; q <= k.dimension(); ++q) {
    long long dim_cq = static_cast<long long>(k.count(q));
    long long rank_dq = (q >= 1) ? rank_of(boundaries[q - 1]) : 0;
    long long rank_dq1 = (q < k.dimension()) ? rank_of(boundaries[q]) : 0;
    betti.push_back(dim_cq - rank_dq - rank_dq1);
  }
  return betti;
}

LefschetzReport lefschetz_report(const SimplicialComplex& k, const SimplicialMap& f) {
  // Assemble the chain self-map on C(K): either the plain induced map, or
  // f_# composed with s levels of subdivision chain maps.
  std::vector<IntMatrix> m;
  if (f.subdivisions == 0) {
    m = induced_chain_map(k, k, f.vertex_images);
  } else {
    std::vector<SimplicialComplex> levels{k};
    for (int s = 0; s < f.subdivisions; ++s)
      levels.push_back(barycentric_subdivision(levels.back()));
    std::vector<IntMatrix> acc;  // C(K) -> C(levels.back())
    for (int s = 0; s < f.subdivisions; ++s) {
      auto lam = subdivision_chain_map(levels[s], levels[s + 1]);
      if (s == 0) {
        acc = std::move(lam);
      } else {
        for (std::size_t q = 0; q < acc.size(); ++q)
          acc[q] = lam[q] * acc[q];
      }
    }
    auto fm = induced_chain_map(levels.back(), k, f.vertex_images);
    m.resize(k.dimension() + 1, IntMatrix());
    for (int q = 0; q <= k.dimension(); ++q) m[q] = fm[q] * acc[q];
  }

  // internal sanity: the assembled maps commute with the boundary
  auto boundaries = boundary_matrices(k);
  for (int q = 1; q <= k.dimension(); ++q)
    if (boundaries[q - 1] * m[q] != m[q - 1] * boundaries[q - 1])
      throw Error("lefschetz_report: assembled map is not a chain map");

  LefschetzReport rep;
  for (int q = 0; q <= k.dimension(); ++q) {
    const std::size_t nq = k.count(q);
    const IntMatrix& dq =
        (q >= 1) ? boundaries[q - 1] : IntMatrix::zero(0, nq);
    IntMatrix z = kernel_basis(dq, nq);
    const std::size_t zdim = z.cols();

    // boundaries of dimension q expressed in cycle coordinates
    IntMatrix x(zdim, 0);
    if (q < k.dimension()) x = solve_in_lattice(z, boundaries[q]);

    // the self-map restricted to cycles
    IntMatrix a = solve_in_lattice(z, m[q] * z);

    auto sx = linalg::smith_normal_form(x);
    std::size_t rank_b = 0;
    for (const Int& d : sx.diagonal())
      if (d != 0) ++rank_b;

    rep.betti.push_back(static_cast<long long>(zdim - rank_b));
    IntMatrix abar = sx.u * a * sx.u_inv;
    Int tr = 0;
    for (std::size_t i = rank_b; i < zdim; ++i) tr += abar(i, i);
    rep.homology_traces.push_back(tr);
    rep.lefschetz += (q % 2 == 0) ? tr : Int(-tr);
  }
  return rep;
}

linalg::Int lefschetz_number(const SimplicialComplex& k, const SimplicialMap& f) {
  return lefschetz_report(k, f).lefschetz;
}

}  // namespace nk::homology
