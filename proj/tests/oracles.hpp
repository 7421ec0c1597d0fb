// Test-only oracles, independent of the implementation paths they check:
// Laplace-expansion determinants, Cramer-rule rational solves, brute-force
// torus fixed point enumeration, and the chain-level alternating trace.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "nk/int_matrix.hpp"
#include "nk/simplicial.hpp"

namespace oracles {

using nk::linalg::Int;
using nk::linalg::IntMatrix;
using Rational = boost::multiprecision::cpp_rational;

// determinant by cofactor expansion along the first row
inline Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Int term = m(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : Int(-term);
  }
  return det;
}

// Cramer-rule solve of M x = b over the rationals (M nonsingular)
inline std::vector<Rational> cramer_solve(const IntMatrix& m, const std::vector<Int>& b) {
  const std::size_t n = m.rows();
  Int d = cofactor_det(m);
  std::vector<Rational> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix mj = m;
    for (std::size_t i = 0; i < n; ++i) mj(i, j) = b[i];
    // division rather than the two-argument constructor: the latter
    // rejects negative denominators in older boost releases
    x[j] = Rational(cofactor_det(mj)) / Rational(d);
  }
  return x;
}

struct TorusFixedPoint {
  std::vector<Rational> point;   // in [0,1)^n
  std::vector<Int> translation;  // v with (I - A) x = v
};

// Brute-force fixed points of the linear torus map A: solve (I - A) x = v
// over every integer v in the box of (I - A)[0,1]^n, keep x in [0,1)^n.
inline std::vector<TorusFixedPoint> enumerate_torus_fixed_points(const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix b = nk::linalg::identity_minus(a);
  std::vector<long long> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    long long l = 0, h = 0;
    for (std::size_t j = 0; j < n; ++j) {
      long long e = b(i, j).convert_to<long long>();
      if (e < 0)
        l += e;
      else
        h += e;
    }
    lo[i] = l;
    hi[i] = h;
  }

  std::vector<TorusFixedPoint> out;
  std::vector<long long> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo[i];
  for (;;) {
    std::vector<Int> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = v[i];
    auto x = cramer_solve(b, rhs);
    bool inside = true;
    for (const auto& xi : x)
      if (xi < 0 || xi >= 1) inside = false;
    if (inside) out.push_back({x, rhs});

    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++v[i] <= hi[i]) {
        done = false;
        break;
      }
      v[i] = lo[i];
    }
    if (done) break;
  }
  return out;
}

// same Nielsen class <=> v - v' lies in (I - A) Z^n (integral solution)
inline bool same_class(const IntMatrix& a, const std::vector<Int>& v1,
                       const std::vector<Int>& v2) {
  IntMatrix b = nk::linalg::identity_minus(a);
  std::vector<Int> diff(v1.size());
  for (std::size_t i = 0; i < v1.size(); ++i) diff[i] = v1[i] - v2[i];
  auto y = cramer_solve(b, diff);
  for (const auto& yi : y)
    if (boost::multiprecision::denominator(yi) != 1) return false;
  return true;
}

// partition the brute-force fixed points into Nielsen classes
inline std::vector<std::vector<std::size_t>> brute_force_classes(
    const IntMatrix& a, const std::vector<TorusFixedPoint>& pts) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<char> assigned(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cls{i};
    assigned[i] = 1;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (assigned[j]) continue;
      if (same_class(a, pts[i].translation, pts[j].translation)) {
        cls.push_back(j);
        assigned[j] = 1;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Hopf trace route: alternating sum of chain-level traces of a self-map
// (with optional subdivision levels), independent of homology bases.
inline Int chain_level_lefschetz(const nk::homology::SimplicialComplex& k,
                                 const nk::homology::SimplicialMap& f) {
  using nk::homology::SimplicialComplex;
  std::vector<IntMatrix> m;
  if (f.subdivisions == 0) {
    m = nk::homology::induced_chain_map(k, k, f.vertex_images);
  } else {
    std::vector<SimplicialComplex> levels{k};
    for (int s = 0; s < f.subdivisions; ++s)
      levels.push_back(nk::homology::barycentric_subdivision(levels.back()));
    std::vector<IntMatrix> acc;
    for (int s = 0; s < f.subdivisions; ++s) {
      auto lam = nk::homology::subdivision_chain_map(levels[s], levels[s + 1]);
      if (s == 0)
        acc = std::move(lam);
      else
        for (std::size_t q = 0; q < acc.size(); ++q) acc[q] = lam[q] * acc[q];
    }
    auto fm = nk::homology::induced_chain_map(levels.back(), k, f.vertex_images);
    for (std::size_t q = 0; q < fm.size(); ++q) m.push_back(fm[q] * acc[q]);
  }
  Int total = 0;
  for (std::size_t q = 0; q < m.size(); ++q) {
    Int tr = 0;
    for (std::size_t i = 0; i < m[q].rows(); ++i) tr += m[q](i, i);
    total += (q % 2 == 0) ? tr : Int(-tr);
  }
  return total;
}

}  // namespace oracles
