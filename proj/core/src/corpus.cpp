#include "nk/corpus.hpp"

#include <algorithm>

namespace nk::corpus {

using groups::FiniteGroup;
using homology::SimplicialComplex;
using homology::SimplicialMap;
using linalg::IntMatrix;
using smooth::PerturbationMode;
using smooth::SmoothTorusMap;

const std::vector<FiniteGroup>& group_corpus() {
  static const std::vector<FiniteGroup> corpus = [] {
    std::vector<FiniteGroup> g;
    g.push_back(FiniteGroup::trivial());
    for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15}) g.push_back(FiniteGroup::cyclic(n));
    g.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    g.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)));
    g.push_back(FiniteGroup::direct_product(
        FiniteGroup::cyclic(2),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
    g.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3)));
    for (int n : {3, 4, 5, 6, 7, 8, 10}) g.push_back(FiniteGroup::dihedral(n));
    g.push_back(FiniteGroup::quaternion());
    g.push_back(FiniteGroup::alternating(4));
    g.push_back(FiniteGroup::symmetric(4));
    g.push_back(FiniteGroup::alternating(5));
    // Frobenius group of order 20: <(01234), x -> 2x mod 5>
    g.push_back(FiniteGroup::from_permutation_generators(
        5, {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}, "F20"));
    g.push_back(FiniteGroup::direct_product(FiniteGroup::symmetric(3),
                                            FiniteGroup::symmetric(3)));
    g.push_back(FiniteGroup::direct_product(FiniteGroup::symmetric(3),
                                            FiniteGroup::cyclic(3)));
    return g;
  }();
  return corpus;
}

SimplicialComplex point_complex() { return SimplicialComplex(1, {{0}}); }

SimplicialComplex circle_triangle() {
  return SimplicialComplex::from_maximal(3, {{0, 1}, {1, 2}, {0, 2}});
}

SimplicialComplex circle_hexagon() {
  return homology::barycentric_subdivision(circle_triangle());
}

SimplicialComplex filled_triangle() {
  return SimplicialComplex::from_maximal(3, {{0, 1, 2}});
}

SimplicialComplex sphere_tetrahedron() {
  return SimplicialComplex::from_maximal(
      4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

namespace {

// 3x3 grid torus triangles over vertex ids v(i,j) = offset + 3i + j
std::vector<std::vector<int>> grid_torus_triangles(int offset) {
  auto v = [&](int i, int j) { return offset + 3 * ((i + 3) % 3) + ((j + 3) % 3); };
  std::vector<std::vector<int>> tris;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      tris.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  return tris;
}

}  // namespace

SimplicialComplex torus_grid() {
  return SimplicialComplex::from_maximal(9, grid_torus_triangles(0));
}

SimplicialComplex genus_two_surface() {
  // connected sum of two grid tori: drop one triangle from each and glue
  // the boundary triangles 0-3-4 and 9-12-13 vertexwise
  auto t1 = grid_torus_triangles(0);
  auto t2 = grid_torus_triangles(9);
  auto drop = [](std::vector<std::vector<int>>& tris, std::vector<int> target) {
    std::sort(target.begin(), target.end());
    for (auto it = tris.begin(); it != tris.end(); ++it) {
      auto s = *it;
      std::sort(s.begin(), s.end());
      if (s == target) {
        tris.erase(it);
        return;
      }
    }
    throw Error("genus_two_surface: triangle to drop not found");
  };
  drop(t1, {0, 3, 4});
  drop(t2, {9, 12, 13});

  // identify 9->0, 12->3, 13->4; compact the remaining copy-2 ids
  std::vector<int> relabel(18, -1);
  for (int i = 0; i < 9; ++i) relabel[i] = i;
  relabel[9] = 0;
  relabel[12] = 3;
  relabel[13] = 4;
  int next = 9;
  for (int i = 9; i < 18; ++i)
    if (relabel[i] < 0) relabel[i] = next++;

  std::vector<std::vector<int>> tris = t1;
  for (auto tri : t2) {
    for (int& v : tri) v = relabel[v];
    tris.push_back(tri);
  }
  return SimplicialComplex::from_maximal(next, tris);
}

const std::vector<NamedComplex>& complex_corpus() {
  static const std::vector<NamedComplex> corpus = [] {
    std::vector<NamedComplex> c;
    c.push_back({"point", point_complex(), 1, {1}});
    c.push_back({"circle3", circle_triangle(), 0, {1, 1}});
    c.push_back({"circle6", circle_hexagon(), 0, {1, 1}});
    c.push_back({"disk", filled_triangle(), 1, {1, 0, 0}});
    c.push_back({"sphere", sphere_tetrahedron(), 2, {1, 0, 1}});
    c.push_back({"torus", torus_grid(), 0, {1, 2, 1}});
    c.push_back({"genus2", genus_two_surface(), -2, {1, 4, 1}});
    return c;
  }();
  return corpus;
}

SimplicialMap degree_two_circle_map() {
  // angle doubling on R/3 with the hexagon as Sd(triangle); Sd vertex ids:
  // 0,1,2 = original vertices, 3 = [0,1], 4 = [0,2], 5 = [1,2]
  return SimplicialMap{{0, 2, 1, 1, 2, 0}, 1};
}

const std::vector<SmoothTorusMap>& smooth_corpus() {
  static const std::vector<SmoothTorusMap> corpus = [] {
    std::vector<SmoothTorusMap> maps;
    const IntMatrix cat{{2, 1}, {1, 1}};
    const IntMatrix two_classes{{2, 1}, {1, 0}};
    const IntMatrix rot90{{0, -1}, {1, 0}};
    const IntMatrix diag23{{2, 0}, {0, 3}};
    const IntMatrix neg{{-1, -1}, {-1, 0}};
    const IntMatrix fib{{1, 1}, {1, 0}};
    const IntMatrix big{{3, 1}, {1, 1}};

    auto mode = [](int coord, std::vector<int> k, double s, double c) {
      return PerturbationMode{coord, std::move(k), s, c};
    };

    for (const IntMatrix& a : {cat, two_classes, rot90, diag23, neg, fib, big}) {
      maps.emplace_back(a);                                 // unperturbed
      maps.emplace_back(a, std::vector<PerturbationMode>{   // one low mode
                               mode(0, {1, 0}, 1e-3, 0.0)});
      maps.emplace_back(a, std::vector<PerturbationMode>{   // two mixed modes
                               mode(0, {1, 0}, 5e-4, 2e-4),
                               mode(1, {0, 1}, 0.0, 1e-3)});
    }
    // high-frequency modes, |k|_1 = 5
    maps.emplace_back(cat, std::vector<PerturbationMode>{mode(1, {2, 3}, 1e-4, 0.0)});
    maps.emplace_back(two_classes,
                      std::vector<PerturbationMode>{mode(0, {2, 3}, 0.0, 1e-4)});
    // one-dimensional circle maps
    for (long long m : {2, 3, -1, -2}) {
      IntMatrix a(1, 1);
      a(0, 0) = m;
      maps.emplace_back(a);
      maps.emplace_back(a, std::vector<PerturbationMode>{mode(0, {1}, 1e-3, 5e-4)});
    }
    return maps;
  }();
  return corpus;
}

std::vector<bounds::IndexMultiset> valid_multisets() {
  return {
      {{-3, -2, 1, 1}, -2},
      {{}, -1},
      {{1, 1, -1}, -1},
      {{-5, 1}, -2},
      {{0, 0, 1}, -1},
  };
}

std::vector<ViolatingMultiset> violating_multisets() {
  return {
      {{{-6}, -2}, "interval"},
      {{{2}, -1}, "interval"},
      {{{-4, -3, 1, 1, 1, 1, 1}, -2}, "aggregate"},
      {{{-3, -3, -3}, -2}, "lefschetz_nielsen"},
  };
}

}  // namespace nk::corpus
