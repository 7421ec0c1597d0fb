#pragma once

#include <string>
#include <vector>

#include "nk/bounds.hpp"
#include "nk/finite_group.hpp"
#include "nk/simplicial.hpp"
#include "nk/smooth_maps.hpp"

namespace nk::corpus {

/// Bundled finite groups of order <= 60 used by the equivalence and
/// automorphism sweeps.
const std::vector<groups::FiniteGroup>& group_corpus();

struct NamedComplex {
  std::string name;
  homology::SimplicialComplex complex;
  long long expected_chi;
  std::vector<long long> expected_betti;
};

homology::SimplicialComplex point_complex();
homology::SimplicialComplex circle_triangle();
/// Barycentric subdivision of the triangle circle: the 6-vertex circle.
homology::SimplicialComplex circle_hexagon();
homology::SimplicialComplex filled_triangle();
homology::SimplicialComplex sphere_tetrahedron();
/// 9-vertex grid triangulation of T^2.
homology::SimplicialComplex torus_grid();
/// Genus-2 surface: connected sum of two grid tori (chi = -2).
homology::SimplicialComplex genus_two_surface();

const std::vector<NamedComplex>& complex_corpus();

/// Angle-doubling circle map as a simplicial map Sd(triangle) -> triangle.
homology::SimplicialMap degree_two_circle_map();

/// Smooth maps (>= 20) within the amplitude guard, dimensions 1 and 2.
const std::vector<smooth::SmoothTorusMap>& smooth_corpus();

/// Multisets satisfying the surface constraints.
std::vector<bounds::IndexMultiset> valid_multisets();

struct ViolatingMultiset {
  bounds::IndexMultiset multiset;
  std::string expected_clause;
};

/// Multisets violating exactly one named clause each.
std::vector<ViolatingMultiset> violating_multisets();

}  // namespace nk::corpus
