#pragma once

#include <string>
#include <vector>

#include "nk/int_matrix.hpp"

namespace nk::homology {

/// Finite simplicial complex.  Simplices are stored as sorted vertex
/// index lists, grouped by dimension, lexicographically ordered within a
/// dimension.  Construction validates closure under faces and rejects
/// duplicates.
class SimplicialComplex {
 public:
  SimplicialComplex(int vertices, std::vector<std::vector<int>> simplices);

  /// Builds the closure of a list of maximal simplices.
  static SimplicialComplex from_maximal(int vertices,
                                        std::vector<std::vector<int>> maximal);

  int vertex_count() const { return vertices_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int q) const {
    return (q >= 0 && q <= dimension()) ? by_dim_[q].size() : 0;
  }
  const std::vector<std::vector<int>>& simplices(int q) const;
  /// Index of a sorted simplex within its dimension, or -1.
  int index_of(const std::vector<int>& sorted_simplex) const;
  std::size_t total_simplices() const;

  /// All simplices in canonical global order (dimension-major, then lex).
  std::vector<std::vector<int>> all_simplices() const;

 private:
  int vertices_;
  std::vector<std::vector<std::vector<int>>> by_dim_;
};

/// Vertex map; `subdivisions` = s means the map goes Sd^s(K) -> K, with
/// the domain's vertex numbering given by barycentric_subdivision applied
/// s times.  s = 0 is a plain self-map.
struct SimplicialMap {
  std::vector<int> vertex_images;
  int subdivisions = 0;
};

/// Boundary matrices [d_1, ..., d_dim]; d_q has one column per q-simplex
/// and one row per (q-1)-simplex.  d_q d_{q+1} = 0.
std::vector<linalg::IntMatrix> boundary_matrices(const SimplicialComplex& k);

/// Alternating sum of simplex counts.
long long euler_characteristic(const SimplicialComplex& k);

/// Barycentric subdivision.  Vertex i of the result is the barycenter of
/// the i-th simplex of the input in canonical global order; q-simplices
/// are the strict face chains of length q+1.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// Chain maps lambda_q : C_q(K) -> C_q(Sd K) of the standard subdivision
/// operator (cone over the subdivided boundary).  Induces the identity on
/// homology under the canonical identification.
std::vector<linalg::IntMatrix> subdivision_chain_map(const SimplicialComplex& k,
                                                     const SimplicialComplex& sd);

/// Chain maps of a simplicial vertex map src -> dst (signs by sort parity,
/// collapsed simplices map to zero).  Throws ValidationError when some
/// simplex image does not span a simplex of dst.
std::vector<linalg::IntMatrix> induced_chain_map(const SimplicialComplex& src,
                                                 const SimplicialComplex& dst,
                                                 const std::vector<int>& vertex_images);

std::vector<long long> betti_numbers(const SimplicialComplex& k);

struct LefschetzReport {
  std::vector<long long> betti;
  /// trace of the induced map on H_q(Q), one entry per dimension
  std::vector<linalg::Int> homology_traces;
  linalg::Int lefschetz = 0;
};

/// Lefschetz number via traces on rational homology, computed through
/// integer Smith normal forms.  Handles subdivision maps (see
/// SimplicialMap::subdivisions).
LefschetzReport lefschetz_report(const SimplicialComplex& k, const SimplicialMap& f);

linalg::Int lefschetz_number(const SimplicialComplex& k, const SimplicialMap& f);

}  // namespace nk::homology
