#include <doctest.h>

#include <numeric>

#include "nk/corpus.hpp"
#include "nk/simplicial.hpp"
#include "oracles.hpp"

using namespace nk::homology;
using nk::corpus::circle_triangle;
using nk::linalg::Int;
using nk::linalg::IntMatrix;

namespace {

SimplicialMap identity_map(const SimplicialComplex& k) {
  std::vector<int> id(k.vertex_count());
  std::iota(id.begin(), id.end(), 0);
  return SimplicialMap{id, 0};
}

}  // namespace

TEST_CASE("complex validation") {
  // edge without its vertices listed
  CHECK_THROWS_AS(SimplicialComplex(2, {{0, 1}}), nk::ValidationError);
  CHECK_THROWS_AS(SimplicialComplex(2, {{0}, {1}, {0, 1}, {0, 1}}), nk::ValidationError);
  CHECK_THROWS_AS(SimplicialComplex(2, {{0}, {2}}), nk::ValidationError);
  CHECK_THROWS_AS(SimplicialComplex(2, {{0, 0}}), nk::ValidationError);
  CHECK_NOTHROW(SimplicialComplex(2, {{0}, {1}, {0, 1}}));
}

TEST_CASE("from_maximal closes under faces") {
  auto k = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  CHECK(k.count(0) == 3);
  CHECK(k.count(1) == 3);
  CHECK(k.count(2) == 1);
  CHECK(k.total_simplices() == 7);
  CHECK(k.dimension() == 2);
}

TEST_CASE("boundary matrices of the pinned examples") {
  auto circle = circle_triangle();
  auto b = boundary_matrices(circle);
  REQUIRE(b.size() == 1);
  CHECK(b[0].rows() == 3);
  CHECK(b[0].cols() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    Int col_sum = 0;
    for (std::size_t i = 0; i < 3; ++i) col_sum += b[0](i, j);
    CHECK(col_sum == 0);
  }

  CHECK(boundary_matrices(nk::corpus::point_complex()).empty());

  auto disk = nk::corpus::filled_triangle();
  auto bd = boundary_matrices(disk);
  REQUIRE(bd.size() == 2);
  CHECK(bd[1].cols() == 1);
  CHECK(bd[0] * bd[1] == IntMatrix::zero(3, 1));
}

TEST_CASE("boundary of boundary vanishes on the corpus") {
  for (const auto& named : nk::corpus::complex_corpus()) {
    auto b = boundary_matrices(named.complex);
    for (std::size_t q = 1; q < b.size(); ++q)
      CHECK(b[q - 1] * b[q] ==
            IntMatrix::zero(b[q - 1].rows(), b[q].cols()));
  }
}

TEST_CASE("euler characteristic of the pinned examples") {
  CHECK(euler_characteristic(nk::corpus::genus_two_surface()) == -2);
  CHECK(euler_characteristic(circle_triangle()) == 0);
  CHECK(euler_characteristic(nk::corpus::point_complex()) == 1);
}

TEST_CASE("betti numbers across the corpus") {
  for (const auto& named : nk::corpus::complex_corpus()) {
    CHECK(betti_numbers(named.complex) == named.expected_betti);
    CHECK(euler_characteristic(named.complex) == named.expected_chi);
  }
}

TEST_CASE("lefschetz number of identity and constant maps") {
  for (const auto& named : nk::corpus::complex_corpus()) {
    auto rep = lefschetz_report(named.complex, identity_map(named.complex));
    CHECK(rep.lefschetz == named.expected_chi);
    CHECK(rep.betti == named.expected_betti);
  }
  // constant maps on connected complexes have L = 1
  for (const char* name : {"circle3", "torus", "genus2"}) {
    for (const auto& named : nk::corpus::complex_corpus()) {
      if (named.name != name) continue;
      std::vector<int> constant(named.complex.vertex_count(), 0);
      CHECK(lefschetz_number(named.complex, {constant, 0}) == 1);
    }
  }
}

TEST_CASE("degree-2 circle map: L = 1 - 2 = -1") {
  auto rep = lefschetz_report(circle_triangle(), nk::corpus::degree_two_circle_map());
  CHECK(rep.lefschetz == -1);
  REQUIRE(rep.homology_traces.size() == 2);
  CHECK(rep.homology_traces[0] == 1);  // H_0
  CHECK(rep.homology_traces[1] == 2);  // H_1: multiplication by the degree
}

TEST_CASE("degree -2 circle map: L = 1 - (-2) = 3") {
  // x -> -2x on R/3 sends every hexagon vertex to a triangle vertex
  SimplicialMap f{{0, 1, 2, 2, 1, 0}, 1};
  auto rep = lefschetz_report(circle_triangle(), f);
  CHECK(rep.lefschetz == 3);
  CHECK(rep.homology_traces[0] == 1);
  CHECK(rep.homology_traces[1] == -2);
  CHECK(oracles::chain_level_lefschetz(circle_triangle(), f) == 3);
}

TEST_CASE("homology-route L equals the chain-level alternating trace") {
  auto hexagon = nk::corpus::circle_hexagon();
  // rotation by one sixth and a reflection, in subdivision vertex ids
  SimplicialMap rotation{{3, 5, 4, 1, 0, 2}, 0};
  SimplicialMap reflection{{0, 2, 1, 4, 3, 5}, 0};
  auto torus = nk::corpus::torus_grid();
  // swap the two grid axes: v = 3i + j -> 3j + i
  std::vector<int> swap_axes(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) swap_axes[3 * i + j] = 3 * j + i;
  // translate one grid step: (i, j) -> (i + 1, j)
  std::vector<int> shift(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) shift[3 * i + j] = 3 * ((i + 1) % 3) + j;

  struct Case {
    const SimplicialComplex* k;
    SimplicialMap f;
  };
  std::vector<Case> cases{{&hexagon, rotation},
                          {&hexagon, reflection},
                          {&hexagon, identity_map(hexagon)},
                          {&torus, {swap_axes, 0}},
                          {&torus, {shift, 0}},
                          {&torus, identity_map(torus)}};
  for (const auto& c : cases) {
    CHECK(lefschetz_number(*c.k, c.f) == oracles::chain_level_lefschetz(*c.k, c.f));
  }
  // the subdivision route agrees with the Hopf trace as well
  CHECK(oracles::chain_level_lefschetz(circle_triangle(),
                                       nk::corpus::degree_two_circle_map()) == -1);
}

TEST_CASE("pinned rotations and reflections of the circle") {
  auto hexagon = nk::corpus::circle_hexagon();
  CHECK(lefschetz_number(hexagon, {{3, 5, 4, 1, 0, 2}, 0}) == 0);   // degree 1
  CHECK(lefschetz_number(hexagon, {{0, 2, 1, 4, 3, 5}, 0}) == 2);   // degree -1
}

TEST_CASE("subdivision is a chain map inducing the identity") {
  for (const char* name : {"circle3", "disk", "torus"}) {
    for (const auto& named : nk::corpus::complex_corpus()) {
      if (named.name != name) continue;
      const auto& k = named.complex;
      auto sd = barycentric_subdivision(k);
      CHECK(euler_characteristic(sd) == named.expected_chi);
      CHECK(betti_numbers(sd) == named.expected_betti);

      auto lam = subdivision_chain_map(k, sd);
      auto bk = boundary_matrices(k);
      auto bsd = boundary_matrices(sd);
      for (std::size_t q = 1; q < lam.size(); ++q)
        CHECK(bsd[q - 1] * lam[q] == lam[q - 1] * bk[q - 1]);

      // a simplicial approximation of the identity: send each barycenter
      // to the smallest vertex of its simplex
      auto all = k.all_simplices();
      std::vector<int> approx(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) approx[i] = all[i].front();
      CHECK(lefschetz_number(k, {approx, 1}) == named.expected_chi);
    }
  }
}

TEST_CASE("two subdivision levels compose correctly") {
  for (const char* name : {"circle3", "disk"}) {
    for (const auto& named : nk::corpus::complex_corpus()) {
      if (named.name != name) continue;
      const auto& k = named.complex;
      auto sd1 = barycentric_subdivision(k);
      // iterate the min-vertex approximation of the identity: Sd^2 K -> K
      auto all1 = k.all_simplices();
      std::vector<int> approx1(all1.size());
      for (std::size_t j = 0; j < all1.size(); ++j) approx1[j] = all1[j].front();
      auto all2 = sd1.all_simplices();
      std::vector<int> approx2(all2.size());
      for (std::size_t i = 0; i < all2.size(); ++i)
        approx2[i] = approx1[all2[i].front()];
      CHECK(lefschetz_number(k, {approx2, 2}) == named.expected_chi);
      CHECK(oracles::chain_level_lefschetz(k, {approx2, 2}) == named.expected_chi);
    }
  }
}

TEST_CASE("simplicial map validation") {
  auto torus = nk::corpus::torus_grid();
  // swapping two far-apart vertices breaks simpliciality
  std::vector<int> bad(9);
  std::iota(bad.begin(), bad.end(), 0);
  std::swap(bad[0], bad[8]);
  CHECK_THROWS_AS(lefschetz_number(torus, {bad, 0}), nk::ValidationError);

  CHECK_THROWS_AS(lefschetz_number(torus, {{0, 1}, 0}), nk::ValidationError);
  std::vector<int> oob(9, 42);
  CHECK_THROWS_AS(lefschetz_number(torus, {oob, 0}), nk::ValidationError);
}

TEST_CASE("barycentric subdivision of the triangle is the hexagon") {
  auto sd = barycentric_subdivision(circle_triangle());
  CHECK(sd.vertex_count() == 6);
  CHECK(sd.count(0) == 6);
  CHECK(sd.count(1) == 6);
  CHECK(sd.dimension() == 1);
}
