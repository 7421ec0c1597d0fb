#include <doctest.h>

#include "nk/json_io.hpp"

using namespace nk::io;
using nk::linalg::Int;
using nk::linalg::IntMatrix;

TEST_CASE("integer scalars round trip, including big values") {
  CHECK(int_to_json(Int(-1)).is_number_integer());
  CHECK(int_from_json(int_to_json(Int(-1))) == -1);

  Int big("123456789012345678901234567890");
  auto j = int_to_json(big);
  CHECK(j.is_string());
  CHECK(int_from_json(j) == big);

  CHECK_THROWS_AS(int_from_json(json("12x3")), nk::ValidationError);
  CHECK_THROWS_AS(int_from_json(json(1.5)), nk::ValidationError);
}

TEST_CASE("matrix schema") {
  IntMatrix m{{2, 1}, {1, 1}};
  auto j = matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(matrix_from_json(j) == m);

  // decimal string entries are accepted
  auto big = matrix_from_json(json::parse(
      R"({"rows":1,"cols":1,"entries":[["987654321987654321987654321"]]})"));
  CHECK(big(0, 0) == Int("987654321987654321987654321"));

  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":2,"cols":2})")),
                  nk::ValidationError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"rows":2,"cols":2,"entries":[[1,2],[3]]})")),
      nk::ValidationError);
}

TEST_CASE("group schemas") {
  auto table_group = group_from_json(json::parse(
      R"({"order":2,"table":[[0,1],[1,0]],"name":"Z2"})"));
  CHECK(table_group.order() == 2);
  CHECK(table_group.name() == "Z2");

  auto perm_group = group_from_json(json::parse(
      R"({"degree":3,"generators":[[1,2,0],[1,0,2]]})"));
  CHECK(perm_group.order() == 6);

  CHECK(group_from_json(group_to_json(perm_group)) == perm_group);

  CHECK_THROWS_AS(group_from_json(json::parse(R"({"order":3})")),
                  nk::ValidationError);
  CHECK_THROWS_AS(group_from_json(json::parse(
                      R"({"order":2,"table":[[0,1],[1,1]]})")),
                  nk::ValidationError);
}

TEST_CASE("product spec and automorphism schemas") {
  auto spec = product_spec_from_json(json::parse(R"({
    "factors": [{"group": {"degree":3,"generators":[[1,2,0],[1,0,2]]},
                 "multiplicity": 2}]})"));
  CHECK(spec.order() == 36);
  CHECK(spec.num_coordinates() == 2);

  auto images = automorphism_from_json(json::parse(R"({"images":[0,1,2]})"));
  CHECK(images == std::vector<int>{0, 1, 2});
}

TEST_CASE("torus map schemas") {
  auto f = torus_map_from_json(json::parse(
      R"({"dim":2,"linear_part":{"rows":2,"cols":2,"entries":[[2,1],[1,1]]}})"));
  CHECK(f.dim() == 2);
  CHECK_THROWS_AS(torus_map_from_json(json::parse(
                      R"({"dim":3,"linear_part":{"rows":2,"cols":2,"entries":[[2,1],[1,1]]}})")),
                  nk::ValidationError);

  auto cyc = cyclic_torus_map_from_json(json::parse(R"({"components":[
      {"linear_part":{"rows":1,"cols":1,"entries":[[2]]}},
      {"linear_part":{"rows":1,"cols":1,"entries":[[3]]}}]})"));
  CHECK(cyc.m() == 2);
  CHECK(cyc.dim() == 1);
}

TEST_CASE("smooth map and solver config schemas") {
  auto f = smooth_map_from_json(json::parse(R"({
    "dim": 2,
    "linear_part": {"rows":2,"cols":2,"entries":[[2,1],[1,0]]},
    "perturbation": [{"coordinate":0,"k":[1,0],"sin":1e-3,"cos":0.0}]})"));
  CHECK(f.dim() == 2);
  CHECK(f.modes().size() == 1);
  CHECK(f.modes()[0].sin_coeff == doctest::Approx(1e-3));

  auto cfg = solver_config_from_json(json::parse(
      R"({"grid_density": 8, "convergence_tol": 1e-10})"));
  CHECK(cfg.grid_density == 8);
  CHECK(cfg.convergence_tol == doctest::Approx(1e-10));
  CHECK(cfg.dedupe_radius == doctest::Approx(1e-8));  // default survives

  auto round = solver_config_from_json(solver_config_to_json(cfg));
  CHECK(round.grid_density == cfg.grid_density);
}

TEST_CASE("complex and simplicial map schemas") {
  auto k = complex_from_json(json::parse(
      R"({"vertices":3,"simplices":[[0],[1],[2],[0,1],[0,2],[1,2]]})"));
  CHECK(k.vertex_count() == 3);
  CHECK(k.total_simplices() == 6);

  auto f = simplicial_map_from_json(json::parse(
      R"({"vertex_images":[0,2,1,1,2,0],"subdivisions":1})"));
  CHECK(f.subdivisions == 1);
  CHECK_THROWS_AS(simplicial_map_from_json(json::parse(
                      R"({"vertex_images":[0],"subdivisions":-1})")),
                  nk::ValidationError);
}

TEST_CASE("bounds schemas") {
  auto m = multiset_from_json(json::parse(R"({"indices":[-3,-2,1,1],"chi":-2})"));
  CHECK(m.indices.size() == 4);
  CHECK(m.chi == -2);

  auto surfaces = surfaces_from_json(json::parse(
      R"({"surfaces":[{"genus":2,"multiplicity":2},{"chi":-4}]})"));
  CHECK(surfaces.size() == 2);
  CHECK(surfaces[0].chi == -2);
  CHECK(surfaces[1].chi == -4);

  auto bl = bound_list_from_json(json::parse(R"({"bounds":[5,5]})"));
  CHECK(bl.size() == 2);

  CHECK_THROWS_AS(surfaces_from_json(json::parse(R"({"surfaces":[{}]})")),
                  nk::ValidationError);
}

TEST_CASE("blocks schema") {
  auto blocks = blocks_from_json(json::parse(R"({"blocks":[
      {"rows":1,"cols":1,"entries":[[2]]},
      {"rows":1,"cols":1,"entries":[[3]]}]})"));
  CHECK(blocks.size() == 2);
  CHECK_THROWS_AS(blocks_from_json(json::parse(R"({"blocks":[]})")),
                  nk::ValidationError);
}
