#include <doctest.h>

#include <random>

#include "nk/block_cyclic.hpp"
#include "nk/int_matrix.hpp"
#include "nk/real_matrix.hpp"
#include "oracles.hpp"

using namespace nk::linalg;

TEST_CASE("det_exact on the pinned examples") {
  CHECK(det_exact(IntMatrix{{-1, -1}, {-1, 0}}) == -1);
  CHECK(det_exact(IntMatrix::identity(3)) == 1);
  CHECK(det_exact(IntMatrix{{1, -1}, {-1, 1}}) == 0);
  CHECK(det_exact(IntMatrix(0, 0)) == 1);
}

TEST_CASE("det_exact rejects non-square input") {
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), nk::DimensionError);
}

TEST_CASE("det_exact agrees with cofactor expansion up to size 4") {
  // exhaustive 2x2 over a small entry range
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          IntMatrix m{{a, b}, {c, d}};
          CHECK(det_exact(m) == oracles::cofactor_det(m));
        }

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 3 + trial % 2;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    CHECK(det_exact(m) == oracles::cofactor_det(m));
  }
}

TEST_CASE("block_cyclic layout") {
  IntMatrix b{{1, 2}, {3, 4}};
  CHECK(block_cyclic(std::vector<IntMatrix>{b}) == b);

  IntMatrix n1{{1}}, n2{{2}};
  auto n = block_cyclic(std::vector<IntMatrix>{n1, n2});
  CHECK(n == IntMatrix{{0, 2}, {1, 0}});

  IntMatrix b2{{2}}, b3{{3}}, b5{{5}};
  auto m3 = block_cyclic(std::vector<IntMatrix>{b2, b3, b5});
  CHECK(m3 == IntMatrix{{0, 0, 5}, {2, 0, 0}, {0, 3, 0}});

  CHECK_THROWS_AS(block_cyclic(std::vector<IntMatrix>{IntMatrix(1, 1), IntMatrix(2, 2)}),
                  nk::DimensionError);
  CHECK_THROWS_AS(block_cyclic(std::vector<IntMatrix>{}), nk::DimensionError);
}

TEST_CASE("cyclic determinant identity examples") {
  auto r = cyclic_det_identity_check({IntMatrix{{2}}, IntMatrix{{3}}});
  CHECK(r.lhs == -5);
  CHECK(r.rhs == -5);
  CHECK(r.equal);

  auto z = cyclic_det_identity_check(
      {IntMatrix(2, 2), IntMatrix(2, 2), IntMatrix(2, 2)});
  CHECK(z.lhs == 1);
  CHECK(z.rhs == 1);
  CHECK(z.equal);
}

TEST_CASE("cyclic determinant identity holds on random tuples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9), ksize(1, 4), mlen(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    int k = ksize(rng), m = mlen(rng);
    std::vector<IntMatrix> blocks;
    for (int b = 0; b < m; ++b) {
      IntMatrix blk(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) blk(i, j) = entry(rng);
      blocks.push_back(std::move(blk));
    }
    auto r = cyclic_det_identity_check(blocks);
    CHECK(r.equal);
  }
}

TEST_CASE("real determinant tracks the exact one") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = entry(rng);
    double exact = static_cast<double>(det_exact(m).convert_to<long long>());
    CHECK(det_real(RealMatrix::from_int(m)) == doctest::Approx(exact).epsilon(1e-9));
  }
}

TEST_CASE("min_singular_value on known matrices") {
  CHECK(min_singular_value(RealMatrix::identity(3)) == doctest::Approx(1.0));
  CHECK(min_singular_value(RealMatrix{{2, 0}, {0, 3}}) == doctest::Approx(2.0));
  CHECK(min_singular_value(RealMatrix{{0, -1}, {1, 0}}) == doctest::Approx(1.0));
  // I - cat map: eigenvalues of (I-A)^T(I-A) are (3 +- sqrt(5))/2
  CHECK(min_singular_value(RealMatrix{{-1, -1}, {-1, 0}}) ==
        doctest::Approx(0.6180339887));
}

TEST_CASE("matrix arithmetic basics") {
  IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK(a - a == IntMatrix::zero(2, 2));
  CHECK(identity_minus(a) == IntMatrix{{0, -2}, {-3, -3}});
  CHECK(a.apply({1, 0}) == std::vector<Int>{1, 3});
  CHECK_THROWS_AS(a * IntMatrix(3, 2), nk::DimensionError);
  CHECK_THROWS_AS(IntMatrix(2, 2, std::vector<Int>{1, 2, 3}), nk::DimensionError);
}
