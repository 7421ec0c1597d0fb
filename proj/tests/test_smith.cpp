#include <doctest.h>

#include <random>

#include "nk/smith.hpp"

using namespace nk::linalg;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                        int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

void check_smith_invariants(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  Int du = det_exact(s.u), dv = det_exact(s.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  CHECK(s.u * s.u_inv == IntMatrix::identity(m.rows()));
  CHECK(s.v * s.v_inv == IntMatrix::identity(m.cols()));
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size()) {
      if (diag[i] == 0) CHECK(diag[i + 1] == 0);
      if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    }
  }
  // off-diagonal zero
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form pinned examples") {
  auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s.d == IntMatrix{{1, 0}, {0, 6}});

  auto z = smith_normal_form(IntMatrix(2, 2));
  CHECK(z.d == IntMatrix(2, 2));

  auto id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.d == IntMatrix::identity(2));
}

TEST_CASE("smith normal form invariants on random shapes") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
    check_smith_invariants(random_matrix(rng, rows, cols));
  }
  check_smith_invariants(IntMatrix(0, 3));
  check_smith_invariants(IntMatrix(3, 0));
  check_smith_invariants(IntMatrix(0, 0));
}

TEST_CASE("smith normal form is deterministic") {
  std::mt19937 rng(5);
  auto m = random_matrix(rng, 4, 4);
  auto s1 = smith_normal_form(m);
  auto s2 = smith_normal_form(m);
  CHECK(s1.u == s2.u);
  CHECK(s1.d == s2.d);
  CHECK(s1.v == s2.v);
}

TEST_CASE("cokernel pinned examples") {
  // I - [[2,1],[1,1]] has |det| = 1: single trivial coset
  auto c1 = cokernel(identity_minus(IntMatrix{{2, 1}, {1, 1}}));
  REQUIRE(c1.finite());
  CHECK(c1.order() == 1);
  CHECK(c1.coset_representatives().size() == 1);

  auto c2 = cokernel(IntMatrix(2, 2));
  CHECK_FALSE(c2.finite());
  CHECK_THROWS_AS(c2.coset_representatives(), nk::DomainError);

  auto c3 = cokernel(IntMatrix{{2, 0}, {0, 3}});
  REQUIRE(c3.finite());
  CHECK(c3.order() == 6);
  CHECK(c3.coset_representatives().size() == 6);
}

TEST_CASE("cokernel order equals |det| for nonsingular matrices") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_matrix(rng, 3, 3, -4, 4);
    Int d = det_exact(m);
    if (d == 0) continue;
    auto c = cokernel(m);
    REQUIRE(c.finite());
    CHECK(c.order() == (d < 0 ? Int(-d) : d));
  }
}

TEST_CASE("canonical labels are constant on cosets") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> entry(-5, 5);
  auto m = IntMatrix{{2, 1}, {0, 3}};  // det 6
  auto c = cokernel(m);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> x{entry(rng), entry(rng)};
    std::vector<Int> y{entry(rng), entry(rng)};
    // x and x + M y share a label
    auto my = m.apply(y);
    std::vector<Int> shifted{x[0] + my[0], x[1] + my[1]};
    CHECK(c.canonical_label(x) == c.canonical_label(shifted));
  }
  // representatives map back to themselves
  for (const auto& rep : c.coset_representatives()) {
    CHECK(c.canonical_label(c.representative_in_source(rep)) == rep);
  }
}

TEST_CASE("cokernel cap") {
  auto c = cokernel(IntMatrix{{100, 0}, {0, 100}});
  REQUIRE(c.finite());
  CHECK(c.order() == 10000);
  CHECK_THROWS_AS(c.coset_representatives(Int(100)), nk::CapError);
}
