#include <doctest.h>

#include <random>

#include "nk/corpus.hpp"
#include "nk/smooth_maps.hpp"

using namespace nk::smooth;
using nk::linalg::Int;
using nk::linalg::IntMatrix;
using nk::linalg::RealMatrix;

namespace {

const IntMatrix kCat{{2, 1}, {1, 1}};
const IntMatrix kTwoClass{{2, 1}, {1, 0}};

SmoothTorusMap perturbed_two_class() {
  return SmoothTorusMap(kTwoClass, {PerturbationMode{0, {1, 0}, 1e-3, 0.0}});
}

}  // namespace

TEST_CASE("find_fixed_points on the unperturbed cat map") {
  auto rep = find_fixed_points(SmoothTorusMap(kCat));
  CHECK(rep.verdict);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].index == -1);
  CHECK(rep.points[0].coordinates[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(rep.points[0].coordinates[1] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(rep.points[0].transversal);
  CHECK(rep.points[0].residual <= 1e-12);
}

TEST_CASE("find_fixed_points on the perturbed two-class map") {
  auto rep = find_fixed_points(perturbed_two_class());
  CHECK(rep.verdict);
  REQUIRE(rep.points.size() == 2);
  CHECK(rep.points[0].index == -1);
  CHECK(rep.points[1].index == -1);
  CHECK(rep.points[0].class_label != rep.points[1].class_label);
}

TEST_CASE("degenerate linear part is rejected") {
  CHECK_THROWS_AS(find_fixed_points(SmoothTorusMap(IntMatrix::identity(2))),
                  nk::DegenerateError);
}

TEST_CASE("amplitude guard rejects large perturbations") {
  SmoothTorusMap too_big(kCat, {PerturbationMode{0, {1, 0}, 0.2, 0.0}});
  CHECK_THROWS_AS(find_fixed_points(too_big), nk::PreconditionError);
}

TEST_CASE("class labels") {
  SmoothTorusMap f(kCat);
  auto zero_label = class_label(f, {0.0, 0.0});
  for (const auto& v : zero_label) CHECK(v == 0);

  // a generic point is not fixed: labels cannot be rounded
  CHECK_THROWS_AS(class_label(f, {0.3, 0.3}), nk::LabelError);

  // labels survive a small perturbation (tracked point-by-point)
  auto base = find_fixed_points(SmoothTorusMap(kTwoClass));
  auto pert = find_fixed_points(perturbed_two_class());
  REQUIRE(base.points.size() == 2);
  REQUIRE(pert.points.size() == 2);
  for (const auto& p : pert.points) {
    double best = 1.0;
    std::size_t match = 0;
    for (std::size_t i = 0; i < base.points.size(); ++i) {
      double d = 0;
      for (int c = 0; c < 2; ++c) {
        double t = std::fabs(p.coordinates[c] - base.points[i].coordinates[c]);
        d = std::max(d, std::min(t, 1.0 - t));
      }
      if (d < best) {
        best = d;
        match = i;
      }
    }
    CHECK(best < 0.05);
    CHECK(p.class_label == base.points[match].class_label);
  }
}

TEST_CASE("lefschetz-hopf sums") {
  auto cat = lefschetz_hopf_check(SmoothTorusMap(kCat));
  CHECK(cat.equal);
  CHECK(cat.index_sum == -1);

  auto rot = lefschetz_hopf_check(SmoothTorusMap(IntMatrix{{0, -1}, {1, 0}}));
  CHECK(rot.equal);
  CHECK(rot.expected == 2);
  REQUIRE(rot.find.points.size() == 2);
  CHECK(rot.find.points[0].index == 1);
  CHECK(rot.find.points[1].index == 1);

  auto pert = lefschetz_hopf_check(perturbed_two_class());
  CHECK(pert.equal);
  CHECK(pert.index_sum == -2);
}

TEST_CASE("cyclic jacobian check on linear components") {
  CyclicSmoothMap f({SmoothTorusMap(IntMatrix{{1, 1}, {0, 1}}),
                     SmoothTorusMap(IntMatrix{{1, 0}, {1, 1}})});
  auto rep = cyclic_jacobian_check(f);
  CHECK(rep.verdict);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].dets.sign_lhs == -1);
  CHECK(rep.points[0].dets.sign_rhs == -1);
  CHECK(rep.points[0].rel_det_gap <= 1e-8);
}

TEST_CASE("cyclic jacobian check with perturbed components") {
  CyclicSmoothMap f({SmoothTorusMap(IntMatrix{{1, 1}, {0, 1}},
                                    {PerturbationMode{0, {1, 0}, 2e-4, 0.0}}),
                     SmoothTorusMap(IntMatrix{{1, 0}, {1, 1}},
                                    {PerturbationMode{1, {0, 1}, 0.0, 2e-4}})});
  auto rep = cyclic_jacobian_check(f);
  CHECK(rep.composed_find.count_ok);  // composed det is still -1
  CHECK(rep.all_signs_equal);
  CHECK(rep.all_conclusive);
  for (const auto& p : rep.points) CHECK(p.rel_det_gap <= 1e-8);
}

TEST_CASE("zero jacobian blocks give det 1 on both sides") {
  auto rep = nk::linalg::cyclic_det_identity_check_real(
      {RealMatrix(2, 2), RealMatrix(2, 2), RealMatrix(2, 2)});
  CHECK(rep.lhs == doctest::Approx(1.0));
  CHECK(rep.rhs == doctest::Approx(1.0));
  CHECK(rep.signs_equal);
}

TEST_CASE("block jacobian sign identity on random triples") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  int conclusive = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RealMatrix> blocks;
    for (int b = 0; b < 3; ++b) {
      RealMatrix m(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = entry(rng);
      blocks.push_back(std::move(m));
    }
    auto rep = nk::linalg::cyclic_det_identity_check_real(blocks);
    if (rep.conclusive) {
      ++conclusive;
      CHECK(rep.signs_equal);
      CHECK(std::fabs(rep.lhs - rep.rhs) <=
            1e-8 * std::max(1.0, std::fabs(rep.lhs)));
    }
  }
  CHECK(conclusive > 150);  // near-degenerate draws are rare
}

TEST_CASE("jacobian finite differences") {
  // zero perturbation: Df = A exactly
  auto lin = jacobian_fd_check(SmoothTorusMap(kCat), {0.25, 0.5}, 1e-6, 1e-5);
  CHECK(lin.pass);
  CHECK(lin.max_abs_deviation <= 1e-8);

  // single mode at step 1e-5
  auto single = jacobian_fd_check(perturbed_two_class(), {0.3, 0.7}, 1e-5, 1e-5);
  CHECK(single.pass);
  CHECK(single.max_abs_deviation <= 1e-6);

  // high-frequency mode, |k|_1 = 5, step 1e-6
  SmoothTorusMap high(kCat, {PerturbationMode{1, {2, 3}, 1e-4, 0.0}});
  auto hf = jacobian_fd_check(high, {0.123, 0.456}, 1e-6, 1e-5);
  CHECK(hf.pass);
  CHECK(hf.max_abs_deviation <= 1e-5);
}

TEST_CASE("non-convergence is recorded, not fatal") {
  SolverConfig cfg;
  cfg.max_iterations = 1;  // perturbed residuals cannot settle in one step
  cfg.grid_density = 8;
  auto rep = find_fixed_points(perturbed_two_class(), cfg);
  CHECK(rep.nonconverged_seeds > 0);
  CHECK_FALSE(rep.verdict);
}

TEST_CASE("solver is deterministic") {
  auto a = find_fixed_points(perturbed_two_class());
  auto b = find_fixed_points(perturbed_two_class());
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].coordinates == b.points[i].coordinates);
    CHECK(a.points[i].index == b.points[i].index);
  }
}

TEST_CASE("corpus maps stay within the guard and count correctly") {
  // spot-check a few corpus maps here; the full pass is acceptance work
  const auto& corpus = nk::corpus::smooth_corpus();
  REQUIRE(corpus.size() >= 20);
  SolverConfig cfg;
  cfg.grid_density = 16;
  for (std::size_t i = 0; i < corpus.size(); i += 7) {
    auto rep = find_fixed_points(corpus[i], cfg);
    CHECK(rep.count_ok);
    CHECK(rep.all_transversal);
  }
}

TEST_CASE("perturbation validation") {
  CHECK_THROWS_AS(SmoothTorusMap(kCat, {PerturbationMode{5, {1, 0}, 1e-3, 0.0}}),
                  nk::ValidationError);
  CHECK_THROWS_AS(SmoothTorusMap(kCat, {PerturbationMode{0, {1}, 1e-3, 0.0}}),
                  nk::ValidationError);
  CHECK_THROWS_AS(SmoothTorusMap(IntMatrix(2, 3)), nk::DimensionError);
}
