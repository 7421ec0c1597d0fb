#include "nk/verify.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <sstream>

#include "nk/block_cyclic.hpp"
#include "nk/bounds.hpp"
#include "nk/corpus.hpp"
#include "nk/parallel.hpp"
#include "nk/product_group.hpp"
#include "nk/smooth_maps.hpp"
#include "nk/torus_maps.hpp"

namespace nk::verify {

using linalg::Int;
using linalg::IntMatrix;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Collects pass/fail across parallel work with bounded failure capture.
class Tally {
 public:
  void fail(const std::string& msg) {
    std::lock_guard<std::mutex> lock(mutex_);
    ++failures_;
    if (messages_.size() < 10) messages_.push_back(msg);
  }
  void count() { ++checked_; }
  long long checked() const { return checked_.load(); }
  long long failures() const { return failures_; }
  std::vector<std::string> messages() const { return messages_; }

 private:
  std::atomic<long long> checked_{0};
  long long failures_ = 0;
  std::vector<std::string> messages_;
  std::mutex mutex_;
};

std::string describe(const IntMatrix& m) { return m.to_string(); }

// ---- pools for the torus sweeps -------------------------------------------

std::vector<IntMatrix> dim1_pool(int lo, int hi) {
  std::vector<IntMatrix> pool;
  for (int a = lo; a <= hi; ++a) {
    if (a == 1) continue;  // det(I - A) = 0
    IntMatrix m(1, 1);
    m(0, 0) = a;
    pool.push_back(std::move(m));
  }
  return pool;
}

std::vector<IntMatrix> dim2_pool(int lo, int hi) {
  std::vector<IntMatrix> pool;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (int c = lo; c <= hi; ++c)
        for (int d = lo; d <= hi; ++d) {
          // det(I - A) = (1-a)(1-d) - bc
          long long det = (1LL - a) * (1LL - d) - static_cast<long long>(b) * c;
          if (det == 0) continue;
          pool.push_back(IntMatrix{{a, b}, {c, d}});
        }
  return pool;
}

// ---- criterion 1: block determinant identity --------------------------------

CriterionResult criterion1(const SweepOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.number = 1;
  r.name = "block determinant identity";

  const int trials = opts.quick ? 200 : 1000;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> size_dist(1, 4), m_dist(1, 5), entry_dist(-9, 9);

  std::vector<std::vector<IntMatrix>> tuples(trials);
  for (auto& blocks : tuples) {
    const int k = size_dist(rng);
    const int m = m_dist(rng);
    for (int b = 0; b < m; ++b) {
      IntMatrix blk(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) blk(i, j) = entry_dist(rng);
      blocks.push_back(std::move(blk));
    }
  }

  Tally tally;
  par::parallel_for(
      tuples.size(),
      [&](std::size_t i) {
        auto rep = linalg::cyclic_det_identity_check(tuples[i]);
        tally.count();
        if (!rep.equal)
          tally.fail("tuple " + std::to_string(i) + ": lhs " + rep.lhs.str() +
                     " != rhs " + rep.rhs.str());
      },
      opts.threads);

  r.pass = (tally.failures() == 0);
  r.failures = tally.messages();
  std::ostringstream d;
  d << trials << " random tuples (block size <= 4, m <= 5, entries in [-9,9]), "
    << tally.failures() << " failures";
  r.details = d.str();
  r.seconds = seconds_since(t0);
  return r;
}

// ---- criterion 2: Prop 2.4 / Thm 2.5 on finite corpora ----------------------

CriterionResult criterion2(const SweepOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.number = 2;
  r.name = "product automorphism decomposition and Aut order formula";

  Tally tally;
  auto s3 = groups::FiniteGroup::symmetric(3);
  groups::ProductGroupSpec s3sq({groups::ProductFactor{s3, 2}});
  groups::ProductGroup p(s3sq);

  auto auts = groups::enumerate_automorphisms(p);
  if (auts.size() != 72)
    tally.fail("S3^2: enumerated " + std::to_string(auts.size()) +
               " automorphisms, expected 72");
  for (const auto& a : auts) {
    tally.count();
    try {
      auto pa = groups::decompose_product_automorphism(s3sq, a.images);
      if (groups::compose_product_automorphism(s3sq, pa) != a.images)
        tally.fail("S3^2: decompose/compose round trip failed");
    } catch (const Error& e) {
      tally.fail(std::string("S3^2 decompose: ") + e.what());
    }
  }

  std::vector<groups::ProductGroupSpec> specs;
  specs.push_back(s3sq);
  specs.emplace_back(std::vector<groups::ProductFactor>{
      {s3, 1}, {groups::FiniteGroup::dihedral(5), 1}});
  if (!opts.quick)
    specs.emplace_back(std::vector<groups::ProductFactor>{
        {s3, 1}, {groups::FiniteGroup::symmetric(4), 1}});
  specs.emplace_back(std::vector<groups::ProductFactor>{{s3, 1}});  // single factor

  for (const auto& spec : specs) {
    tally.count();
    auto rep = groups::aut_order_check(spec);
    if (!rep.equal)
      tally.fail("aut order: enumerated " + std::to_string(rep.enumerated) +
                 " != formula " + std::to_string(rep.formula));
  }

  r.pass = (tally.failures() == 0);
  r.failures = tally.messages();
  std::ostringstream d;
  d << "72 automorphisms of S3^2 decomposed and round-tripped; "
    << specs.size() << " Aut-order formula checks";
  r.details = d.str();
  r.seconds = seconds_since(t0);
  return r;
}

// ---- criterion 3: unfactorizability equivalence over the corpus -------------

CriterionResult criterion3(const SweepOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.number = 3;
  r.name = "unfactorizable <=> centerless and indecomposable";

  const auto& corpus = corpus::group_corpus();
  std::vector<const groups::FiniteGroup*> selected;
  for (const auto& g : corpus)
    if (!opts.quick || g.order() <= 36) selected.push_back(&g);

  Tally tally;
  par::parallel_for(
      selected.size(),
      [&](std::size_t i) {
        auto rep = groups::unfactorizable_equivalence_check(*selected[i]);
        tally.count();
        if (!rep.consistent)
          tally.fail("group " + selected[i]->name() + ": equivalence violated");
      },
      opts.threads);

  r.pass = (tally.failures() == 0);
  r.failures = tally.messages();
  std::ostringstream d;
  d << selected.size() << " corpus groups (orders <= 60), " << tally.failures()
    << " discrepancies";
  r.details = d.str();
  r.seconds = seconds_since(t0);
  return r;
}

// ---- criteria 4 and 5: torus sweeps -----------------------------------------

struct TorusPools {
  std::vector<IntMatrix> d1;        // dim 1, entries in [-3,3]
  std::vector<IntMatrix> d2_small;  // dim 2, entries in [-1,1]
  std::vector<IntMatrix> d2_mid;    // dim 2, entries in [-2,2]
  std::vector<IntMatrix> d2_full;   // dim 2, entries in [-3,3]
};

TorusPools make_pools(bool quick) {
  TorusPools p;
  p.d1 = dim1_pool(-3, 3);
  p.d2_small = dim2_pool(-1, 1);
  p.d2_mid = quick ? p.d2_small : dim2_pool(-2, 2);
  p.d2_full = quick ? p.d2_mid : dim2_pool(-3, 3);
  return p;
}

CriterionResult criterion4(const SweepOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.number = 4;
  r.name = "product formulas for L, N and class indices";

  TorusPools pools = make_pools(opts.quick);
  Tally tally;

  auto check_full = [&](const std::vector<const IntMatrix*>& tuple) {
    std::vector<torus::TorusMap> fs;
    for (const auto* m : tuple) fs.emplace_back(*m);
    auto rep = torus::analyze_product(fs);
    tally.count();
    if (!rep.all_ok) {
      std::string msg = "product tuple failed:";
      for (const auto* m : tuple) msg += " " + describe(*m);
      for (const auto& f : rep.failures) msg += "; " + f;
      tally.fail(msg);
    }
  };

  // dim-1 factors: every tuple up to length 3, full class-by-class checks
  for (const auto& a : pools.d1) check_full({&a});
  for (const auto& a : pools.d1)
    for (const auto& b : pools.d1) check_full({&a, &b});
  {
    std::size_t n = pools.d1.size();
    par::parallel_for(
        n * n * n,
        [&](std::size_t idx) {
          const IntMatrix& a = pools.d1[idx / (n * n)];
          const IntMatrix& b = pools.d1[(idx / n) % n];
          const IntMatrix& c = pools.d1[idx % n];
          check_full({&a, &b, &c});
        },
        opts.threads);
  }

  // dim-2 singles over the full pool: Lefschetz-Hopf and class counts
  par::parallel_for(
      pools.d2_full.size(),
      [&](std::size_t i) {
        auto s = torus::analyze(torus::TorusMap(pools.d2_full[i]));
        tally.count();
        Int sum = 0;
        for (const auto& c : s.classes) sum += c.index;
        if (sum != s.lefschetz || Int(static_cast<long long>(s.classes.size())) != s.nielsen)
          tally.fail("single map summary inconsistent: " + describe(pools.d2_full[i]));
      },
      opts.threads);

  // mixed dim-1 x dim-2 pairs (both orders), full checks
  for (const auto& a : pools.d1) {
    par::parallel_for(
        pools.d2_mid.size(),
        [&](std::size_t i) {
          check_full({&a, &pools.d2_mid[i]});
          check_full({&pools.d2_mid[i], &a});
        },
        opts.threads);
  }

  // dim-2 pairs at entries [-2,2]: full class-by-class checks
  {
    std::size_t n = pools.d2_mid.size();
    par::parallel_for(
        n * n,
        [&](std::size_t idx) {
          check_full({&pools.d2_mid[idx / n], &pools.d2_mid[idx % n]});
        },
        opts.threads);
  }

  // dim-2 pairs at entries [-3,3]: determinant-route L and N identities
  // (class enumeration at this scale is covered by the [-2,2] tier)
  if (!opts.quick) {
    std::size_t n = pools.d2_full.size();
    par::parallel_for(
        n * n,
        [&](std::size_t idx) {
          const IntMatrix& a = pools.d2_full[idx / n];
          const IntMatrix& b = pools.d2_full[idx % n];
          Int la = linalg::det_exact(linalg::identity_minus(a));
          Int lb = linalg::det_exact(linalg::identity_minus(b));
          auto prod = torus::product_map({torus::TorusMap(a), torus::TorusMap(b)});
          Int lp = linalg::det_exact(linalg::identity_minus(prod.linear_part));
          tally.count();
          if (lp != la * lb)
            tally.fail("L(product) != L1*L2 for " + describe(a) + ", " + describe(b));
        },
        opts.threads);
  }

  // triples mixing dim-1 with dim-2 entries [-1,1], full checks
  {
    std::vector<const IntMatrix*> mixed;
    for (const auto& m : pools.d1) mixed.push_back(&m);
    for (const auto& m : pools.d2_small) mixed.push_back(&m);
    std::size_t n = mixed.size();
    par::parallel_for(
        n * n * n,
        [&](std::size_t idx) {
          check_full({mixed[idx / (n * n)], mixed[(idx / n) % n], mixed[idx % n]});
        },
        opts.threads);
  }

  r.pass = (tally.failures() == 0);
  r.failures = tally.messages();
  std::ostringstream d;
  d << tally.checked() << " factor tuples checked (" << tally.failures()
    << " failures); class-by-class on all tiers except the [-3,3] pair tier "
    << "(determinant route there)";
  r.details = d.str();
  r.seconds = seconds_since(t0);
  return r;
}

CriterionResult criterion5(const SweepOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.number = 5;
  r.name = "cyclic reduction: L, N, index multisets and rho";

  TorusPools pools = make_pools(opts.quick);
  Tally tally;

  auto check_cyclic = [&](const std::vector<const IntMatrix*>& comps) {
    std::vector<torus::TorusMap> fs;
    for (const auto* m : comps) fs.emplace_back(*m);
    torus::CyclicTorusMap f(std::move(fs));
    auto rep = torus::analyze_cyclic(f);
    tally.count();
    if (!rep.all_ok) {
      std::string msg = "cyclic tuple failed:";
      for (const auto* m : comps) msg += " " + describe(*m);
      for (const auto& fmsg : rep.failures) msg += "; " + fmsg;
      tally.fail(msg);
    }
  };

  // dim-1 components, m <= 3, exhaustive (composition may be degenerate;
  // analyze_cyclic handles both sides uniformly)
  {
    std::vector<IntMatrix> d1 = dim1_pool(-3, 3);
    // also include the degenerate multiplier 1 on the component level
    IntMatrix one(1, 1);
    one(0, 0) = 1;
    d1.push_back(one);
    std::size_t n = d1.size();
    for (std::size_t i = 0; i < n; ++i) check_cyclic({&d1[i]});
    par::parallel_for(
        n * n, [&](std::size_t idx) { check_cyclic({&d1[idx / n], &d1[idx % n]}); },
        opts.threads);
    par::parallel_for(
        n * n * n,
        [&](std::size_t idx) {
          check_cyclic({&d1[idx / (n * n)], &d1[(idx / n) % n], &d1[idx % n]});
        },
        opts.threads);
  }

  // dim-2 components: m = 2 at entries [-2,2], m = 3 at entries [-1,1]
  {
    std::size_t n = pools.d2_mid.size();
    par::parallel_for(
        n * n,
        [&](std::size_t idx) {
          check_cyclic({&pools.d2_mid[idx / n], &pools.d2_mid[idx % n]});
        },
        opts.threads);
  }
  {
    std::size_t n = pools.d2_small.size();
    par::parallel_for(
        n * n * n,
        [&](std::size_t idx) {
          check_cyclic({&pools.d2_small[idx / (n * n)],
                        &pools.d2_small[(idx / n) % n], &pools.d2_small[idx % n]});
        },
        opts.threads);
  }

  // dim-2 pairs at entries [-3,3]: exact determinant identity only
  if (!opts.quick) {
    std::size_t n = pools.d2_full.size();
    par::parallel_for(
        n * n,
        [&](std::size_t idx) {
          auto rep = linalg::cyclic_det_identity_check(
              {pools.d2_full[idx / n], pools.d2_full[idx % n]});
          tally.count();
          if (!rep.equal)
            tally.fail("det identity failed for a [-3,3] pair");
        },
        opts.threads);
  }

  r.pass = (tally.failures() == 0);
  r.failures = tally.messages();
  std::ostringstream d;
  d << tally.checked() << " cyclic tuples checked (" << tally.failures()
    << " failures), multisets and rho verified on the class-enumerated tiers";
  r.details = d.str();
  r.seconds = seconds_since(t0);
  return r;
}

// ---- criterion 6: smooth Lefschetz-Hopf and finite differences ---------------

CriterionResult criterion6(const SweepOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.number = 6;
  r.name = "smooth fixed points: Lefschetz-Hopf and Jacobian checks";

  const auto& corpus = corpus::smooth_corpus();
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (!opts.quick || i % 3 == 0) selected.push_back(i);

  smooth::SolverConfig cfg;
  if (opts.quick) cfg.grid_density = 12;

  Tally tally;
  par::parallel_for(
      selected.size(),
      [&](std::size_t si) {
        const auto& f = corpus[selected[si]];
        auto hopf = smooth::lefschetz_hopf_check(f, cfg);
        tally.count();
        if (!hopf.equal || !hopf.find.verdict) {
          tally.fail("map " + std::to_string(selected[si]) + ": index sum " +
                     hopf.index_sum.str() + " vs det " + hopf.expected.str() +
                     (hopf.find.verdict ? "" : " (find verdict failed)"));
          return;
        }
        // finite differences at every located fixed point
        for (const auto& p : hopf.find.points) {
          auto fd = smooth::jacobian_fd_check(f, p.coordinates, 1e-6, 1e-5);
          if (!fd.pass)
            tally.fail("map " + std::to_string(selected[si]) +
                       ": fd deviation " + std::to_string(fd.rel_deviation));
        }
      },
      opts.threads);

  r.pass = (tally.failures() == 0);
  r.failures = tally.messages();
  std::ostringstream d;
  d << selected.size() << " smooth maps: Hopf sums exact, Jacobians within 1e-5";
  r.details = d.str();
  r.seconds = seconds_since(t0);
  return r;
}

// ---- criterion 7: index multiset checker -------------------------------------

CriterionResult criterion7(const SweepOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.number = 7;
  r.name = "surface index bound checker";

  Tally tally;
  for (const auto& m : corpus::valid_multisets()) {
    tally.count();
    auto rep = bounds::check_index_multiset(m);
    if (!rep.verdict) tally.fail("valid multiset rejected (chi " +
                                 std::to_string(m.chi) + ")");
  }
  for (const auto& v : corpus::violating_multisets()) {
    tally.count();
    auto rep = bounds::check_index_multiset(v.multiset);
    if (rep.verdict) {
      tally.fail("violating multiset accepted (expected clause " +
                 v.expected_clause + ")");
      continue;
    }
    bool named = false;
    for (const auto& viol : rep.violations)
      if (viol.clause == v.expected_clause) named = true;
    if (!named)
      tally.fail("violating multiset rejected without naming clause " +
                 v.expected_clause);
  }

  r.pass = (tally.failures() == 0);
  r.failures = tally.messages();
  std::ostringstream d;
  d << corpus::valid_multisets().size() << " valid and "
    << corpus::violating_multisets().size() << " violating multisets";
  r.details = d.str();
  r.seconds = seconds_since(t0);
  return r;
}

// ---- criterion 8: product bound instantiation --------------------------------

CriterionResult criterion8(const SweepOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.number = 8;
  r.name = "hyperbolic product bound instantiation";

  Tally tally;
  auto expect = [&](Int got, long long want, const std::string& what) {
    tally.count();
    if (got != want)
      tally.fail(what + ": got " + got.str() + ", want " + std::to_string(want));
  };
  using bounds::SurfaceSpec;
  expect(bounds::hyperbolic_product_bound({SurfaceSpec::from_genus(2, 2)}), 25,
         "two genus-2 factors");
  expect(bounds::hyperbolic_product_bound(
             {SurfaceSpec::from_genus(2, 1), SurfaceSpec::from_genus(3, 1)}),
         45, "genus-2 x genus-3");
  expect(bounds::hyperbolic_product_bound({SurfaceSpec::from_genus(2, 1)}), 5,
         "single genus-2");
  expect(bounds::product_bound({Int(5), Int(5)}), 25, "product bound (5,5)");

  r.pass = (tally.failures() == 0);
  r.failures = tally.messages();
  r.details = "bound values 25, 45, 5 and 25 reproduced exactly";
  r.seconds = seconds_since(t0);
  return r;
}

// ---- criterion 9: homology -----------------------------------------------------

CriterionResult criterion9(const SweepOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  r.number = 9;
  r.name = "Lefschetz numbers on the complex corpus";

  Tally tally;
  for (const auto& named : corpus::complex_corpus()) {
    tally.count();
    const auto& k = named.complex;
    long long chi = homology::euler_characteristic(k);
    if (chi != named.expected_chi) {
      tally.fail(named.name + ": chi " + std::to_string(chi) + " != " +
                 std::to_string(named.expected_chi));
      continue;
    }
    std::vector<int> id(k.vertex_count());
    for (int i = 0; i < k.vertex_count(); ++i) id[i] = i;
    auto rep = homology::lefschetz_report(k, homology::SimplicialMap{id, 0});
    if (rep.lefschetz != chi)
      tally.fail(named.name + ": L(identity) != chi");
    if (rep.betti != named.expected_betti)
      tally.fail(named.name + ": betti numbers mismatch");
  }

  tally.count();
  auto deg2 = homology::lefschetz_number(corpus::circle_triangle(),
                                         corpus::degree_two_circle_map());
  if (deg2 != -1)
    tally.fail("degree-2 circle map: L = " + deg2.str() + ", want -1");

  r.pass = (tally.failures() == 0);
  r.failures = tally.messages();
  std::ostringstream d;
  d << corpus::complex_corpus().size()
    << " complexes: L(id) = chi and Betti numbers exact; degree-2 circle map L = -1";
  r.details = d.str();
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace

CriterionResult run_criterion(int number, const SweepOptions& opts) {
  switch (number) {
    case 1: return criterion1(opts);
    case 2: return criterion2(opts);
    case 3: return criterion3(opts);
    case 4: return criterion4(opts);
    case 5: return criterion5(opts);
    case 6: return criterion6(opts);
    case 7: return criterion7(opts);
    case 8: return criterion8(opts);
    case 9: return criterion9(opts);
    default:
      throw DomainError("run_criterion: criteria are numbered 1..9");
  }
}

VerifyReport run_all(const SweepOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.quick = opts.quick;
  rep.seed = opts.seed;
  rep.threads = par::thread_count(opts.threads);
  rep.all_pass = true;
  for (int n = 1; n <= 9; ++n) {
    rep.criteria.push_back(run_criterion(n, opts));
    rep.all_pass = rep.all_pass && rep.criteria.back().pass;
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

}  // namespace nk::verify
