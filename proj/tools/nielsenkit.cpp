// Command-line front end: every toolkit operation with JSON input/output,
// plus the verify-all sweep.  Inputs are files or '-' for stdin; reports go
// to stdout as JSON with a short human summary on stderr.  Exit codes:
// 0 all checks passed, 1 some check failed, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nk/automorphisms.hpp"
#include "nk/corpus.hpp"
#include "nk/json_io.hpp"
#include "nk/parallel.hpp"
#include "nk/verify.hpp"

namespace {

using nk::io::json;

constexpr int kSchemaVersion = 1;

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw nk::ValidationError("cannot open input file: " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw nk::ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

struct Check {
  std::string name;
  bool pass;
  std::string details;
};

struct Run {
  json inputs = json::object();
  json results = json::object();
  std::vector<Check> checks;
};

int emit(const std::string& command, const Run& run) {
  bool all_pass = true;
  json checks = json::array();
  for (const auto& c : run.checks) {
    all_pass = all_pass && c.pass;
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  }
  const int exit_code = all_pass ? 0 : 1;
  json report{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", run.inputs},
              {"results", run.results},
              {"checks", checks},
              {"exit_code", exit_code}};
  std::cout << report.dump(2) << "\n";
  if (run.checks.empty()) {
    std::cerr << command << ": ok\n";
  } else {
    int passed = 0;
    for (const auto& c : run.checks) passed += c.pass ? 1 : 0;
    std::cerr << command << ": " << passed << "/" << run.checks.size()
              << " checks passed\n";
    for (const auto& c : run.checks)
      if (!c.pass) std::cerr << "  FAIL " << c.name << ": " << c.details << "\n";
  }
  return exit_code;
}

int emit_input_error(const std::string& command, const std::string& message) {
  json report{{"schema_version", kSchemaVersion},
              {"command", command},
              {"error", message},
              {"exit_code", 2}};
  std::cout << report.dump(2) << "\n";
  std::cerr << command << ": input error: " << message << "\n";
  return 2;
}

// ---- linalg -----------------------------------------------------------------

int cmd_linalg_det(const std::string& input) {
  auto m = nk::io::matrix_from_json(read_json(input));
  Run run;
  run.inputs["matrix"] = nk::io::matrix_to_json(m);
  run.results["det"] = nk::linalg::det_exact(m).str();
  std::cerr << "det = " << run.results["det"].get<std::string>() << "\n";
  return emit("linalg det", run);
}

int cmd_linalg_snf(const std::string& input) {
  auto m = nk::io::matrix_from_json(read_json(input));
  auto s = nk::linalg::smith_normal_form(m);
  Run run;
  run.inputs["matrix"] = nk::io::matrix_to_json(m);
  run.results = nk::io::smith_to_json(s);
  bool product_ok = (s.u * m * s.v == s.d);
  nk::linalg::Int du = nk::linalg::det_exact(s.u);
  nk::linalg::Int dv = nk::linalg::det_exact(s.v);
  bool unimodular = (du == 1 || du == -1) && (dv == 1 || dv == -1);
  bool chain_ok = true;
  auto diag = s.diagonal();
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i] == 0 && diag[i + 1] != 0) chain_ok = false;
    if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) chain_ok = false;
  }
  run.checks.push_back({"umv_equals_d", product_ok, "U*M*V == D"});
  run.checks.push_back({"unimodular", unimodular, "|det U| = |det V| = 1"});
  run.checks.push_back({"divisibility_chain", chain_ok, "d_i | d_{i+1}"});
  return emit("linalg snf", run);
}

int cmd_linalg_cokernel(const std::string& input) {
  auto m = nk::io::matrix_from_json(read_json(input));
  auto c = nk::linalg::cokernel(m);
  Run run;
  run.inputs["matrix"] = nk::io::matrix_to_json(m);
  run.results = nk::io::cokernel_to_json(c);
  std::cerr << "order = " << run.results["order"].dump() << "\n";
  return emit("linalg cokernel", run);
}

int cmd_linalg_block_det(const std::string& input) {
  auto blocks = nk::io::blocks_from_json(read_json(input));
  auto rep = nk::linalg::cyclic_det_identity_check(blocks);
  Run run;
  run.inputs["block_count"] = blocks.size();
  run.results = nk::io::cyclic_det_to_json(rep);
  run.checks.push_back({"cyclic_det_identity", rep.equal,
                        "det(I-N) = " + rep.lhs.str() + ", det(I-N_m...N_1) = " +
                            rep.rhs.str()});
  return emit("linalg block-det-identity", run);
}

// ---- group --------------------------------------------------------------------

int cmd_group_check(const std::string& input) {
  auto g = nk::io::group_from_json(read_json(input));
  auto eq = nk::groups::unfactorizable_equivalence_check(g);
  auto uf = nk::groups::is_unfactorizable(g);
  Run run;
  run.inputs["order"] = g.order();
  if (!g.name().empty()) run.inputs["name"] = g.name();
  run.results = nk::io::equivalence_report_to_json(eq, uf, nk::groups::center(g).size());
  run.checks.push_back({"unfactorizable_equivalence", eq.consistent,
                        "unfactorizable == (centerless && indecomposable)"});
  return emit("group check", run);
}

int cmd_group_aut(const std::string& input, int cap) {
  auto g = nk::io::group_from_json(read_json(input));
  auto auts = nk::groups::automorphisms(g, cap);
  Run run;
  run.inputs["order"] = g.order();
  run.results["count"] = auts.size();
  if (auts.size() <= 512) {
    json list = json::array();
    for (const auto& a : auts) list.push_back(a.images);
    run.results["automorphisms"] = std::move(list);
  }
  std::cerr << "|Aut| = " << auts.size() << "\n";
  return emit("group aut", run);
}

int cmd_group_conj(const std::string& input) {
  auto g = nk::io::group_from_json(read_json(input));
  auto classes = nk::groups::conjugacy_classes(g);
  Run run;
  run.inputs["order"] = g.order();
  run.results["count"] = classes.size();
  run.results["classes"] = classes;
  json sizes = json::array();
  for (const auto& c : classes) sizes.push_back(c.size());
  run.results["sizes"] = std::move(sizes);
  bool divides = true;
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.size();
    if (g.order() % static_cast<int>(c.size()) != 0) divides = false;
  }
  run.checks.push_back({"partition", total == static_cast<std::size_t>(g.order()),
                        "classes partition the group"});
  run.checks.push_back({"sizes_divide_order", divides, "class sizes divide |G|"});
  return emit("group conj-classes", run);
}

int cmd_group_decompose(const std::string& spec_path, const std::string& aut_path) {
  auto spec = nk::io::product_spec_from_json(read_json(spec_path));
  auto images = nk::io::automorphism_from_json(read_json(aut_path));
  auto pa = nk::groups::decompose_product_automorphism(spec, images);
  Run run;
  run.inputs["product_order"] = spec.order();
  run.results = nk::io::product_automorphism_to_json(pa);
  bool round_trip = (nk::groups::compose_product_automorphism(spec, pa) == images);
  run.checks.push_back({"round_trip", round_trip, "compose(decompose(phi)) == phi"});
  return emit("group decompose", run);
}

int cmd_group_aut_order(const std::string& spec_path) {
  auto spec = nk::io::product_spec_from_json(read_json(spec_path));
  auto rep = nk::groups::aut_order_check(spec);
  Run run;
  run.inputs["product_order"] = spec.order();
  run.results = nk::io::aut_order_report_to_json(rep);
  run.checks.push_back({"aut_order_formula", rep.equal,
                        std::to_string(rep.enumerated) + " enumerated vs formula " +
                            std::to_string(rep.formula)});
  return emit("group aut-order-check", run);
}

// ---- torus ----------------------------------------------------------------------

int cmd_torus_analyze(const std::string& input, long long class_cap) {
  auto f = nk::io::torus_map_from_json(read_json(input));
  auto s = nk::torus::analyze(f, nk::linalg::Int(class_cap));
  Run run;
  run.inputs["dim"] = f.dim();
  run.results = nk::io::nielsen_summary_to_json(s);
  std::cerr << "L = " << s.lefschetz << ", N = " << s.nielsen
            << (s.degenerate ? " (degenerate)" : "") << "\n";
  return emit("torus analyze", run);
}

int cmd_torus_product(const std::string& input, long long class_cap) {
  auto fs = nk::io::torus_factors_from_json(read_json(input));
  auto rep = nk::torus::analyze_product(fs, nk::linalg::Int(class_cap));
  Run run;
  run.inputs["factors"] = fs.size();
  run.results = nk::io::product_report_to_json(rep);
  run.checks.push_back({"lefschetz_product", rep.lefschetz_ok, "L = prod L_i"});
  run.checks.push_back({"nielsen_product", rep.nielsen_ok, "N = prod N_i"});
  run.checks.push_back({"classwise_product", rep.classwise_ok,
                        "class indices multiply over factors"});
  return emit("torus product", run);
}

int cmd_torus_cyclic(const std::string& input, long long class_cap) {
  auto f = nk::io::cyclic_torus_map_from_json(read_json(input));
  auto rep = nk::torus::analyze_cyclic(f, nk::linalg::Int(class_cap));
  Run run;
  run.inputs["m"] = f.m();
  run.inputs["dim"] = f.dim();
  run.results = nk::io::cyclic_report_to_json(rep);
  if (!rep.composed.degenerate) {
    try {
      run.results["rho"] = nk::io::rho_pairs_to_json(
          nk::torus::rho_correspondence(f, nk::linalg::Int(class_cap)));
    } catch (const nk::Error&) {
      // reported through rho_ok below
    }
  }
  run.checks.push_back({"lefschetz_equal", rep.lefschetz_ok, "L(cyclic) = L(composed)"});
  run.checks.push_back({"nielsen_equal", rep.nielsen_ok, "N(cyclic) = N(composed)"});
  run.checks.push_back({"index_multisets_equal", rep.multiset_ok, ""});
  run.checks.push_back({"det_identity", rep.det_identity.equal,
                        "det(I-N) = det(I-A_m...A_1)"});
  run.checks.push_back({"rho_bijection", rep.rho_ok, "index-preserving bijection"});
  return emit("torus cyclic", run);
}

// ---- smooth ----------------------------------------------------------------------

nk::smooth::SolverConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  return nk::io::solver_config_from_json(read_json(path));
}

int cmd_smooth_find(const std::string& map_path, const std::string& config_path) {
  auto f = nk::io::smooth_map_from_json(read_json(map_path));
  auto cfg = load_config(config_path);
  auto rep = nk::smooth::find_fixed_points(f, cfg);
  Run run;
  run.inputs["dim"] = f.dim();
  run.inputs["modes"] = f.modes().size();
  run.inputs["config"] = nk::io::solver_config_to_json(cfg);
  run.results = nk::io::find_report_to_json(rep);
  run.checks.push_back({"count_matches_det", rep.count_ok,
                        std::to_string(rep.points.size()) + " points vs |det(I-A)| = " +
                            rep.expected_count.str()});
  run.checks.push_back({"all_transversal", rep.all_transversal, ""});
  std::cerr << "found " << rep.points.size() << " fixed points\n";
  return emit("smooth find", run);
}

int cmd_smooth_check(const std::string& map_path, const std::string& cyclic_path,
                     const std::string& config_path) {
  auto cfg = load_config(config_path);
  Run run;
  run.inputs["config"] = nk::io::solver_config_to_json(cfg);
  if (!map_path.empty()) {
    auto f = nk::io::smooth_map_from_json(read_json(map_path));
    auto hopf = nk::smooth::lefschetz_hopf_check(f, cfg);
    run.results["hopf"] = nk::io::hopf_report_to_json(hopf);
    json fds = json::array();
    bool fd_all = true;
    for (const auto& p : hopf.find.points) {
      auto fd = nk::smooth::jacobian_fd_check(f, p.coordinates);
      fd_all = fd_all && fd.pass;
      fds.push_back(nk::io::fd_report_to_json(fd));
    }
    run.results["jacobian_fd"] = std::move(fds);
    run.checks.push_back({"lefschetz_hopf", hopf.equal,
                          "sum of indices = " + hopf.index_sum.str() + ", det(I-A) = " +
                              hopf.expected.str()});
    run.checks.push_back({"find_verdict", hopf.find.verdict, ""});
    run.checks.push_back({"jacobian_fd", fd_all, "analytic vs central differences"});
    return emit("smooth check", run);
  }
  auto f = nk::io::cyclic_smooth_map_from_json(read_json(cyclic_path));
  auto rep = nk::smooth::cyclic_jacobian_check(f, cfg);
  run.results = nk::io::cyclic_jacobian_report_to_json(rep);
  run.checks.push_back({"block_jacobian_signs", rep.all_signs_equal,
                        "sign det(I-N) = sign det(I-N_m...N_1) at every point"});
  run.checks.push_back({"all_conclusive", rep.all_conclusive, ""});
  run.checks.push_back({"composed_find_verdict", rep.composed_find.verdict, ""});
  return emit("smooth check", run);
}

// ---- bounds ---------------------------------------------------------------------

int cmd_bounds_interval(long long chi) {
  auto [lo, hi] = nk::bounds::surface_index_interval(chi);
  Run run;
  run.inputs["chi"] = chi;
  run.results["lower"] = lo;
  run.results["upper"] = hi;
  std::cerr << "index interval [" << lo << ", " << hi << "]\n";
  return emit("bounds interval", run);
}

int cmd_bounds_check(const std::string& input) {
  auto m = nk::io::multiset_from_json(read_json(input));
  auto rep = nk::bounds::check_index_multiset(m);
  Run run;
  run.inputs["indices"] = m.indices;
  run.inputs["chi"] = m.chi;
  run.results = nk::io::bound_report_to_json(rep);
  run.checks.push_back({"interval", rep.interval_ok, "2chi-1 <= ind <= 1"});
  run.checks.push_back({"aggregate", rep.aggregate_ok, "sum_{ind<-1}(ind+1) >= 2chi"});
  run.checks.push_back({"lefschetz_nielsen", rep.ln_inequality_ok,
                        "|L-chi| <= N-chi"});
  return emit("bounds check", run);
}

int cmd_bounds_product(const std::string& input) {
  auto bounds_list = nk::io::bound_list_from_json(read_json(input));
  Run run;
  run.inputs["count"] = bounds_list.size();
  run.results["bound"] = nk::io::int_to_json(nk::bounds::product_bound(bounds_list));
  return emit("bounds product", run);
}

int cmd_bounds_hyperbolic(const std::string& input) {
  auto surfaces = nk::io::surfaces_from_json(read_json(input));
  Run run;
  run.inputs["surfaces"] = surfaces.size();
  run.results["bound"] =
      nk::io::int_to_json(nk::bounds::hyperbolic_product_bound(surfaces));
  std::cerr << "B' = " << run.results["bound"].dump() << "\n";
  return emit("bounds hyperbolic-product", run);
}

// ---- homology -------------------------------------------------------------------

int cmd_homology_chi(const std::string& complex_path) {
  auto k = nk::io::complex_from_json(read_json(complex_path));
  Run run;
  run.inputs["vertices"] = k.vertex_count();
  run.results["chi"] = nk::homology::euler_characteristic(k);
  json counts = json::array();
  for (int q = 0; q <= k.dimension(); ++q) counts.push_back(k.count(q));
  run.results["simplex_counts"] = std::move(counts);
  std::cerr << "chi = " << run.results["chi"].dump() << "\n";
  return emit("homology chi", run);
}

int cmd_homology_boundaries(const std::string& complex_path) {
  auto k = nk::io::complex_from_json(read_json(complex_path));
  auto b = nk::homology::boundary_matrices(k);
  Run run;
  run.inputs["vertices"] = k.vertex_count();
  json mats = json::array();
  for (const auto& m : b) mats.push_back(nk::io::matrix_to_json(m));
  run.results["boundaries"] = std::move(mats);
  run.results["betti"] = nk::homology::betti_numbers(k);
  bool dd_zero = true;
  for (std::size_t q = 1; q < b.size(); ++q) {
    auto prod = b[q - 1] * b[q];
    dd_zero = dd_zero &&
              (prod == nk::linalg::IntMatrix::zero(prod.rows(), prod.cols()));
  }
  run.checks.push_back({"boundary_squared_zero", dd_zero, "d_q d_{q+1} = 0"});
  return emit("homology boundaries", run);
}

int cmd_homology_lefschetz(const std::string& complex_path, const std::string& map_path) {
  auto k = nk::io::complex_from_json(read_json(complex_path));
  auto f = nk::io::simplicial_map_from_json(read_json(map_path));
  auto rep = nk::homology::lefschetz_report(k, f);
  Run run;
  run.inputs["vertices"] = k.vertex_count();
  run.inputs["subdivisions"] = f.subdivisions;
  run.results = nk::io::lefschetz_report_to_json(rep);
  std::cerr << "L = " << rep.lefschetz << "\n";
  return emit("homology lefschetz", run);
}

// ---- verify-all ------------------------------------------------------------------

json verify_report_to_json(const nk::verify::VerifyReport& rep) {
  json criteria = json::array();
  for (const auto& c : rep.criteria)
    criteria.push_back(json{{"number", c.number},
                            {"name", c.name},
                            {"pass", c.pass},
                            {"seconds", c.seconds},
                            {"details", c.details},
                            {"failures", c.failures}});
  return json{{"schema_version", kSchemaVersion},
              {"command", "verify-all"},
              {"criteria", criteria},
              {"all_pass", rep.all_pass},
              {"seconds", rep.seconds},
              {"quick", rep.quick},
              {"seed", rep.seed},
              {"threads", rep.threads},
              {"exit_code", rep.all_pass ? 0 : 1}};
}

int cmd_verify_all(bool quick, const std::string& json_path, std::uint64_t seed,
                   int threads) {
  nk::verify::SweepOptions opts;
  opts.quick = quick;
  opts.seed = seed;
  opts.threads = threads;
  auto rep = nk::verify::run_all(opts);

  std::ostringstream summary;
  for (const auto& c : rep.criteria) {
    summary << (c.pass ? "[PASS] " : "[FAIL] ") << c.number << " " << c.name << " ("
            << c.details << ", " << c.seconds << "s)\n";
    for (const auto& f : c.failures) summary << "       " << f << "\n";
  }
  summary << (rep.all_pass ? "all criteria passed" : "SOME CRITERIA FAILED") << " in "
          << rep.seconds << "s\n";

  json out = verify_report_to_json(rep);
  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!file) return emit_input_error("verify-all", "cannot write " + json_path);
    file << out.dump(2) << "\n";
    std::cout << summary.str();
  } else {
    std::cout << out.dump(2) << "\n";
    std::cerr << summary.str();
  }
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nielsen fixed point toolkit: exact torus oracles, finite group "
               "automorphism decomposition, simplicial Lefschetz numbers, smooth "
               "fixed-point search and index bound checkers"};
  app.require_subcommand(1);

  std::string input, blocks, spec, aut, map_path, cyclic_path, config_path,
      complex_path, json_path;
  long long chi = 0, class_cap = 1000000;
  int aut_cap = 120, threads = 0;
  std::uint64_t seed = 20240809;
  bool quick = false;

  auto* linalg = app.add_subcommand("linalg", "exact integer linear algebra");
  linalg->require_subcommand(1);
  auto* l_det = linalg->add_subcommand("det", "exact determinant");
  l_det->add_option("--input,-i", input, "matrix JSON (or '-')")->required();
  auto* l_snf = linalg->add_subcommand("snf", "Smith normal form");
  l_snf->add_option("--input,-i", input, "matrix JSON (or '-')")->required();
  auto* l_cok = linalg->add_subcommand("cokernel", "structure of Z^n / M Z^n");
  l_cok->add_option("--input,-i", input, "matrix JSON (or '-')")->required();
  auto* l_block = linalg->add_subcommand("block-det-identity",
                                         "cyclic block determinant identity");
  l_block->add_option("--blocks,-b", blocks, "blocks JSON (or '-')")->required();

  auto* group = app.add_subcommand("group", "finite group machinery");
  group->require_subcommand(1);
  auto* g_check = group->add_subcommand("check", "centerless/indecomposable/unfactorizable");
  g_check->add_option("--input,-i", input)->required();
  auto* g_aut = group->add_subcommand("aut", "enumerate automorphisms");
  g_aut->add_option("--input,-i", input)->required();
  g_aut->add_option("--cap", aut_cap, "group order cap (default 120)");
  auto* g_conj = group->add_subcommand("conj-classes", "conjugacy classes");
  g_conj->add_option("--input,-i", input)->required();
  auto* g_dec = group->add_subcommand("decompose", "split a product automorphism");
  g_dec->add_option("--spec", spec, "product spec JSON")->required();
  g_dec->add_option("--aut", aut, "automorphism JSON")->required();
  auto* g_aoc = group->add_subcommand("aut-order-check", "brute force vs formula");
  g_aoc->add_option("--spec", spec, "product spec JSON")->required();

  auto* torus = app.add_subcommand("torus", "exact Nielsen theory on tori");
  torus->require_subcommand(1);
  auto* t_an = torus->add_subcommand("analyze", "classes, indices, L, N");
  t_an->add_option("--input,-i", input)->required();
  t_an->add_option("--class-cap", class_cap, "class enumeration cap");
  auto* t_prod = torus->add_subcommand("product", "product formula verification");
  t_prod->add_option("--input,-i", input)->required();
  t_prod->add_option("--class-cap", class_cap);
  auto* t_cyc = torus->add_subcommand("cyclic", "cyclic map vs composition");
  t_cyc->add_option("--input,-i", input)->required();
  t_cyc->add_option("--class-cap", class_cap);

  auto* smooth = app.add_subcommand("smooth", "numerical fixed point engine");
  smooth->require_subcommand(1);
  auto* s_find = smooth->add_subcommand("find", "locate transversal fixed points");
  s_find->add_option("--map,-m", map_path, "smooth map JSON")->required();
  s_find->add_option("--config,-c", config_path, "solver config JSON");
  auto* s_check = smooth->add_subcommand("check", "Hopf sum / cyclic Jacobian checks");
  s_check->add_option("--map,-m", map_path, "smooth map JSON");
  s_check->add_option("--cyclic", cyclic_path, "cyclic smooth map JSON");
  s_check->add_option("--config,-c", config_path, "solver config JSON");

  auto* bounds = app.add_subcommand("bounds", "index bound calculators");
  bounds->require_subcommand(1);
  auto* b_int = bounds->add_subcommand("interval", "per-class index interval");
  b_int->add_option("--chi", chi, "Euler characteristic (< 0)")->required();
  auto* b_check = bounds->add_subcommand("check", "multiset constraint check");
  b_check->add_option("--input,-i", input)->required();
  auto* b_prod = bounds->add_subcommand("product", "product of component bounds");
  b_prod->add_option("--input,-i", input)->required();
  auto* b_hyp = bounds->add_subcommand("hyperbolic-product",
                                       "prod |2chi_i - 1|^{n_i}");
  b_hyp->add_option("--input,-i", input)->required();

  auto* hom = app.add_subcommand("homology", "simplicial homology");
  hom->require_subcommand(1);
  auto* h_lef = hom->add_subcommand("lefschetz", "Lefschetz number of a map");
  h_lef->add_option("--complex", complex_path)->required();
  h_lef->add_option("--map", map_path)->required();
  auto* h_chi = hom->add_subcommand("chi", "Euler characteristic");
  h_chi->add_option("--complex", complex_path)->required();
  auto* h_bnd = hom->add_subcommand("boundaries", "boundary matrices and Betti numbers");
  h_bnd->add_option("--complex", complex_path)->required();

  auto* verify = app.add_subcommand("verify-all", "run the full verification sweep");
  verify->add_flag("--quick", quick, "reduced sweep (< 30 s)");
  verify->add_option("--json", json_path, "write the JSON report to a file");
  verify->add_option("--seed", seed, "seed for the random block tuples");
  verify->add_option("--threads", threads, "worker cap (default NIELSEN_KIT_THREADS)");

  CLI11_PARSE(app, argc, argv);

  std::string command;
  try {
    if (l_det->parsed()) return cmd_linalg_det(input);
    if (l_snf->parsed()) return cmd_linalg_snf(input);
    if (l_cok->parsed()) return cmd_linalg_cokernel(input);
    if (l_block->parsed()) return cmd_linalg_block_det(blocks);
    if (g_check->parsed()) return cmd_group_check(input);
    if (g_aut->parsed()) return cmd_group_aut(input, aut_cap);
    if (g_conj->parsed()) return cmd_group_conj(input);
    if (g_dec->parsed()) return cmd_group_decompose(spec, aut);
    if (g_aoc->parsed()) return cmd_group_aut_order(spec);
    if (t_an->parsed()) return cmd_torus_analyze(input, class_cap);
    if (t_prod->parsed()) return cmd_torus_product(input, class_cap);
    if (t_cyc->parsed()) return cmd_torus_cyclic(input, class_cap);
    if (s_find->parsed()) return cmd_smooth_find(map_path, config_path);
    if (s_check->parsed()) {
      if (map_path.empty() == cyclic_path.empty())
        return emit_input_error("smooth check", "pass exactly one of --map/--cyclic");
      return cmd_smooth_check(map_path, cyclic_path, config_path);
    }
    if (b_int->parsed()) return cmd_bounds_interval(chi);
    if (b_check->parsed()) return cmd_bounds_check(input);
    if (b_prod->parsed()) return cmd_bounds_product(input);
    if (b_hyp->parsed()) return cmd_bounds_hyperbolic(input);
    if (h_lef->parsed()) return cmd_homology_lefschetz(complex_path, map_path);
    if (h_chi->parsed()) return cmd_homology_chi(complex_path);
    if (h_bnd->parsed()) return cmd_homology_boundaries(complex_path);
    if (verify->parsed()) return cmd_verify_all(quick, json_path, seed, threads);
  } catch (const nk::Error& e) {
    return emit_input_error(app.get_subcommands().front()->get_name(), e.what());
  } catch (const std::exception& e) {
    return emit_input_error("nielsenkit", e.what());
  }
  return 2;
}
