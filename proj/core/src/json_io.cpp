#include "nk/json_io.hpp"

#include <limits>

namespace nk::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer())
    throw ValidationError(std::string("json: field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array())
    throw ValidationError(std::string("json: ") + what + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw ValidationError(std::string("json: ") + what + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json int_to_json(const linalg::Int& v) {
  static const linalg::Int lo = std::numeric_limits<long long>::min();
  static const linalg::Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

linalg::Int int_from_json(const json& j) {
  if (j.is_number_integer()) return linalg::Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return linalg::Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ValidationError("json: malformed integer string");
    }
  }
  throw ValidationError("json: expected integer or decimal string");
}

json matrix_to_json(const linalg::IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

linalg::IntMatrix matrix_from_json(const json& j) {
  const std::size_t rows = int_field(j, "rows");
  const std::size_t cols = int_field(j, "cols");
  const json& entries = require(j, "entries");
  if (!entries.is_array() || entries.size() != rows)
    throw ValidationError("json: matrix entries must have 'rows' rows");
  std::vector<linalg::Int> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols)
      throw ValidationError("json: matrix row of wrong length");
    for (const auto& v : row) flat.push_back(int_from_json(v));
  }
  return linalg::IntMatrix(rows, cols, std::move(flat));
}

json real_matrix_to_json(const linalg::RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json smith_to_json(const linalg::SmithDecomposition& s) {
  return json{{"U", matrix_to_json(s.u)},
              {"D", matrix_to_json(s.d)},
              {"V", matrix_to_json(s.v)}};
}

json cokernel_to_json(const linalg::CokernelStructure& c, const linalg::Int& rep_cap) {
  json out;
  json factors = json::array();
  for (const auto& f : c.invariant_factors()) factors.push_back(int_to_json(f));
  out["invariant_factors"] = std::move(factors);
  if (c.finite()) {
    out["order"] = int_to_json(c.order());
    if (c.order() <= rep_cap) {
      json reps = json::array();
      for (const auto& r : c.coset_representatives(rep_cap)) {
        json rep = json::array();
        for (const auto& v : r) rep.push_back(int_to_json(v));
        reps.push_back(std::move(rep));
      }
      out["coset_representatives"] = std::move(reps);
    }
  } else {
    out["order"] = "infinite";
  }
  return out;
}

json cyclic_det_to_json(const linalg::CyclicDetReport& r) {
  return json{{"lhs", int_to_json(r.lhs)},
              {"rhs", int_to_json(r.rhs)},
              {"equal", r.equal}};
}

std::vector<linalg::IntMatrix> blocks_from_json(const json& j) {
  const json& blocks = require(j, "blocks");
  if (!blocks.is_array() || blocks.empty())
    throw ValidationError("json: 'blocks' must be a non-empty array");
  std::vector<linalg::IntMatrix> out;
  for (const auto& b : blocks) out.push_back(matrix_from_json(b));
  return out;
}

groups::FiniteGroup group_from_json(const json& j) {
  std::string name = j.is_object() && j.contains("name") && j.at("name").is_string()
                         ? j.at("name").get<std::string>()
                         : "";
  if (j.is_object() && j.contains("table")) {
    const int order = int_field(j, "order");
    const json& table = require(j, "table");
    if (!table.is_array() || static_cast<int>(table.size()) != order)
      throw ValidationError("json: group table must have 'order' rows");
    std::vector<int> flat;
    for (const auto& row : table) {
      auto r = int_vector(row, "group table row");
      if (static_cast<int>(r.size()) != order)
        throw ValidationError("json: group table row of wrong length");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return groups::FiniteGroup(order, std::move(flat), std::move(name));
  }
  if (j.is_object() && j.contains("generators")) {
    const int degree = int_field(j, "degree");
    const json& gens = require(j, "generators");
    if (!gens.is_array())
      throw ValidationError("json: 'generators' must be an array");
    std::vector<std::vector<int>> g;
    for (const auto& p : gens) g.push_back(int_vector(p, "generator"));
    return groups::FiniteGroup::from_permutation_generators(degree, g, std::move(name));
  }
  throw ValidationError("json: group needs either 'table' or 'generators'");
}

json group_to_json(const groups::FiniteGroup& g) {
  json table = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  json out{{"order", g.order()}, {"table", std::move(table)}};
  if (!g.name().empty()) out["name"] = g.name();
  return out;
}

groups::ProductGroupSpec product_spec_from_json(const json& j, long long order_cap) {
  const json& factors = require(j, "factors");
  if (!factors.is_array() || factors.empty())
    throw ValidationError("json: 'factors' must be a non-empty array");
  std::vector<groups::ProductFactor> fs;
  for (const auto& f : factors) {
    groups::ProductFactor pf{group_from_json(require(f, "group")), 1};
    if (f.contains("multiplicity")) pf.multiplicity = int_field(f, "multiplicity");
    fs.push_back(std::move(pf));
  }
  return groups::ProductGroupSpec(std::move(fs), order_cap);
}

std::vector<int> automorphism_from_json(const json& j) {
  return int_vector(require(j, "images"), "automorphism images");
}

json equivalence_report_to_json(const groups::EquivalenceReport& r,
                                const groups::UnfactorizabilityResult& u,
                                std::size_t center_size) {
  json out{{"unfactorizable", r.unfactorizable},
           {"centerless", r.centerless},
           {"indecomposable", r.indecomposable},
           {"consistent", r.consistent},
           {"center_order", center_size}};
  if (u.witness) {
    out["witness"] = json{{"h", u.witness->h}, {"k", u.witness->k}};
  }
  return out;
}

json product_automorphism_to_json(const groups::ProductAutomorphism& pa) {
  json blocks = json::array();
  for (const auto& b : pa.blocks) {
    json comps = json::array();
    for (const auto& c : b.components) comps.push_back(c.images);
    blocks.push_back(json{{"sigma", b.sigma}, {"components", std::move(comps)}});
  }
  return json{{"blocks", std::move(blocks)}};
}

json aut_order_report_to_json(const groups::AutOrderReport& r) {
  return json{{"enumerated", r.enumerated}, {"formula", r.formula}, {"equal", r.equal}};
}

homology::SimplicialComplex complex_from_json(const json& j) {
  const int vertices = int_field(j, "vertices");
  const json& simplices = require(j, "simplices");
  if (!simplices.is_array())
    throw ValidationError("json: 'simplices' must be an array");
  std::vector<std::vector<int>> s;
  for (const auto& v : simplices) s.push_back(int_vector(v, "simplex"));
  return homology::SimplicialComplex(vertices, std::move(s));
}

homology::SimplicialMap simplicial_map_from_json(const json& j) {
  homology::SimplicialMap m;
  m.vertex_images = int_vector(require(j, "vertex_images"), "vertex images");
  if (j.contains("subdivisions")) {
    m.subdivisions = int_field(j, "subdivisions");
    if (m.subdivisions < 0)
      throw ValidationError("json: 'subdivisions' must be >= 0");
  }
  return m;
}

json lefschetz_report_to_json(const homology::LefschetzReport& r) {
  json traces = json::array();
  for (const auto& t : r.homology_traces) traces.push_back(int_to_json(t));
  return json{{"lefschetz", int_to_json(r.lefschetz)},
              {"betti", r.betti},
              {"homology_traces", std::move(traces)}};
}

torus::TorusMap torus_map_from_json(const json& j) {
  auto a = matrix_from_json(require(j, "linear_part"));
  if (j.contains("dim") && int_field(j, "dim") != static_cast<int>(a.rows()))
    throw ValidationError("json: 'dim' does not match the linear part");
  return torus::TorusMap(std::move(a));
}

std::vector<torus::TorusMap> torus_factors_from_json(const json& j) {
  const json& factors = require(j, "factors");
  if (!factors.is_array() || factors.empty())
    throw ValidationError("json: 'factors' must be a non-empty array");
  std::vector<torus::TorusMap> fs;
  for (const auto& f : factors) fs.push_back(torus_map_from_json(f));
  return fs;
}

torus::CyclicTorusMap cyclic_torus_map_from_json(const json& j) {
  const json& comps = require(j, "components");
  if (!comps.is_array() || comps.empty())
    throw ValidationError("json: 'components' must be a non-empty array");
  std::vector<torus::TorusMap> cs;
  for (const auto& c : comps) cs.push_back(torus_map_from_json(c));
  return torus::CyclicTorusMap(std::move(cs));
}

json nielsen_summary_to_json(const torus::NielsenSummary& s) {
  json classes = json::array();
  for (const auto& c : s.classes) {
    json label = json::array();
    for (const auto& v : c.label) label.push_back(int_to_json(v));
    classes.push_back(json{{"label", std::move(label)},
                           {"index", c.index},
                           {"essential", c.essential}});
  }
  return json{{"lefschetz", int_to_json(s.lefschetz)},
              {"nielsen", int_to_json(s.nielsen)},
              {"degenerate", s.degenerate},
              {"classes", std::move(classes)}};
}

json product_report_to_json(const torus::ProductReport& r) {
  json factors = json::array();
  for (const auto& f : r.factors) factors.push_back(nielsen_summary_to_json(f));
  return json{{"product", nielsen_summary_to_json(r.product)},
              {"factors", std::move(factors)},
              {"lefschetz_ok", r.lefschetz_ok},
              {"nielsen_ok", r.nielsen_ok},
              {"classwise_ok", r.classwise_ok},
              {"all_ok", r.all_ok},
              {"failures", r.failures}};
}

json rho_pairs_to_json(const std::vector<torus::RhoPair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) {
    json cl = json::array(), cyl = json::array();
    for (const auto& v : p.composed_label) cl.push_back(int_to_json(v));
    for (const auto& v : p.cyclic_label) cyl.push_back(int_to_json(v));
    out.push_back(json{{"composed_label", std::move(cl)},
                       {"cyclic_label", std::move(cyl)},
                       {"composed_index", p.composed_index},
                       {"cyclic_index", p.cyclic_index}});
  }
  return out;
}

json cyclic_report_to_json(const torus::CyclicReport& r) {
  return json{{"composed", nielsen_summary_to_json(r.composed)},
              {"cyclic", nielsen_summary_to_json(r.cyclic)},
              {"det_identity", cyclic_det_to_json(r.det_identity)},
              {"lefschetz_ok", r.lefschetz_ok},
              {"nielsen_ok", r.nielsen_ok},
              {"multiset_ok", r.multiset_ok},
              {"rho_ok", r.rho_ok},
              {"all_ok", r.all_ok},
              {"failures", r.failures}};
}

smooth::SmoothTorusMap smooth_map_from_json(const json& j) {
  auto a = matrix_from_json(require(j, "linear_part"));
  if (j.contains("dim") && int_field(j, "dim") != static_cast<int>(a.rows()))
    throw ValidationError("json: 'dim' does not match the linear part");
  std::vector<smooth::PerturbationMode> modes;
  if (j.contains("perturbation")) {
    const json& pert = j.at("perturbation");
    if (!pert.is_array())
      throw ValidationError("json: 'perturbation' must be an array");
    for (const auto& m : pert) {
      smooth::PerturbationMode mode;
      mode.coordinate = int_field(m, "coordinate");
      mode.frequency = int_vector(require(m, "k"), "frequency vector");
      if (m.contains("sin")) mode.sin_coeff = m.at("sin").get<double>();
      if (m.contains("cos")) mode.cos_coeff = m.at("cos").get<double>();
      modes.push_back(std::move(mode));
    }
  }
  return smooth::SmoothTorusMap(std::move(a), std::move(modes));
}

smooth::CyclicSmoothMap cyclic_smooth_map_from_json(const json& j) {
  const json& comps = require(j, "components");
  if (!comps.is_array() || comps.empty())
    throw ValidationError("json: 'components' must be a non-empty array");
  std::vector<smooth::SmoothTorusMap> cs;
  for (const auto& c : comps) cs.push_back(smooth_map_from_json(c));
  return smooth::CyclicSmoothMap(std::move(cs));
}

smooth::SolverConfig solver_config_from_json(const json& j) {
  smooth::SolverConfig cfg;
  if (!j.is_object()) throw ValidationError("json: solver config must be an object");
  auto get = [&](const char* key, double& field) {
    if (j.contains(key)) field = j.at(key).get<double>();
  };
  get("convergence_tol", cfg.convergence_tol);
  get("dedupe_radius", cfg.dedupe_radius);
  get("transversality_threshold", cfg.transversality_threshold);
  get("label_rounding_tol", cfg.label_rounding_tol);
  if (j.contains("grid_density")) cfg.grid_density = int_field(j, "grid_density");
  if (j.contains("max_iterations")) cfg.max_iterations = int_field(j, "max_iterations");
  return cfg;
}

json solver_config_to_json(const smooth::SolverConfig& cfg) {
  return json{{"convergence_tol", cfg.convergence_tol},
              {"dedupe_radius", cfg.dedupe_radius},
              {"transversality_threshold", cfg.transversality_threshold},
              {"label_rounding_tol", cfg.label_rounding_tol},
              {"grid_density", cfg.grid_density},
              {"max_iterations", cfg.max_iterations}};
}

json find_report_to_json(const smooth::FindReport& r) {
  json points = json::array();
  for (const auto& p : r.points) {
    json label = json::array();
    for (const auto& v : p.class_label) label.push_back(int_to_json(v));
    points.push_back(json{{"coordinates", p.coordinates},
                          {"jacobian", real_matrix_to_json(p.jacobian)},
                          {"index", p.index},
                          {"class_label", std::move(label)},
                          {"residual", p.residual},
                          {"det_i_minus_df", p.det_i_minus_df},
                          {"transversal", p.transversal}});
  }
  return json{{"points", std::move(points)},
              {"count", r.points.size()},
              {"expected_count", int_to_json(r.expected_count)},
              {"count_ok", r.count_ok},
              {"all_transversal", r.all_transversal},
              {"nonconverged_seeds", r.nonconverged_seeds},
              {"merged_duplicates", r.merged_duplicates},
              {"verdict", r.verdict}};
}

json hopf_report_to_json(const smooth::HopfReport& r) {
  return json{{"find", find_report_to_json(r.find)},
              {"index_sum", int_to_json(r.index_sum)},
              {"expected", int_to_json(r.expected)},
              {"equal", r.equal}};
}

json cyclic_jacobian_report_to_json(const smooth::CyclicJacobianReport& r) {
  json points = json::array();
  for (const auto& p : r.points) {
    points.push_back(json{{"base_point", p.base_point},
                          {"det_cyclic", p.dets.lhs},
                          {"det_composed", p.dets.rhs},
                          {"sign_cyclic", p.dets.sign_lhs},
                          {"sign_composed", p.dets.sign_rhs},
                          {"signs_equal", p.dets.signs_equal},
                          {"conclusive", p.dets.conclusive},
                          {"rel_det_gap", p.rel_det_gap}});
  }
  return json{{"composed_find", find_report_to_json(r.composed_find)},
              {"points", std::move(points)},
              {"all_signs_equal", r.all_signs_equal},
              {"all_conclusive", r.all_conclusive},
              {"verdict", r.verdict}};
}

json fd_report_to_json(const smooth::FdReport& r) {
  return json{{"max_abs_deviation", r.max_abs_deviation},
              {"scale", r.scale},
              {"rel_deviation", r.rel_deviation},
              {"step", r.step},
              {"pass", r.pass}};
}

bounds::IndexMultiset multiset_from_json(const json& j) {
  bounds::IndexMultiset m;
  const json& indices = require(j, "indices");
  if (!indices.is_array())
    throw ValidationError("json: 'indices' must be an array");
  for (const auto& v : indices) {
    if (!v.is_number_integer())
      throw ValidationError("json: index entries must be integers");
    m.indices.push_back(v.get<long long>());
  }
  const json& chi = require(j, "chi");
  if (!chi.is_number_integer())
    throw ValidationError("json: 'chi' must be an integer");
  m.chi = chi.get<long long>();
  return m;
}

std::vector<bounds::SurfaceSpec> surfaces_from_json(const json& j) {
  const json& surfaces = require(j, "surfaces");
  if (!surfaces.is_array() || surfaces.empty())
    throw ValidationError("json: 'surfaces' must be a non-empty array");
  std::vector<bounds::SurfaceSpec> out;
  for (const auto& s : surfaces) {
    int multiplicity = s.contains("multiplicity") ? int_field(s, "multiplicity") : 1;
    if (s.contains("genus"))
      out.push_back(bounds::SurfaceSpec::from_genus(int_field(s, "genus"), multiplicity));
    else if (s.contains("chi"))
      out.push_back(bounds::SurfaceSpec::from_chi(
          require(s, "chi").get<long long>(), multiplicity));
    else
      throw ValidationError("json: surface needs 'genus' or 'chi'");
  }
  return out;
}

std::vector<linalg::Int> bound_list_from_json(const json& j) {
  const json& bounds_arr = require(j, "bounds");
  if (!bounds_arr.is_array())
    throw ValidationError("json: 'bounds' must be an array");
  std::vector<linalg::Int> out;
  for (const auto& v : bounds_arr) out.push_back(int_from_json(v));
  return out;
}

json bound_report_to_json(const bounds::BoundReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back(json{{"clause", v.clause}, {"detail", v.detail}});
  return json{{"lower", r.lower},
              {"upper", r.upper},
              {"interval_ok", r.interval_ok},
              {"aggregate_ok", r.aggregate_ok},
              {"ln_inequality_ok", r.ln_inequality_ok},
              {"lefschetz", r.lefschetz},
              {"nielsen", r.nielsen},
              {"verdict", r.verdict},
              {"violations", std::move(violations)}};
}

}  // namespace nk::io
