#pragma once

#include <nlohmann/json.hpp>

#include "nk/bounds.hpp"
#include "nk/finite_group.hpp"
#include "nk/product_group.hpp"
#include "nk/simplicial.hpp"
#include "nk/smooth_maps.hpp"
#include "nk/torus_maps.hpp"

namespace nk::io {

using nlohmann::json;

// ---- scalars -------------------------------------------------------------

/// Int -> JSON integer when it fits in int64, decimal string otherwise.
json int_to_json(const linalg::Int& v);
/// Accepts JSON integers and decimal strings.
linalg::Int int_from_json(const json& j);

// ---- matrices ------------------------------------------------------------

/// {"rows": r, "cols": c, "entries": [[...], ...]}
json matrix_to_json(const linalg::IntMatrix& m);
linalg::IntMatrix matrix_from_json(const json& j);
json real_matrix_to_json(const linalg::RealMatrix& m);

json smith_to_json(const linalg::SmithDecomposition& s);
json cokernel_to_json(const linalg::CokernelStructure& c,
                      const linalg::Int& rep_cap = linalg::Int(4096));
json cyclic_det_to_json(const linalg::CyclicDetReport& r);

/// {"blocks": [<matrix>, ...]}
std::vector<linalg::IntMatrix> blocks_from_json(const json& j);

// ---- groups ----------------------------------------------------------------

/// {"order": n, "table": [[...], ...], "name"?} or
/// {"degree": d, "generators": [[...], ...], "name"?}
groups::FiniteGroup group_from_json(const json& j);
json group_to_json(const groups::FiniteGroup& g);

/// {"factors": [{"group": <group>, "multiplicity": m}, ...]}
groups::ProductGroupSpec product_spec_from_json(const json& j, long long order_cap = 5000);

/// {"images": [...]}
std::vector<int> automorphism_from_json(const json& j);

json equivalence_report_to_json(const groups::EquivalenceReport& r,
                                const groups::UnfactorizabilityResult& u,
                                std::size_t center_size);
json product_automorphism_to_json(const groups::ProductAutomorphism& pa);
json aut_order_report_to_json(const groups::AutOrderReport& r);

// ---- homology --------------------------------------------------------------

/// {"vertices": n, "simplices": [[...], ...]}
homology::SimplicialComplex complex_from_json(const json& j);
/// {"vertex_images": [...], "subdivisions"?}
homology::SimplicialMap simplicial_map_from_json(const json& j);
json lefschetz_report_to_json(const homology::LefschetzReport& r);

// ---- torus -----------------------------------------------------------------

/// {"dim": n, "linear_part": <matrix>}
torus::TorusMap torus_map_from_json(const json& j);
/// {"factors": [<map>, ...]}
std::vector<torus::TorusMap> torus_factors_from_json(const json& j);
/// {"components": [<map>, ...]}
torus::CyclicTorusMap cyclic_torus_map_from_json(const json& j);

json nielsen_summary_to_json(const torus::NielsenSummary& s);
json product_report_to_json(const torus::ProductReport& r);
json cyclic_report_to_json(const torus::CyclicReport& r);
json rho_pairs_to_json(const std::vector<torus::RhoPair>& pairs);

// ---- smooth ----------------------------------------------------------------

/// {"dim": n, "linear_part": <matrix>, "perturbation": [...]}
smooth::SmoothTorusMap smooth_map_from_json(const json& j);
smooth::CyclicSmoothMap cyclic_smooth_map_from_json(const json& j);
smooth::SolverConfig solver_config_from_json(const json& j);
json solver_config_to_json(const smooth::SolverConfig& cfg);

json find_report_to_json(const smooth::FindReport& r);
json hopf_report_to_json(const smooth::HopfReport& r);
json cyclic_jacobian_report_to_json(const smooth::CyclicJacobianReport& r);
json fd_report_to_json(const smooth::FdReport& r);

// ---- bounds ----------------------------------------------------------------

/// {"indices": [...], "chi": c}
bounds::IndexMultiset multiset_from_json(const json& j);
/// {"surfaces": [{"genus"? , "chi"?, "multiplicity"?}, ...]}
std::vector<bounds::SurfaceSpec> surfaces_from_json(const json& j);
/// {"bounds": [...]}
std::vector<linalg::Int> bound_list_from_json(const json& j);
json bound_report_to_json(const bounds::BoundReport& r);

}  // namespace nk::io
