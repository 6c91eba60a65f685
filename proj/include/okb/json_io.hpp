#ifndef OKB_JSON_IO_HPP
#define OKB_JSON_IO_HPP

#include <json.hpp>

#include "okb/galgebra.hpp"

namespace okb::io {

using json = nlohmann::ordered_json;

// rationals travel as decimal strings; integers also accepted on input
json rat_json(const Rat& r);
Rat rat_from_json(const json& j);

json vec_json(const Vec& v);
Vec vec_from_json(const json& j);
json ivec_json(const IVec& v);

json point_json(const sgp::Point& p);
sgp::Point point_from_json(const json& j);

json polytope_json(const geom::Polytope& p, bool with_facets = false);
geom::Polytope polytope_from_json(const json& j);

json lattice_json(const geom::Lattice& l);
geom::Lattice lattice_from_json(const json& j);

json form_product_json(const geom::LinearFormProduct& f);
geom::LinearFormProduct form_product_from_json(const json& j);

// {"generators": [[k, x1..xn], ...]} or {"levels": {"k": [[x..]]}, "k_max": K}
json semigroup_json(const sgp::Semigroup& s);
sgp::Semigroup semigroup_from_json(const json& j);

json summary_json(const sgp::SemigroupSummary& s);
json reg_scan_json(const sgp::RegScanReport& r);
json growth_json(const sgp::GrowthReport& r);

json level_map_json(const dh::LevelLinearMap& t);
dh::LevelLinearMap level_map_from_json(const json& j);
json measure_json(const dh::DiscreteMeasure& m);
json compare_report_json(const dh::CompareReport& r);
json fujita_step_json(const dh::FujitaStep& s);

json weight_json(const rep::Weight& w);
rep::Weight weight_from_json(const json& j);
json character_json(const rep::WeightMultiplicityTable& t);

json toric_spec_json(const galg::ToricSubspaceSpec& s);
galg::ToricSubspaceSpec toric_spec_from_json(const json& j);
json view_json(const galg::AlgebraView& v);
json growth_triple_json(const galg::GrowthTriple& g);
json bm_report_json(const galg::BmReport& r);

}  // namespace okb::io

#endif
