#include "okb/json_io.hpp"

#include "okb/errors.hpp"

namespace okb::io {

json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw input_error("expected a rational (integer or \"p/q\" string)");
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_json(x));
    return a;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw input_error("expected a coordinate array");
    Vec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

json ivec_json(const IVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json point_json(const sgp::Point& p) {
    json a = json::array();
    for (long long x : p) a.push_back(x);
    return a;
}

sgp::Point point_from_json(const json& j) {
    if (!j.is_array()) throw input_error("expected an integer point array");
    sgp::Point p;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error("expected integer coordinates");
        p.push_back(x.get<long long>());
    }
    return p;
}

json polytope_json(const geom::Polytope& p, bool with_facets) {
    json j;
    j["ambient_dim"] = p.ambient_dim();
    j["affine_dim"] = p.affine_dim();
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(vec_json(v));
    j["vertices"] = verts;
    if (with_facets) {
        json fs = json::array();
        for (const auto& f : p.facets())
            fs.push_back(json{{"normal", vec_json(f.normal)}, {"offset", rat_json(f.offset)}});
        j["facets"] = fs;
        json es = json::array();
        for (const auto& e : p.equalities())
            es.push_back(json{{"normal", vec_json(e.normal)}, {"offset", rat_json(e.offset)}});
        j["equalities"] = es;
    }
    return j;
}

geom::Polytope polytope_from_json(const json& j) {
    if (j.is_array()) {  // bare vertex list
        std::vector<Vec> pts;
        for (const auto& v : j) pts.push_back(vec_from_json(v));
        return geom::Polytope::from_points(pts);
    }
    if (!j.contains("vertices")) throw input_error("polytope JSON needs a vertices field");
    std::vector<Vec> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(vec_from_json(v));
    if (pts.empty()) {
        int n = j.value("ambient_dim", 0);
        return geom::Polytope::empty(n);
    }
    return geom::Polytope::from_points(pts);
}

json lattice_json(const geom::Lattice& l) {
    json j;
    j["ambient_dim"] = l.ambient_dim;
    json rows = json::array();
    for (const auto& r : l.basis) rows.push_back(ivec_json(r));
    j["basis"] = rows;
    return j;
}

geom::Lattice lattice_from_json(const json& j) {
    geom::Lattice l;
    l.ambient_dim = j.at("ambient_dim").get<int>();
    for (const auto& row : j.at("basis")) {
        IVec r;
        for (const auto& x : row)
            r.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long long>()));
        l.basis.push_back(std::move(r));
    }
    l.validate();
    return l;
}

json form_product_json(const geom::LinearFormProduct& f) {
    json j;
    j["normalizer"] = rat_json(f.normalizer());
    json forms = json::array();
    for (const auto& fm : f.forms())
        forms.push_back(json{{"coeff", vec_json(fm.coeff)}, {"constant", rat_json(fm.constant)}});
    j["forms"] = forms;
    return j;
}

geom::LinearFormProduct form_product_from_json(const json& j) {
    Rat normalizer = j.contains("normalizer") ? rat_from_json(j.at("normalizer")) : Rat(1);
    std::vector<geom::LinearFormProduct::Form> forms;
    if (j.contains("forms"))
        for (const auto& fm : j.at("forms")) {
            geom::LinearFormProduct::Form f;
            f.coeff = vec_from_json(fm.at("coeff"));
            f.constant = fm.contains("constant") ? rat_from_json(fm.at("constant")) : Rat(0);
            forms.push_back(std::move(f));
        }
    if (forms.empty()) {
        int dim = j.value("dim", 0);
        return geom::LinearFormProduct::constant(normalizer, dim);
    }
    return geom::LinearFormProduct(std::move(forms), normalizer);
}

json semigroup_json(const sgp::Semigroup& s) {
    json j;
    j["ambient_n"] = s.ambient_n();
    if (s.finitely_generated()) {
        json gens = json::array();
        for (const auto& g : s.generators()) {
            json row = json::array();
            row.push_back(g.level);
            for (long long x : g.point) row.push_back(x);
            gens.push_back(row);
        }
        j["generators"] = gens;
    } else {
        j["k_max"] = s.cutoff();
        json levels = json::object();
        for (long k = 1; k <= s.cutoff(); ++k) {
            auto pts = s.level(k);
            if (pts.empty()) continue;
            json arr = json::array();
            for (const auto& p : pts) arr.push_back(point_json(p));
            levels[std::to_string(k)] = arr;
        }
        j["levels"] = levels;
    }
    return j;
}

sgp::Semigroup semigroup_from_json(const json& j) {
    if (j.contains("generators")) {
        std::vector<sgp::Generator> gens;
        int n = -1;
        for (const auto& row : j.at("generators")) {
            if (!row.is_array() || row.size() < 2)
                throw input_error("generator rows must be [level, x1, ..., xn]");
            sgp::Generator g;
            g.level = row[0].get<long>();
            for (size_t i = 1; i < row.size(); ++i) g.point.push_back(row[i].get<long long>());
            if (n < 0) n = static_cast<int>(g.point.size());
            gens.push_back(std::move(g));
        }
        if (j.contains("ambient_n")) n = j.at("ambient_n").get<int>();
        return sgp::Semigroup::from_generators(n, std::move(gens));
    }
    if (j.contains("levels")) {
        long k_max = j.at("k_max").get<long>();
        std::map<long, std::vector<sgp::Point>> levels;
        int n = j.contains("ambient_n") ? j.at("ambient_n").get<int>() : -1;
        for (const auto& [key, arr] : j.at("levels").items()) {
            long k = std::stol(key);
            std::vector<sgp::Point> pts;
            for (const auto& p : arr) pts.push_back(point_from_json(p));
            if (n < 0 && !pts.empty()) n = static_cast<int>(pts[0].size());
            levels[k] = std::move(pts);
        }
        if (n < 0) throw input_error("semigroup oracle needs ambient_n or a nonempty level");
        return sgp::Semigroup::from_levels(n, k_max, std::move(levels));
    }
    throw input_error("semigroup JSON needs generators or levels");
}

json summary_json(const sgp::SemigroupSummary& s) {
    json j;
    json gb = json::array();
    for (const auto& r : s.group_basis) gb.push_back(ivec_json(r));
    j["group_basis"] = gb;
    json rays = json::array();
    for (const auto& r : s.cone_rays) rays.push_back(ivec_json(r));
    j["cone_rays"] = rays;
    j["span_dim"] = s.span_dim;
    json ll = json::array();
    for (const auto& r : s.level_lattice) ll.push_back(ivec_json(r));
    j["level_lattice"] = ll;
    j["ind"] = s.ind.str();
    j["m"] = s.m;
    j["strongly_nonneg"] = s.strongly_nonneg;
    j["cutoff_limited"] = s.cutoff_limited;
    return j;
}

json reg_scan_json(const sgp::RegScanReport& r) {
    json j;
    j["body"] = polytope_json(r.body);
    j["shrunk_body"] = polytope_json(r.shrunk_body);
    j["empirical_n"] = r.empirical_n;
    json lvls = json::array();
    for (const auto& lvl : r.levels) {
        json L;
        L["k"] = lvl.k;
        json gaps = json::array();
        for (const auto& g : lvl.gaps) gaps.push_back(point_json(g));
        L["gaps"] = gaps;
        json sg = json::array();
        for (const auto& g : lvl.gaps_in_shrunk) sg.push_back(point_json(g));
        L["gaps_in_shrunk"] = sg;
        lvls.push_back(std::move(L));
    }
    j["levels"] = lvls;
    return j;
}

json growth_json(const sgp::GrowthReport& r) {
    json j;
    j["empirical_ratio"] = rat_json(r.empirical_ratio);
    j["exact_limit"] = rat_json(r.exact_limit);
    j["k"] = r.k;
    j["q"] = r.q;
    j["degree"] = r.degree;
    j["count_at_k"] = r.count_at_k;
    return j;
}

json level_map_json(const dh::LevelLinearMap& t) {
    json j;
    json rows = json::array();
    for (const auto& r : t.t) rows.push_back(ivec_json(r));
    j["matrix"] = rows;
    j["shift"] = ivec_json(t.shift);
    return j;
}

dh::LevelLinearMap level_map_from_json(const json& j) {
    auto read_ivec = [](const json& a) {
        IVec v;
        for (const auto& x : a)
            v.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long long>()));
        return v;
    };
    IMat t;
    for (const auto& row : j.at("matrix")) t.push_back(read_ivec(row));
    if (j.contains("shift")) return dh::LevelLinearMap::affine(std::move(t), read_ivec(j.at("shift")));
    return dh::LevelLinearMap::linear(std::move(t));
}

json measure_json(const dh::DiscreteMeasure& m) {
    json j;
    j["k"] = m.k;
    json atoms = json::array();
    for (const auto& [pos, mass] : m.atoms)
        atoms.push_back(json{{"position", vec_json(pos)}, {"mass", rat_json(mass)}});
    j["atoms"] = atoms;
    j["total_mass"] = rat_json(m.total_mass());
    return j;
}

json compare_report_json(const dh::CompareReport& r) {
    json j;
    j["k"] = r.k;
    j["l1_distance"] = rat_json(r.l1_distance);
    j["empirical_total"] = rat_json(r.empirical_total);
    j["exact_total"] = rat_json(r.exact_total);
    json cells = json::array();
    for (const auto& c : r.cells)
        cells.push_back(json{{"center", vec_json(c.center_y)},
                             {"exact_mass", rat_json(c.exact_mass)},
                             {"empirical_mass", rat_json(c.empirical_mass)}});
    j["cells"] = cells;
    return j;
}

json fujita_step_json(const dh::FujitaStep& s) {
    json j;
    j["k"] = s.k;
    j["l1_to_limit"] = rat_json(s.l1_to_limit);
    j["support_gap_max"] = rat_json(s.support_gap_max);
    j["total_mass"] = rat_json(s.total_mass);
    j["rescaled_body"] = polytope_json(s.rescaled_body);
    return j;
}

json weight_json(const rep::Weight& w) {
    json a = json::array();
    for (long long x : w) a.push_back(x);
    return a;
}

rep::Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw input_error("expected a weight array");
    rep::Weight w;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error("weights must have integer entries");
        w.push_back(x.get<long long>());
    }
    return w;
}

json character_json(const rep::WeightMultiplicityTable& t) {
    json a = json::array();
    for (const auto& [w, m] : t)
        a.push_back(json{{"weight", weight_json(w)}, {"multiplicity", m}});
    return a;
}

json toric_spec_json(const galg::ToricSubspaceSpec& s) {
    json j;
    j["n"] = s.n;
    if (s.monomial()) {
        json pts = json::array();
        for (const auto& e : s.exponents) pts.push_back(point_json(e));
        j["exponents"] = pts;
    } else {
        json ps = json::array();
        for (const auto& f : s.polys) {
            json terms = json::array();
            for (const auto& [e, c] : f.terms)
                terms.push_back(json{{"exponent", point_json(e)}, {"coeff", rat_json(c)}});
            ps.push_back(terms);
        }
        j["polynomials"] = ps;
    }
    return j;
}

galg::ToricSubspaceSpec toric_spec_from_json(const json& j) {
    galg::ToricSubspaceSpec s;
    if (j.is_array()) {  // bare exponent list
        for (const auto& p : j) s.exponents.push_back(point_from_json(p));
        if (s.exponents.empty()) throw input_error("empty exponent set");
        s.n = static_cast<int>(s.exponents[0].size());
        return s;
    }
    s.n = j.value("n", 0);
    if (j.contains("exponents")) {
        for (const auto& p : j.at("exponents")) s.exponents.push_back(point_from_json(p));
        if (s.n == 0 && !s.exponents.empty()) s.n = static_cast<int>(s.exponents[0].size());
    } else if (j.contains("polynomials")) {
        for (const auto& terms : j.at("polynomials")) {
            galg::LaurentPoly f;
            for (const auto& t : terms)
                f.add_term(point_from_json(t.at("exponent")), rat_from_json(t.at("coeff")));
            s.polys.push_back(std::move(f));
            if (s.n == 0 && !s.polys.back().terms.empty())
                s.n = static_cast<int>(s.polys.back().terms.begin()->first.size());
        }
    } else {
        throw input_error("toric spec needs exponents or polynomials");
    }
    if (s.n <= 0) throw input_error("toric spec has no ambient dimension");
    return s;
}

json view_json(const galg::AlgebraView& v) {
    json j;
    j["kind"] = v.kind;
    j["exact"] = v.exact;
    j["weight_dim"] = v.weight_dim;
    j["hat_dim"] = v.hat_dim;
    j["variety_dim"] = v.variety_dim;
    j["degree_d"] = v.degree_d.str();
    j["p"] = v.p;
    j["p_hat"] = v.p_hat;
    j["q"] = v.q;
    j["moment_body"] = polytope_json(v.delta);
    j["multiplicity_body"] = polytope_json(v.delta_hat);
    j["string_body"] = polytope_json(v.delta_tilde);
    j["lattice"] = lattice_json(v.lambda);
    j["lattice_hat"] = lattice_json(v.lambda_hat);
    j["lattice_tilde"] = lattice_json(v.lambda_tilde);
    j["ind_s"] = v.ind_s.str();
    j["ind_s_hat"] = v.ind_s_hat.str();
    j["ind_s_tilde"] = v.ind_s_tilde.str();
    j["group"] = v.roots.name();
    j["f"] = form_product_json(v.f);
    if (!v.lambda_star.empty()) j["lambda_star"] = weight_json(v.lambda_star);
    return j;
}

json growth_triple_json(const galg::GrowthTriple& g) {
    json j;
    j["vol_string"] = rat_json(g.vol_string);
    j["int_hat"] = rat_json(g.int_hat);
    j["int_dh"] = rat_json(g.int_dh);
    j["vol_hat"] = rat_json(g.vol_hat);
    j["empirical"] = rat_json(g.empirical);
    j["mult_growth"] = rat_json(g.mult_growth);
    j["empirical_k"] = g.empirical_k;
    j["q"] = g.q;
    j["p_hat"] = g.p_hat;
    j["exact"] = g.exact;
    return j;
}

json bm_report_json(const galg::BmReport& r) {
    json j;
    j["exponent"] = r.exponent;
    j["checked"] = r.checked;
    j["holds"] = r.holds();
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back(json{{"mu_a", vec_json(f.mu_a)},
                             {"mu_b", vec_json(f.mu_b)},
                             {"f_a", rat_json(f.fa)},
                             {"f_b", rat_json(f.fb)},
                             {"f_prod", rat_json(f.fc)}});
    j["failures"] = fails;
    return j;
}

}  // namespace okb::io
