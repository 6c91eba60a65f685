#include "okb/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "okb/errors.hpp"
#include "okb/json_io.hpp"

namespace okb::cli {

namespace {

using io::json;

json load_json(const std::string& arg) {
    if (arg.empty()) throw input_error("empty JSON argument");
    if (arg[0] == '{' || arg[0] == '[' || arg[0] == '"' || std::isdigit(arg[0]) || arg[0] == '-') {
        try {
            return json::parse(arg);
        } catch (const std::exception& e) {
            throw input_error(std::string("malformed JSON: ") + e.what());
        }
    }
    std::ifstream in(arg);
    if (!in) throw input_error("cannot open input file: " + arg);
    try {
        json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw input_error(std::string("malformed JSON in ") + arg + ": " + e.what());
    }
}

std::vector<Vec> points_from_json(const json& j) {
    std::vector<Vec> pts;
    for (const auto& p : j) pts.push_back(io::vec_from_json(p));
    return pts;
}

std::vector<long> longs_from_json(const json& j) {
    std::vector<long> out;
    for (const auto& x : j) out.push_back(x.get<long>());
    return out;
}

std::vector<int> ints_from_json(const json& j) {
    std::vector<int> out;
    for (const auto& x : j) out.push_back(x.get<int>());
    return out;
}

geom::Lattice lattice_opt(const std::string& arg, int ambient) {
    if (arg.empty()) return geom::Lattice::standard(ambient);
    geom::Lattice l = io::lattice_from_json(load_json(arg));
    if (l.ambient_dim != ambient) throw input_error("lattice dimension mismatch");
    return l;
}

void apply_env_caps() {
    if (const char* v = std::getenv("OKBODY_MAX_VERTICES")) caps().max_vertices = std::atoi(v);
    if (const char* v = std::getenv("OKBODY_MAX_DIM")) caps().max_affine_dim = std::atoi(v);
    if (const char* v = std::getenv("OKBODY_MAX_LEVEL")) caps().max_level = std::atol(v);
}

struct Emitter {
    std::string output_path;
    std::string format = "json";
    bool timing = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void emit(std::ostream& out, const std::string& operation, json result,
              const std::vector<std::string>& checks, const std::string& csv = "") {
        if (format == "csv" && !csv.empty()) {
            write(out, csv);
            return;
        }
        json report;
        report["status"] = "ok";
        json prov;
        prov["operation"] = operation;
        prov["checks"] = checks;
        report["provenance"] = prov;
        report["result"] = std::move(result);
        if (timing) {
            auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            report["timing_ms"] = dt;
        }
        write(out, report.dump(2) + "\n");
    }

    void write(std::ostream& out, const std::string& text) {
        out << text;
        if (!output_path.empty()) {
            std::ofstream f(output_path);
            if (!f) throw input_error("cannot open output file: " + output_path);
            f << text;
        }
    }
};

galg::AlgebraView view_from_flags(const std::string& spec_arg, const std::string& points_arg,
                                  const std::string& group_arg, const std::string& weight_arg,
                                  const std::string& view_kind, long max_level,
                                  const std::vector<long>& store_levels, long degree) {
    if (!points_arg.empty() || !spec_arg.empty()) {
        galg::ToricSubspaceSpec spec;
        if (!points_arg.empty()) {
            json pj = load_json(points_arg);
            for (const auto& p : pj) spec.exponents.push_back(io::point_from_json(p));
            if (spec.exponents.empty()) throw input_error("empty exponent set");
            spec.n = static_cast<int>(spec.exponents[0].size());
        } else {
            spec = io::toric_spec_from_json(load_json(spec_arg));
        }
        return galg::toric_algebra_view(spec, max_level, Int(degree));
    }
    if (group_arg.empty() || weight_arg.empty())
        throw input_error("need either --points/--spec or --group and --weight");
    rep::RootData rd = rep::RootData::parse(group_arg);
    if (rd.factors.size() != 1 || rd.factors[0].kind != rep::RootData::Factor::Kind::GL)
        throw input_error("flag views need a single GL factor");
    rep::Weight w = io::weight_from_json(load_json(weight_arg));
    bool t_view = (view_kind == "T" || view_kind == "t");
    if (!t_view && !(view_kind == "G" || view_kind == "g" || view_kind.empty()))
        throw input_error("--view must be G or T");
    return galg::flag_algebra_view(rd.factors[0].rank, w, t_view, store_levels, Int(degree));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    apply_env_caps();
    Emitter emit;

    CLI::App app{"exact convex-geometry toolkit for graded semigroups and group actions"};
    app.require_subcommand(1);
    app.fallthrough(false);

    // shared option storage
    std::string points, q_points, body_arg, lattice_arg, offset_arg, form_arg, map_arg, at_arg;
    std::string gens_arg, a_arg, b_arg, spec_arg, specs_arg, group_arg, weight_arg, view_kind = "G";
    std::string levels_arg, grid_arg, bodies_arg, input_arg;
    std::string shrink_arg = "9/10";
    long max_level = 50, level_k = 1, probe = 20, degree = 1;
    long seed = 20240901;  // accepted for reproducibility of randomized drivers
    bool with_fujita = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", emit.output_path, "also write the report to this file");
        cmd->add_option("--format", emit.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_flag("--timing", emit.timing, "include a timing_ms field");
        cmd->add_option("--seed", seed, "seed for randomized drivers");
    };

    // ---- polytope ----
    auto* poly = app.add_subcommand("polytope", "exact polytope operations");
    poly->require_subcommand(1);
    auto* p_hull = poly->add_subcommand("hull", "minimal vertices and facets of a point set");
    p_hull->add_option("--points", points)->required();
    add_common(p_hull);
    auto* p_mink = poly->add_subcommand("minkowski", "Minkowski sum of two polytopes");
    p_mink->add_option("--p", points)->required();
    p_mink->add_option("--q", q_points)->required();
    add_common(p_mink);
    auto* p_vol = poly->add_subcommand("volume", "lattice-normalized volume");
    p_vol->add_option("--points", points)->required();
    p_vol->add_option("--lattice", lattice_arg);
    add_common(p_vol);
    auto* p_lat = poly->add_subcommand("lattice-points", "lattice points inside a polytope");
    p_lat->add_option("--points", points)->required();
    p_lat->add_option("--lattice", lattice_arg);
    p_lat->add_option("--offset", offset_arg);
    add_common(p_lat);
    auto* p_mix = poly->add_subcommand("mixed-volume", "mixed volume of n bodies in R^n");
    p_mix->add_option("--bodies", bodies_arg)->required();
    add_common(p_mix);
    auto* p_int = poly->add_subcommand("integrate", "integral of a product of linear forms");
    p_int->add_option("--points", points)->required();
    p_int->add_option("--form", form_arg)->required();
    p_int->add_option("--lattice", lattice_arg);
    add_common(p_int);
    auto* p_slice = poly->add_subcommand("slice", "fiber of a polytope under a linear map");
    p_slice->add_option("--points", points)->required();
    p_slice->add_option("--map", map_arg)->required();
    p_slice->add_option("--at", at_arg)->required();
    add_common(p_slice);

    // ---- semigroup ----
    auto* sg = app.add_subcommand("semigroup", "graded point-semigroup analysis");
    sg->require_subcommand(1);
    auto* s_an = sg->add_subcommand("analyze", "group, cone, lattice and index data");
    s_an->add_option("--generators", gens_arg);
    s_an->add_option("--input", input_arg);
    add_common(s_an);
    auto* s_lv = sg->add_subcommand("levels", "level sets and the Hilbert function");
    s_lv->add_option("--generators", gens_arg);
    s_lv->add_option("--input", input_arg);
    s_lv->add_option("--max-level", max_level);
    add_common(s_lv);
    auto* s_bd = sg->add_subcommand("body", "Newton-Okounkov body");
    s_bd->add_option("--generators", gens_arg);
    s_bd->add_option("--input", input_arg);
    add_common(s_bd);
    auto* s_rs = sg->add_subcommand("regscan", "regularization gaps and shrunk-cone scan");
    s_rs->add_option("--generators", gens_arg);
    s_rs->add_option("--input", input_arg);
    s_rs->add_option("--shrink", shrink_arg, "shrink factor in (0,1), e.g. 9/10");
    s_rs->add_option("--max-level", max_level);
    add_common(s_rs);
    auto* s_gr = sg->add_subcommand("growth", "empirical growth ratio against the exact limit");
    s_gr->add_option("--generators", gens_arg);
    s_gr->add_option("--input", input_arg);
    s_gr->add_option("--form", form_arg);
    s_gr->add_option("--max-level", max_level);
    add_common(s_gr);
    auto* s_sum = sg->add_subcommand("sum", "levelwise sum of two semigroups");
    s_sum->add_option("--a", a_arg)->required();
    s_sum->add_option("--b", b_arg)->required();
    s_sum->add_option("--max-level", max_level);
    add_common(s_sum);

    // ---- dh ----
    auto* dhc = app.add_subcommand("dh", "multiplicity measures and DH limits");
    dhc->require_subcommand(1);
    auto* d_me = dhc->add_subcommand("measure", "k-th multiplicity measure");
    d_me->add_option("--generators", gens_arg);
    d_me->add_option("--input", input_arg);
    d_me->add_option("--map", map_arg)->required();
    d_me->add_option("--level", level_k)->required();
    add_common(d_me);
    auto* d_de = dhc->add_subcommand("density", "exact fiber-volume density at base points");
    d_de->add_option("--body", body_arg)->required();
    d_de->add_option("--map", map_arg)->required();
    d_de->add_option("--points", points)->required();
    add_common(d_de);
    auto* d_cp = dhc->add_subcommand("compare", "rescaled measures against the exact density");
    d_cp->add_option("--generators", gens_arg);
    d_cp->add_option("--input", input_arg);
    d_cp->add_option("--map", map_arg)->required();
    d_cp->add_option("--levels", levels_arg)->required();
    d_cp->add_option("--grid", grid_arg)->required();
    add_common(d_cp);
    auto* d_fu = dhc->add_subcommand("fujita", "single-level subsemigroup approximations");
    d_fu->add_option("--generators", gens_arg);
    d_fu->add_option("--input", input_arg);
    d_fu->add_option("--map", map_arg)->required();
    d_fu->add_option("--levels", levels_arg)->required();
    d_fu->add_option("--grid", grid_arg)->required();
    add_common(d_fu);

    // ---- rep ----
    auto* rp = app.add_subcommand("rep", "GL(n) and torus representation data");
    rp->require_subcommand(1);
    auto* r_dim = rp->add_subcommand("dim", "Weyl dimension");
    r_dim->add_option("--group", group_arg)->required();
    r_dim->add_option("--weight", weight_arg)->required();
    add_common(r_dim);
    auto* r_gc = rp->add_subcommand("gc-polytope", "Gelfand-Cetlin polytope");
    r_gc->add_option("--group", group_arg)->required();
    r_gc->add_option("--weight", weight_arg)->required();
    add_common(r_gc);
    auto* r_pat = rp->add_subcommand("patterns", "Gelfand-Cetlin patterns and character");
    r_pat->add_option("--group", group_arg)->required();
    r_pat->add_option("--weight", weight_arg)->required();
    add_common(r_pat);
    auto* r_ch = rp->add_subcommand("character", "weight multiplicity table");
    r_ch->add_option("--group", group_arg)->required();
    r_ch->add_option("--weight", weight_arg)->required();
    add_common(r_ch);
    auto* r_du = rp->add_subcommand("dual", "dual weight and orbit polytope");
    r_du->add_option("--group", group_arg)->required();
    r_du->add_option("--weight", weight_arg)->required();
    add_common(r_du);
    auto* r_te = rp->add_subcommand("tensor", "tensor product decomposition");
    r_te->add_option("--group", group_arg)->required();
    r_te->add_option("--a", a_arg)->required();
    r_te->add_option("--b", b_arg)->required();
    add_common(r_te);
    auto* r_wp = rp->add_subcommand("weyl-poly", "reduced Weyl polynomial of a body");
    r_wp->add_option("--group", group_arg)->required();
    r_wp->add_option("--body", body_arg)->required();
    add_common(r_wp);

    // ---- galg ----
    auto* ga = app.add_subcommand("galg", "graded-algebra views and indices");
    ga->require_subcommand(1);
    auto* g_to = ga->add_subcommand("toric", "toric algebra view");
    g_to->add_option("--points", points);
    g_to->add_option("--spec", spec_arg);
    g_to->add_option("--max-level", max_level);
    g_to->add_option("--degree", degree);
    add_common(g_to);
    auto* g_fl = ga->add_subcommand("flag", "flag variety algebra view");
    g_fl->add_option("--group", group_arg)->required();
    g_fl->add_option("--weight", weight_arg)->required();
    g_fl->add_option("--view", view_kind, "G or T");
    g_fl->add_option("--degree", degree);
    add_common(g_fl);
    auto* g_ku = ga->add_subcommand("kushnirenko", "self-intersection index of a monomial span");
    g_ku->add_option("--points", points)->required();
    g_ku->add_option("--degree", degree);
    add_common(g_ku);
    auto* g_be = ga->add_subcommand("bernstein", "mixed intersection index of monomial spans");
    g_be->add_option("--specs", specs_arg)->required();
    g_be->add_option("--form", form_arg);
    add_common(g_be);
    auto* g_ix = ga->add_subcommand("index", "self-intersection index of a view");
    g_ix->add_option("--points", points);
    g_ix->add_option("--spec", spec_arg);
    g_ix->add_option("--group", group_arg);
    g_ix->add_option("--weight", weight_arg);
    g_ix->add_option("--view", view_kind);
    g_ix->add_option("--degree", degree);
    g_ix->add_option("--max-level", max_level);
    add_common(g_ix);
    auto* g_gr = ga->add_subcommand("growth", "growth-coefficient crosscheck");
    g_gr->add_option("--points", points);
    g_gr->add_option("--spec", spec_arg);
    g_gr->add_option("--group", group_arg);
    g_gr->add_option("--weight", weight_arg);
    g_gr->add_option("--view", view_kind);
    g_gr->add_option("--probe", probe);
    g_gr->add_option("--max-level", max_level);
    add_common(g_gr);
    auto* g_dh = ga->add_subcommand("dh", "DH report for a view");
    g_dh->add_option("--group", group_arg);
    g_dh->add_option("--weight", weight_arg);
    g_dh->add_option("--view", view_kind);
    g_dh->add_option("--points", points);
    g_dh->add_option("--levels", levels_arg)->required();
    g_dh->add_option("--grid", grid_arg)->required();
    g_dh->add_flag("--fujita", with_fujita);
    g_dh->add_option("--max-level", max_level);
    add_common(g_dh);
    auto* g_bm = ga->add_subcommand("bm", "Brunn-Minkowski check for two flag views");
    g_bm->add_option("--group", group_arg)->required();
    g_bm->add_option("--a", a_arg)->required();
    g_bm->add_option("--b", b_arg)->required();
    g_bm->add_option("--grid", grid_arg, "cells per axis")->required();
    add_common(g_bm);
    auto* g_va = ga->add_subcommand("valuation", "valuation semigroup of a Laurent span");
    g_va->add_option("--spec", spec_arg)->required();
    g_va->add_option("--max-level", max_level);
    add_common(g_va);

    try {
        std::vector<const char*> argv;
        argv.push_back("okbody");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        json err;
        err["status"] = "error";
        err["kind"] = "input";
        err["message"] = e.what();
        out << err.dump(2) << "\n";
        return 2;
    }

    auto gens_or_input = [&]() {
        if (!gens_arg.empty()) return io::semigroup_from_json(json{{"generators", load_json(gens_arg)}});
        if (!input_arg.empty()) return io::semigroup_from_json(load_json(input_arg));
        throw input_error("need --generators or --input");
    };

    try {
        // polytope
        if (p_hull->parsed()) {
            geom::Polytope p = geom::Polytope::from_points(points_from_json(load_json(points)));
            emit.emit(out, "polytope.hull", json{{"polytope", io::polytope_json(p, true)}},
                      {"hull-idempotence"});
        } else if (p_mink->parsed()) {
            auto p = geom::Polytope::from_points(points_from_json(load_json(points)));
            auto q = geom::Polytope::from_points(points_from_json(load_json(q_points)));
            emit.emit(out, "polytope.minkowski",
                      json{{"polytope", io::polytope_json(minkowski_sum(p, q))}},
                      {"minkowski-sum"});
        } else if (p_vol->parsed()) {
            auto p = geom::Polytope::from_points(points_from_json(load_json(points)));
            auto l = lattice_opt(lattice_arg, p.ambient_dim());
            emit.emit(out, "polytope.volume",
                      json{{"volume", io::rat_json(normalized_volume(p, l))},
                           {"affine_dim", p.affine_dim()}},
                      {"lattice-normalized-volume"});
        } else if (p_lat->parsed()) {
            auto p = geom::Polytope::from_points(points_from_json(load_json(points)));
            auto l = lattice_opt(lattice_arg, p.ambient_dim());
            Vec off(p.ambient_dim(), Rat(0));
            if (!offset_arg.empty()) off = io::vec_from_json(load_json(offset_arg));
            auto pts = lattice_points(p, l, off);
            json arr = json::array();
            for (const auto& x : pts) arr.push_back(io::vec_json(x));
            emit.emit(out, "polytope.lattice-points",
                      json{{"count", pts.size()}, {"points", arr}}, {"lattice-point-scan"});
        } else if (p_mix->parsed()) {
            std::vector<geom::Polytope> bodies;
            for (const auto& b : load_json(bodies_arg))
                bodies.push_back(geom::Polytope::from_points(points_from_json(b)));
            emit.emit(out, "polytope.mixed-volume",
                      json{{"mixed_volume", io::rat_json(geom::mixed_volume(bodies))}},
                      {"polarization", "minkowski-multilinearity"});
        } else if (p_int->parsed()) {
            auto p = geom::Polytope::from_points(points_from_json(load_json(points)));
            auto f = io::form_product_from_json(load_json(form_arg));
            auto l = lattice_opt(lattice_arg, p.ambient_dim());
            emit.emit(out, "polytope.integrate",
                      json{{"integral", io::rat_json(integrate_linear_form_product(p, f, l))}},
                      {"barycentric-moments"});
        } else if (p_slice->parsed()) {
            auto p = geom::Polytope::from_points(points_from_json(load_json(points)));
            Mat mp;
            for (const auto& row : load_json(map_arg)) mp.push_back(io::vec_from_json(row));
            auto sl = geom::slice(p, mp, io::vec_from_json(load_json(at_arg)));
            json res;
            res["fiber"] = io::polytope_json(sl.fiber);
            res["empty"] = sl.fiber.is_empty();
            if (!sl.fiber.is_empty()) {
                res["base_point"] = io::vec_json(sl.base_point);
                json fr = json::array();
                for (const auto& r : sl.frame) fr.push_back(io::ivec_json(r));
                res["frame"] = fr;
            }
            emit.emit(out, "polytope.slice", std::move(res), {"fiber-coordinates"});
        }
        // semigroup
        else if (s_an->parsed()) {
            auto s = gens_or_input();
            emit.emit(out, "semigroup.analyze", io::summary_json(sgp::analyze(s)),
                      {"group-cone-lattice", "index"});
        } else if (s_lv->parsed()) {
            auto s = gens_or_input();
            json levels = json::array();
            s.scan(max_level, [&](long k, const std::vector<sgp::Point>& pts) {
                json arr = json::array();
                for (const auto& p : pts) arr.push_back(io::point_json(p));
                levels.push_back(json{{"k", k}, {"count", pts.size()}, {"points", arr}});
            });
            auto h = s.hilbert(max_level);
            emit.emit(out, "semigroup.levels",
                      json{{"levels", levels}, {"hilbert", h}}, {"hilbert-function"});
        } else if (s_bd->parsed()) {
            auto s = gens_or_input();
            auto b = sgp::newton_okounkov_body(s);
            emit.emit(out, "semigroup.body",
                      json{{"body", io::polytope_json(b.body)}, {"exact", b.exact}},
                      {"newton-okounkov-body"});
        } else if (s_rs->parsed()) {
            auto s = gens_or_input();
            auto r = sgp::regularization_scan(s, rat_from_string(shrink_arg), max_level);
            emit.emit(out, "semigroup.regscan", io::reg_scan_json(r),
                      {"regularization", "approximation-scan"});
        } else if (s_gr->parsed()) {
            auto s = gens_or_input();
            geom::LinearFormProduct f = form_arg.empty()
                                            ? geom::LinearFormProduct::constant(1, s.ambient_n())
                                            : io::form_product_from_json(load_json(form_arg));
            emit.emit(out, "semigroup.growth", io::growth_json(sgp::growth_check(s, f, max_level)),
                      {"growth-coefficient", "sum-of-values"});
        } else if (s_sum->parsed()) {
            auto a = io::semigroup_from_json(load_json(a_arg));
            auto b = io::semigroup_from_json(load_json(b_arg));
            auto s = sgp::Semigroup::levelwise_sum(a, b);
            json levels = json::array();
            s.scan(std::min(max_level, s.cutoff()), [&](long k, const std::vector<sgp::Point>& pts) {
                json arr = json::array();
                for (const auto& p : pts) arr.push_back(io::point_json(p));
                levels.push_back(json{{"k", k}, {"count", pts.size()}, {"points", arr}});
            });
            json res{{"levels", levels}};
            if (a.finitely_generated() && b.finitely_generated()) {
                auto ba = sgp::newton_okounkov_body(a), bb = sgp::newton_okounkov_body(b);
                res["body"] = io::polytope_json(minkowski_sum(ba.body, bb.body));
            }
            emit.emit(out, "semigroup.sum", std::move(res), {"levelwise-addition", "body-additivity"});
        }
        // dh
        else if (d_me->parsed()) {
            auto s = gens_or_input();
            auto t = io::level_map_from_json(load_json(map_arg));
            emit.emit(out, "dh.measure", io::measure_json(dh::multiplicity_measure(s, t, level_k)),
                      {"multiplicity-measure", "total-mass"});
        } else if (d_de->parsed()) {
            auto b = io::polytope_from_json(load_json(body_arg));
            auto t = io::level_map_from_json(load_json(map_arg));
            auto pts = points_from_json(load_json(points));
            auto dens = dh::dh_exact_density(b, t, pts);
            json arr = json::array();
            for (size_t i = 0; i < pts.size(); ++i)
                arr.push_back(json{{"point", io::vec_json(pts[i])}, {"density", io::rat_json(dens[i])}});
            emit.emit(out, "dh.density", json{{"densities", arr}}, {"fiber-volume-density"});
        } else if (d_cp->parsed() || d_fu->parsed()) {
            auto s = gens_or_input();
            auto t = io::level_map_from_json(load_json(map_arg));
            auto ks = longs_from_json(load_json(levels_arg));
            auto shape = ints_from_json(load_json(grid_arg));
            auto body = sgp::newton_okounkov_body(s);
            std::vector<Vec> img;
            for (const auto& v : body.body.vertices()) img.push_back(t.apply_level1(v));
            auto base = geom::Polytope::from_points(img);
            auto frame = dh::BaseFrame::for_polytope(base);
            auto grid = dh::Grid::cover(frame, base, shape);
            Rat cellvol = 1;
            for (size_t i = 0; i < shape.size(); ++i)
                cellvol *= (grid.hi[i] - grid.lo[i]) / shape[i];
            if (d_cp->parsed()) {
                auto reps = dh::dh_empirical_compare(s, t, ks, frame, grid);
                json arr = json::array();
                std::string csv;
                for (const auto& r : reps) {
                    arr.push_back(io::compare_report_json(r));
                    csv += dh::compare_report_csv(r, cellvol);
                }
                emit.emit(out, "dh.compare", json{{"reports", arr}},
                          {"dh-limit", "l1-cell-distance"}, csv);
            } else {
                auto steps = dh::fujita_sequence(s, t, ks, frame, grid);
                json arr = json::array();
                for (const auto& st : steps) arr.push_back(io::fujita_step_json(st));
                emit.emit(out, "dh.fujita", json{{"steps", arr}}, {"fujita-approximation"});
            }
        }
        // rep
        else if (r_dim->parsed()) {
            rep::RootData rd = rep::RootData::parse(group_arg);
            rep::Weight w = io::weight_from_json(load_json(weight_arg));
            Int d = rep::weyl_dim(rd, w);
            json res;
            if (d <= Int(std::numeric_limits<long long>::max()))
                res["dim"] = static_cast<long long>(d);
            else
                res["dim"] = d.str();
            emit.emit(out, "rep.dim", std::move(res), {"weyl-dimension-formula"});
        } else if (r_gc->parsed()) {
            rep::RootData rd = rep::RootData::parse(group_arg);
            rep::Weight w = io::weight_from_json(load_json(weight_arg));
            auto p = rep::gc_polytope(rd, w);
            emit.emit(out, "rep.gc-polytope", json{{"polytope", io::polytope_json(p, true)}},
                      {"interlacing-inequalities"});
        } else if (r_pat->parsed() || r_ch->parsed()) {
            rep::RootData rd = rep::RootData::parse(group_arg);
            rep::Weight w = io::weight_from_json(load_json(weight_arg));
            auto en = rep::gc_patterns(rd, w);
            json res;
            res["count"] = en.patterns.size();
            res["character"] = io::character_json(en.table);
            if (r_pat->parsed()) {
                json pats = json::array();
                for (const auto& p : en.patterns) {
                    json fc = json::array();
                    for (long long x : p.free_coords()) fc.push_back(x);
                    pats.push_back(fc);
                }
                res["patterns"] = pats;
            }
            emit.emit(out, r_pat->parsed() ? "rep.patterns" : "rep.character", std::move(res),
                      {"pattern-count-equals-dimension", "weyl-symmetry"});
        } else if (r_du->parsed()) {
            rep::RootData rd = rep::RootData::parse(group_arg);
            rep::Weight w = io::weight_from_json(load_json(weight_arg));
            emit.emit(out, "rep.dual",
                      json{{"dual", io::weight_json(rep::dual_weight(rd, w))},
                           {"orbit_polytope", io::polytope_json(rep::weight_polytope(rd, w))}},
                      {"dual-weight", "orbit-hull"});
        } else if (r_te->parsed()) {
            rep::RootData rd = rep::RootData::parse(group_arg);
            rep::Weight wa = io::weight_from_json(load_json(a_arg));
            rep::Weight wb = io::weight_from_json(load_json(b_arg));
            auto dec = rep::tensor_decompose(rd, wa, wb);
            json arr = json::array();
            for (const auto& [w, m] : dec)
                arr.push_back(json{{"weight", io::weight_json(w)}, {"multiplicity", m}});
            emit.emit(out, "rep.tensor", json{{"components", arr}},
                      {"cartan-component", "dimension-consistency"});
        } else if (r_wp->parsed()) {
            rep::RootData rd = rep::RootData::parse(group_arg);
            auto b = io::polytope_from_json(load_json(body_arg));
            emit.emit(out, "rep.weyl-poly",
                      json{{"form", io::form_product_json(rep::reduced_weyl_polynomial(b, rd))}},
                      {"reduced-weyl-polynomial"});
        }
        // galg
        else if (g_to->parsed() || g_fl->parsed()) {
            auto view = view_from_flags(spec_arg, points, group_arg, weight_arg, view_kind,
                                        max_level, {}, degree);
            emit.emit(out, g_to->parsed() ? "galg.toric" : "galg.flag",
                      json{{"view", io::view_json(view)}},
                      {"moment-body", "multiplicity-body", "string-body"});
        } else if (g_ku->parsed()) {
            auto view = view_from_flags("", points, "", "", "", max_level, {}, degree);
            auto res = galg::self_intersection_index(view);
            emit.emit(out, "galg.kushnirenko",
                      json{{"index", io::rat_json(res.value)}, {"degenerate", res.degenerate}},
                      {"kushnirenko-volume-formula"});
        } else if (g_be->parsed()) {
            std::vector<galg::ToricSubspaceSpec> specs;
            for (const auto& sj : load_json(specs_arg))
                specs.push_back(io::toric_spec_from_json(sj));
            std::optional<geom::LinearFormProduct> f;
            if (!form_arg.empty()) f = io::form_product_from_json(load_json(form_arg));
            emit.emit(out, "galg.bernstein",
                      json{{"index", io::rat_json(galg::bernstein_mixed_index(specs, f))}},
                      {"bernstein-mixed-volume", "intersection-multilinearity"});
        } else if (g_ix->parsed()) {
            auto view = view_from_flags(spec_arg, points, group_arg, weight_arg, view_kind,
                                        max_level, {}, degree);
            auto res = galg::self_intersection_index(view);
            emit.emit(out, "galg.index",
                      json{{"index", io::rat_json(res.value)},
                           {"degenerate", res.degenerate},
                           {"exact", res.exact}},
                      {"string-body-volume-formula"});
        } else if (g_gr->parsed()) {
            auto view = view_from_flags(spec_arg, points, group_arg, weight_arg, view_kind,
                                        max_level, {probe}, degree);
            emit.emit(out, "galg.growth", io::growth_triple_json(galg::growth_crosscheck(view, probe)),
                      {"growth-triple-identity"});
        } else if (g_dh->parsed()) {
            auto ks = longs_from_json(load_json(levels_arg));
            auto shape = ints_from_json(load_json(grid_arg));
            auto view = view_from_flags(spec_arg, points, group_arg, weight_arg,
                                        view_kind.empty() ? "T" : view_kind, max_level, ks, degree);
            auto rep_dh = galg::algebra_dh(view, ks, shape, with_fujita);
            json arr = json::array();
            std::string csv;
            dh::BaseFrame frame = dh::BaseFrame::for_polytope(view.delta);
            dh::Grid grid = dh::Grid::cover(frame, view.delta, shape);
            Rat cellvol = 1;
            for (size_t i = 0; i < shape.size(); ++i)
                cellvol *= (grid.hi[i] - grid.lo[i]) / shape[i];
            for (const auto& r : rep_dh.comparisons) {
                arr.push_back(io::compare_report_json(r));
                csv += dh::compare_report_csv(r, cellvol);
            }
            json res{{"reports", arr}, {"vol_hat", io::rat_json(rep_dh.vol_hat)}};
            if (with_fujita) {
                json fj = json::array();
                for (const auto& st : rep_dh.fujita) fj.push_back(io::fujita_step_json(st));
                res["fujita"] = fj;
            }
            emit.emit(out, "galg.dh", std::move(res), {"dh-limit-for-algebras"}, csv);
        } else if (g_bm->parsed()) {
            rep::RootData rd = rep::RootData::parse(group_arg);
            if (rd.factors.size() != 1 || rd.factors[0].kind != rep::RootData::Factor::Kind::GL)
                throw input_error("bm check needs a single GL factor");
            int n = rd.factors[0].rank;
            rep::Weight wa = io::weight_from_json(load_json(a_arg));
            rep::Weight wb = io::weight_from_json(load_json(b_arg));
            int g = std::stoi(grid_arg);
            auto va = galg::flag_algebra_view(n, wa, true);
            auto vb = galg::flag_algebra_view(n, wb, true);
            auto vp = galg::flag_algebra_view(n, rep::add_weights(wa, wb), true);
            emit.emit(out, "galg.bm", io::bm_report_json(galg::brunn_minkowski_check(va, vb, vp, g)),
                      {"brunn-minkowski-fiber-exponent"});
        } else if (g_va->parsed()) {
            auto spec = io::toric_spec_from_json(load_json(spec_arg));
            if (spec.monomial()) throw input_error("valuation path expects polynomials");
            auto levels = galg::valuation_semigroup(spec.n, spec.polys,
                                                    galg::TermOrderValuation::lex(spec.n), max_level);
            json arr = json::array();
            for (const auto& lvl : levels) {
                json imgs = json::array();
                for (const auto& p : lvl.images) imgs.push_back(io::point_json(p));
                arr.push_back(json{{"k", lvl.k}, {"dim", lvl.dim}, {"images", imgs}});
            }
            emit.emit(out, "galg.valuation", json{{"levels", arr}},
                      {"dimension-equals-image-count"});
        } else {
            throw input_error("no action selected");
        }
    } catch (const input_error& e) {
        json err{{"status", "error"}, {"kind", "input"}, {"message", e.what()}};
        out << err.dump(2) << "\n";
        return 2;
    } catch (const assumption_error& e) {
        json err{{"status", "error"}, {"kind", "assumption"}, {"message", e.what()}};
        out << err.dump(2) << "\n";
        return 3;
    } catch (const cap_error& e) {
        json err{{"status", "error"}, {"kind", "cap"}, {"message", e.what()}};
        out << err.dump(2) << "\n";
        return 4;
    } catch (const std::exception& e) {
        json err{{"status", "error"}, {"kind", "internal"}, {"message", e.what()}};
        out << err.dump(2) << "\n";
        return 5;
    }
    return 0;
}

}  // namespace okb::cli
