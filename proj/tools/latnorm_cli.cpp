// latnorm: exact normality, translate-cover, and corner-cover checks for
// rational polytopes, plus generators and edge-length threshold tables.
//
// Exit codes: 0 = property holds / command succeeded, 1 = property fails
// (a witness is reported), 2 = usage, format, or resource-budget error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "latnorm/latnorm.hpp"

namespace ln = latnorm;

namespace {

struct CoverFlags {
    std::string mode = "exact";
    std::size_t budget = 1 << 20;
    unsigned workers = 1;
    std::uint64_t seed = 1;
};

void add_cover_flags(CLI::App* cmd, CoverFlags& f) {
    cmd->add_option("--mode", f.mode, "verification mode")
        ->check(CLI::IsMember({"exact", "mc"}))
        ->capture_default_str();
    cmd->add_option("--budget", f.budget, "region / sample budget")->capture_default_str();
    cmd->add_option("--workers", f.workers, "worker threads")->capture_default_str();
    cmd->add_option("--seed", f.seed, "RNG seed (mc mode)")->capture_default_str();
}

ln::CoverOptions cover_options(const CoverFlags& f) {
    ln::CoverOptions o;
    o.mode = f.mode == "mc" ? ln::CoverMode::MonteCarlo : ln::CoverMode::Exact;
    o.budget = f.budget;
    o.workers = f.workers;
    o.seed = f.seed;
    return o;
}

ln::json cover_flags_json(const CoverFlags& f) {
    ln::json j;
    j["mode"] = f.mode;
    j["budget"] = f.budget;
    j["workers"] = f.workers;
    j["seed"] = f.seed;
    return j;
}

std::vector<ln::Rat> parse_grid(const std::string& text) {
    std::vector<ln::Rat> grid;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        if (tok.empty()) throw ln::format_error("empty entry in grid \"" + text + "\"");
        grid.push_back(ln::parse_rat(tok));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (grid.empty()) throw ln::format_error("empty grid");
    return grid;
}

// Integers 2..floor(k), plus k itself when fractional.
std::vector<ln::Rat> default_grid(const ln::Rat& k) {
    std::vector<ln::Rat> grid;
    for (ln::Int c = 2; c <= ln::floor_rat(k); ++c) grid.push_back(ln::Rat(c));
    if (!ln::is_integer(k) && k > 2) grid.push_back(k);
    return grid;
}

void emit(const ln::RunReport& rep, const std::string& out_path) {
    ln::json j = ln::run_report_to_json(rep);
    if (!out_path.empty()) ln::save_json(j, out_path);
    std::cout << j.dump(2) << "\n";
}

ln::json polytope_info(const ln::Polytope& p) {
    ln::json j;
    j["ambient_dim"] = p.ambient;
    j["dim"] = p.dim;
    j["n_vertices"] = p.verts.size();
    j["n_facets"] = p.facets.size();
    j["n_edges"] = p.edges.size();
    j["lattice"] = ln::is_lattice_polytope(p);
    j["volume"] = ln::rat_to_json(ln::volume(p));
    j["min_edge_length"] =
        p.edges.empty() ? ln::json(nullptr) : ln::rat_to_json(ln::min_edge_length(p));
    {
        ln::json ws = ln::json::array();
        for (std::size_t fi = 0; fi < p.facets.size(); ++fi)
            ws.push_back(ln::rat_to_json(ln::alg_width(p, fi)));
        j["facet_widths"] = ws;
    }
    j["simple"] = ln::is_simple(p);
    try {
        j["smooth"] = ln::is_smooth(p);
    } catch (const std::exception&) {
        j["smooth"] = nullptr;
    }
    j["unimodular_simplex"] = ln::is_unimodular_simplex(p);
    if (ln::is_lattice_polytope(p)) {
        // lattice spanned by differences of all lattice points of p: the
        // normality checks run over this lattice
        ln::AffineLattice lat = ln::affine_lattice(p);
        ln::json inv = ln::json::array();
        for (const ln::Int& f : lat.invariants) inv.push_back(ln::int_to_json(f));
        j["point_lattice_invariants"] = inv;
        j["point_lattice_summand"] = lat.is_direct_summand();
    }
    try {
        j["gauge"] = ln::gauge_report_to_json(ln::gauge_k(p));
    } catch (const ln::not_simple_error&) {
        j["gauge"] = nullptr;
    }
    j["polytope"] = ln::polytope_to_json(p);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-polytope normality and cover checks"};
    app.require_subcommand(1);

    // ---- info ----------------------------------------------------------
    auto* info = app.add_subcommand("info", "summarize a polytope file");
    std::string info_file, info_out;
    info->add_option("file", info_file, "polytope JSON")->required();
    info->add_option("--out", info_out, "also write the report to this file");

    // ---- check ---------------------------------------------------------
    auto* check = app.add_subcommand("check", "decide a property of a polytope");
    check->require_subcommand(1);

    std::string chk_file, chk_out;
    long chk_max_degree = 0;
    CoverFlags flags;
    std::string cn_k, cn_c, cn_grid;
    long corner_vertex = 0;
    long corner_l = 1;
    long bcn_facet = -1;

    auto* c_ic = check->add_subcommand("ic", "integral closedness (degree-bounded)");
    auto* c_normal = check->add_subcommand("normal", "normality over the vertex lattice");
    auto* c_cn = check->add_subcommand("cn", "translate cover of c-fold dilates");
    auto* c_bcn = check->add_subcommand("bcn", "translate cover of dilate boundary layers");
    auto* c_corner = check->add_subcommand("corner", "parallelepiped cover of a corner region");
    auto* c_ppd = check->add_subcommand("ppd", "per-vertex parallelepiped cover of a simplex");

    for (CLI::App* sub : {c_ic, c_normal, c_cn, c_bcn, c_corner, c_ppd}) {
        sub->add_option("file", chk_file, "polytope JSON")->required();
        sub->add_option("--out", chk_out, "also write the report to this file");
    }
    for (CLI::App* sub : {c_ic, c_normal})
        sub->add_option("--max-degree", chk_max_degree,
                        "largest dilation degree scanned (0 = default range)");
    for (CLI::App* sub : {c_cn, c_bcn}) {
        sub->add_option("--k", cn_k, "upper end of the dilation range");
        sub->add_option("--c", cn_c, "single dilation factor (overrides the grid)");
        sub->add_option("--c-grid", cn_grid, "comma-separated dilation factors");
        add_cover_flags(sub, flags);
    }
    c_bcn->add_option("--facet", bcn_facet, "restrict to one facet index");
    c_corner->add_option("--vertex", corner_vertex, "vertex index")->required();
    for (CLI::App* sub : {c_corner, c_ppd}) {
        sub->add_option("--l", corner_l, "trim parameter: strips of width/(l(d+1)) are shaved");
        add_cover_flags(sub, flags);
    }

    // ---- gen -----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "write example polytopes");
    gen->require_subcommand(1);
    std::string gen_out, gen_c = "1", gen_l = "1", gen_file;
    long gen_d = 2, gen_n = 6, gen_box = 3, gen_q = 2;
    std::uint64_t gen_seed = 1;

    auto* g_simplex = gen->add_subcommand("dilated-simplex", "c-fold standard simplex");
    g_simplex->add_option("--d", gen_d, "dimension")->capture_default_str();
    g_simplex->add_option("--c", gen_c, "dilation factor")->capture_default_str();
    auto* g_reeve = gen->add_subcommand("reeve", "tetrahedron conv(0,e1,e2,(1,1,q))");
    g_reeve->add_option("--q", gen_q, "apex height")->capture_default_str();
    auto* g_hollow = gen->add_subcommand("hollow3", "0/1 tetrahedron on even-sum vertices");
    auto* g_cube = gen->add_subcommand("cube", "axis-aligned cube");
    g_cube->add_option("--d", gen_d, "dimension")->capture_default_str();
    g_cube->add_option("--l", gen_l, "side length")->capture_default_str();
    auto* g_random = gen->add_subcommand("random", "hull of random box points");
    g_random->add_option("--d", gen_d, "dimension")->capture_default_str();
    g_random->add_option("--n", gen_n, "points sampled")->capture_default_str();
    g_random->add_option("--box", gen_box, "coordinate range")->capture_default_str();
    g_random->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    auto* g_skew = gen->add_subcommand("skew", "random unimodular image of a polytope file");
    g_skew->add_option("file", gen_file, "polytope JSON")->required();
    g_skew->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    for (CLI::App* sub : {g_simplex, g_reeve, g_hollow, g_cube, g_random, g_skew})
        sub->add_option("--out", gen_out, "output file (default: stdout)");

    // ---- bounds --------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "edge-length thresholds and the distance gauge");
    long bd_d = 3, bd_dmax = 0;
    std::string bd_k = "2", bd_kgrid, bd_out;
    std::uint64_t bd_falsify = 0, bd_seed = 1;
    bounds->add_option("--d", bd_d, "dimension")->capture_default_str();
    bounds->add_option("--k", bd_k, "dilation range parameter")->capture_default_str();
    bounds->add_option("--dmax", bd_dmax, "tabulate dimensions 1..dmax");
    bounds->add_option("--kgrid", bd_kgrid, "comma-separated k values for the table");
    bounds->add_option("--falsify-trials", bd_falsify, "random supporting-hyperplane trials");
    bounds->add_option("--seed", bd_seed, "RNG seed for --falsify-trials")->capture_default_str();
    bounds->add_option("--out", bd_out, "also write the report to this file");

    // ---- fuzz ----------------------------------------------------------
    auto* fuzz = app.add_subcommand("fuzz", "randomized campaigns with CSV logs");
    fuzz->require_subcommand(1);
    long fz_d = 2;
    std::string fz_k = "3", fz_out;
    std::uint64_t fz_trials = 100, fz_seed = 1;
    auto* f_cn = fuzz->add_subcommand("cn-threshold", "edge length vs translate-cover verdict");
    auto* f_ic = fuzz->add_subcommand("ic-threshold", "edge length vs integral closedness");
    auto* f_cn1 = fuzz->add_subcommand("cn1-exact", "segment length vs cover verdict (d=1)");
    for (CLI::App* sub : {f_cn, f_ic, f_cn1}) {
        sub->add_option("--trials", fz_trials, "trial count")->capture_default_str();
        sub->add_option("--seed", fz_seed, "RNG seed")->capture_default_str();
        sub->add_option("--out", fz_out, "CSV output path")->required();
    }
    for (CLI::App* sub : {f_cn, f_ic}) sub->add_option("--d", fz_d, "dimension")->capture_default_str();
    for (CLI::App* sub : {f_cn, f_cn1}) sub->add_option("--k", fz_k, "dilation range parameter")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ln::WallTimer timer;

        if (info->parsed()) {
            ln::RunReport rep;
            rep.command = "info";
            rep.params["file"] = info_file;
            rep.result = polytope_info(ln::load_polytope(info_file));
            rep.wall_ms = timer.elapsed_ms();
            emit(rep, info_out);
            return 0;
        }

        if (check->parsed()) {
            ln::Polytope p = ln::load_polytope(chk_file);
            ln::RunReport rep;
            rep.seed = flags.seed;
            rep.params["file"] = chk_file;
            bool holds = false;

            if (c_ic->parsed() || c_normal->parsed()) {
                bool want_ic = c_ic->parsed();
                rep.command = want_ic ? "check.ic" : "check.normal";
                rep.params["max_degree"] = chk_max_degree;
                ln::ICReport r = ln::check_integrally_closed(p, ln::Int(chk_max_degree));
                rep.result = ln::ic_report_to_json(r);
                holds = want_ic ? r.integrally_closed : r.normal;
            } else if (c_cn->parsed() || c_bcn->parsed()) {
                bool is_cn = c_cn->parsed();
                rep.command = is_cn ? "check.cn" : "check.bcn";
                rep.params.update(cover_flags_json(flags));
                ln::CoverOptions opts = cover_options(flags);
                if (!cn_c.empty()) {
                    ln::Rat c = ln::parse_rat(cn_c);
                    rep.params["c"] = ln::rat_to_json(c);
                    if (is_cn) {
                        ln::CoverReport r = ln::check_cn_at(p, c, opts);
                        rep.result = ln::cover_report_to_json(r);
                        holds = r.covered;
                    } else if (bcn_facet >= 0) {
                        rep.params["facet"] = bcn_facet;
                        ln::CoverReport r =
                            ln::check_bcn_at(p, static_cast<std::size_t>(bcn_facet), c, opts);
                        rep.result = ln::cover_report_to_json(r);
                        holds = r.covered;
                    } else {
                        ln::BcnReport r = ln::check_bcn(p, c, {c}, opts);
                        rep.result = ln::bcn_report_to_json(r);
                        holds = r.holds;
                    }
                } else {
                    if (cn_k.empty()) throw ln::format_error("need --k, --c, or --c-grid");
                    ln::Rat k = ln::parse_rat(cn_k);
                    std::vector<ln::Rat> grid =
                        cn_grid.empty() ? default_grid(k) : parse_grid(cn_grid);
                    rep.params["k"] = ln::rat_to_json(k);
                    {
                        ln::json g = ln::json::array();
                        for (const ln::Rat& c : grid) g.push_back(ln::rat_to_json(c));
                        rep.params["grid"] = g;
                    }
                    if (is_cn) {
                        ln::CnReport r = ln::check_cn(p, k, grid, opts);
                        rep.result = ln::cn_report_to_json(r);
                        holds = r.holds;
                    } else if (bcn_facet >= 0) {
                        rep.params["facet"] = bcn_facet;
                        holds = true;
                        ln::json per = ln::json::array();
                        for (const ln::Rat& c : grid) {
                            ln::CoverReport r =
                                ln::check_bcn_at(p, static_cast<std::size_t>(bcn_facet), c, opts);
                            holds = holds && r.covered;
                            per.push_back(ln::cover_report_to_json(r));
                        }
                        rep.result["holds"] = holds;
                        rep.result["per_c"] = per;
                    } else {
                        ln::BcnReport r = ln::check_bcn(p, k, grid, opts);
                        rep.result = ln::bcn_report_to_json(r);
                        holds = r.holds;
                    }
                }
            } else if (c_corner->parsed()) {
                rep.command = "check.corner";
                rep.params["vertex"] = corner_vertex;
                rep.params["l"] = corner_l;
                rep.params.update(cover_flags_json(flags));
                if (corner_vertex < 0 ||
                    static_cast<std::size_t>(corner_vertex) >= p.verts.size())
                    throw ln::format_error("vertex index out of range");
                ln::CornerCoverReport r =
                    ln::check_corner_cover(p, static_cast<std::size_t>(corner_vertex),
                                           ln::Int(corner_l), cover_options(flags));
                rep.result = ln::corner_report_to_json(r);
                holds = r.covered;
            } else if (c_ppd->parsed()) {
                rep.command = "check.ppd";
                rep.params["l"] = corner_l;
                rep.params.update(cover_flags_json(flags));
                ln::SimplexPpdReport r =
                    ln::simplex_ppd_cover(p, ln::Int(corner_l), cover_options(flags));
                rep.result = ln::ppd_report_to_json(r);
                holds = r.covered && r.homothety_union_covers;
            }

            rep.wall_ms = timer.elapsed_ms();
            emit(rep, chk_out);
            return holds ? 0 : 1;
        }

        if (gen->parsed()) {
            std::string name;
            std::vector<std::string> tags;
            ln::Polytope p = [&] {
                if (g_simplex->parsed()) {
                    name = "dilated-simplex-" + std::to_string(gen_d) + "-" + gen_c;
                    tags = {"simplex"};
                    return ln::dilated_simplex(static_cast<std::size_t>(gen_d),
                                               ln::parse_rat(gen_c));
                }
                if (g_reeve->parsed()) {
                    name = "reeve-" + std::to_string(gen_q);
                    tags = {"simplex", "reeve"};
                    return ln::reeve(ln::Int(gen_q));
                }
                if (g_hollow->parsed()) {
                    name = "hollow3";
                    tags = {"simplex", "hollow"};
                    return ln::hollow3();
                }
                if (g_cube->parsed()) {
                    name = "cube-" + std::to_string(gen_d) + "-" + gen_l;
                    tags = {"cube"};
                    return ln::cube(static_cast<std::size_t>(gen_d), ln::parse_rat(gen_l));
                }
                if (g_random->parsed()) {
                    name = "random-" + std::to_string(gen_d) + "-" + std::to_string(gen_seed);
                    tags = {"random"};
                    std::mt19937_64 rng(gen_seed);
                    return ln::random_lattice_polytope(static_cast<std::size_t>(gen_d),
                                                       static_cast<std::size_t>(gen_n), gen_box,
                                                       rng);
                }
                name = "skew-" + std::to_string(gen_seed);
                tags = {"skew"};
                std::mt19937_64 rng(gen_seed);
                return ln::skew_image(ln::load_polytope(gen_file), rng);
            }();
            // predicate-backed tags, attached only when they actually hold
            if (ln::is_lattice_polytope(p)) tags.push_back("lattice");
            if (p.full_dim() && ln::is_smooth(p)) tags.push_back("smooth");
            ln::json j = ln::fixture_to_json(name, tags, p);
            if (!gen_out.empty())
                ln::save_json(j, gen_out);
            else
                std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (bounds->parsed()) {
            ln::RunReport rep;
            rep.command = "bounds";
            rep.seed = bd_seed;
            ln::Rat k = ln::parse_rat(bd_k);
            std::size_t d = static_cast<std::size_t>(bd_d);
            rep.params["d"] = bd_d;
            rep.params["k"] = ln::rat_to_json(k);
            rep.result["recursive"] = ln::recursive_bound_to_json(ln::cn_recursive_bound(d, k));
            rep.result["closed"] = ln::rat_to_json(ln::cn_closed_bound(d, k));
            rep.result["integrally_closed_threshold"] = ln::rat_to_json(ln::ic_bound(d));
            rep.result["simplex_threshold"] = ln::rat_to_json(ln::simplex_bound(d));
            rep.result["d1_lower_bound"] = ln::rat_to_json(ln::cn1_lower_bound(k));
            {
                ln::HeightGauge g = ln::height_gauge_exact(d);
                ln::json gj;
                gj["min_squared_distance"] = ln::rat_to_json(g.value);
                gj["coeffs"] = ln::qvec_to_json(g.coeffs);
                rep.result["gauge"] = gj;
            }
            if (bd_dmax > 0) {
                std::vector<ln::Rat> ks = bd_kgrid.empty() ? std::vector<ln::Rat>{k}
                                                           : parse_grid(bd_kgrid);
                rep.result["table"] = ln::bound_table_to_json(
                    ln::bounds_table(static_cast<std::size_t>(bd_dmax), ks));
            }
            if (bd_falsify > 0)
                rep.result["falsify"] = ln::gauge_falsify_to_json(
                    ln::height_gauge_falsify(d, bd_falsify, bd_seed));
            rep.wall_ms = timer.elapsed_ms();
            emit(rep, bd_out);
            return 0;
        }

        if (fuzz->parsed()) {
            ln::RunReport rep;
            rep.seed = fz_seed;
            rep.params["trials"] = fz_trials;
            rep.params["out"] = fz_out;
            ln::FuzzSummary sum;
            if (f_cn->parsed()) {
                rep.command = "fuzz.cn-threshold";
                rep.params["d"] = fz_d;
                rep.params["k"] = fz_k;
                sum = ln::fuzz_cn_threshold(static_cast<std::size_t>(fz_d), ln::parse_rat(fz_k),
                                            fz_trials, fz_seed, fz_out);
            } else if (f_ic->parsed()) {
                rep.command = "fuzz.ic-threshold";
                rep.params["d"] = fz_d;
                sum = ln::fuzz_ic_threshold(static_cast<std::size_t>(fz_d), fz_trials, fz_seed,
                                            fz_out);
            } else {
                rep.command = "fuzz.cn1-exact";
                rep.params["k"] = fz_k;
                sum = ln::fuzz_cn1_exact(ln::parse_rat(fz_k), fz_trials, fz_seed, fz_out);
            }
            rep.result = ln::fuzz_summary_to_json(sum);
            if (f_cn1->parsed()) {
                // known bracketing of the d=1 covering threshold at this k
                ln::json br;
                br["lower"] = ln::rat_to_json(ln::cn1_lower_bound(ln::parse_rat(fz_k)));
                br["upper"] = 1;
                rep.result["threshold_bracket"] = br;
            }
            rep.wall_ms = timer.elapsed_ms();
            emit(rep, "");
            return 0;
        }
    } catch (const ln::budget_exceeded_error& e) {
        ln::json j;
        j["error"] = "budget exceeded";
        j["partial"] = ln::cover_report_to_json(e.partial);
        std::cout << j.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
