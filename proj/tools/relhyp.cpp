// relhyp: batch front-end for the relative-hyperbolicity toolkit.
// Subcommands build the combinatorial objects, run one pipeline, and emit a
// deterministic JSON (or CSV) report on stdout.
//
// Exit codes: 0 success, 1 bad input, 2 violated invariant, 3 infeasible or
// truncation-unsafe instance.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "relhyp/cusped.hpp"
#include "relhyp/filling.hpp"
#include "relhyp/geomfill.hpp"
#include "relhyp/hyperbolicity.hpp"
#include "relhyp/io.hpp"
#include "relhyp/paircomplex.hpp"
#include "relhyp/resolutions.hpp"

using json = nlohmann::ordered_json;
using namespace relhyp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitViolated = 2;
constexpr int kExitInfeasible = 3;

int thread_cap() {
    const char* env = std::getenv("RELHYP_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return n > 0 ? n : 1;
}

json report_header(const std::string& command, json params) {
    return json{{"command", command}, {"params", std::move(params)},
                {"threads", thread_cap()}};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

// "ball:v0:R" -> vertex set of the ball
std::set<int> parse_region(const SimpGraph& g, const std::string& spec) {
    std::stringstream ss(spec);
    std::string kind, a, b;
    if (!std::getline(ss, kind, ':') || kind != "ball" || !std::getline(ss, a, ':') ||
        !std::getline(ss, b, ':'))
        throw GroupError("bad region spec (expected ball:v0:R): " + spec);
    auto verts = ball_vertices(g, std::stoi(a), std::stoi(b));
    return {verts.begin(), verts.end()};
}

std::string rat_str(const Rat& r) { return rat_to_string(r); }

json certificate_json(const FillingCertificate& cert) {
    return json{{"feasible", cert.feasible},
                {"input_norm", rat_str(l1_norm(cert.input))},
                {"output_norm", rat_str(l1_norm(cert.output))},
                {"norm_ratio", rat_str(cert.norm_ratio)},
                {"support_radius", cert.support_radius},
                {"maxh_z", cert.maxh_z},
                {"horoball_confined", cert.horoball_confined}};
}

RelativePresentation load_pres(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GroupError("cannot open presentation file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_relative_presentation(ss.str());
}

// random degree-d chain over a vertex pool (shared by the resolutions checks)
StChain random_st_chain(std::mt19937& rng, const std::vector<IGV>& pool, int degree,
                        int terms) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    std::uniform_int_distribution<int> cd(-3, 3);
    StChain c(degree);
    for (int t = 0; t < terms; ++t) {
        StTuple tup;
        for (int j = 0; j <= degree; ++j) tup.push_back(pool[pick(rng)]);
        int v = cd(rng);
        if (v == 0) v = 1;
        c.add(tup, Rat(v, 2));
    }
    return c;
}

// ---------------------------------------------------------------------------

int run_cusped(const std::string& pair_path, int rbase, int hmax,
               const std::string& out_path) {
    auto pair = load_pair(pair_path);
    auto x = build_cusped_graph(pair, rbase, hmax);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw GroupError("cannot open output file: " + out_path);
        write_graph_jsonl(f, x.graph, x.height);
    }
    json rep = report_header(
        "cusped", {{"pair", pair_path}, {"rbase", rbase}, {"hmax", x.H_max}});
    rep["vertices"] = x.graph.num_vertices();
    rep["edges"] = x.graph.num_edges();
    rep["horoballs"] = x.horoballs.size();
    rep["base_vertices"] = x.ball.elements.size();
    if (!out_path.empty()) rep["out"] = out_path;
    emit(rep);
    return kExitOk;
}

int run_delta(const std::string& graph_path, const std::string& subset) {
    auto lg = load_graph_jsonl(graph_path);
    std::vector<int> V;
    if (!subset.empty()) {
        auto region = parse_region(lg.graph, subset);
        V.assign(region.begin(), region.end());
    }
    auto rep = four_point_delta(lg.graph, V);
    json out = report_header("delta", {{"graph", graph_path}, {"subset", subset}});
    out["delta"] = rat_str(rep.delta_four_point);
    out["witness"] = rep.witness;
    out["scanned"] = rep.scanned;
    emit(out);
    return kExitOk;
}

int run_rips(const std::string& graph_path, int kappa, int dmax,
             const std::string& out_path) {
    auto lg = load_graph_jsonl(graph_path);
    auto k = build_rips(lg.graph, kappa, dmax, lg.heights);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw GroupError("cannot open output file: " + out_path);
        write_complex_jsonl(f, k);
    }
    json rep = report_header(
        "rips", {{"graph", graph_path}, {"kappa", kappa}, {"dmax", dmax}});
    json counts = json::array();
    for (const auto& level : k.simplices) counts.push_back(level.size());
    rep["simplex_counts"] = counts;
    if (!out_path.empty()) rep["out"] = out_path;
    emit(rep);
    return kExitOk;
}

int run_homology(const std::string& complex_path, int k, bool reduced) {
    auto lc = load_complex_jsonl(complex_path);
    if (lc.has_cells())
        throw GroupError("homology expects a simplicial complex file");
    const int rank = homology_rank(lc.complex, k, reduced);
    json rep = report_header(
        "homology", {{"complex", complex_path}, {"k", k}, {"reduced", reduced}});
    rep["rank"] = rank;
    emit(rep);
    return kExitOk;
}

int run_fill(const std::string& complex_path, const std::string& cycle_path,
             const std::string& region_spec) {
    auto lc = load_complex_jsonl(complex_path);
    auto z = load_chain_json(cycle_path);
    FillingResult fr;
    if (lc.has_cells()) {
        if (!region_spec.empty())
            throw GroupError("--region applies to simplicial complexes only");
        fr = filling_norm_cells(lc.cells, z);
    } else {
        std::set<int> region;
        if (!region_spec.empty()) region = parse_region(lc.skeleton, region_spec);
        fr = filling_norm_lp(lc.complex, z, region);
    }
    json rep = report_header("fill", {{"complex", complex_path},
                                      {"cycle", cycle_path},
                                      {"region", region_spec}});
    rep["feasible"] = fr.feasible;
    if (fr.feasible) rep["value"] = rat_str(fr.value);
    rep["cells_considered"] = fr.cells_considered;
    emit(rep);
    return fr.feasible ? kExitOk : kExitInfeasible;
}

int run_dehn(const std::string& pres_path, const std::string& pair_path, int rbase,
             int kmax, std::size_t budget, bool quotient, bool csv) {
    auto pres = load_pres(pres_path);
    auto pair = load_pair(pair_path);
    auto rc = build_relative_cayley_complex(pres, pair, rbase);
    CombComplex2 cx = quotient ? build_quotient_complex(rc, pair) : rc.complex;
    auto table = dehn_sample(cx.simple_skeleton(), cx.cell_boundary_chains(), kmax, budget);
    if (csv) {
        std::cout << "k,max_fill\n";
        for (const auto& [k, v] : table.max_fill)
            std::cout << k << "," << rat_str(v) << "\n";
        return kExitOk;
    }
    json rep = report_header("dehn", {{"pres", pres_path},
                                      {"pair", pair_path},
                                      {"rbase", rbase},
                                      {"kmax", kmax},
                                      {"budget", budget},
                                      {"quotient", quotient}});
    json tbl = json::object();
    for (const auto& [k, v] : table.max_fill) tbl[std::to_string(k)] = rat_str(v);
    rep["max_fill"] = tbl;
    rep["circuits_enumerated"] = table.circuits_enumerated;
    rep["infeasible"] = table.infeasible;
    rep["budget_exceeded"] = table.budget_exceeded;
    rep["linear_fit_residual"] = rat_str(table.linear_fit_residual);
    emit(rep);
    return kExitOk;
}

int run_circuits(const std::string& cycle_path) {
    auto z = load_chain_json(cycle_path);
    auto dec = circuit_decomposition(z);
    Chain sum(1);
    Rat weighted = 0;
    json terms = json::array();
    for (const auto& term : dec.terms) {
        Chain scaled = term.circuit;
        scaled *= term.a;
        sum += scaled;
        weighted += term.a * l1_norm(term.circuit);
        terms.push_back(json{{"a", rat_str(term.a)},
                             {"length", rat_str(l1_norm(term.circuit))}});
    }
    const bool exact = (sum == z) && (weighted == l1_norm(z));
    json rep = report_header("circuits", {{"cycle", cycle_path}});
    rep["terms"] = terms;
    rep["norm"] = rat_str(l1_norm(z));
    rep["exact"] = exact;
    emit(rep);
    return exact ? kExitOk : kExitViolated;
}

int run_paircomplex(const std::string& pres_path, const std::string& pair_path,
                    int rbase, bool quotient, const std::string& fineness,
                    const std::string& out_path) {
    auto pres = load_pres(pres_path);
    auto pair = load_pair(pair_path);
    auto rc = build_relative_cayley_complex(pres, pair, rbase);
    CombComplex2 cx = quotient ? build_quotient_complex(rc, pair) : rc.complex;
    json rep = report_header("paircomplex", {{"pres", pres_path},
                                             {"pair", pair_path},
                                             {"rbase", rbase},
                                             {"quotient", quotient}});
    rep["vertices"] = cx.num_vertices;
    rep["edges"] = cx.edges.size();
    rep["cells"] = cx.cells.size();
    if (!fineness.empty()) {
        auto parts = parse_int_list(fineness);
        if (parts.size() != 2) throw GroupError("--fineness expects edge,L");
        auto circuits = fineness_probe(cx, parts[0], parts[1]);
        rep["fineness_edge"] = parts[0];
        rep["fineness_L"] = parts[1];
        rep["fineness_circuits"] = circuits.size();
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw GroupError("cannot open output file: " + out_path);
        write_cell_complex_jsonl(f, cx.simple_skeleton(), cx.cell_boundary_chains());
        rep["out"] = out_path;
    }
    emit(rep);
    return kExitOk;
}

struct GeomfillArgs {
    std::string complex_path, cycle_path, graph_path;
    std::vector<std::string> geodesics;
    int center = 0, D = 0, S = 1, L = 1, delta = 0;
    int v1 = 0, v2 = 0, v3 = 0;
};

int run_geomfill(const std::string& mode, const GeomfillArgs& a) {
    if (mode == "spider") {
        auto lg = load_graph_jsonl(a.graph_path);
        std::vector<std::vector<int>> geos;
        for (const auto& s : a.geodesics) geos.push_back(parse_int_list(s));
        auto cover = spider_cover(lg.graph, geos, a.S, a.delta);
        json rep = report_header("geomfill", {{"mode", mode},
                                              {"graph", a.graph_path},
                                              {"S", a.S},
                                              {"delta", a.delta}});
        rep["balls"] = cover.balls.size();
        rep["segments"] = cover.segments.size();
        rep["cover_ok"] = cover.cover_ok;
        rep["separation_ok"] = cover.separation_ok;
        rep["repairs"] = cover.repairs;
        emit(rep);
        return (cover.cover_ok && cover.separation_ok) ? kExitOk : kExitViolated;
    }

    auto lc = load_complex_jsonl(a.complex_path);
    if (lc.has_cells())
        throw GroupError("geomfill expects a simplicial complex file");
    auto z = load_chain_json(a.cycle_path);
    json params{{"mode", mode}, {"complex", a.complex_path}, {"cycle", a.cycle_path}};

    if (mode == "local") {
        params["center"] = a.center;
        params["D"] = a.D;
        auto cert = local_fill(lc.complex, lc.skeleton, z, a.center, a.D);
        json rep = report_header("geomfill", params);
        rep["certificate"] = certificate_json(cert);
        emit(rep);
        return cert.feasible ? kExitOk : kExitInfeasible;
    }
    if (mode == "slice" || mode == "thin") {
        if (a.geodesics.size() != 1)
            throw GroupError("slice/thin expect exactly one --geodesic");
        auto gamma = parse_int_list(a.geodesics[0]);
        params["S"] = a.S;
        if (mode == "slice") {
            auto sl = slice_cycle_along_geodesic(lc.complex, lc.skeleton, z, gamma, a.S);
            json rep = report_header("geomfill", params);
            rep["pieces"] = sl.pieces.size();
            rep["D"] = sl.D;
            rep["R"] = sl.R;
            rep["sum_norm_ratio"] = rat_str(sl.sum_norm_ratio);
            rep["feasible"] = sl.feasible;
            emit(rep);
            return sl.feasible ? kExitOk : kExitInfeasible;
        }
        auto cert = thin_fill(lc.complex, lc.skeleton, z, gamma, a.S);
        json rep = report_header("geomfill", params);
        rep["certificate"] = certificate_json(cert);
        emit(rep);
        return cert.feasible ? kExitOk : kExitInfeasible;
    }
    if (mode == "triangle") {
        params["v1"] = a.v1;
        params["v2"] = a.v2;
        params["v3"] = a.v3;
        params["L"] = a.L;
        params["delta"] = a.delta;
        auto cert = fill_triangle_cycle(lc.complex, lc.skeleton, z, a.v1, a.v2, a.v3,
                                        a.L, a.delta);
        json rep = report_header("geomfill", params);
        rep["certificate"] = certificate_json(cert);
        emit(rep);
        return cert.feasible ? kExitOk : kExitInfeasible;
    }
    if (mode == "graphlike") {
        std::vector<std::vector<int>> geos;
        for (const auto& s : a.geodesics) geos.push_back(parse_int_list(s));
        params["L"] = a.L;
        params["delta"] = a.delta;
        auto cert = fill_graphlike_cycle(lc.complex, lc.skeleton, z, geos, a.L, a.delta);
        json rep = report_header("geomfill", params);
        rep["certificate"] = certificate_json(cert);
        emit(rep);
        return cert.feasible ? kExitOk : kExitInfeasible;
    }
    throw GroupError("unknown geomfill mode: " + mode);
}

int run_resolutions(const std::string& check, const std::string& pair_path, int degree,
                    int samples, unsigned seed) {
    auto pair = load_pair(pair_path);
    json rep = report_header("resolutions", {{"check", check},
                                             {"pair", pair_path},
                                             {"degree", degree},
                                             {"samples", samples},
                                             {"seed", seed}});
    if (check == "cohomology") {
        rep["rank"] = relative_cohomology_rank(pair, degree);
        emit(rep);
        return kExitOk;
    }

    std::mt19937 rng(seed);
    if (check == "check-phi" || check == "check-cone") {
        auto ball = explore_ball(pair.gamma, pair.gen_set, 2);
        std::vector<IGV> pool;
        for (const auto& w : ball.elements)
            for (int i = 0; i < static_cast<int>(pair.peripherals.size()); ++i)
                pool.push_back(IGV{w, i});
        int failures = 0;
        const IGV y{Word{}, 0};
        for (int t = 0; t < samples; ++t) {
            if (check == "check-phi") {
                StChain c = random_st_chain(rng, pool, 0, 6);
                Rat s = st_augmentation(c);
                if (s != 0) c.add({pool[t % pool.size()]}, -s);
                if (c.is_zero()) continue;
                StChain f = phi_map_signed(c);
                if (!(st_boundary(f) == c) || !(st_norm(f) <= st_norm(c))) ++failures;
            } else {
                StChain zc = st_boundary(random_st_chain(rng, pool, 2, 4));
                if (!(st_boundary(absolute_cone(y, zc)) == zc)) ++failures;
                StChain b = st_project(pair, random_st_chain(rng, pool, 1, 6));
                if (b.is_zero()) continue;
                StChain cone = relative_cone(pair, y, b);
                if (!(st_norm(cone) <= 3 * st_norm(b))) ++failures;
                if (rel_augmentation(pair, b).is_zero() &&
                    !(st_project(pair, st_boundary(cone)) == b))
                    ++failures;
            }
        }
        rep["failures"] = failures;
        emit(rep);
        return failures == 0 ? kExitOk : kExitViolated;
    }
    if (check == "bar-iso") {
        const int k = degree;
        auto bbasis = bar_cochain_basis(pair, k);
        auto sbasis = st_cochain_basis(pair, k);
        std::uniform_int_distribution<int> cd(-4, 4);
        int failures = 0;
        for (int t = 0; t < samples; ++t) {
            BarCochain f;
            for (const auto& key : bbasis) f[key] = Rat(cd(rng), 3);
            StCochain pf = bar_iso_phi(pair, k, f);
            BarCochain back = bar_iso_psi(pair, k, pf);
            for (const auto& key : bbasis)
                if (bar_cochain_eval(pair, back, key) != bar_cochain_eval(pair, f, key))
                    ++failures;
            if (bar_cochain_sup_norm(pair, k, f) != st_cochain_sup_norm(pair, k, pf))
                ++failures;
            StCochain lhs = st_coboundary(pair, k, pf);
            StCochain rhs = bar_iso_phi(pair, k + 1, bar_coboundary(pair, k, f));
            for (const auto& tt : st_cochain_basis(pair, k + 1))
                if (st_cochain_eval(pair, lhs, tt) != st_cochain_eval(pair, rhs, tt))
                    ++failures;
        }
        rep["basis_size"] = bbasis.size();
        rep["st_basis_size"] = sbasis.size();
        rep["failures"] = failures;
        emit(rep);
        return failures == 0 ? kExitOk : kExitViolated;
    }
    throw GroupError("unknown resolutions check: " + check);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relhyp: relative hyperbolicity toolkit"};
    app.require_subcommand(1);

    // cusped
    std::string pair_path, out_path, graph_path, complex_path, cycle_path;
    int rbase = 2, hmax = -1;
    auto* cusped = app.add_subcommand("cusped", "build a truncated cusped graph");
    cusped->add_option("--pair", pair_path, "pair file")->required();
    cusped->add_option("--rbase", rbase, "base ball radius")->required();
    cusped->add_option("--hmax", hmax, "horoball truncation height (-1 = auto)");
    cusped->add_option("--out", out_path, "output graph jsonl");

    // delta
    std::string subset;
    auto* delta = app.add_subcommand("delta", "four-point hyperbolicity constant");
    delta->add_option("--graph", graph_path, "graph jsonl")->required();
    delta->add_option("--subset", subset, "vertex subset, e.g. ball:0:3");

    // rips
    int kappa = 1, dmax = 2;
    auto* rips = app.add_subcommand("rips", "build a Rips complex");
    rips->add_option("--graph", graph_path, "graph jsonl")->required();
    rips->add_option("--kappa", kappa, "Rips parameter")->required();
    rips->add_option("--dmax", dmax, "dimension cap");
    rips->add_option("--out", out_path, "output complex jsonl");

    // homology
    int hk = 0;
    bool reduced = false;
    auto* hom = app.add_subcommand("homology", "rational homology rank");
    hom->add_option("--complex", complex_path, "complex jsonl")->required();
    hom->add_option("--k", hk, "degree")->required();
    hom->add_flag("--reduced", reduced, "reduced homology");

    // fill
    std::string region_spec;
    auto* fill = app.add_subcommand("fill", "exact filling norm of a 1-cycle");
    fill->add_option("--complex", complex_path, "complex jsonl")->required();
    fill->add_option("--cycle", cycle_path, "cycle json")->required();
    fill->add_option("--region", region_spec, "restrict cells, e.g. ball:0:3");

    // dehn
    std::string pres_path;
    int kmax = 4;
    std::size_t budget = 200000;
    bool quotient = false, csv = false;
    auto* dehn = app.add_subcommand("dehn", "Dehn-function lower-bound sampling");
    dehn->add_option("--pres", pres_path, "relative presentation file")->required();
    dehn->add_option("--pair", pair_path, "pair file")->required();
    dehn->add_option("--rbase", rbase, "truncation radius")->required();
    dehn->add_option("--kmax", kmax, "max circuit length");
    dehn->add_option("--budget", budget, "circuit enumeration budget");
    dehn->add_flag("--quotient", quotient, "collapse peripheral cosets");
    dehn->add_flag("--csv", csv, "CSV table instead of JSON");

    // circuits
    auto* circuits = app.add_subcommand("circuits", "conformal circuit decomposition");
    circuits->add_option("--cycle", cycle_path, "cycle json")->required();

    // paircomplex
    std::string fineness;
    auto* pc = app.add_subcommand("paircomplex", "relative Cayley / quotient complex");
    pc->add_option("--pres", pres_path, "relative presentation file")->required();
    pc->add_option("--pair", pair_path, "pair file")->required();
    pc->add_option("--rbase", rbase, "truncation radius")->required();
    pc->add_flag("--quotient", quotient, "collapse peripheral cosets");
    pc->add_option("--fineness", fineness, "probe edge,L");
    pc->add_option("--out", out_path, "output cell-complex jsonl");

    // geomfill
    GeomfillArgs ga;
    std::string gf_mode;
    auto* gf = app.add_subcommand("geomfill", "geometric filling pipelines");
    gf->add_option("mode", gf_mode, "local|slice|thin|spider|triangle|graphlike")
        ->required();
    gf->add_option("--complex", ga.complex_path, "complex jsonl");
    gf->add_option("--cycle", ga.cycle_path, "cycle json");
    gf->add_option("--graph", ga.graph_path, "graph jsonl (spider)");
    gf->add_option("--geodesic", ga.geodesics, "comma-separated vertex path")
        ->take_all();
    gf->add_option("--center", ga.center, "center vertex (local)");
    gf->add_option("--D", ga.D, "initial radius (local)");
    gf->add_option("--S", ga.S, "support width (slice/thin/spider)");
    gf->add_option("--L", ga.L, "Rips scale (triangle/graphlike)");
    gf->add_option("--delta", ga.delta, "hyperbolicity constant");
    gf->add_option("--v1", ga.v1, "triangle vertex");
    gf->add_option("--v2", ga.v2, "triangle vertex");
    gf->add_option("--v3", ga.v3, "triangle vertex");

    // resolutions
    std::string check;
    int degree = 1, samples = 100;
    unsigned seed = 1;
    auto* res = app.add_subcommand("resolutions", "standard-resolution checks");
    res->add_option("check", check, "check-cone|check-phi|bar-iso|cohomology")
        ->required();
    res->add_option("--pair", pair_path, "pair file")->required();
    res->add_option("--degree", degree, "cochain degree");
    res->add_option("--samples", samples, "sample count");
    res->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cusped) return run_cusped(pair_path, rbase, hmax, out_path);
        if (*delta) return run_delta(graph_path, subset);
        if (*rips) return run_rips(graph_path, kappa, dmax, out_path);
        if (*hom) return run_homology(complex_path, hk, reduced);
        if (*fill) return run_fill(complex_path, cycle_path, region_spec);
        if (*dehn) return run_dehn(pres_path, pair_path, rbase, kmax, budget, quotient, csv);
        if (*circuits) return run_circuits(cycle_path);
        if (*pc) return run_paircomplex(pres_path, pair_path, rbase, quotient, fineness,
                                        out_path);
        if (*gf) return run_geomfill(gf_mode, ga);
        if (*res) return run_resolutions(check, pair_path, degree, samples, seed);
    } catch (const GroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
