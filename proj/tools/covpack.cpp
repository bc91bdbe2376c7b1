// covpack: command-line front end over the covering/packing library.
// Exit codes: 0 = all validity certificates pass, 1 = any failure, 2 = usage.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covpack/cover.hpp"
#include "covpack/delaunay.hpp"
#include "covpack/experiment.hpp"
#include "covpack/geometry.hpp"
#include "covpack/instance.hpp"
#include "covpack/json_io.hpp"
#include "covpack/matching.hpp"
#include "covpack/oracle.hpp"
#include "covpack/pack.hpp"
#include "covpack/rng.hpp"
#include "covpack/svg.hpp"
#include "covpack/weaknet.hpp"
#include "covpack/zonotope.hpp"

using namespace covpack;

namespace {

int fail(const std::string& msg) {
    std::cerr << "covpack: " << msg << "\n";
    return 1;
}

int usage_error(const std::string& msg) {
    std::cerr << "covpack: " << msg << "\n";
    return 2;
}

void maybe_svg(const std::string& path, const ConvexBody& body, const PointSet& S,
               const std::vector<Homothet>& homothets, const std::vector<std::pair<int, int>>& edges) {
    if (path.empty()) return;
    SvgScene scene;
    scene.body = body;
    scene.points = S;
    scene.homothets = homothets;
    scene.edges = edges;
    render_svg(scene, path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covering, packing, weak nets, and Delaunay matchings for homothets"};
    app.require_subcommand(1);

    std::uint64_t seed = 2026;
    std::string outPath, svgPath;
    bool quiet = false;
    auto* seedOpt = app.add_option("--seed", seed, "seed for every randomized step");
    app.add_option("--out", outPath, "output JSON path");
    app.add_option("--svg", svgPath, "also render an SVG figure");
    app.add_flag("--quiet", quiet, "suppress stdout summaries");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a point-set instance");
    gen->fallthrough();
    std::string generator;
    int genN = 100, genM = 3, genK = 4, gridN = 10;
    double genLo = 0.0, genHi = 100.0, spread = 0.1, separation = 100.0, gridJitter = 0.0;
    gen->add_option("--generator", generator, "uniform-box | clusters | grid | annulus")
        ->required()
        ->check(CLI::IsMember({"uniform-box", "clusters", "grid", "annulus"}));
    gen->add_option("--n", genN, "point count (uniform-box, annulus)");
    gen->add_option("--lo", genLo, "box low corner");
    gen->add_option("--hi", genHi, "box high corner");
    gen->add_option("--m", genM, "cluster count");
    gen->add_option("--k", genK, "points per cluster");
    gen->add_option("--spread", spread, "cluster spread");
    gen->add_option("--separation", separation, "cluster separation factor");
    gen->add_option("--grid-n", gridN, "grid side length");
    gen->add_option("--grid-jitter", gridJitter, "grid jitter");

    // cover / pack / zono-cover
    std::string bodyPath, pointsPath, method = "greedy";
    int k = 0;
    double jitterSigma = 0.0;
    auto* cover = app.add_subcommand("cover", "k-point cover by homothets");
    auto* pack = app.add_subcommand("pack", "interior-disjoint k-point packing");
    auto* zcover = app.add_subcommand("zono-cover", "cover with a zonotope body");
    for (CLI::App* sub : {cover, pack, zcover}) {
        sub->fallthrough();
        sub->add_option("--body", bodyPath, "body JSON")->required();
        sub->add_option("--points", pointsPath, "point-set JSON")->required();
        sub->add_option("--k", k, "point budget per homothet")->required();
        sub->add_option("--jitter", jitterSigma, "gaussian perturbation before the run");
    }
    cover->add_option("--method", method, "net | greedy")->check(CLI::IsMember({"net", "greedy"}));

    // net / zono-net
    double epsilon = 0.0;
    auto* net = app.add_subcommand("net", "weak epsilon-net with extraction trace");
    auto* znet = app.add_subcommand("zono-net", "vertex-based zonotope weak net");
    for (CLI::App* sub : {net, znet}) {
        sub->fallthrough();
        sub->add_option("--body", bodyPath, "body JSON")->required();
        sub->add_option("--points", pointsPath, "point-set JSON")->required();
        sub->add_option("--epsilon", epsilon, "net parameter in (0,1]")->required();
    }

    // delaunay / match
    auto* delaunay = app.add_subcommand("delaunay", "generalized Delaunay graph");
    delaunay->fallthrough();
    delaunay->add_option("--body", bodyPath, "body JSON")->required();
    delaunay->add_option("--points", pointsPath, "point-set JSON")->required();
    std::string graphPath;
    auto* match = app.add_subcommand("match", "maximum matching (blossom)");
    match->fallthrough();
    match->add_option("--graph", graphPath, "graph JSON")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact brute-force baselines");
    oracle->fallthrough();
    oracle->require_subcommand(1);
    int budget = 0;
    auto* ocover = oracle->add_subcommand("cover", "exact minimum cover");
    auto* opack = oracle->add_subcommand("pack", "exact maximum packing");
    for (CLI::App* sub : {ocover, opack}) {
        sub->fallthrough();
        sub->add_option("--body", bodyPath, "body JSON")->required();
        sub->add_option("--points", pointsPath, "point-set JSON")->required();
        sub->add_option("--k", k, "point budget per homothet")->required();
        sub->add_option("--budget", budget, "override the oracle point cap");
    }
    auto* omatch = oracle->add_subcommand("match", "exact maximum matching");
    omatch->fallthrough();
    omatch->add_option("--graph", graphPath, "graph JSON")->required();
    omatch->add_option("--budget", budget, "override the oracle vertex cap");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run a named suite");
    experiment->fallthrough();
    std::string suite;
    int trials = 100;
    experiment->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(
            {"cover-ratio", "pack-ratio", "net-audit", "delaunay-props", "zonotope-audit", "oracle-compare"}));
    experiment->add_option("--trials", trials, "trial count");

    // render
    auto* render = app.add_subcommand("render", "compose an SVG from saved artifacts");
    render->fallthrough();
    std::string rCover, rPacking, rNet, rGraph;
    bool project = false;
    render->add_option("--points", pointsPath, "point-set JSON")->required();
    render->add_option("--body", bodyPath, "body JSON (defaults to the unit disk)");
    render->add_option("--cover", rCover, "cover JSON to outline");
    render->add_option("--packing", rPacking, "packing JSON to outline");
    render->add_option("--net", rNet, "net JSON whose points join the scene");
    render->add_option("--graph", rGraph, "graph JSON whose edges join the scene");
    render->add_flag("--project", project, "project d>2 input onto the first two coordinates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << "covpack: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(gen)) {
            if (seedOpt->count() == 0) return usage_error("gen requires an explicit --seed");
            if (outPath.empty()) return usage_error("gen requires --out");
            Rng rng(seed);
            PointSet S;
            json params;
            if (generator == "uniform-box") {
                S = gen_uniform_box(genN, rng, genLo, genHi);
                params = {{"n", genN}, {"lo", genLo}, {"hi", genHi}};
            } else if (generator == "clusters") {
                S = gen_clusters(genM, genK, spread, separation, rng);
                params = {{"m", genM}, {"k", genK}, {"spread", spread}, {"separation", separation}};
            } else if (generator == "grid") {
                S = gen_grid(gridN, gridJitter, rng);
                params = {{"n", gridN}, {"jitter", gridJitter}};
            } else {
                S = gen_annulus(genN, rng);
                params = {{"n", genN}};
            }
            json j = points_to_json(S);
            j["generator"] = generator;
            j["params"] = params;
            j["seed"] = seed;
            write_json(outPath, j);
            if (!quiet) std::cout << generator << ": " << S.size() << " points -> " << outPath << "\n";
            return 0;
        }

        if (app.got_subcommand(cover) || app.got_subcommand(pack) || app.got_subcommand(zcover)) {
            ConvexBody body = body_from_json(read_json(bodyPath));
            PointSet S = points_from_json(read_json(pointsPath));
            if (jitterSigma > 0.0) {
                if (seedOpt->count() == 0) return usage_error("--jitter requires an explicit --seed");
                Rng rng(seed);
                apply_jitter(S, jitterSigma, rng);
            }
            bool isPack = app.got_subcommand(pack);
            json j;
            bool valid = false;
            std::vector<Homothet> shapes;
            try {
                if (isPack) {
                    Packing p = pack_greedy(body, S, k);
                    j = packing_to_json(body, S, k, p);
                    shapes = p.homothets;
                } else {
                    if (app.got_subcommand(zcover)) require_zonotope(body);
                    if (method == "net" && !app.got_subcommand(zcover)) {
                        if (body.kind != BodyKind::Ball) return usage_error("--method net supports ball bodies only");
                        Cover c = cover_net_based(S, k);
                        j = cover_to_json(body, S, k, c);
                        shapes = c.homothets;
                    } else {
                        Cover c = cover_greedy(body, S, k);
                        j = cover_to_json(body, S, k, c);
                        shapes = c.homothets;
                    }
                }
            } catch (const DegeneracyError& e) {
                return fail(std::string(e.what()) + "; rerun with --jitter and a recorded --seed");
            }
            valid = j["valid"].get<bool>();
            if (jitterSigma > 0.0) {
                j["jitter"] = jitterSigma;
                j["seed"] = seed;
            }
            if (!outPath.empty()) write_json(outPath, j);
            maybe_svg(svgPath, body, S, shapes, {});
            if (!quiet)
                std::cout << (isPack ? "packing" : "cover") << " size " << shapes.size() << " ratio "
                          << j["sizeRatio"].get<double>() << (valid ? " valid" : " INVALID") << "\n";
            return valid ? 0 : 1;
        }

        if (app.got_subcommand(net) || app.got_subcommand(znet)) {
            ConvexBody body = body_from_json(read_json(bodyPath));
            PointSet S = points_from_json(read_json(pointsPath));
            WeakNet wn = app.got_subcommand(znet) ? zonotope_weak_net(body, S, epsilon)
                                                  : build_weak_net(body, S, epsilon, extraction_factor(body));
            VerifyReport rep = verify_hitting(body, S, wn, seed);
            json j = net_to_json(wn);
            j["verified"] = rep.pass;
            j["exactVerifier"] = rep.exact;
            if (!outPath.empty()) write_json(outPath, j);
            std::vector<Homothet> shapes;
            for (const NetTrace& tr : wn.trace) shapes.push_back(tr.extracted);
            maybe_svg(svgPath, body, S, shapes, {});
            if (!quiet)
                std::cout << "net size " << wn.points.size() << " rounds " << wn.trace.size()
                          << (rep.pass ? " verified" : " REFUTED") << (rep.exact ? " (exact)" : " (randomized)")
                          << "\n";
            return rep.pass ? 0 : 1;
        }

        if (app.got_subcommand(delaunay)) {
            ConvexBody body = body_from_json(read_json(bodyPath));
            PointSet S = points_from_json(read_json(pointsPath));
            DelaunayGraph g = delaunay_graph(body, S);
            json j = graph_to_json(g.graph);
            j["approximate"] = g.approximate;
            if (!outPath.empty()) write_json(outPath, j);
            maybe_svg(svgPath, body, S, {}, g.graph.edges);
            if (!quiet)
                std::cout << "delaunay " << g.graph.edges.size() << " edges"
                          << (g.approximate ? " (approximate)" : " (exact)") << "\n";
            return 0;
        }

        if (app.got_subcommand(match)) {
            Graph g = graph_from_json(read_json(graphPath));
            Matching m = max_matching(g);
            json j;
            j["size"] = m.size;
            j["edges"] = json::array();
            for (const auto& [a, b] : m.edges) j["edges"].push_back(json::array({a, b}));
            j["mate"] = m.mate;
            if (!outPath.empty()) write_json(outPath, j);
            if (!quiet) std::cout << "matching size " << m.size << " of " << g.n << " vertices\n";
            return 0;
        }

        if (app.got_subcommand(oracle)) {
            OracleBudget ob;
            if (budget > 0) ob.maxPoints = budget;
            if (oracle->got_subcommand(ocover) || oracle->got_subcommand(opack)) {
                ConvexBody body = body_from_json(read_json(bodyPath));
                PointSet S = points_from_json(read_json(pointsPath));
                json j;
                if (oracle->got_subcommand(ocover)) {
                    ExactCover ex = exact_min_cover(body, S, k, ob);
                    j["size"] = ex.size;
                    j["homothets"] = json::array();
                    for (const Homothet& h : ex.homothets) j["homothets"].push_back(homothet_to_json(h));
                    if (!quiet) std::cout << "exact cover size " << ex.size << "\n";
                } else {
                    ExactPacking ex = exact_max_packing(body, S, k, ob);
                    j["size"] = ex.size;
                    j["homothets"] = json::array();
                    for (const Homothet& h : ex.homothets) j["homothets"].push_back(homothet_to_json(h));
                    if (!quiet) std::cout << "exact packing size " << ex.size << "\n";
                }
                if (!outPath.empty()) write_json(outPath, j);
                return 0;
            }
            Graph g = graph_from_json(read_json(graphPath));
            int sz = max_matching_bruteforce(g, ob);
            json j;
            j["size"] = sz;
            if (!outPath.empty()) write_json(outPath, j);
            if (!quiet) std::cout << "exact matching size " << sz << "\n";
            return 0;
        }

        if (app.got_subcommand(experiment)) {
            if (seedOpt->count() == 0) return usage_error("experiment requires an explicit --seed");
            ExperimentReport rep = run_experiment(suite, trials, seed);
            if (!outPath.empty()) write_json(outPath, report_to_json(rep));
            if (!quiet) std::cout << report_table(rep);
            return rep.failed ? 1 : 0;
        }

        if (app.got_subcommand(render)) {
            if (outPath.empty()) return usage_error("render requires --out");
            if (!rCover.empty() && !rPacking.empty())
                return usage_error("render takes at most one of --cover / --packing");
            ConvexBody body = bodyPath.empty() ? make_ball(2) : body_from_json(read_json(bodyPath));
            PointSet S = points_from_json(read_json(pointsPath));
            if (project) {
                for (Point& p : S)
                    if (p.size() > 2) p.resize(2);
                if (body.dim > 2) {
                    if (body.kind != BodyKind::Ball) return fail("--project supports ball bodies only");
                    body = make_ball(2);
                    std::cerr << "covpack: warning: projected " << bodyPath << " onto the first two coordinates\n";
                }
            }
            SvgScene scene;
            scene.body = body;
            scene.points = S;
            std::string homothetSource = !rCover.empty() ? rCover : rPacking;
            if (!homothetSource.empty()) {
                json j = read_json(homothetSource);
                if (!j.value("valid", false))
                    return fail(homothetSource + " does not carry a passing validity certificate");
                for (const json& h : j.at("homothets")) scene.homothets.push_back(homothet_from_json(h));
            }
            if (!rNet.empty()) {
                PointSet netPts = points_from_json(read_json(rNet));
                scene.points.insert(scene.points.end(), netPts.begin(), netPts.end());
            }
            if (!rGraph.empty()) {
                Graph g = graph_from_json(read_json(rGraph));
                if (g.n > static_cast<int>(S.size())) return fail("graph has more vertices than points");
                scene.edges = g.edges;
            }
            render_svg(scene, outPath);
            if (!quiet) std::cout << "wrote " << outPath << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return usage_error("no subcommand");
}
