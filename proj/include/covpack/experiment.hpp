#pragma once

// Experiment orchestration: named suites of randomized trials with validity
// certificates, ratio aggregates, and replayable failure witnesses.  The
// report JSON is a pure function of (suite, trials, seed); wall times appear
// only in the human-readable table.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "covpack/cover.hpp"
#include "covpack/delaunay.hpp"
#include "covpack/geometry.hpp"
#include "covpack/instance.hpp"
#include "covpack/json_io.hpp"
#include "covpack/oracle.hpp"
#include "covpack/pack.hpp"
#include "covpack/rng.hpp"
#include "covpack/weaknet.hpp"
#include "covpack/zonotope.hpp"

namespace covpack {

struct ExperimentRecord {
    int trial = 0;
    int n = 0;
    int k = 0;
    std::string body;
    std::string method;
    int outputSize = 0;
    double sizeRatio = 0.0;  // outputSize / (n / k)
    bool valid = false;
    double wallTime = 0.0;  // seconds; table only, never serialized
};

struct ExperimentReport {
    std::string suite;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<ExperimentRecord> records;
    double minRatio = 0.0;
    double medianRatio = 0.0;
    double maxRatio = 0.0;
    bool failed = false;
    json witness;  // replayable instance of the first failing trial
};

namespace detail {

inline json instance_witness(const std::string& suite, int trial, std::uint64_t seed, const ConvexBody& body,
                             const PointSet& S) {
    json j;
    j["suite"] = suite;
    j["trial"] = trial;
    j["seed"] = seed;
    j["body"] = body_to_json(body);
    j["points"] = points_to_json(S);
    return j;
}

struct TrialOutcome {
    ExperimentRecord rec;
    json witness;  // null unless the trial failed
};

inline TrialOutcome run_trial(const std::string& suite, int trial, std::uint64_t seed) {
    Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(trial));
    TrialOutcome out;
    ExperimentRecord& r = out.rec;
    r.trial = trial;
    ConvexBody witnessBody = make_ball(2);
    PointSet S;
    try {
        if (suite == "cover-ratio") {
            r.n = 60 + 20 * (trial % 5);
            r.k = std::vector<int>{2, 5, 10}[trial % 3];
            r.body = "ball";
            r.method = (trial % 2 == 0) ? "net" : "greedy";
            S = gen_uniform_box(r.n, rng);
            Cover c = (trial % 2 == 0) ? cover_net_based(S, r.k) : cover_greedy(witnessBody, S, r.k);
            r.outputSize = static_cast<int>(c.homothets.size());
            r.sizeRatio = cover_size_ratio(S.size(), r.k, c);
            r.valid = cover_valid(witnessBody, S, r.k, c);
        } else if (suite == "pack-ratio") {
            r.k = std::vector<int>{2, 5, 10}[trial % 3];
            r.body = "ball";
            r.method = "greedy";
            if (trial % 2 == 0) {
                r.n = 60 + 20 * (trial % 5);
                S = gen_uniform_box(r.n, rng);
            } else {
                int m = 4 + trial % 4;  // far clusters: greedy packs exactly one per cluster
                S = gen_clusters(m, r.k, 0.05, 100.0, rng);
                r.n = static_cast<int>(S.size());
            }
            Packing p = pack_greedy(witnessBody, S, r.k);
            r.outputSize = static_cast<int>(p.homothets.size());
            r.sizeRatio = packing_size_ratio(S.size(), r.k, p);
            r.valid = packing_valid(witnessBody, S, r.k, p);
        } else if (suite == "net-audit") {
            r.n = 50 + 10 * (trial % 6);
            double eps = std::vector<double>{0.05, 0.1, 0.3}[trial % 3];
            r.k = net_threshold(eps, static_cast<std::size_t>(r.n));
            r.body = "ball";
            r.method = "weak-net";
            S = gen_uniform_box(r.n, rng);
            WeakNet net = build_weak_net(witnessBody, S, eps, extraction_factor(witnessBody));
            VerifyReport rep = verify_hitting(witnessBody, S, net, seed ^ 0x9e37u);
            r.outputSize = static_cast<int>(net.points.size());
            r.sizeRatio = static_cast<double>(r.outputSize) * r.k / r.n;
            r.valid = rep.pass;
        } else if (suite == "delaunay-props") {
            r.n = 30 + 10 * (trial % 8);
            r.k = 2;
            r.body = "ball";
            r.method = "delaunay";
            S = gen_uniform_box(r.n, rng);
            DelaunayGraph g = delaunay_graph(witnessBody, S);
            AngleReport ang = check_angle_property(witnessBody, S, 1.0);
            r.outputSize = static_cast<int>(g.graph.edges.size());
            r.sizeRatio = 2.0 * r.outputSize / r.n;
            r.valid = is_triangulation(g.graph, S) && ang.pass;
        } else if (suite == "zonotope-audit") {
            ConvexBody Z = (trial % 2 == 0) ? make_sym_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})
                                            : make_regular_polygon(6);
            witnessBody = Z;
            r.body = (trial % 2 == 0) ? "square" : "hexagon";
            r.method = "zono-net";
            r.n = 40;
            double eps = 0.25;
            r.k = net_threshold(eps, 40);
            S = gen_uniform_box(40, rng);
            bool ok = true;
            for (int t = 0; t < 50; ++t) {  // vertex-lemma audit on random intersecting pairs
                Point c1 = {rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
                double s1 = rng.uniform(0.5, 5.0), s2 = rng.uniform(0.2, s1);
                double th = rng.uniform(0.0, 6.283185307179586);
                Point dir = {std::cos(th), std::sin(th)};
                Point c2 = add(c1, scaled(dir, rng.uniform(0.0, 0.999) * (s1 + s2) / gauge(Z, dir)));
                auto w = vertex_in_larger_homothet(Z, {c1, s1}, {c2, s2});
                if (!w.has_value() || !contains(Z, {c1, s1}, *w)) ok = false;
            }
            WeakNet net = zonotope_weak_net(Z, S, eps);
            std::size_t v = Z.vertices.size();
            if (net.points.size() > v * static_cast<std::size_t>(std::ceil(1.0 / eps))) ok = false;
            VerifyReport rep = (trial % 2 == 0)
                                   ? verify_hitting(make_axis_box({1.0, 1.0}), S, net.points, eps)
                                   : verify_hitting(Z, S, net.points, eps, seed ^ 0x5eedu);
            r.outputSize = static_cast<int>(net.points.size());
            r.sizeRatio = static_cast<double>(r.outputSize) * r.k / r.n;
            r.valid = ok && rep.pass;
        } else if (suite == "oracle-compare") {
            r.n = 8 + trial % 9;
            r.k = 4;
            r.body = (trial % 2 == 0) ? "ball" : "axisbox";
            witnessBody = (trial % 2 == 0) ? make_ball(2) : make_axis_box({1.0, 1.0});
            S = gen_uniform_box(r.n, rng, 0.0, 10.0);
            if (trial % 4 < 2) {
                r.method = "cover";
                Cover c = cover_greedy(witnessBody, S, r.k);
                ExactCover ex = exact_min_cover(witnessBody, S, r.k);
                r.outputSize = static_cast<int>(c.homothets.size());
                r.sizeRatio = static_cast<double>(r.outputSize) / ex.size;
                r.valid = cover_valid(witnessBody, S, r.k, c) && ex.size <= r.outputSize &&
                          r.outputSize <= 4 * ex.size;
            } else {
                r.method = "pack";
                Packing p = pack_greedy(witnessBody, S, r.k);
                ExactPacking ex = exact_max_packing(witnessBody, S, r.k);
                r.outputSize = static_cast<int>(p.homothets.size());
                r.sizeRatio = static_cast<double>(ex.size) / r.outputSize;
                r.valid = packing_valid(witnessBody, S, r.k, p) && r.outputSize <= ex.size &&
                          4 * r.outputSize >= ex.size;
            }
        } else {
            throw std::invalid_argument("run_experiment: unknown suite '" + suite + "'");
        }
    } catch (const std::invalid_argument&) {
        throw;  // misuse, not a trial failure
    } catch (const std::exception&) {
        r.valid = false;  // degeneracy or validation throw: the trial failed
    }
    if (!r.valid) out.witness = instance_witness(suite, trial, seed, witnessBody, S);
    return out;
}

}  // namespace detail

inline ExperimentReport run_experiment(const std::string& suite, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("run_experiment: trials < 1");
    // probe the suite name before spawning workers
    detail::run_trial(suite, 0, seed);

    ExperimentReport rep;
    rep.suite = suite;
    rep.trials = trials;
    rep.seed = seed;
    rep.records.resize(trials);
    std::vector<json> witnesses(trials);

    unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
    std::vector<std::future<void>> futs;
    for (unsigned w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&, w]() {
            for (int t = static_cast<int>(w); t < trials; t += static_cast<int>(workers)) {
                auto start = std::chrono::steady_clock::now();
                detail::TrialOutcome out = detail::run_trial(suite, t, seed);
                out.rec.wallTime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                rep.records[t] = std::move(out.rec);
                witnesses[t] = std::move(out.witness);
            }
        }));
    for (auto& f : futs) f.get();

    std::vector<double> ratios;
    for (const ExperimentRecord& r : rep.records) {
        ratios.push_back(r.sizeRatio);
        if (!r.valid && !rep.failed) {
            rep.failed = true;
            rep.witness = witnesses[r.trial];
        }
    }
    std::sort(ratios.begin(), ratios.end());
    rep.minRatio = ratios.front();
    rep.maxRatio = ratios.back();
    std::size_t h = ratios.size() / 2;
    rep.medianRatio = (ratios.size() % 2 == 1) ? ratios[h] : 0.5 * (ratios[h - 1] + ratios[h]);
    return rep;
}

// canonical form: everything except wall times, which vary run to run
inline json report_to_json(const ExperimentReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["failed"] = rep.failed;
    j["aggregate"] = {{"minRatio", rep.minRatio}, {"medianRatio", rep.medianRatio}, {"maxRatio", rep.maxRatio}};
    j["records"] = json::array();
    for (const ExperimentRecord& r : rep.records) {
        json rec;
        rec["trial"] = r.trial;
        rec["n"] = r.n;
        rec["k"] = r.k;
        rec["body"] = r.body;
        rec["method"] = r.method;
        rec["outputSize"] = r.outputSize;
        rec["sizeRatio"] = r.sizeRatio;
        rec["valid"] = r.valid;
        j["records"].push_back(rec);
    }
    j["witness"] = rep.failed ? rep.witness : json();
    return j;
}

inline std::string report_table(const ExperimentReport& rep) {
    std::ostringstream os;
    os << "suite " << rep.suite << "  trials " << rep.trials << "  seed " << rep.seed << "\n";
    os << "trial      n   k      body   method   size     ratio  valid   time[s]\n";
    for (const ExperimentRecord& r : rep.records) {
        char line[160];
        std::snprintf(line, sizeof line, "%5d %6d %3d %9s %8s %6d %9.4f %6s %9.4f\n", r.trial, r.n, r.k,
                      r.body.c_str(), r.method.c_str(), r.outputSize, r.sizeRatio, r.valid ? "yes" : "NO",
                      r.wallTime);
        os << line;
    }
    char agg[160];
    std::snprintf(agg, sizeof agg, "ratio min/median/max = %.4f / %.4f / %.4f  %s\n", rep.minRatio, rep.medianRatio,
                  rep.maxRatio, rep.failed ? "FAILED" : "all certificates pass");
    os << agg;
    return os.str();
}

}  // namespace covpack
