// Acceptance harness: runs every release gate in one binary, prints one line
// per criterion, and exits nonzero if any gate fails. All tolerances and
// runtime budgets are pinned here; a gate that exceeds its budget fails even
// if its assertions hold.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "covpack/cover.hpp"
#include "covpack/delaunay.hpp"
#include "covpack/geometry.hpp"
#include "covpack/graph.hpp"
#include "covpack/instance.hpp"
#include "covpack/matching.hpp"
#include "covpack/oracle.hpp"
#include "covpack/pack.hpp"
#include "covpack/rng.hpp"
#include "covpack/weaknet.hpp"
#include "covpack/zonotope.hpp"

using namespace covpack;

namespace {

struct GateResult {
    bool pass = true;
    std::string note;
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

void fail(GateResult& r, const std::string& why) {
    if (r.pass) r.note = why;
    r.pass = false;
}

// criterion 1: greedy covers and packings are valid and sit on the correct
// side of the pigeonhole bounds ceil(n/k) and floor(n/k); exact integers,
// zero tolerance.
GateResult gate_pigeonhole() {
    GateResult r;
    ConvexBody ball = make_ball(2);
    static const int ks[4] = {2, 5, 10, 50};
    for (int i = 0; i < 1000 && r.pass; ++i) {
        Rng rng = Rng(1401).fork(i);
        PointSet S;
        switch (i % 4) {
            case 0: S = gen_uniform_box(20 + 15 * (i % 9), rng); break;
            case 1: S = gen_clusters(2 + i % 5, 3 + i % 6, 0.5, 40.0, rng); break;
            case 2: S = gen_grid(4 + i % 5, 0.3, rng); break;
            default: S = gen_annulus(25 + 10 * (i % 8), rng); break;
        }
        int n = static_cast<int>(S.size());
        int k = std::min(n, ks[(i / 4) % 4]);
        Cover c = cover_greedy(ball, S, k);
        Packing p = pack_greedy(ball, S, k);
        if (!cover_valid(ball, S, k, c))
            fail(r, fmt("invalid cover at instance %d", i));
        else if (static_cast<int>(c.homothets.size()) < (n + k - 1) / k)
            fail(r, fmt("cover below ceil(n/k) at instance %d", i));
        if (!packing_valid(ball, S, k, p))
            fail(r, fmt("invalid packing at instance %d", i));
        else if (static_cast<int>(p.homothets.size()) > n / k)
            fail(r, fmt("packing above floor(n/k) at instance %d", i));
    }
    if (r.pass) r.note = "1000 instances across four generators, integer bounds, zero tolerance";
    return r;
}

// criterion 2: the point-restricted k-ball is never more than twice the
// unrestricted optimum (tolerance 1e-7) and never below it (1e-9).
GateResult gate_kball() {
    GateResult r;
    double worst = 1.0;
    for (int i = 0; i < 500 && r.pass; ++i) {
        Rng rng = Rng(1402).fork(i);
        int n = 10 + static_cast<int>(rng.below(91));
        int k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        PointSet S = gen_uniform_box(n, rng);
        Homothet a = approx_k_ball(S, k);
        Homothet e = exact_k_ball(S, k);
        if (a.scale + 1e-9 < e.scale)
            fail(r, fmt("restricted ball beats the optimum at instance %d", i));
        if (a.scale > 2.0 * e.scale + 1e-7)
            fail(r, fmt("factor-2 bound violated at instance %d (%.6f vs %.6f)", i, a.scale, e.scale));
        if (e.scale > 1e-12) worst = std::max(worst, a.scale / e.scale);
    }
    if (r.pass) r.note = fmt("500 instances (n <= 100), worst ratio %.4f of allowed 2", worst);
    return r;
}

PointSet make_big(int gi, int target, Rng& rng) {
    switch (gi) {
        case 0: return gen_uniform_box(target, rng);
        case 1: return gen_clusters(std::max(2, target / 50), 50, 0.5, 50.0, rng);
        case 2: return gen_grid(static_cast<int>(std::floor(std::sqrt(double(target)))), 0.3, rng);
        default: return gen_annulus(target, rng);
    }
}

// criterion 3: cover and packing validity holds at scale: n up to 5000,
// k in {2, 5, 10, 50}, all four generators, both cover constructions plus
// the packing. Net-based covers use smaller n for mid k where extraction
// rounds dominate.
GateResult gate_validity_scale() {
    GateResult r;
    ConvexBody ball = make_ball(2);
    static const int ks[4] = {2, 5, 10, 50};
    int runs = 0, maxN = 0;
    for (int ki = 0; ki < 4 && r.pass; ++ki) {
        int k = ks[ki];
        int netN = k == 2 ? 5000 : k == 5 ? 1000 : k == 10 ? 2000 : 3000;
        for (int gi = 0; gi < 4 && r.pass; ++gi) {
            Rng rng = Rng(1403).fork(ki * 8 + gi);
            PointSet S = make_big(gi, 5000, rng);
            maxN = std::max(maxN, static_cast<int>(S.size()));
            if (!cover_valid(ball, S, k, cover_greedy(ball, S, k)))
                fail(r, fmt("greedy cover invalid (gen %d, k %d)", gi, k));
            if (!packing_valid(ball, S, k, pack_greedy(ball, S, k)))
                fail(r, fmt("packing invalid (gen %d, k %d)", gi, k));
            Rng rng2 = Rng(1403).fork(ki * 8 + gi + 4);
            PointSet Sn = make_big(gi, netN, rng2);
            if (!cover_valid(ball, Sn, k, cover_net_based(Sn, k)))
                fail(r, fmt("net-based cover invalid (gen %d, k %d)", gi, k));
            runs += 3;
        }
    }
    if (r.pass) r.note = fmt("%d runs, n up to %d, k in {2,5,10,50}, 100%% valid", runs, maxN);
    return r;
}

// criterion 4: on well-separated clusters of exactly k points the packing
// finds one homothet per cluster (exact count) and both covers stay within
// [m, 2m].
GateResult gate_clusters() {
    GateResult r;
    ConvexBody ball = make_ball(2);
    static const int ks[3] = {2, 5, 10};
    for (int i = 0; i < 20 && r.pass; ++i) {
        Rng rng = Rng(1404).fork(i);
        int m = 3 + i % 8;
        int k = ks[i % 3];
        PointSet S = gen_clusters(m, k, 0.25, 100.0, rng);
        Packing p = pack_greedy(ball, S, k);
        if (!packing_valid(ball, S, k, p) || static_cast<int>(p.homothets.size()) != m)
            fail(r, fmt("packing != m at instance %d (got %zu, want %d)", i, p.homothets.size(), m));
        Cover cg = cover_greedy(ball, S, k);
        int cgs = static_cast<int>(cg.homothets.size());
        if (!cover_valid(ball, S, k, cg) || cgs < m || cgs > 2 * m)
            fail(r, fmt("greedy cover outside [m,2m] at instance %d (got %d, m %d)", i, cgs, m));
        Cover cn = cover_net_based(S, k);
        int cns = static_cast<int>(cn.homothets.size());
        if (!cover_valid(ball, S, k, cn) || cns < m || cns > 2 * m)
            fail(r, fmt("net cover outside [m,2m] at instance %d (got %d, m %d)", i, cns, m));
    }
    if (r.pass) r.note = "20 cluster instances, packing exact, covers within [m, 2m]";
    return r;
}

// criterion 5: weak nets for disks and axis squares pass the exact (non
// sampled) verifier, and net size never exceeds ceil(1/eps) times the
// half-scale stamp size.
GateResult gate_nets() {
    GateResult r;
    ConvexBody disk = make_ball(2);
    ConvexBody square = make_axis_box({1.0, 1.0});
    int stamp[2] = {static_cast<int>(hitting_set(disk, 0.5).size()),
                    static_cast<int>(hitting_set(square, 0.5).size())};
    static const double epss[3] = {0.05, 0.1, 0.3};
    int worstSize = 0;
    for (int i = 0; i < 200 && r.pass; ++i) {
        Rng rng = Rng(1405).fork(i);
        const ConvexBody& body = (i % 2) ? square : disk;
        double eps = epss[i % 3];
        int n = (i % 10 == 9) ? 200 : 30 + 20 * (i % 6);
        PointSet S = gen_uniform_box(n, rng);
        WeakNet net = build_weak_net(body, S, eps, 2.0);
        int cap = static_cast<int>(std::ceil(1.0 / eps - 1e-9)) * stamp[i % 2];
        worstSize = std::max(worstSize, static_cast<int>(net.points.size()));
        if (static_cast<int>(net.points.size()) > cap)
            fail(r, fmt("net size %zu over cap %d at instance %d", net.points.size(), cap, i));
        VerifyReport rep = verify_hitting(body, S, net);
        if (!rep.exact)
            fail(r, fmt("verifier fell back to sampling at instance %d", i));
        else if (!rep.pass)
            fail(r, fmt("heavy homothet missed the net at instance %d", i));
    }
    if (r.pass) r.note = fmt("200 disk/square instances exact-verified, max net size %d", worstSize);
    return r;
}

// criterion 6: whenever two homothets of a centrally symmetric polygon
// intersect, the larger one contains a vertex of the smaller; 10^4
// constructed intersecting pairs per body, zero failures.
GateResult gate_vertex_lemma() {
    GateResult r;
    std::vector<ConvexBody> bodies;
    bodies.push_back(make_sym_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
    bodies.push_back(make_regular_polygon(6));
    bodies.push_back(make_regular_polygon(8));
    static const char* names[3] = {"square", "hexagon", "octagon"};
    for (int b = 0; b < 3 && r.pass; ++b) {
        const ConvexBody& Z = bodies[b];
        Rng rng = Rng(1406).fork(b);
        for (int i = 0; i < 10000 && r.pass; ++i) {
            Homothet h1{{rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)},
                        rng.uniform(0.5, 5.0)};
            double ang = rng.uniform(0.0, 6.283185307179586);
            Point dir{std::cos(ang), std::sin(ang)};
            Homothet h2;
            h2.scale = rng.uniform(0.3, h1.scale);
            double reach = (h1.scale + h2.scale) / gauge(Z, dir);
            h2.center = add(h1.center, scaled(dir, rng.uniform(0.0, 0.999) * reach));
            auto w = vertex_in_larger_homothet(Z, h1, h2);
            if (!w) {
                fail(r, fmt("no witness for %s pair %d", names[b], i));
                break;
            }
            if (!contains(Z, h1, *w))
                fail(r, fmt("witness outside larger homothet (%s pair %d)", names[b], i));
            bool isVertex = false;
            for (const Point& v : Z.vertices)
                isVertex = isVertex ||
                           dist(*w, add(h2.center, scaled(v, h2.scale))) <= 1e-9 * (1.0 + h2.scale);
            if (!isVertex)
                fail(r, fmt("witness is not a vertex of the smaller homothet (%s pair %d)", names[b], i));
        }
    }
    if (r.pass) r.note = "30000 intersecting pairs (square, hexagon, octagon), zero failures";
    return r;
}

// criterion 7: zonotope nets built from exact minimal extractions stay
// within v/eps points and still hit every threshold homothet; square nets
// are checked by the exact verifier, hexagon nets by sampling.
GateResult gate_zono_nets() {
    GateResult r;
    ConvexBody square = make_sym_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    ConvexBody hex = make_regular_polygon(6);
    ConvexBody box = make_axis_box({1.0, 1.0});
    static const double epss[3] = {0.5, 0.25, 0.2};
    for (int i = 0; i < 100 && r.pass; ++i) {
        bool isSquare = i < 50;
        const ConvexBody& Z = isSquare ? square : hex;
        int v = static_cast<int>(Z.vertices.size());
        Rng rng = Rng(1407).fork(i);
        int n = isSquare ? 10 + static_cast<int>(rng.below(41))
                         : 8 + static_cast<int>(rng.below(17));
        double eps = epss[i % 3];
        PointSet S = gen_uniform_box(n, rng);
        WeakNet net = zonotope_weak_net(Z, S, eps);
        int cap = static_cast<int>(std::llround(v / eps));
        if (static_cast<int>(net.points.size()) > cap)
            fail(r, fmt("net size %zu over v/eps = %d at instance %d", net.points.size(), cap, i));
        if (isSquare) {
            VerifyReport rep = verify_hitting(box, S, net.points, eps);
            if (!rep.exact || !rep.pass)
                fail(r, fmt("square net failed exact verification at instance %d", i));
        } else {
            VerifyReport rep = verify_hitting(hex, S, net.points, eps, 0x5eedULL + i, 20000);
            if (!rep.pass)
                fail(r, fmt("hexagon net failed sampled verification at instance %d", i));
        }
    }
    if (r.pass) r.note = "100 square/hexagon instances, size <= v/eps, all verified";
    return r;
}

// criterion 8: disk pencil graphs on 100 random points are triangulations
// and satisfy the two-triangle angle bound at alpha = 1.
GateResult gate_angles() {
    GateResult r;
    ConvexBody disk = make_ball(2);
    for (int i = 0; i < 100 && r.pass; ++i) {
        Rng rng = Rng(1408).fork(i);
        PointSet S = gen_uniform_box(100, rng);
        DelaunayGraph dg = delaunay_graph(disk, S);
        if (dg.approximate || !is_triangulation(dg.graph, S))
            fail(r, fmt("graph is not an exact triangulation at instance %d", i));
        AngleReport rep = check_angle_property(disk, S, 1.0);
        if (!rep.pass)
            fail(r, fmt("angle bound violated at instance %d (%d violations)", i, rep.violations));
    }
    if (r.pass) r.note = "100 disk instances of 100 points, alpha = 1, zero violations";
    return r;
}

// criterion 9: disk pencil graphs always carry a near-perfect matching:
// blossom finds floor(n/2) pairs and the induced 2-cover uses exactly
// ceil(n/2) homothets.
GateResult gate_matching_delaunay() {
    GateResult r;
    ConvexBody disk = make_ball(2);
    for (int i = 0; i < 100 && r.pass; ++i) {
        Rng rng = Rng(1409).fork(i);
        int n = 20 + static_cast<int>(rng.below(181));
        PointSet S = gen_uniform_box(n, rng);
        DelaunayGraph dg = delaunay_graph(disk, S);
        Matching m = max_matching(dg.graph);
        if (m.size != n / 2) {
            fail(r, fmt("matching %d != floor(n/2) = %d at instance %d", m.size, n / 2, i));
            continue;
        }
        Cover pairs = cover_pairs(disk, S);
        if (!cover_valid(disk, S, 2, pairs))
            fail(r, fmt("pair cover invalid at instance %d", i));
        else if (static_cast<int>(pairs.homothets.size()) != (n + 1) / 2)
            fail(r, fmt("pair cover %zu != ceil(n/2) = %d at instance %d",
                        pairs.homothets.size(), (n + 1) / 2, i));
    }
    if (r.pass) r.note = "100 disk instances (n <= 200), matching floor(n/2), cover ceil(n/2)";
    return r;
}

// criterion 10: blossom agrees with the exhaustive matcher on 500 random
// graphs with up to 12 vertices.
GateResult gate_blossom_brute() {
    GateResult r;
    for (int i = 0; i < 500 && r.pass; ++i) {
        Rng rng = Rng(1410).fork(i);
        int n = 2 + static_cast<int>(rng.below(11));
        double p = 0.15 + 0.1 * (i % 8);
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.uniform() < p) edges.emplace_back(a, b);
        Graph g = make_graph(n, edges);
        int got = max_matching(g).size;
        int want = max_matching_bruteforce(g);
        if (got != want)
            fail(r, fmt("blossom %d != brute force %d at instance %d (n %d)", got, want, i, n));
    }
    if (r.pass) r.note = "500 random graphs (n <= 12), blossom matches brute force";
    return r;
}

// criterion 11: the exhaustive maximum independent set of a disk pencil
// graph stays strictly below n/2 - 1/2 on odd instances up to n = 17.
GateResult gate_mis() {
    GateResult r;
    ConvexBody disk = make_ball(2);
    for (int i = 0; i < 100 && r.pass; ++i) {
        Rng rng = Rng(1411).fork(i);
        int n = 9 + 2 * static_cast<int>(rng.below(5));
        PointSet S = gen_uniform_box(n, rng);
        DelaunayGraph dg = delaunay_graph(disk, S);
        int mis = max_independent_bruteforce(dg.graph);
        if (!(mis < 0.5 * n - 0.5 + 1e-9))
            fail(r, fmt("independent set %d reaches n/2 - 1/2 at instance %d (n %d)", mis, i, n));
    }
    if (r.pass) r.note = "100 odd instances (n <= 17), independent sets below n/2 - 1/2";
    return r;
}

// criterion 12: greedy stays within factor 4 of the exact oracles on both
// sides (cover above, packing below) for n <= 16, k = 4, disks and squares.
GateResult gate_oracle_ratio() {
    GateResult r;
    double worstCover = 1.0, worstPack = 1.0;
    for (int i = 0; i < 200 && r.pass; ++i) {
        Rng rng = Rng(1412).fork(i);
        int n = 8 + static_cast<int>(rng.below(9));
        int k = 4;
        ConvexBody body = (i % 2) ? make_axis_box({1.0, 1.0}) : make_ball(2);
        PointSet S = gen_uniform_box(n, rng);
        Cover c = cover_greedy(body, S, k);
        ExactCover ec = exact_min_cover(body, S, k);
        int cs = static_cast<int>(c.homothets.size());
        if (!cover_valid(body, S, k, c) || cs < ec.size || cs > 4 * ec.size)
            fail(r, fmt("cover %d vs exact %d out of [1,4]x at instance %d", cs, ec.size, i));
        else
            worstCover = std::max(worstCover, double(cs) / ec.size);
        Packing p = pack_greedy(body, S, k);
        ExactPacking ep = exact_max_packing(body, S, k);
        int ps = static_cast<int>(p.homothets.size());
        if (!packing_valid(body, S, k, p) || ps > ep.size || 4 * ps < ep.size)
            fail(r, fmt("packing %d vs exact %d out of [1/4,1]x at instance %d", ps, ep.size, i));
        else if (ps > 0)
            worstPack = std::max(worstPack, double(ep.size) / ps);
    }
    if (r.pass)
        r.note = fmt("200 instances (n <= 16, k = 4), worst cover %.3f, worst packing gap %.3f (bound 4)",
                     worstCover, worstPack);
    return r;
}

// criterion 13: pair covers on a strictly convex polygon (regular 16-gon,
// approximate pencils) meet the matching-based size bound
// n - ceil((n - 8) / 3).
GateResult gate_polygon_pairs() {
    GateResult r;
    ConvexBody gon = make_regular_polygon(16);
    for (int i = 0; i < 50 && r.pass; ++i) {
        Rng rng = Rng(1413).fork(i);
        int n = 20 + static_cast<int>(rng.below(41));
        PointSet S = gen_uniform_box(n, rng);
        Cover c = cover_pairs(gon, S);
        if (!cover_valid(gon, S, 2, c)) {
            fail(r, fmt("pair cover invalid at instance %d", i));
            continue;
        }
        int cap = n - (n - 8 + 2) / 3;
        if (static_cast<int>(c.homothets.size()) > cap)
            fail(r, fmt("pair cover %zu over bound %d at instance %d (n %d)",
                        c.homothets.size(), cap, i, n));
    }
    if (r.pass) r.note = "50 instances on a regular 16-gon, size <= n - ceil((n-8)/3)";
    return r;
}

// criterion 14: median size ratios on the reference workload (41 uniform
// disk instances, n = 200, k = 10) match the frozen baselines within 10%.
GateResult gate_baselines() {
    GateResult r;
    const double baseCover = 2.2;
    const double basePack = 0.6;
    ConvexBody ball = make_ball(2);
    std::vector<double> cr, pr;
    for (int i = 0; i < 41; ++i) {
        Rng rng = Rng(1414).fork(i);
        PointSet S = gen_uniform_box(200, rng);
        cr.push_back(cover_size_ratio(S.size(), 10, cover_greedy(ball, S, 10)));
        pr.push_back(packing_size_ratio(S.size(), 10, pack_greedy(ball, S, 10)));
    }
    std::sort(cr.begin(), cr.end());
    std::sort(pr.begin(), pr.end());
    double mc = cr[20], mp = pr[20];
    if (std::abs(mc - baseCover) > 0.10 * baseCover)
        fail(r, fmt("cover median %.4f drifted from baseline %.2f", mc, baseCover));
    if (std::abs(mp - basePack) > 0.10 * basePack)
        fail(r, fmt("packing median %.4f drifted from baseline %.2f", mp, basePack));
    if (r.pass)
        r.note = fmt("medians %.3f / %.3f vs frozen 2.20 / 0.60 (tolerance 10%%)", mc, mp);
    return r;
}

struct Gate {
    int id;
    const char* name;
    double budgetSeconds;
    GateResult (*run)();
};

} // namespace

int main() {
    const Gate gates[] = {
        {1, "pigeonhole bounds on covers and packings", 60.0, gate_pigeonhole},
        {2, "restricted k-ball within twice the optimum", 60.0, gate_kball},
        {3, "validity at scale across generators", 300.0, gate_validity_scale},
        {4, "separated clusters solved exactly", 10.0, gate_clusters},
        {5, "weak nets pass the exact verifier", 120.0, gate_nets},
        {6, "zonotope vertex lemma", 30.0, gate_vertex_lemma},
        {7, "zonotope nets within v/eps", 60.0, gate_zono_nets},
        {8, "angle bound on disk triangulations", 60.0, gate_angles},
        {9, "near-perfect matchings and pair covers", 120.0, gate_matching_delaunay},
        {10, "blossom agrees with brute force", 60.0, gate_blossom_brute},
        {11, "independent sets stay below half", 60.0, gate_mis},
        {12, "greedy within factor four of exact oracles", 300.0, gate_oracle_ratio},
        {13, "pair covers on a strictly convex polygon", 120.0, gate_polygon_pairs},
        {14, "size-ratio medians match frozen baselines", 60.0, gate_baselines},
    };
    int failures = 0;
    double total = 0.0;
    for (const Gate& g : gates) {
        auto t0 = std::chrono::steady_clock::now();
        GateResult res;
        try {
            res = g.run();
        } catch (const std::exception& e) {
            res.pass = false;
            res.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += secs;
        bool within = secs <= g.budgetSeconds;
        bool ok = res.pass && within;
        if (!ok) ++failures;
        std::printf("criterion %2d %s  %s (%.1fs%s)%s%s\n", g.id, ok ? "PASS" : "FAIL", g.name,
                    secs, within ? "" : ", over budget",
                    res.note.empty() ? "" : " -- ", res.note.c_str());
        std::fflush(stdout);
    }
    if (failures)
        std::printf("%d of 14 criteria failing (%.1fs total)\n", failures, total);
    else
        std::printf("all 14 criteria pass (%.1fs total)\n", total);
    return failures ? 1 : 0;
}
