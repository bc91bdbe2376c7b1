#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "covpack/geometry.hpp"
#include "covpack/instance.hpp"
#include "covpack/rng.hpp"
#include "covpack/weaknet.hpp"

using namespace covpack;
using Catch::Approx;

namespace {

const double kPi = 3.141592653589793238462643383279502884;

PointSet three_far_clusters() {
    PointSet S;
    const double offs[3][2] = {{0, 0}, {100, 0}, {0, 100}};
    const double local[4][2] = {{0, 0}, {1, 0}, {0, 1}, {0.5, 0.5}};
    for (auto& o : offs)
        for (auto& l : local) S.push_back({o[0] + l[0], o[1] + l[1]});
    return S;
}

bool hits_net(const ConvexBody& b, const Homothet& h, const PointSet& net) {
    for (const Point& w : net)
        if (contains(b, h, w)) return true;
    return false;
}

void check_witness(const ConvexBody& b, const VerifyReport& rep, const PointSet& S,
                   const PointSet& net, int m) {
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.witnessCount >= m);
    REQUIRE(count_covered(b, rep.witness, S) == rep.witnessCount);
    REQUIRE_FALSE(hits_net(b, rep.witness, net));
}

void check_build(const ConvexBody& b, const PointSet& S, double eps, double af) {
    WeakNet net = build_weak_net(b, S, eps, af);
    int m = net_threshold(eps, S.size());
    REQUIRE(static_cast<int>(net.trace.size()) <= static_cast<int>(S.size()) / m);
    std::size_t removed = 0;
    for (const NetTrace& tr : net.trace) {
        REQUIRE(static_cast<int>(tr.removed.size()) >= m);
        removed += tr.removed.size();
        for (int id : tr.removed) REQUIRE(contains(b, tr.extracted, S[id]));
    }
    REQUIRE(removed <= S.size());
    REQUIRE(S.size() - removed < static_cast<std::size_t>(m));
    std::size_t stamp = hitting_set(b, 1.0 / af).size();
    std::size_t bound = static_cast<std::size_t>(std::ceil(1.0 / eps)) * std::max<std::size_t>(stamp, 1);
    REQUIRE(net.points.size() <= bound);
    VerifyReport rep = verify_hitting(b, S, net);
    INFO("eps=" << eps << " n=" << S.size() << " net=" << net.points.size());
    REQUIRE(rep.pass);
}

} // namespace

TEST_CASE("threshold counts and validation") {
    REQUIRE(net_threshold(0.3, 200) == 60);
    REQUIRE(net_threshold(0.05, 20) == 1);
    REQUIRE(net_threshold(1.0, 7) == 7);
    REQUIRE(net_threshold(0.5, 5) == 3);
    REQUIRE(net_threshold(1.0 / 3.0, 12) == 4);
    REQUIRE(net_threshold(0.2, 1) == 1);
    REQUIRE_THROWS_AS(net_threshold(0.0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(net_threshold(1.5, 5), std::invalid_argument);
}

TEST_CASE("extraction factor tracks gauge asymmetry") {
    REQUIRE(extraction_factor(make_ball(2)) == Approx(2.0));
    REQUIRE(extraction_factor(make_axis_box({2.0, 1.0})) == Approx(2.0));
    REQUIRE(extraction_factor(make_regular_polygon(6)) == Approx(2.0));
    ConvexBody tri = make_regular_polygon(3, 1.0, kPi / 2);
    REQUIRE(extraction_factor(tri) == Approx(4.0).margin(1e-9));
}

TEST_CASE("smallest threshold homothet at a point of the set") {
    ConvexBody ball = make_ball(2);
    PointSet S = {{0, 0}, {1, 0}, {0, 1}, {10, 10}};
    Homothet h = extract_smallest(ball, S, 3);
    REQUIRE(h.center == Point{0, 0});
    REQUIRE(h.scale == Approx(1.0));

    PointSet two = {{0, 0}, {2, 0}};
    Homothet t = extract_smallest(ball, two, 2);
    REQUIRE(t.center == Point{0, 0}); // tie breaks toward the lowest index
    REQUIRE(t.scale == Approx(2.0));

    REQUIRE_THROWS_AS(extract_smallest(ball, S, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(extract_smallest(ball, S, 5), std::invalid_argument);
}

TEST_CASE("far clusters extract one round per cluster") {
    PointSet S = three_far_clusters();
    ConvexBody ball = make_ball(2);

    WeakNet net = build_weak_net(ball, S, 1.0 / 3.0, 2.0);
    REQUIRE(net.trace.size() == 3);
    for (const NetTrace& tr : net.trace) {
        REQUIRE(tr.removed.size() == 4);
        REQUIRE(tr.extracted.scale <= 2.0);
    }
    VerifyReport rep = verify_hitting(ball, S, net);
    REQUIRE(rep.pass);
    REQUIRE(rep.exact);

    WeakNet whole = build_weak_net(ball, S, 1.0, 2.0);
    REQUIRE(whole.trace.size() == 1);
    REQUIRE(verify_hitting(ball, S, whole).pass);

    ConvexBody box = make_axis_box({1.0, 1.0});
    WeakNet bnet = build_weak_net(box, S, 1.0 / 3.0, 2.0);
    REQUIRE(bnet.trace.size() == 3);
    VerifyReport brep = verify_hitting(box, S, bnet);
    REQUIRE(brep.pass);
    REQUIRE(brep.exact);
}

TEST_CASE("the set itself is a net; the empty set is not") {
    Rng rng(11);
    PointSet S = gen_uniform_box(40, rng);
    ConvexBody ball = make_ball(2);
    ConvexBody box = make_axis_box({1.5, 1.0});

    REQUIRE(verify_hitting(ball, S, S, 0.1).pass);
    REQUIRE(verify_hitting(box, S, S, 0.1).pass);

    PointSet empty;
    VerifyReport one = verify_hitting(ball, S, empty, 1.0 / 40.0);
    check_witness(ball, one, S, empty, 1);

    VerifyReport many = verify_hitting(ball, S, empty, 0.25);
    check_witness(ball, many, S, empty, 10);
    REQUIRE(many.witnessCount == 40);

    VerifyReport bx = verify_hitting(box, S, empty, 0.25);
    check_witness(box, bx, S, empty, 10);

    REQUIRE_THROWS_AS(verify_hitting(ball, PointSet{}, empty, 0.5), std::invalid_argument);
}

TEST_CASE("a hole inside the net is detected for disks") {
    PointSet W;
    PointSet S;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            double x = 10.0 * i, y = 10.0 * j;
            double d = std::hypot(x - 30.0, y - 30.0);
            if (d > 12.0) W.push_back({x, y});
        }
    for (std::size_t i = 0; i < 24; ++i) S.push_back(W[i * W.size() / 24]);
    Rng rng(5);
    for (int i = 0; i < 6; ++i) {
        double a = rng.uniform(0, 2 * kPi), r = rng.uniform(0, 1.0);
        S.push_back({30.0 + r * std::cos(a), 30.0 + r * std::sin(a)});
    }
    ConvexBody ball = make_ball(2);
    VerifyReport rep = verify_hitting(ball, S, W, 0.2); // m = 6
    REQUIRE(rep.exact);
    check_witness(ball, rep, S, W, 6);
}

TEST_CASE("a cluster beyond the net's hull is detected for disks") {
    PointSet W;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) W.push_back({40.0 + 10.0 * i, 40.0 + 10.0 * j});
    PointSet S(W.begin(), W.begin() + 24);
    Rng rng(9);
    for (int i = 0; i < 6; ++i) S.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
    ConvexBody ball = make_ball(2);
    VerifyReport rep = verify_hitting(ball, S, W, 0.2); // m = 6
    REQUIRE(rep.exact);
    check_witness(ball, rep, S, W, 6);
}

TEST_CASE("a hole inside the net is detected for boxes") {
    PointSet W;
    PointSet S;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            double x = 10.0 * i, y = 10.0 * j;
            if (std::hypot(x - 30.0, y - 30.0) > 12.0) W.push_back({x, y});
        }
    for (std::size_t i = 0; i < 24; ++i) S.push_back(W[i * W.size() / 24]);
    Rng rng(7);
    for (int i = 0; i < 6; ++i)
        S.push_back({30.0 + rng.uniform(-1, 1), 30.0 + rng.uniform(-1, 1)});
    ConvexBody box = make_axis_box({2.0, 1.0});
    VerifyReport rep = verify_hitting(box, S, W, 0.2); // m = 6
    REQUIRE(rep.exact);
    check_witness(box, rep, S, W, 6);
}

TEST_CASE("built nets verify on random instances") {
    ConvexBody ball = make_ball(2);
    ConvexBody box = make_axis_box({1.5, 1.0});
    Rng rng(42);

    check_build(ball, gen_uniform_box(50, rng), 0.3, 2.0);
    check_build(ball, gen_uniform_box(60, rng), 0.15, 2.0);
    check_build(ball, gen_uniform_box(40, rng), 0.08, 2.0);
    check_build(box, gen_uniform_box(50, rng), 0.3, 2.0);
    check_build(box, gen_uniform_box(40, rng), 0.12, 2.0);
    check_build(ball, gen_clusters(5, 8, 1.0, 60.0, rng), 0.2, 2.0);
    check_build(box, gen_grid(6, 0.2, rng), 0.25, 2.0);
    check_build(ball, gen_annulus(45, rng, 20.0, 40.0), 0.2, 2.0);
}

TEST_CASE("asymmetric and polygonal bodies use the randomized check") {
    Rng rng(3);
    PointSet S = gen_uniform_box(30, rng);
    ConvexBody hex = make_regular_polygon(6);
    ConvexBody tri = make_regular_polygon(3, 1.0, kPi / 2);

    WeakNet hnet = build_weak_net(hex, S, 0.25, 2.0);
    VerifyReport hrep = verify_hitting(hex, S, hnet);
    REQUIRE_FALSE(hrep.exact);
    REQUIRE(hrep.pass);

    REQUIRE_THROWS_AS(build_weak_net(tri, S, 0.25, 2.0), std::invalid_argument);
    REQUIRE_THROWS_AS(build_weak_net(tri, S, 0.25, 3.9), std::invalid_argument);
    WeakNet tnet = build_weak_net(tri, S, 0.25, 4.0);
    VerifyReport trep = verify_hitting(tri, S, tnet);
    REQUIRE_FALSE(trep.exact);
    REQUIRE(trep.pass);

    // a larger factor only densifies the stamp
    REQUIRE(verify_hitting(tri, S, build_weak_net(tri, S, 0.25, 6.0)).pass);
}

TEST_CASE("randomized check finds a planted violation") {
    PointSet S;
    Rng rng(17);
    for (int i = 0; i < 8; ++i) S.push_back({rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)});
    for (int i = 0; i < 20; ++i) S.push_back({rng.uniform(30, 60), rng.uniform(30, 60)});
    PointSet net;
    for (int i = 0; i < 12; ++i) net.push_back({rng.uniform(30, 60), rng.uniform(30, 60)});
    ConvexBody hex = make_regular_polygon(6);
    VerifyReport rep = verify_hitting(hex, S, net, 0.25); // m = 7
    REQUIRE_FALSE(rep.exact);
    check_witness(hex, rep, S, net, 7);
}

TEST_CASE("nets stay valid at coarser thresholds") {
    Rng rng(23);
    PointSet S = gen_uniform_box(50, rng);
    ConvexBody ball = make_ball(2);
    WeakNet net = build_weak_net(ball, S, 0.1, 2.0);
    for (double eps : {0.1, 0.2, 0.5})
        REQUIRE(verify_hitting(ball, S, net.points, eps).pass);
}

TEST_CASE("construction is deterministic and validated") {
    Rng a(77), b(77);
    PointSet S1 = gen_uniform_box(35, a), S2 = gen_uniform_box(35, b);
    ConvexBody ball = make_ball(2);
    WeakNet n1 = build_weak_net(ball, S1, 0.2, 2.0);
    WeakNet n2 = build_weak_net(ball, S2, 0.2, 2.0);
    REQUIRE(n1.points == n2.points);
    REQUIRE(n1.trace.size() == n2.trace.size());

    REQUIRE_THROWS_AS(build_weak_net(ball, PointSet{}, 0.5, 2.0), std::invalid_argument);
    REQUIRE_THROWS_AS(build_weak_net(ball, S1, 0.0, 2.0), std::invalid_argument);
    REQUIRE_THROWS_AS(build_weak_net(ball, S1, 0.5, 1.9), std::invalid_argument);
    REQUIRE_THROWS_AS(build_weak_net(make_ball(3), S1, 0.5, 2.0), std::invalid_argument);
}
