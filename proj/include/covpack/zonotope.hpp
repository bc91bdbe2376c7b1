#pragma once

// Zonotope toolkit for 2-D centrally symmetric polygons: the vertex-witness
// lemma for intersecting homothets, weak nets of size v/epsilon built from
// exact smallest m-enclosing homothets (LP-basis enumeration), and the
// 2v-region neighborhood cover.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covpack/geometry.hpp"
#include "covpack/weaknet.hpp"

namespace covpack {

inline void require_zonotope(const ConvexBody& Z) {
    if (Z.kind != BodyKind::SymPolygon || Z.dim != 2)
        throw std::invalid_argument("zonotope: 2-D centrally symmetric polygon required");
}

// for intersecting homothets with h1 at least as large, some vertex of h2
// lands inside h1; returns it, or nothing when the homothets are disjoint
inline std::optional<Point> vertex_in_larger_homothet(const ConvexBody& Z, const Homothet& h1, const Homothet& h2) {
    require_zonotope(Z);
    if (h1.scale < h2.scale) throw std::invalid_argument("vertex_in_larger_homothet: h1 must not be smaller");
    if (!intersects(Z, h1, h2)) return std::nullopt;
    for (const Point& v : Z.vertices) {
        Point p = add(h2.center, scaled(v, h2.scale));
        if (contains(Z, h1, p)) return p;
    }
    return std::nullopt;  // reachable only on tolerance knife edges
}

namespace detail {

inline bool solve3(double a[3][4], double out[3]) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-13) return false;
        std::swap(a[piv], a[col]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    for (int r = 0; r < 3; ++r) out[r] = a[r][3] / a[r][r];
    return true;
}

// true iff the origin lies in the convex hull of the three normals (largest
// circular gap at most pi), the optimality condition for an enclosing-LP basis
inline bool spans_positively(const Point& u1, const Point& u2, const Point& u3) {
    double a[3] = {std::atan2(u1[1], u1[0]), std::atan2(u2[1], u2[0]), std::atan2(u3[1], u3[0])};
    std::sort(a, a + 3);
    double gap = std::max({a[1] - a[0], a[2] - a[1], a[0] + 6.283185307179586 - a[2]});
    return gap <= 3.141592653589793 + 1e-9;
}

// exact smallest homothet of Z covering at least m points of S: seed with the
// center-at-point 2-approximation, then enumerate LP bases (diametral pairs,
// vertex-pinned pairs, three boundary pins) below the incumbent scale
inline Homothet smallest_m_enclosing(const ConvexBody& Z, const PointSet& S, int m) {
    int n = static_cast<int>(S.size());
    if (m < 1 || m > n) throw std::invalid_argument("smallest_m_enclosing: threshold out of range");
    if (m == 1) return {S[0], 0.0};
    std::size_t v = Z.vertices.size();

    Homothet best = extract_smallest(Z, S, m);
    auto consider = [&](double cx, double cy, double lam) {
        if (!(lam >= 0.0) || lam >= best.scale) return;
        Point c = {cx, cy};
        int cnt = 0;
        for (int i = 0; i < n; ++i) {
            if (gauge_between(Z, c, S[i]) <= lam + kTol * (1.0 + lam)) ++cnt;
            if (cnt + (n - 1 - i) < m) return;  // cannot reach m any more
        }
        if (cnt >= m) best = {c, lam};
    };

    // pairwise half-gauges drive both the diametral stage and the triple prune
    std::vector<std::vector<double>> halfG(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double g = 0.5 * gauge(Z, sub(S[j], S[i]));
            halfG[i][j] = halfG[j][i] = g;
            consider((S[i][0] + S[j][0]) / 2, (S[i][1] + S[j][1]) / 2, g);
        }

    // vertex-pinned pairs: S[i] = c + lam * vert, S[j] on edge f
    std::vector<std::array<int, 2>> vePairs;
    for (std::size_t w = 0; w < v; ++w) {
        const Point& nPrev = Z.edgeNormal[(w + v - 1) % v];
        const Point& nNext = Z.edgeNormal[w];
        for (std::size_t f = 0; f < v; ++f)
            if (spans_positively(nPrev, nNext, Z.edgeNormal[f])) vePairs.push_back({static_cast<int>(w), static_cast<int>(f)});
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || halfG[i][j] >= best.scale) continue;
            for (const auto& [w, f] : vePairs) {
                double a[3][4] = {{1, 0, Z.vertices[w][0], S[i][0]},
                                  {0, 1, Z.vertices[w][1], S[i][1]},
                                  {Z.edgeNormal[f][0], Z.edgeNormal[f][1], Z.edgeOffset[f],
                                   Z.edgeNormal[f][0] * S[j][0] + Z.edgeNormal[f][1] * S[j][1]}};
                double x[3];
                if (solve3(a, x)) consider(x[0], x[1], x[2]);
            }
        }

    // three points on three edges
    std::vector<std::array<int, 3>> triEdges;
    for (std::size_t e = 0; e < v; ++e)
        for (std::size_t f = 0; f < v; ++f)
            for (std::size_t g = 0; g < v; ++g)
                if (spans_positively(Z.edgeNormal[e], Z.edgeNormal[f], Z.edgeNormal[g]))
                    triEdges.push_back({static_cast<int>(e), static_cast<int>(f), static_cast<int>(g)});
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (halfG[i][j] >= best.scale) continue;
            for (int l = j + 1; l < n; ++l) {
                if (halfG[i][l] >= best.scale || halfG[j][l] >= best.scale) continue;
                int pts[3] = {i, j, l};
                for (const auto& ef : triEdges) {
                    double a[3][4];
                    for (int r = 0; r < 3; ++r) {
                        const Point& nr = Z.edgeNormal[ef[r]];
                        a[r][0] = nr[0];
                        a[r][1] = nr[1];
                        a[r][2] = Z.edgeOffset[ef[r]];
                        a[r][3] = nr[0] * S[pts[r]][0] + nr[1] * S[pts[r]][1];
                    }
                    double x[3];
                    if (solve3(a, x)) consider(x[0], x[1], x[2]);
                }
            }
        }
    }
    return best;
}

}  // namespace detail

// weak epsilon-net of at most v * ceil(1/epsilon) points: repeatedly extract
// the exact smallest threshold homothet and keep only its v vertices
inline WeakNet zonotope_weak_net(const ConvexBody& Z, const PointSet& S, double epsilon) {
    require_zonotope(Z);
    if (S.empty()) throw std::invalid_argument("zonotope_weak_net: empty point set");
    for (const Point& p : S)
        if (static_cast<int>(p.size()) != 2) throw std::invalid_argument("zonotope_weak_net: point dimension mismatch");
    int m = net_threshold(epsilon, S.size());

    WeakNet net;
    net.epsilon = epsilon;
    net.approxFactor = 1.0;  // extraction is exact
    std::vector<int> alive(S.size());
    std::iota(alive.begin(), alive.end(), 0);
    while (static_cast<int>(alive.size()) >= m) {
        Homothet h;
        if (m == 1) {
            h = {S[alive.front()], 0.0};
        } else {
            PointSet rem(alive.size());
            for (std::size_t i = 0; i < alive.size(); ++i) rem[i] = S[alive[i]];
            h = detail::smallest_m_enclosing(Z, rem, m);
        }
        NetTrace tr;
        tr.extracted = h;
        std::vector<int> keep;
        for (int id : alive) {
            if (contains(Z, h, S[id]))
                tr.removed.push_back(id);
            else
                keep.push_back(id);
        }
        if (h.scale <= 0.0)
            net.points.push_back(h.center);
        else
            for (const Point& vert : Z.vertices) net.points.push_back(add(h.center, scaled(vert, h.scale)));
        net.trace.push_back(std::move(tr));
        alive.swap(keep);
    }
    return net;
}

// greedy representative per facet-half region: directions from `common` are
// split by their tight edge and the nearer edge endpoint (ties to the lower
// region index), and each region keeps its gauge-farthest center
inline std::vector<int> zonotope_neighborhood_cover(const ConvexBody& Z, const PointSet& centers,
                                                    const std::vector<double>& scales, const Point& common) {
    require_zonotope(Z);
    if (centers.empty()) throw std::invalid_argument("zonotope_neighborhood_cover: no centers");
    if (centers.size() != scales.size())
        throw std::invalid_argument("zonotope_neighborhood_cover: centers/scales size mismatch");
    for (std::size_t i = 0; i < centers.size(); ++i)
        if (!contains(Z, {centers[i], scales[i]}, common))
            throw std::invalid_argument("zonotope_neighborhood_cover: homothet " + std::to_string(i) +
                                        " misses the common point");
    std::size_t v = Z.vertices.size();

    auto region_of = [&](const Point& d) -> int {
        int e = 0;
        double bestT = (Z.edgeNormal[0][0] * d[0] + Z.edgeNormal[0][1] * d[1]) / Z.edgeOffset[0];
        for (std::size_t f = 1; f < v; ++f) {
            double t = (Z.edgeNormal[f][0] * d[0] + Z.edgeNormal[f][1] * d[1]) / Z.edgeOffset[f];
            if (t > bestT + 1e-12 * (1.0 + std::abs(bestT))) {
                bestT = t;
                e = static_cast<int>(f);
            }
        }
        Point bp = scaled(d, 1.0 / gauge(Z, d));
        const Point& A = Z.vertices[e];
        const Point& B = Z.vertices[(e + 1) % v];
        double ex = B[0] - A[0], ey = B[1] - A[1];
        double t = ((bp[0] - A[0]) * ex + (bp[1] - A[1]) * ey) / (ex * ex + ey * ey);
        return 2 * e + (t <= 0.5 + 1e-12 ? 0 : 1);
    };

    std::vector<int> pick(2 * v, -1);
    std::vector<double> pickGauge(2 * v, -1.0);
    bool anyDirected = false;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        Point d = sub(centers[i], common);
        if (norm(d) == 0.0) continue;  // sits on the common point: covered by anything
        anyDirected = true;
        int r = region_of(d);
        double g = gauge_between(Z, common, centers[i]);
        if (g > pickGauge[r]) {
            pickGauge[r] = g;
            pick[r] = static_cast<int>(i);
        }
    }
    std::vector<int> chosen;
    for (std::size_t r = 0; r < 2 * v; ++r)
        if (pick[r] >= 0) chosen.push_back(pick[r]);
    if (!anyDirected) chosen.push_back(0);  // every center coincides with `common`
    return chosen;
}

}  // namespace covpack
