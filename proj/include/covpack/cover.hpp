#pragma once

// k-restricted covers: every point of S lands in some homothet of the body,
// no homothet holds more than k points.  cover_net_based follows the weak-net
// route for balls; cover_greedy peels neighborhoods of the cheapest threshold
// homothet and works for any supported body.  Boundary-sphere ties that make
// the k-trim ambiguous raise DegeneracyError instead of silently perturbing.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covpack/geometry.hpp"
#include "covpack/weaknet.hpp"

namespace covpack {

struct Cover {
    std::vector<Homothet> homothets;
    std::vector<int> assignment;                   // point index -> covering homothet
    std::vector<std::vector<int>> perPointCounts;  // homothet index -> all covered points
};

// smallest ball centered at a point of S covering at least k points;
// radius is at most twice the unrestricted optimum
inline Homothet approx_k_ball(const PointSet& S, int k) {
    if (S.empty()) throw std::invalid_argument("approx_k_ball: empty point set");
    if (k < 1 || k > static_cast<int>(S.size())) throw std::invalid_argument("approx_k_ball: k out of range");
    ConvexBody ball = make_ball(S[0].size());
    Homothet best;
    best.scale = -1.0;
    for (const Point& p : S) {
        Homothet h = smallest_homothet_at(ball, p, S, k);
        if (best.scale < 0.0 || h.scale < best.scale) best = h;
    }
    return best;
}

namespace detail {

// homothet at S[p] whose radius splits the ceil(k/2)-th and (k+1)-th gauge
// values, so it covers at least ceil(k/2) and at most k points of S
inline Homothet trim_to_k(const ConvexBody& b, const Point& p, const PointSet& S, int k) {
    int n = static_cast<int>(S.size());
    int half = (k + 1) / 2;
    std::vector<double> g(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) g[i] = gauge_between(b, p, S[i]);
    std::sort(g.begin(), g.end());
    double lo = g[half - 1];
    if (n <= k) return {p, g[n - 1] + 1.0};  // no (k+1)-th point: cover everything
    double up = g[k];
    if (up - lo <= 4.0 * kTol * (1.0 + up)) throw DegeneracyError(p, lo);
    return {p, 0.5 * (lo + up)};
}

inline double fattened_norm(const FatnessCert& cert, const Point& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double y = cert.linScale[i] * v[i];
        s += y * y;
    }
    return std::sqrt(s);
}

// append h, assign the newly covered points to it, record all covered points
inline void emit_homothet(const ConvexBody& b, const Homothet& h, const PointSet& S, Cover& out,
                          std::vector<char>& covered) {
    int idx = static_cast<int>(out.homothets.size());
    out.homothets.push_back(h);
    out.perPointCounts.emplace_back();
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (!contains(b, h, S[i])) continue;
        out.perPointCounts.back().push_back(static_cast<int>(i));
        if (!covered[i]) {
            covered[i] = 1;
            out.assignment[i] = idx;
        }
    }
}

}  // namespace detail

// recount every homothet from scratch; throws on any violated invariant
inline void validate_cover(const ConvexBody& b, const PointSet& S, int k, const Cover& c) {
    if (c.assignment.size() != S.size()) throw std::logic_error("cover: assignment size mismatch");
    if (c.perPointCounts.size() != c.homothets.size()) throw std::logic_error("cover: per-homothet list size mismatch");
    for (std::size_t i = 0; i < S.size(); ++i) {
        int a = c.assignment[i];
        if (a < 0 || a >= static_cast<int>(c.homothets.size()))
            throw std::logic_error("cover: point " + std::to_string(i) + " unassigned");
        if (!contains(b, c.homothets[a], S[i]))
            throw std::logic_error("cover: point " + std::to_string(i) + " outside its homothet");
    }
    for (std::size_t j = 0; j < c.homothets.size(); ++j) {
        std::vector<int> recount;
        for (std::size_t i = 0; i < S.size(); ++i)
            if (contains(b, c.homothets[j], S[i])) recount.push_back(static_cast<int>(i));
        if (recount != c.perPointCounts[j])
            throw std::logic_error("cover: homothet " + std::to_string(j) + " coverage list stale");
        if (static_cast<int>(recount.size()) > k)
            throw std::logic_error("cover: homothet " + std::to_string(j) + " exceeds the point budget");
    }
}

inline bool cover_valid(const ConvexBody& b, const PointSet& S, int k, const Cover& c) {
    try {
        validate_cover(b, S, k, c);
    } catch (const std::logic_error&) {
        return false;
    }
    return true;
}

// cover size divided by the lower bound n/k
inline double cover_size_ratio(std::size_t n, int k, const Cover& c) {
    return static_cast<double>(c.homothets.size()) * k / static_cast<double>(n);
}

// ball cover routed through a weak net: each point pairs with a net point
// inside its half-threshold ball, groups are peeled farthest-first
inline Cover cover_net_based(const PointSet& S, int k) {
    int n = static_cast<int>(S.size());
    if (k < 2) throw std::invalid_argument("cover_net_based: k must be at least 2");
    if (n < k) throw std::invalid_argument("cover_net_based: fewer points than k");
    ConvexBody ball = make_ball(S[0].size());
    int half = (k + 1) / 2;

    WeakNet net = build_weak_net(ball, S, static_cast<double>(k) / (2.0 * n), 2.0);
    const PointSet& W = net.points;

    // nearest net point; it sits inside the ball at p holding half points
    std::vector<int> group(n, -1);
    for (int p = 0; p < n; ++p) {
        double bscale = smallest_homothet_at(ball, S[p], S, half).scale;
        int best = -1;
        double bestD = 0.0;
        for (std::size_t w = 0; w < W.size(); ++w) {
            double d = dist(S[p], W[w]);
            if (best < 0 || d < bestD) {
                best = static_cast<int>(w);
                bestD = d;
            }
        }
        if (best < 0 || bestD > bscale + 2.0 * kTol * (1.0 + bscale))
            throw std::logic_error("cover_net_based: net missed a threshold ball");
        group[p] = best;
    }

    std::vector<std::vector<int>> bucket(W.size());
    for (int p = 0; p < n; ++p) bucket[group[p]].push_back(p);

    Cover out;
    out.assignment.assign(n, -1);
    std::vector<char> covered(n, 0);
    for (std::size_t w = 0; w < W.size(); ++w) {
        while (true) {
            int pick = -1;
            double bestD = -1.0;
            for (int p : bucket[w]) {
                if (covered[p]) continue;
                double d = dist(S[p], W[w]);
                if (d > bestD) {
                    bestD = d;
                    pick = p;
                }
            }
            if (pick < 0) break;
            detail::emit_homothet(ball, detail::trim_to_k(ball, S[pick], S, k), S, out, covered);
        }
    }
    validate_cover(ball, S, k, out);
    return out;
}

// indices of a greedy farthest-first subfamily of homothets (all sharing the
// common point) whose union still covers every input center
inline std::vector<int> neighborhood_cover(const ConvexBody& body, const PointSet& centers,
                                           const std::vector<double>& scales, const Point& common) {
    if (centers.empty()) throw std::invalid_argument("neighborhood_cover: no centers");
    if (centers.size() != scales.size()) throw std::invalid_argument("neighborhood_cover: centers/scales size mismatch");
    for (std::size_t i = 0; i < centers.size(); ++i)
        if (!contains(body, {centers[i], scales[i]}, common))
            throw std::invalid_argument("neighborhood_cover: homothet " + std::to_string(i) + " misses the common point");

    FatnessCert cert = fatten(body);
    std::vector<char> covered(centers.size(), 0);
    std::vector<int> chosen;
    while (true) {
        int pick = -1;
        double bestN = -1.0;
        for (std::size_t i = 0; i < centers.size(); ++i) {
            if (covered[i]) continue;
            double nn = detail::fattened_norm(cert, sub(centers[i], common));
            if (nn > bestN) {
                bestN = nn;
                pick = static_cast<int>(i);
            }
        }
        if (pick < 0) break;
        chosen.push_back(pick);
        for (std::size_t i = 0; i < centers.size(); ++i)
            if (!covered[i] && contains(body, {centers[pick], scales[pick]}, centers[i])) covered[i] = 1;
    }
    return chosen;
}

// general-body cover: repeatedly take the uncovered point whose threshold
// homothet is cheapest, sweep its intersecting neighborhood farthest-first
inline Cover cover_greedy(const ConvexBody& body, const PointSet& S, int k) {
    int n = static_cast<int>(S.size());
    if (k < 2) throw std::invalid_argument("cover_greedy: k must be at least 2");
    if (n < k) throw std::invalid_argument("cover_greedy: fewer points than k");
    if (body.dim != static_cast<int>(S[0].size())) throw std::invalid_argument("cover_greedy: dimension mismatch");
    int half = (k + 1) / 2;

    std::vector<double> cscale(n);
    for (int p = 0; p < n; ++p) cscale[p] = smallest_homothet_at(body, S[p], S, half).scale;
    FatnessCert cert = fatten(body);

    Cover out;
    out.assignment.assign(n, -1);
    std::vector<char> covered(n, 0);
    while (true) {
        int p0 = -1;
        for (int p = 0; p < n; ++p)
            if (!covered[p] && (p0 < 0 || cscale[p] < cscale[p0])) p0 = p;
        if (p0 < 0) break;
        Homothet c0{S[p0], cscale[p0]};

        std::vector<int> pool;
        for (int p = 0; p < n; ++p)
            if (!covered[p] && intersects(body, Homothet{S[p], cscale[p]}, c0)) pool.push_back(p);

        while (true) {
            int pick = -1;
            double bestN = -1.0;
            for (int p : pool) {
                if (covered[p]) continue;
                double nn = detail::fattened_norm(cert, sub(S[p], S[p0]));
                if (nn > bestN) {
                    bestN = nn;
                    pick = p;
                }
            }
            if (pick < 0) break;
            detail::emit_homothet(body, detail::trim_to_k(body, S[pick], S, k), S, out, covered);
        }
    }
    validate_cover(body, S, k, out);
    return out;
}

}  // namespace covpack
