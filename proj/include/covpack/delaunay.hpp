#pragma once

// Generalized Delaunay graphs: i~j iff some homothet of the body covers the
// two points and nothing else.  Exact for disks (perpendicular-bisector
// pencil) and axis boxes (minimal-side slide), approximate for polygon bodies
// (sampled boundary pinning); every edge carries a recounted witness.  Also
// the matching-based 2-per-homothet cover and the structural face checks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covpack/cover.hpp"
#include "covpack/geometry.hpp"
#include "covpack/graph.hpp"
#include "covpack/matching.hpp"

namespace covpack {

struct DelaunayGraph {
    Graph graph;
    std::vector<Homothet> witness;  // aligned with graph.edges
    bool approximate = false;
};

struct FaceSet {
    std::vector<std::vector<int>> bounded;  // CCW vertex cycles
    std::vector<std::vector<int>> outer;    // CW cycles (one per component)
};

struct AngleReport {
    bool pass = true;
    int pairsChecked = 0;
    int violations = 0;
    double worstSum = 0.0;
    double bound = 0.0;
};

namespace detail {

// witness acceptable iff it covers the two endpoints and nothing else
inline bool confirm_pair_witness(const ConvexBody& b, const Homothet& h, const PointSet& S, int i, int j) {
    if (!contains(b, h, S[i]) || !contains(b, h, S[j])) return false;
    int cnt = 0;
    for (const Point& q : S) {
        if (contains(b, h, q) && ++cnt > 2) return false;
    }
    return cnt == 2;
}

// disks through both points form a line of centers; each other point is
// excluded by an open half-line, so the free parameter set is an interval
inline bool disk_pencil_edge(const ConvexBody& ball, const PointSet& S, int i, int j, Homothet& wit) {
    const Point &pi = S[i], &pj = S[j];
    double mx = (pi[0] + pj[0]) / 2, my = (pi[1] + pj[1]) / 2;
    double dx = pj[0] - pi[0], dy = pj[1] - pi[1];
    double dlen = std::hypot(dx, dy);
    if (dlen == 0.0) {
        wit = {{mx, my}, 0.0};
        return confirm_pair_witness(ball, wit, S, i, j);
    }
    double ex = -dy / dlen, ey = dx / dlen;
    bool hasL = false, hasU = false;
    double L = 0.0, U = 0.0;
    int n = static_cast<int>(S.size());
    for (int q = 0; q < n; ++q) {
        if (q == i || q == j) continue;
        double qx = S[q][0] - pi[0], qy = S[q][1] - pi[1];
        double a = 2.0 * (ex * qx + ey * qy);
        double bq = (S[q][0] * S[q][0] + S[q][1] * S[q][1]) - (pi[0] * pi[0] + pi[1] * pi[1]) -
                    2.0 * (mx * qx + my * qy);
        double tiny = 1e-13 * (1.0 + std::hypot(qx, qy));
        if (a > tiny) {
            double t = bq / a;
            if (!hasU || t < U) U = t, hasU = true;
        } else if (a < -tiny) {
            double t = bq / a;
            if (!hasL || t > L) L = t, hasL = true;
        } else if (bq <= 0.0) {
            return false;  // on the segment: inside every pencil disk
        }
    }
    double t;
    if (hasL && hasU) {
        if (U - L <= 1e-12 * (1.0 + std::abs(L) + std::abs(U))) return false;
        t = 0.5 * (L + U);
    } else if (hasU) {
        t = U - (1.0 + 0.5 * std::abs(U));
    } else if (hasL) {
        t = L + (1.0 + 0.5 * std::abs(L));
    } else {
        t = 0.0;
    }
    Point c = {mx + t * ex, my + t * ey};
    wit = {c, std::hypot(c[0] - pi[0], c[1] - pi[1])};
    return confirm_pair_witness(ball, wit, S, i, j);
}

// any box covering exactly the pair shrinks to one of minimal side pinned
// along the wider axis, sliding along the other; scan the slide window
inline bool square_pencil_edge(const ConvexBody& box, const PointSet& S, int i, int j, Homothet& wit) {
    double hx = box.halfWidths[0], hy = box.halfWidths[1];
    double xi = S[i][0] / hx, yi = S[i][1] / hy;
    double xj = S[j][0] / hx, yj = S[j][1] / hy;
    double dx = std::abs(xi - xj), dy = std::abs(yi - yj);
    double r = std::max(dx, dy) / 2.0;
    if (r == 0.0) {
        wit = {S[i], 0.0};
        return confirm_pair_witness(box, wit, S, i, j);
    }
    int maj = dx >= dy ? 0 : 1, mnr = 1 - maj;
    double pim[2] = {xi, yi}, pjm[2] = {xj, yj};
    double cmaj = (pim[maj] + pjm[maj]) / 2.0;
    double wlo = std::max(pim[mnr], pjm[mnr]) - r;
    double whi = std::min(pim[mnr], pjm[mnr]) + r;

    std::vector<std::pair<double, double>> blocks;
    int n = static_cast<int>(S.size());
    double pad = 2.0 * kTol * (1.0 + r);
    for (int q = 0; q < n; ++q) {
        if (q == i || q == j) continue;
        double qm = S[q][maj] / box.halfWidths[maj];
        double qn = S[q][mnr] / box.halfWidths[mnr];
        if (std::abs(qm - cmaj) <= r + pad) blocks.emplace_back(qn - r - pad, qn + r + pad);
    }
    std::sort(blocks.begin(), blocks.end());
    // widest free gap in the window (length zero allowed; the recount decides)
    double cur = wlo, bestLo = 0.0, bestHi = -1.0;
    bool any = false;
    for (const auto& bl : blocks) {
        if (bl.first > cur) {
            double hi = std::min(bl.first, whi);
            if (!any || hi - cur > bestHi - bestLo) bestLo = cur, bestHi = hi, any = true;
        }
        cur = std::max(cur, bl.second);
        if (cur > whi) break;
    }
    if (cur <= whi && (!any || whi - cur > bestHi - bestLo)) bestLo = cur, bestHi = whi, any = true;
    if (!any) return false;
    double cm = 0.5 * (bestLo + bestHi);
    Point c(2);
    c[maj] = cmaj * box.halfWidths[maj];
    c[mnr] = cm * box.halfWidths[mnr];
    wit = {c, r};
    return confirm_pair_witness(box, wit, S, i, j);
}

// pin i on the boundary in each sampled direction and solve for the scale
// putting j on the boundary too; gauge is piecewise linear, so the root of
// max_e(a_e + b_e*lam) = lam is available in closed form
inline bool polygon_pencil_edge(const ConvexBody& b, const PointSet& S, int i, int j, int steps, Homothet& wit) {
    Point d = sub(S[j], S[i]);
    if (norm(d) == 0.0) {
        wit = {S[i], 0.0};
        return confirm_pair_witness(b, wit, S, i, j);
    }
    const double twoPi = 6.283185307179586476925286766559;
    std::size_t m = b.edgeNormal.size();
    for (int s = 0; s < steps; ++s) {
        double th = twoPi * s / steps;
        Point bp = boundary_point(b, {std::cos(th), std::sin(th)});
        double lam = -1.0;
        bool noRoot = false;
        for (std::size_t e = 0; e < m; ++e) {
            double ae = (b.edgeNormal[e][0] * d[0] + b.edgeNormal[e][1] * d[1]) / b.edgeOffset[e];
            double be = (b.edgeNormal[e][0] * bp[0] + b.edgeNormal[e][1] * bp[1]) / b.edgeOffset[e];
            if (be >= 1.0 - 1e-9) {
                if (ae > 1e-12 * (1.0 + std::abs(ae))) {
                    noRoot = true;  // this constraint stays violated at every scale
                    break;
                }
            } else {
                lam = std::max(lam, ae / (1.0 - be));
            }
        }
        if (noRoot || lam <= 0.0) continue;
        Point c = {S[i][0] - lam * bp[0], S[i][1] - lam * bp[1]};
        if (std::abs(gauge_between(b, c, S[j]) - lam) > 1e-6 * (1.0 + lam)) continue;
        Homothet h{c, lam};
        if (confirm_pair_witness(b, h, S, i, j)) {
            wit = h;
            return true;
        }
    }
    return false;
}

}  // namespace detail

inline DelaunayGraph delaunay_graph(const ConvexBody& body, const PointSet& S, int steps = 720) {
    if (body.dim != 2) throw std::invalid_argument("delaunay_graph: d = 2 only");
    if (S.size() < 2) throw std::invalid_argument("delaunay_graph: need at least 2 points");
    for (const Point& p : S)
        if (p.size() != 2) throw std::invalid_argument("delaunay_graph: point dimension mismatch");
    int n = static_cast<int>(S.size());

    DelaunayGraph out;
    out.approximate = body.kind != BodyKind::Ball && body.kind != BodyKind::AxisBox;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Homothet w;
            bool e = false;
            switch (body.kind) {
                case BodyKind::Ball:
                    e = detail::disk_pencil_edge(body, S, i, j, w);
                    break;
                case BodyKind::AxisBox:
                    e = detail::square_pencil_edge(body, S, i, j, w);
                    break;
                default:
                    e = detail::polygon_pencil_edge(body, S, i, j, steps, w);
                    break;
            }
            if (e) {
                edges.emplace_back(i, j);
                out.witness.push_back(w);
            }
        }
    out.graph = make_graph(n, edges);  // pairs arrive sorted, order preserved
    if (out.graph.edges.size() != out.witness.size()) throw std::logic_error("delaunay_graph: witness misalignment");
    return out;
}

// no two edge segments properly cross (endpoints may coincide)
inline bool planar_embedding_ok(const Graph& g, const PointSet& S) {
    auto orient = [&](const Point& a, const Point& b, const Point& c) {
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    };
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        for (std::size_t f = e + 1; f < g.edges.size(); ++f) {
            int a = g.edges[e].first, b = g.edges[e].second;
            int c = g.edges[f].first, d = g.edges[f].second;
            if (a == c || a == d || b == c || b == d) continue;
            double o1 = orient(S[a], S[b], S[c]), o2 = orient(S[a], S[b], S[d]);
            double o3 = orient(S[c], S[d], S[a]), o4 = orient(S[c], S[d], S[b]);
            if (o1 * o2 < 0 && o3 * o4 < 0) return false;
        }
    return true;
}

// trace faces of the straight-line embedding; bounded cycles come out CCW
inline FaceSet enumerate_faces(const Graph& g, const PointSet& S) {
    std::vector<std::vector<int>> order(g.n);
    for (int v = 0; v < g.n; ++v) {
        order[v] = g.adj[v];
        std::sort(order[v].begin(), order[v].end(), [&](int a, int b) {
            return std::atan2(S[a][1] - S[v][1], S[a][0] - S[v][0]) <
                   std::atan2(S[b][1] - S[v][1], S[b][0] - S[v][0]);
        });
    }
    std::map<std::pair<int, int>, bool> used;
    for (const auto& e : g.edges) {
        used[{e.first, e.second}] = false;
        used[{e.second, e.first}] = false;
    }
    FaceSet out;
    for (auto& [he, flag] : used) {
        if (flag) continue;
        std::vector<int> cycle;
        double area2 = 0.0;
        int u = he.first, v = he.second;
        while (true) {
            auto it = used.find({u, v});
            if (it->second) break;
            it->second = true;
            cycle.push_back(u);
            area2 += S[u][0] * S[v][1] - S[v][0] * S[u][1];
            // next half-edge: predecessor of u in v's CCW neighbor order
            const std::vector<int>& ord = order[v];
            std::size_t pos = std::find(ord.begin(), ord.end(), u) - ord.begin();
            int w = ord[(pos + ord.size() - 1) % ord.size()];
            u = v;
            v = w;
        }
        if (area2 > 0)
            out.bounded.push_back(std::move(cycle));
        else
            out.outer.push_back(std::move(cycle));
    }
    return out;
}

inline bool is_triangulation(const Graph& g, const PointSet& S) {
    if (g.n < 3) return false;
    if (components_after_removal(g, std::vector<bool>(g.n, false)) != 1) return false;
    FaceSet f = enumerate_faces(g, S);
    for (const auto& face : f.bounded)
        if (face.size() != 3) return false;
    return f.outer.size() == 1;
}

// opposite angles over every interior edge stay below 2*pi - 2*asin(alpha)
inline AngleReport check_angle_property(const ConvexBody& body, const PointSet& S, double alpha) {
    DelaunayGraph dg = delaunay_graph(body, S);
    if (!is_triangulation(dg.graph, S)) throw std::invalid_argument("check_angle_property: not a triangulation");
    FaceSet faces = enumerate_faces(dg.graph, S);

    auto angle_at = [&](int apex, int a, int c) {
        double ux = S[a][0] - S[apex][0], uy = S[a][1] - S[apex][1];
        double vx = S[c][0] - S[apex][0], vy = S[c][1] - S[apex][1];
        return std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy);
    };

    AngleReport rep;
    const double pi = 3.141592653589793238462643383279502884;
    rep.bound = 2.0 * pi - 2.0 * std::asin(std::min(1.0, std::max(0.0, alpha)));
    std::map<std::pair<int, int>, std::vector<int>> opposite;
    for (const auto& tri : faces.bounded)
        for (int t = 0; t < 3; ++t) {
            int a = tri[t], b = tri[(t + 1) % 3], c = tri[(t + 2) % 3];
            opposite[{std::min(a, c), std::max(a, c)}].push_back(b);
        }
    for (const auto& [edge, opp] : opposite) {
        if (opp.size() != 2) continue;
        double sum = angle_at(opp[0], edge.first, edge.second) + angle_at(opp[1], edge.first, edge.second);
        ++rep.pairsChecked;
        rep.worstSum = std::max(rep.worstSum, sum);
        if (sum > rep.bound + 1e-6) {
            ++rep.violations;
            rep.pass = false;
        }
    }
    return rep;
}

// component bound after deleting a vertex set, in units of the removed count
inline double toughness_bound(double alpha, int removedCount) {
    double asinDeg = std::asin(std::min(1.0, std::max(0.0, alpha))) * 180.0 / 3.141592653589793238462643383279502884;
    return ((450.0 - 4.0 * asinDeg) / asinDeg) * removedCount + (2.0 * asinDeg - 90.0) / asinDeg;
}

// BFS between two points restricted to graph vertices inside the homothet
inline bool path_within_homothet(const ConvexBody& body, const PointSet& S, const Graph& g, const Homothet& h,
                                 int from, int to) {
    if (!contains(body, h, S[from]) || !contains(body, h, S[to])) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack = {from};
    seen[from] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (int u : g.adj[v])
            if (!seen[u] && contains(body, h, S[u])) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return false;
}

// cover with 2-point homothets: matched pairs reuse their Delaunay witness,
// unmatched points get a degenerate speck
inline Cover cover_pairs(const ConvexBody& body, const PointSet& S, int steps = 720) {
    DelaunayGraph dg = delaunay_graph(body, S, steps);
    Matching m = max_matching(dg.graph);
    int n = static_cast<int>(S.size());
    double speck = 1e-12 * bbox_diameter(S);

    Cover out;
    out.assignment.assign(n, -1);
    std::vector<char> covered(n, 0);
    for (const auto& [a, b] : m.edges) {
        auto it = std::lower_bound(dg.graph.edges.begin(), dg.graph.edges.end(), std::make_pair(a, b));
        std::size_t idx = it - dg.graph.edges.begin();
        detail::emit_homothet(body, dg.witness[idx], S, out, covered);
    }
    for (int v = 0; v < n; ++v)
        if (!covered[v]) detail::emit_homothet(body, Homothet{S[v], speck}, S, out, covered);
    validate_cover(body, S, 2, out);
    return out;
}

}  // namespace covpack
