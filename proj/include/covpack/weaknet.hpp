#pragma once

// Weak epsilon-nets for homothet ranges.  build_weak_net repeatedly extracts
// the smallest point-centered homothet covering the threshold count and
// stamps a scaled hitting set around it.  verify_hitting checks the net
// property itself: exactly for disks and axis boxes in the plane (every
// violating homothet grows into a maximal net-free one, so enumerating those
// suffices), by seeded random search for other bodies.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covpack/geometry.hpp"
#include "covpack/rng.hpp"

namespace covpack {

struct NetTrace {
    Homothet extracted;        // the round's smallest threshold homothet
    std::vector<int> removed;  // original indices of the points it covered
};

struct WeakNet {
    PointSet points;
    double epsilon = 0.0;
    double approxFactor = 0.0;
    std::vector<NetTrace> trace;
};

struct VerifyReport {
    bool pass = true;
    bool exact = true;    // exact enumeration vs randomized search
    Homothet witness;     // a violating homothet when pass is false
    int witnessCount = 0; // points of S the witness covers
};

// number of points a homothet must cover before the net owes it a point
inline int net_threshold(double epsilon, std::size_t n) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument("net_threshold: epsilon must be in (0,1]");
    return std::max(1, static_cast<int>(std::ceil(epsilon * static_cast<double>(n) - 1e-9)));
}

// guaranteed ratio between the extracted homothet and the unrestricted
// optimum: 2 for symmetric bodies, 2*kappa for asymmetric ones where kappa
// bounds gauge(-x) against gauge(x)
inline double extraction_factor(const ConvexBody& b) {
    if (is_symmetric(b)) return 2.0;
    double kappa = 1.0;
    for (const Point& v : b.vertices) kappa = std::max(kappa, gauge(b, scaled(v, -1.0)));
    return 2.0 * kappa;
}

// smallest homothet centered at a point of S whose symmetrized gauge covers
// at least m points of S; ties break toward the lowest center index
inline Homothet extract_smallest(const ConvexBody& b, const PointSet& S, int m) {
    if (m < 1 || m > static_cast<int>(S.size()))
        throw std::invalid_argument("extract_smallest: threshold out of range");
    Homothet best{{}, std::numeric_limits<double>::infinity()};
    std::vector<double> g(S.size());
    for (std::size_t p = 0; p < S.size(); ++p) {
        for (std::size_t i = 0; i < S.size(); ++i) g[i] = sym_gauge(b, sub(S[i], S[p]));
        std::nth_element(g.begin(), g.begin() + (m - 1), g.end());
        if (g[m - 1] < best.scale) best = Homothet{S[p], g[m - 1]};
    }
    return best;
}

inline WeakNet build_weak_net(const ConvexBody& body, const PointSet& S, double epsilon,
                              double approxFactor) {
    if (S.empty()) throw std::invalid_argument("build_weak_net: empty point set");
    for (const Point& p : S)
        if (static_cast<int>(p.size()) != body.dim)
            throw std::invalid_argument("build_weak_net: dimension mismatch");
    double needed = extraction_factor(body);
    if (approxFactor + 1e-12 < needed)
        throw std::invalid_argument("build_weak_net: approxFactor must be at least " +
                                    std::to_string(needed));
    int m = net_threshold(epsilon, S.size());
    PointSet stamp = hitting_set(body, 1.0 / approxFactor);

    WeakNet net;
    net.epsilon = epsilon;
    net.approxFactor = approxFactor;
    std::vector<int> alive(S.size());
    std::iota(alive.begin(), alive.end(), 0);
    while (static_cast<int>(alive.size()) >= m) {
        Homothet h;
        if (m == 1) {
            // threshold 1: the smallest homothet is always scale 0 at the
            // first remaining point, no scan needed
            h = {S[alive.front()], 0.0};
        } else {
            PointSet rem(alive.size());
            for (std::size_t i = 0; i < alive.size(); ++i) rem[i] = S[alive[i]];
            h = extract_smallest(body, rem, m);
        }
        NetTrace tr;
        tr.extracted = h;
        std::vector<int> keep;
        for (int id : alive) {
            if (contains(body, h, S[id]))
                tr.removed.push_back(id);
            else
                keep.push_back(id);
        }
        if (h.scale <= 0.0)
            net.points.push_back(h.center);
        else
            for (const Point& g : stamp) net.points.push_back(add(h.center, scaled(g, h.scale)));
        net.trace.push_back(std::move(tr));
        alive.swap(keep);
    }
    return net;
}

namespace detail {

// report h as a violation iff it misses the whole net yet covers >= m points
inline bool confirm_violation(const ConvexBody& b, const Homothet& h, const PointSet& S,
                              const PointSet& W, int m, VerifyReport& rep) {
    for (const Point& w : W)
        if (contains(b, h, w)) return false;
    int cnt = count_covered(b, h, S);
    if (cnt < m) return false;
    rep.pass = false;
    rep.witness = h;
    rep.witnessCount = cnt;
    return true;
}

inline PointSet dedupe_points(const PointSet& P, double tol) {
    std::vector<int> idx(P.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return P[a][0] < P[b][0] || (P[a][0] == P[b][0] && P[a][1] < P[b][1]);
    });
    PointSet out;
    for (int i : idx) {
        bool dup = false;
        for (int j = static_cast<int>(out.size()) - 1;
             j >= 0 && P[i][0] - out[j][0] <= tol; --j)
            if (std::abs(P[i][1] - out[j][1]) <= tol) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(P[i]);
    }
    return out;
}

// uniform-grid index over a planar point set for nearest/range queries
struct BucketGrid {
    const PointSet* pts = nullptr;
    double x0 = 0, y0 = 0, cell = 1;
    int nx = 1, ny = 1;
    std::vector<std::vector<int>> bins;

    static int clampi(int v, int n) { return v < 0 ? 0 : (v >= n ? n - 1 : v); }

    void build(const PointSet& P) {
        pts = &P;
        Point lo, hi;
        bounding_box(P, lo, hi);
        double spanx = hi[0] - lo[0], spany = hi[1] - lo[1];
        double span = std::max({spanx, spany, 1e-9});
        int target = std::min(256, std::max(1, static_cast<int>(std::sqrt(static_cast<double>(P.size())))));
        cell = span / target;
        x0 = lo[0];
        y0 = lo[1];
        nx = std::max(1, static_cast<int>(std::floor(spanx / cell)) + 1);
        ny = std::max(1, static_cast<int>(std::floor(spany / cell)) + 1);
        bins.assign(static_cast<std::size_t>(nx) * ny, {});
        for (int i = 0; i < static_cast<int>(P.size()); ++i) {
            int cx = clampi(static_cast<int>(std::floor((P[i][0] - x0) / cell)), nx);
            int cy = clampi(static_cast<int>(std::floor((P[i][1] - y0) / cell)), ny);
            bins[static_cast<std::size_t>(cy) * nx + cx].push_back(i);
        }
    }

    // squared distance to the nearest stored point
    double nearest2(double qx, double qy) const {
        const PointSet& P = *pts;
        int cx = clampi(static_cast<int>(std::floor((qx - x0) / cell)), nx);
        int cy = clampi(static_cast<int>(std::floor((qy - y0) / cell)), ny);
        double best = std::numeric_limits<double>::infinity();
        int maxRing = std::max(nx, ny);
        for (int ring = 0; ring <= maxRing; ++ring) {
            if (ring >= 2) {
                // no cell beyond the previous ring's box can beat the best
                double mlo = std::min(qx - (x0 + (cx - ring + 1) * cell),
                                      qy - (y0 + (cy - ring + 1) * cell));
                double mhi = std::min((x0 + (cx + ring) * cell) - qx,
                                      (y0 + (cy + ring) * cell) - qy);
                double margin = std::min(mlo, mhi);
                if (margin > 0 && margin * margin >= best) break;
            }
            for (int gy = cy - ring; gy <= cy + ring; ++gy) {
                if (gy < 0 || gy >= ny) continue;
                for (int gx = cx - ring; gx <= cx + ring; ++gx) {
                    if (gx < 0 || gx >= nx) continue;
                    if (std::max(std::abs(gx - cx), std::abs(gy - cy)) != ring) continue;
                    for (int i : bins[static_cast<std::size_t>(gy) * nx + gx]) {
                        double dx = P[i][0] - qx, dy = P[i][1] - qy;
                        best = std::min(best, dx * dx + dy * dy);
                    }
                }
            }
        }
        return best;
    }

    // visit indices within Euclidean distance r of q; f returns false to stop
    template <class F>
    void for_each_within(const Point& q, double r, F&& f) const {
        const PointSet& P = *pts;
        int gx0 = clampi(static_cast<int>(std::floor((q[0] - r - x0) / cell)), nx);
        int gx1 = clampi(static_cast<int>(std::floor((q[0] + r - x0) / cell)), nx);
        int gy0 = clampi(static_cast<int>(std::floor((q[1] - r - y0) / cell)), ny);
        int gy1 = clampi(static_cast<int>(std::floor((q[1] + r - y0) / cell)), ny);
        double r2 = r * r;
        for (int gy = gy0; gy <= gy1; ++gy)
            for (int gx = gx0; gx <= gx1; ++gx)
                for (int i : bins[static_cast<std::size_t>(gy) * nx + gx]) {
                    double dx = P[i][0] - q[0], dy = P[i][1] - q[1];
                    if (dx * dx + dy * dy <= r2 && !f(i)) return;
                }
    }
};

struct DelTri {
    int a, b, c;
    double ccx, ccy, r2;
};

// Bowyer-Watson triangulation; returns false on numeric breakdown so the
// caller can retry with a jittered copy.  Cocircular ties resolve to
// "outside", which keeps the result a valid Delaunay triangulation whose
// circumdisks are empty up to ties.
inline bool bw_delaunay(const PointSet& P, std::vector<DelTri>& out) {
    int n = static_cast<int>(P.size());
    out.clear();
    if (n < 3) return true;
    Point lo, hi;
    bounding_box(P, lo, hi);
    double cx = 0.5 * (lo[0] + hi[0]), cy = 0.5 * (lo[1] + hi[1]);
    double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1.0});
    double R = 1e4 * span;
    PointSet V = P;
    for (int k = 0; k < 3; ++k) {
        double a = 0.17 + 2.0943951023931953 * k; // off-axis so grid lines miss the super vertices
        V.push_back({cx + R * std::cos(a), cy + R * std::sin(a)});
    }
    auto mk = [&](int a, int b, int c, DelTri& t) {
        Point cc;
        if (!circumcenter(V[a], V[b], V[c], cc)) return false;
        double dx = V[a][0] - cc[0], dy = V[a][1] - cc[1];
        t = DelTri{a, b, c, cc[0], cc[1], dx * dx + dy * dy};
        return true;
    };
    std::vector<DelTri> tris;
    DelTri super;
    if (!mk(n, n + 1, n + 2, super)) return false;
    tris.push_back(super);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng shuffler(0x5eedbeef);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[shuffler.range(0, i)]);

    std::vector<std::pair<int, int>> edges;
    for (int oi : order) {
        double px = P[oi][0], py = P[oi][1];
        edges.clear();
        std::size_t keep = 0;
        bool found = false;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            double dx = px - tris[t].ccx, dy = py - tris[t].ccy;
            if (dx * dx + dy * dy < tris[t].r2 * (1.0 - 1e-12)) {
                found = true;
                int a = tris[t].a, b = tris[t].b, c = tris[t].c;
                edges.emplace_back(std::min(a, b), std::max(a, b));
                edges.emplace_back(std::min(b, c), std::max(b, c));
                edges.emplace_back(std::min(a, c), std::max(a, c));
            } else {
                tris[keep++] = tris[t];
            }
        }
        if (!found) return false;
        tris.resize(keep);
        std::sort(edges.begin(), edges.end());
        for (std::size_t e = 0; e < edges.size();) {
            std::size_t f = e;
            while (f < edges.size() && edges[f] == edges[e]) ++f;
            if (f - e == 1) { // boundary edge of the cavity
                DelTri t;
                if (!mk(edges[e].first, edges[e].second, oi, t)) return false;
                tris.push_back(t);
            }
            e = f;
        }
    }
    for (const DelTri& t : tris)
        if (t.a < n && t.b < n && t.c < n) out.push_back(t);
    return true;
}

// try the disk at c trimmed between the m-th point distance and the given
// clearance to the net
inline bool disk_candidate(const ConvexBody& ball2, double cx, double cy, double rMax,
                           const PointSet& S, const PointSet& W, int m, VerifyReport& rep) {
    if (!(rMax > 0.0) || !std::isfinite(rMax)) return false;
    std::vector<double> d;
    for (const Point& s : S) {
        double dx = s[0] - cx, dy = s[1] - cy;
        double t = std::sqrt(dx * dx + dy * dy);
        if (t < rMax) d.push_back(t);
    }
    if (static_cast<int>(d.size()) < m) return false;
    std::nth_element(d.begin(), d.begin() + (m - 1), d.end());
    Homothet h{{cx, cy}, 0.5 * (d[m - 1] + rMax)};
    return confirm_violation(ball2, h, S, W, m, rep);
}

// rotating supporting halfplanes of the net: points of S strictly beyond the
// net's support in some direction witness a violation, realized as a large
// disk hugging that halfplane
inline bool halfplane_candidates(const ConvexBody& ball2, const PointSet& S, const PointSet& W,
                                 int m, VerifyReport& rep) {
    std::vector<int> hull = convex_hull(W);
    if (hull.empty()) return false;
    double span = 1.0;
    {
        PointSet all = S;
        all.insert(all.end(), W.begin(), W.end());
        Point lo, hi;
        bounding_box(all, lo, hi);
        span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1.0});
    }
    std::vector<double> ang;
    const double pi = 3.141592653589793238462643383279502884;
    for (const Point& s : S)
        for (int v : hull) {
            double dx = s[0] - W[v][0], dy = s[1] - W[v][1];
            if (dx == 0 && dy == 0) continue;
            double t = std::atan2(dy, dx);
            ang.push_back(t + 0.5 * pi);
            ang.push_back(t - 0.5 * pi);
        }
    for (std::size_t e = 0; e < hull.size(); ++e) {
        const Point& a = W[hull[e]];
        const Point& b = W[hull[(e + 1) % hull.size()]];
        ang.push_back(std::atan2(b[1] - a[1], b[0] - a[0]) - 0.5 * pi);
    }
    for (double& t : ang) {
        t = std::fmod(t, 2 * pi);
        if (t < 0) t += 2 * pi;
    }
    std::sort(ang.begin(), ang.end());
    std::vector<double> cand = ang;
    for (std::size_t i = 0; i + 1 < ang.size(); ++i) cand.push_back(0.5 * (ang[i] + ang[i + 1]));
    if (!ang.empty()) cand.push_back(ang.back() + 0.5 * (ang.front() + 2 * pi - ang.back()));

    std::vector<double> marg(S.size());
    for (double th : cand) {
        double ux = std::cos(th), uy = std::sin(th);
        double hmax = -std::numeric_limits<double>::infinity();
        for (int v : hull) hmax = std::max(hmax, ux * W[v][0] + uy * W[v][1]);
        int cnt = 0;
        for (std::size_t i = 0; i < S.size(); ++i) {
            marg[i] = ux * S[i][0] + uy * S[i][1] - hmax;
            if (marg[i] > 0) ++cnt;
        }
        if (cnt < m) continue;
        std::vector<double> pos;
        for (std::size_t i = 0; i < S.size(); ++i)
            if (marg[i] > 0) pos.push_back(marg[i]);
        std::nth_element(pos.begin(), pos.end() - m, pos.end());
        double g = pos[pos.size() - m]; // m-th best margin beyond the support
        double eLo = std::numeric_limits<double>::infinity(), eHi = -eLo;
        for (std::size_t i = 0; i < S.size(); ++i)
            if (marg[i] >= g) {
                double e = -uy * S[i][0] + ux * S[i][1];
                eLo = std::min(eLo, e);
                eHi = std::max(eHi, e);
            }
        double R = 2e4 * (1.0 + span);
        double emid = 0.5 * (eLo + eHi);
        double off = hmax + 0.5 * g + R;
        Homothet h{{ux * off - uy * emid, uy * off + ux * emid}, R};
        if (confirm_violation(ball2, h, S, W, m, rep)) return true;
    }
    return false;
}

inline void verify_disks_exact(const PointSet& S, const PointSet& Win, int m, VerifyReport& rep) {
    ConvexBody ball2 = make_ball(2);
    rep.exact = true;
    double span = 1.0;
    {
        PointSet all = S;
        all.insert(all.end(), Win.begin(), Win.end());
        Point lo, hi;
        bounding_box(all, lo, hi);
        span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1.0});
    }
    PointSet W = dedupe_points(Win, 1e-12 * span);
    if (W.empty()) {
        if (static_cast<int>(S.size()) >= m) {
            Point lo, hi;
            bounding_box(S, lo, hi);
            Homothet h{{0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])}, span + 1.0};
            confirm_violation(ball2, h, S, W, m, rep);
        }
        return;
    }
    // coincident clusters (also the whole m = 1 case)
    for (const Point& s : S)
        if (confirm_violation(ball2, Homothet{s, 0.0}, S, W, m, rep)) return;
    // bounded maximal net-free disks are circumdisks of the net's Delaunay
    // triangulation; unbounded ones are supporting halfplanes
    std::vector<int> hull = convex_hull(W);
    if (W.size() >= 3 && hull.size() >= 3) {
        BucketGrid gridTrue;
        gridTrue.build(W);
        bool built = false;
        for (int attempt = 0; attempt < 3 && !built; ++attempt) {
            PointSet P = W;
            if (attempt > 0) {
                Rng jrng(0x7e57 + 97 * attempt);
                double jit = (attempt == 1 ? 1e-9 : 3e-7) * span;
                for (Point& p : P) {
                    p[0] += jit * jrng.gaussian();
                    p[1] += jit * jrng.gaussian();
                }
            }
            std::vector<DelTri> tris;
            if (!bw_delaunay(P, tris) || tris.empty()) continue;
            BucketGrid gridP;
            const BucketGrid* audit = &gridTrue;
            if (attempt > 0) {
                gridP.build(P);
                audit = &gridP;
            }
            bool broken = false;
            for (const DelTri& t : tris)
                if (audit->nearest2(t.ccx, t.ccy) < t.r2 * (1.0 - 2e-6)) {
                    broken = true;
                    break;
                }
            if (broken) continue;
            built = true;
            for (const DelTri& t : tris) {
                double rMax = std::sqrt(gridTrue.nearest2(t.ccx, t.ccy));
                if (disk_candidate(ball2, t.ccx, t.ccy, rMax, S, W, m, rep)) return;
            }
        }
        if (!built) throw std::runtime_error("verify_hitting: net triangulation failed");
    }
    halfplane_candidates(ball2, S, W, m, rep);
}

inline void verify_squares_exact(const ConvexBody& box, const PointSet& S, const PointSet& Win,
                                 int m, VerifyReport& rep) {
    rep.exact = true;
    double hx = box.halfWidths[0], hy = box.halfWidths[1];
    double span = 1.0;
    {
        PointSet all = S;
        all.insert(all.end(), Win.begin(), Win.end());
        Point lo, hi;
        bounding_box(all, lo, hi);
        span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1.0});
    }
    PointSet W = dedupe_points(Win, 1e-12 * span);
    for (const Point& s : S)
        if (confirm_violation(box, Homothet{s, 0.0}, S, W, m, rep)) return;
    if (W.empty()) {
        if (static_cast<int>(S.size()) >= m) {
            Point lo, hi;
            bounding_box(S, lo, hi);
            Homothet h{{0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])},
                       (span + 1.0) / std::min(hx, hy)};
            confirm_violation(box, h, S, W, m, rep);
        }
        return;
    }

    // normalized coordinates: the box becomes the unit square, so every
    // violator shrinks onto the minimal square of its points, pinned by an
    // extreme pair on the major axis and slid along the minor one
    int n = static_cast<int>(S.size()), w = static_cast<int>(W.size());
    PointSet Sn(n), Wn(w);
    for (int i = 0; i < n; ++i) Sn[i] = {S[i][0] / hx, S[i][1] / hy};
    for (int i = 0; i < w; ++i) Wn[i] = {W[i][0] / hx, W[i][1] / hy};
    std::vector<std::vector<int>> byAxis(2);
    std::vector<std::vector<double>> coord(2);
    for (int a = 0; a < 2; ++a) {
        byAxis[a].resize(w);
        std::iota(byAxis[a].begin(), byAxis[a].end(), 0);
        std::sort(byAxis[a].begin(), byAxis[a].end(),
                  [&](int u, int v) { return Wn[u][a] < Wn[v][a]; });
        coord[a].resize(w);
        for (int i = 0; i < w; ++i) coord[a][i] = Wn[byAxis[a][i]][a];
    }

    std::vector<std::pair<double, double>> blocks;
    std::vector<double> evs, cand;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dx = std::abs(Sn[i][0] - Sn[j][0]), dy = std::abs(Sn[i][1] - Sn[j][1]);
            double r = 0.5 * std::max(dx, dy);
            if (r <= 0.0) continue;
            int maj = dx >= dy ? 0 : 1, mnr = 1 - maj;
            double fixedC = 0.5 * (Sn[i][maj] + Sn[j][maj]);
            double wlo = std::max(Sn[i][mnr], Sn[j][mnr]) - r;
            double whi = std::min(Sn[i][mnr], Sn[j][mnr]) + r;
            // net blocks along the slide
            blocks.clear();
            {
                auto lo = std::lower_bound(coord[maj].begin(), coord[maj].end(), fixedC - r);
                auto hi = std::upper_bound(coord[maj].begin(), coord[maj].end(), fixedC + r);
                for (auto it = lo; it != hi; ++it) {
                    double wm = Wn[byAxis[maj][it - coord[maj].begin()]][mnr];
                    if (wm - r <= whi && wm + r >= wlo)
                        blocks.emplace_back(std::max(wm - r, wlo), std::min(wm + r, whi));
                }
            }
            std::sort(blocks.begin(), blocks.end());
            std::vector<std::pair<double, double>> free;
            double cur = wlo;
            for (const auto& b : blocks) {
                if (b.first > cur) free.emplace_back(cur, b.first);
                cur = std::max(cur, b.second);
            }
            if (cur < whi) free.emplace_back(cur, whi);
            if (free.empty() && !(blocks.empty() && wlo <= whi)) continue;
            if (free.empty()) free.emplace_back(wlo, whi);
            // minor-axis events where the covered subset of S changes
            evs.clear();
            double slack = 1e-7 * (1.0 + r);
            for (int s = 0; s < n; ++s) {
                if (std::abs(Sn[s][maj] - fixedC) > r + slack) continue;
                evs.push_back(Sn[s][mnr] - r);
                evs.push_back(Sn[s][mnr] + r);
            }
            std::sort(evs.begin(), evs.end());
            double zeta = 1e-9 * (1.0 + r);
            for (const auto& fs : free) {
                cand.clear();
                cand.push_back(fs.first);
                cand.push_back(fs.second);
                cand.push_back(0.5 * (fs.first + fs.second));
                cand.push_back(fs.first + zeta);
                cand.push_back(fs.second - zeta);
                double prev = std::numeric_limits<double>::quiet_NaN();
                for (double e : evs) {
                    if (e < fs.first || e > fs.second) continue;
                    cand.push_back(e);
                    if (!std::isnan(prev)) cand.push_back(0.5 * (prev + e));
                    prev = e;
                }
                for (double t : cand) {
                    if (t < fs.first || t > fs.second) continue;
                    Point c(2);
                    c[maj] = fixedC;
                    c[mnr] = t;
                    Homothet h{{c[0] * hx, c[1] * hy}, r};
                    if (confirm_violation(box, h, S, W, m, rep)) return;
                }
            }
        }
}

inline void verify_randomized(const ConvexBody& b, const PointSet& S, const PointSet& W, int m,
                              VerifyReport& rep, std::uint64_t seed, int samples) {
    rep.exact = false;
    int n = static_cast<int>(S.size());
    Rng rng(seed);
    double outR = 1.0;
    if (b.kind == BodyKind::AxisBox)
        outR = std::sqrt(dot(b.halfWidths, b.halfWidths));
    else
        for (const Point& v : b.vertices) outR = std::max(outR, norm(v));
    BucketGrid grid;
    bool useGrid = b.dim == 2 && !W.empty();
    if (useGrid) grid.build(W);
    Point lo, hi;
    bounding_box(S, lo, hi);
    double diam = norm(sub(hi, lo)) + 1.0;
    static constexpr double kBlow[] = {1.0, 1.0 + 1e-6, 1.1, 1.5, 4.0, 50.0};
    std::vector<int> anchor;
    for (int it = 0; it < samples; ++it) {
        int k = std::min(n, 2 + static_cast<int>(rng.below(2)));
        anchor.clear();
        while (static_cast<int>(anchor.size()) < k) {
            int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (std::find(anchor.begin(), anchor.end(), a) == anchor.end()) anchor.push_back(a);
        }
        double wsum = 0;
        std::vector<double> wt(anchor.size());
        for (double& x : wt) {
            x = rng.uniform() + 1e-6;
            wsum += x;
        }
        Point c(b.dim, 0.0);
        for (std::size_t a = 0; a < anchor.size(); ++a)
            for (int d = 0; d < b.dim; ++d) c[d] += wt[a] / wsum * S[anchor[a]][d];
        if (rng.below(8) == 0)
            for (int d = 0; d < b.dim; ++d) c[d] += 0.03 * diam * rng.gaussian();
        double lam = 0;
        for (int a : anchor) lam = std::max(lam, gauge(b, sub(S[a], c)));
        lam *= kBlow[rng.below(6)];
        Homothet h{c, lam};
        bool free = true;
        if (useGrid) {
            grid.for_each_within(c, lam * outR * (1.0 + 1e-6) + 1e-9, [&](int wi) {
                if (contains(b, h, W[wi])) {
                    free = false;
                    return false;
                }
                return true;
            });
        } else {
            for (const Point& w : W)
                if (contains(b, h, w)) {
                    free = false;
                    break;
                }
        }
        if (!free) continue;
        int cnt = count_covered(b, h, S);
        if (cnt >= m) {
            rep.pass = false;
            rep.witness = h;
            rep.witnessCount = cnt;
            return;
        }
    }
}

} // namespace detail

inline VerifyReport verify_hitting(const ConvexBody& body, const PointSet& S, const PointSet& net,
                                   double epsilon, std::uint64_t seed = 2026,
                                   int samples = 100000) {
    if (S.empty()) throw std::invalid_argument("verify_hitting: empty point set");
    if (static_cast<int>(S[0].size()) != body.dim)
        throw std::invalid_argument("verify_hitting: dimension mismatch");
    int m = net_threshold(epsilon, S.size());
    VerifyReport rep;
    if (body.dim == 2 && body.kind == BodyKind::Ball)
        detail::verify_disks_exact(S, net, m, rep);
    else if (body.dim == 2 && body.kind == BodyKind::AxisBox)
        detail::verify_squares_exact(body, S, net, m, rep);
    else
        detail::verify_randomized(body, S, net, m, rep, seed, samples);
    return rep;
}

inline VerifyReport verify_hitting(const ConvexBody& body, const PointSet& S, const WeakNet& net,
                                   std::uint64_t seed = 2026, int samples = 100000) {
    return verify_hitting(body, S, net.points, net.epsilon, seed, samples);
}

} // namespace covpack
