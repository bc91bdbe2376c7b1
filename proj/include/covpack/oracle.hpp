#pragma once

// Exact reference solvers, exponential but budget-capped.  These are the
// ground truth the approximation algorithms are audited against, so they
// favor obvious correctness over speed.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "covpack/geometry.hpp"
#include "covpack/graph.hpp"
#include "covpack/matching.hpp"

namespace covpack {

struct OracleBudget {
    int maxPoints = 0;          // 0 = per-operation default
    int maxCandidates = 200000;
};

namespace detail {

inline void check_budget(std::size_t n, int maxPoints, int fallback, const char* what) {
    int cap = maxPoints > 0 ? maxPoints : fallback;
    if (static_cast<int>(n) > cap) throw std::invalid_argument(std::string(what) + ": budget exceeded");
}

using Mask = std::uint32_t;

// All realizable ranges {S ∩ H} over homothets H of the body, as bitmasks.
// Ball: canonical disks through <= 3 points plus halfplane limits, each with
// its boundary-point drop variants.  AxisBox: minimal squares of each subset
// slide along their minor axis; event-midpoint masks enumerate everything.
// Each mask is paired with a witness homothet covering at least that mask.
struct RangeFamily {
    std::vector<Mask> masks;
    std::vector<Homothet> witness;  // same indexing
};

inline void push_range(RangeFamily& fam, Mask m, const Homothet& h) {
    if (m == 0) return;
    fam.masks.push_back(m);
    fam.witness.push_back(h);
}

// Canonical disks are pinned by <= 3 points.  For each we also emit concrete
// perturbed disks that nudge the center along the pencil through the kept
// pins, pushing selected pins just outside; the mask is recomputed from the
// perturbed geometry, so every emitted (mask, witness) pair is realizable by
// its own witness.  delta is far above the containment slack and far below
// generic point gaps, so on non-degenerate inputs every strict mask appears.
inline RangeFamily enumerate_disk_ranges(const PointSet& S) {
    int n = static_cast<int>(S.size());
    RangeFamily fam;
    auto closed_mask = [&](const Point& c, double r) {
        Mask m = 0;
        double lim = r + kTol * (1.0 + r);
        for (int i = 0; i < n; ++i)
            if (dist(S[i], c) <= lim) m |= Mask(1) << i;
        return m;
    };
    auto push = [&](const Point& c, double r) { push_range(fam, closed_mask(c, r), Homothet{c, r}); };
    auto unit_or_zero = [](const Point& v) {
        double l = norm(v);
        return l < 1e-12 ? Point{0.0, 0.0} : scaled(v, 1.0 / l);
    };
    for (int i = 0; i < n; ++i) push(S[i], 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Point c = {(S[i][0] + S[j][0]) / 2, (S[i][1] + S[j][1]) / 2};
            double r = dist(S[i], S[j]) / 2;
            if (r < 1e-12) continue;
            double delta = 1e-6 * (1.0 + r);
            push(c, r);
            push(c, std::max(r - delta, 0.0));  // both pins shaved off
            Point u = unit_or_zero(sub(S[j], S[i]));
            Point cj = add(c, scaled(u, delta));  // slide toward j: i exits, j stays pinned
            push(cj, dist(cj, S[j]));
            Point ci = add(c, scaled(u, -delta));
            push(ci, dist(ci, S[i]));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                Point c;
                if (!circumcenter(S[i], S[j], S[l], c)) continue;
                double r = dist(c, S[i]);
                double delta = 1e-6 * (1.0 + r);
                push(c, r);
                push(c, std::max(r - delta, 0.0));  // all three shaved off
                int pins[3] = {i, j, l};
                for (int dropPos = 0; dropPos < 3; ++dropPos) {
                    // pencil through the two kept pins, moving away from the dropped one
                    const Point& drop = S[pins[dropPos]];
                    const Point& keepA = S[pins[(dropPos + 1) % 3]];
                    const Point& keepB = S[pins[(dropPos + 2) % 3]];
                    Point e = sub(keepB, keepA);
                    Point u = unit_or_zero(Point{-e[1], e[0]});
                    if (dot(u, sub(keepA, drop)) < 0) u = scaled(u, -1.0);
                    Point c2 = add(c, scaled(u, delta));
                    push(c2, dist(c2, keepA));
                }
                for (int keepPos = 0; keepPos < 3; ++keepPos) {
                    // keep one pin, push the other two outside
                    const Point& keep = S[pins[keepPos]];
                    const Point& dropA = S[pins[(keepPos + 1) % 3]];
                    const Point& dropB = S[pins[(keepPos + 2) % 3]];
                    Point u = add(unit_or_zero(sub(keep, dropA)), unit_or_zero(sub(keep, dropB)));
                    u = unit_or_zero(u);
                    Point c2 = add(c, scaled(u, delta));
                    push(c2, dist(c2, keep));
                }
            }
    if (n > 0) {
        double big = 10.0 * (1.0 + bbox_diameter(S));
        push_range(fam, (n == 32 ? ~Mask(0) : (Mask(1) << n) - 1), Homothet{S[0], big});
    }
    return fam;
}

// squares = homothets of the unit-halfwidth box; scale is the half-side
inline RangeFamily enumerate_square_ranges(const PointSet& S) {
    int n = static_cast<int>(S.size());
    RangeFamily fam;
    ConvexBody box = make_axis_box({1.0, 1.0});
    auto mask_at = [&](double cx, double cy, double r) {
        Mask m = 0;
        Homothet h{{cx, cy}, r};
        for (int i = 0; i < n; ++i)
            if (contains(box, h, S[i])) m |= Mask(1) << i;
        return m;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double dx = std::abs(S[i][0] - S[j][0]);
            double dy = std::abs(S[i][1] - S[j][1]);
            double r = std::max(dx, dy) / 2;
            bool xMajor = dx >= dy;
            double fixedC = xMajor ? (S[i][0] + S[j][0]) / 2 : (S[i][1] + S[j][1]) / 2;
            int minorAxis = xMajor ? 1 : 0;
            double slideLo = std::max(S[i][minorAxis], S[j][minorAxis]) - r;
            double slideHi = std::min(S[i][minorAxis], S[j][minorAxis]) + r;
            std::vector<double> cand = {slideLo, slideHi, (slideLo + slideHi) / 2};
            std::vector<double> events;
            for (int t = 0; t < n; ++t) {
                events.push_back(S[t][minorAxis] - r);
                events.push_back(S[t][minorAxis] + r);
            }
            std::sort(events.begin(), events.end());
            for (std::size_t e = 0; e + 1 < events.size(); ++e) {
                double mid = (events[e] + events[e + 1]) / 2;
                if (mid >= slideLo && mid <= slideHi) cand.push_back(mid);
            }
            for (double e : events)
                if (e >= slideLo && e <= slideHi) cand.push_back(e);
            for (double t : cand) {
                double cx = xMajor ? fixedC : t;
                double cy = xMajor ? t : fixedC;
                push_range(fam, mask_at(cx, cy, r), Homothet{{cx, cy}, r});
            }
        }
    if (n > 0) {
        double big = 10.0 * (1.0 + bbox_diameter(S));
        push_range(fam, (n == 32 ? ~Mask(0) : (Mask(1) << n) - 1), Homothet{S[0], big});
    }
    return fam;
}

inline RangeFamily enumerate_ranges(const ConvexBody& body, const PointSet& S) {
    if (body.dim != 2) throw std::invalid_argument("oracle: d = 2 only");
    if (S.size() > 32) throw std::invalid_argument("oracle: more than 32 points");
    if (body.kind == BodyKind::Ball) return enumerate_disk_ranges(S);
    if (body.kind == BodyKind::AxisBox) {
        PointSet scaledS(S.size());
        for (std::size_t i = 0; i < S.size(); ++i)
            scaledS[i] = {S[i][0] / body.halfWidths[0], S[i][1] / body.halfWidths[1]};
        RangeFamily fam = enumerate_square_ranges(scaledS);
        for (Homothet& h : fam.witness) {
            h.center[0] *= body.halfWidths[0];
            h.center[1] *= body.halfWidths[1];
        }
        return fam;
    }
    throw std::invalid_argument("oracle: body must be Ball or AxisBox");
}

inline int popcount(Mask m) { return __builtin_popcount(m); }

}  // namespace detail

// ---------------------------------------------------------------------------
// smallest k-enclosing disk, exact (d = 2)

inline Homothet exact_k_ball(const PointSet& S, int k, const OracleBudget& budget = {}) {
    detail::check_budget(S.size(), budget.maxPoints, 400, "exact_k_ball");
    int n = static_cast<int>(S.size());
    if (k < 1 || k > n) throw std::invalid_argument("exact_k_ball: k out of range");
    for (const Point& p : S)
        if (p.size() != 2) throw std::invalid_argument("exact_k_ball: d = 2 only");
    ConvexBody ball = make_ball(2);
    // initial upper bound: best center-restricted k-ball
    Homothet best{S[0], std::numeric_limits<double>::infinity()};
    for (int i = 0; i < n; ++i) {
        Homothet h = smallest_homothet_at(ball, S[i], S, k);
        if (h.scale < best.scale) best = h;
    }
    auto consider = [&](const Point& c, double r) {
        if (r >= best.scale) return;
        int cnt = 0;
        double lim = r + kTol * (1.0 + r);
        for (int t = 0; t < n && cnt < k; ++t)
            if (dist(S[t], c) <= lim) ++cnt;
        if (cnt >= k) best = Homothet{c, r};
    };
    if (k == 1) return Homothet{S[0], 0.0};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Point c = {(S[i][0] + S[j][0]) / 2, (S[i][1] + S[j][1]) / 2};
            consider(c, dist(S[i], S[j]) / 2);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                Point c;
                if (!circumcenter(S[i], S[j], S[l], c)) continue;
                consider(c, dist(c, S[i]));
            }
    return best;
}

// ---------------------------------------------------------------------------
// exact minimum k-cover (branch and bound over realizable ranges)

struct ExactCover {
    std::vector<Homothet> homothets;
    int size = 0;
};

inline ExactCover exact_min_cover(const ConvexBody& body, const PointSet& S, int k,
                                  const OracleBudget& budget = {}) {
    detail::check_budget(S.size(), budget.maxPoints, 20, "exact_min_cover");
    int n = static_cast<int>(S.size());
    if (n == 0) return {};
    if (k < 1) throw std::invalid_argument("exact_min_cover: k < 1");
    detail::RangeFamily fam = detail::enumerate_ranges(body, S);
    using detail::Mask;
    Mask full = n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;

    // keep inclusion-maximal masks of size <= k
    std::vector<std::pair<Mask, int>> sets;  // mask, witness index
    for (std::size_t i = 0; i < fam.masks.size(); ++i)
        if (detail::popcount(fam.masks[i]) <= k) sets.emplace_back(fam.masks[i], static_cast<int>(i));
    if (static_cast<int>(sets.size()) > budget.maxCandidates)
        throw std::invalid_argument("exact_min_cover: candidate budget exceeded");
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end(),
                           [](auto& a, auto& b) { return a.first == b.first; }),
               sets.end());
    std::sort(sets.begin(), sets.end(), [](auto& a, auto& b) {
        return detail::popcount(a.first) > detail::popcount(b.first);
    });
    std::vector<std::pair<Mask, int>> maximal;
    for (auto& [m, w] : sets) {
        bool dominated = false;
        for (auto& [m2, w2] : maximal)
            if ((m & ~m2) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.emplace_back(m, w);
    }

    // greedy upper bound
    std::vector<int> greedy;
    Mask covered = 0;
    while (covered != full) {
        int bestIdx = -1, bestGain = 0;
        for (std::size_t i = 0; i < maximal.size(); ++i) {
            int gain = detail::popcount(maximal[i].first & ~covered);
            if (gain > bestGain) {
                bestGain = gain;
                bestIdx = static_cast<int>(i);
            }
        }
        if (bestIdx < 0) throw std::logic_error("exact_min_cover: uncoverable point");
        greedy.push_back(bestIdx);
        covered |= maximal[bestIdx].first;
    }

    int bestSize = static_cast<int>(greedy.size());
    std::vector<int> bestSel = greedy, cur;
    // per-point list of covering sets
    std::vector<std::vector<int>> coverers(n);
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (int t = 0; t < n; ++t)
            if (maximal[i].first >> t & 1) coverers[t].push_back(static_cast<int>(i));

    auto rec = [&](auto&& self, Mask cov) -> void {
        if (cov == full) {
            if (static_cast<int>(cur.size()) < bestSize) {
                bestSize = static_cast<int>(cur.size());
                bestSel = cur;
            }
            return;
        }
        int rem = detail::popcount(full & ~cov);
        if (static_cast<int>(cur.size()) + (rem + k - 1) / k >= bestSize) return;
        // most constrained uncovered point
        int pick = -1, fewest = 1 << 30;
        for (int t = 0; t < n; ++t) {
            if (cov >> t & 1) continue;
            int c = static_cast<int>(coverers[t].size());
            if (c < fewest) {
                fewest = c;
                pick = t;
            }
        }
        for (int s : coverers[pick]) {
            cur.push_back(s);
            self(self, cov | maximal[s].first);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    ExactCover out;
    out.size = bestSize;
    for (int s : bestSel) out.homothets.push_back(fam.witness[maximal[s].second]);
    return out;
}

// ---------------------------------------------------------------------------
// exact maximum interior-disjoint k+ packing

struct ExactPacking {
    std::vector<Homothet> homothets;
    int size = 0;
};

inline ExactPacking exact_max_packing(const ConvexBody& body, const PointSet& S, int k,
                                      const OracleBudget& budget = {}) {
    detail::check_budget(S.size(), budget.maxPoints, 16, "exact_max_packing");
    int n = static_cast<int>(S.size());
    if (k < 1) throw std::invalid_argument("exact_max_packing: k < 1");
    if (n == 0 || k > n) return {};
    detail::RangeFamily fam = detail::enumerate_ranges(body, S);
    using detail::Mask;

    struct Cand {
        Mask mask;
        Homothet h;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < fam.masks.size(); ++i)
        if (detail::popcount(fam.masks[i]) >= k) cands.push_back({fam.masks[i], fam.witness[i]});
    if (static_cast<int>(cands.size()) > budget.maxCandidates)
        throw std::invalid_argument("exact_max_packing: candidate budget exceeded");
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.h.scale < b.h.scale; });
    // drop homothets that contain a smaller valid candidate
    std::vector<Cand> kept;
    for (const Cand& c : cands) {
        bool dominated = false;
        for (const Cand& s : kept)
            if (homothet_inside(body, s.h, c.h)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(c);
    }
    int m = static_cast<int>(kept.size());
    std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            conflict[i][j] = conflict[j][i] = intersects(body, kept[i].h, kept[j].h);

    int best = 0;
    std::vector<int> bestSel, cur;
    auto rec = [&](auto&& self, int idx, Mask used) -> void {
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            bestSel = cur;
        }
        if (idx == m) return;
        int freePts = n - detail::popcount(used);
        if (static_cast<int>(cur.size()) + freePts / k <= best) return;
        // take idx if compatible
        bool ok = true;
        for (int s : cur)
            if (conflict[s][idx]) {
                ok = false;
                break;
            }
        if (ok) {
            cur.push_back(idx);
            self(self, idx + 1, used | kept[idx].mask);
            cur.pop_back();
        }
        self(self, idx + 1, used);
    };
    rec(rec, 0, 0);

    ExactPacking out;
    out.size = best;
    for (int s : bestSel) out.homothets.push_back(kept[s].h);
    return out;
}

// ---------------------------------------------------------------------------
// brute-force graph oracles

inline int max_matching_bruteforce(const Graph& g, const OracleBudget& budget = {}) {
    detail::check_budget(g.n, budget.maxPoints, 12, "max_matching_bruteforce");
    int n = g.n;
    std::vector<std::uint64_t> nbr(n, 0);
    for (const auto& [a, b] : g.edges) {
        nbr[a] |= 1ULL << b;
        nbr[b] |= 1ULL << a;
    }
    std::vector<signed char> memo(std::size_t(1) << n, -1);
    auto rec = [&](auto&& self, std::uint32_t alive) -> int {
        if (alive == 0) return 0;
        if (memo[alive] >= 0) return memo[alive];
        int v = __builtin_ctz(alive);
        std::uint32_t rest = alive & ~(1u << v);
        int best = self(self, rest);  // leave v single
        std::uint32_t cands = static_cast<std::uint32_t>(nbr[v]) & rest;
        while (cands) {
            int u = __builtin_ctz(cands);
            cands &= cands - 1;
            best = std::max(best, 1 + self(self, rest & ~(1u << u)));
        }
        memo[alive] = static_cast<signed char>(best);
        return best;
    };
    return rec(rec, n == 32 ? ~0u : (1u << n) - 1);
}

inline int max_independent_bruteforce(const Graph& g, const OracleBudget& budget = {}) {
    detail::check_budget(g.n, budget.maxPoints, 18, "max_independent_bruteforce");
    int n = g.n;
    std::vector<std::uint32_t> nbr(n, 0);
    for (const auto& [a, b] : g.edges) {
        nbr[a] |= 1u << b;
        nbr[b] |= 1u << a;
    }
    int best = 0;
    auto rec = [&](auto&& self, std::uint32_t alive, int have) -> void {
        if (have + detail::popcount(alive) <= best) return;
        if (alive == 0) {
            best = std::max(best, have);
            return;
        }
        // branch on the max-degree alive vertex
        int pick = -1, deg = -1;
        std::uint32_t it = alive;
        while (it) {
            int v = __builtin_ctz(it);
            it &= it - 1;
            int d = detail::popcount(nbr[v] & alive);
            if (d > deg) {
                deg = d;
                pick = v;
            }
        }
        if (deg <= 1) {  // isolated vertices and pendant pairs: take greedily
            int add = 0;
            std::uint32_t rest = alive;
            while (rest) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                ++add;
                rest &= ~nbr[v];
            }
            best = std::max(best, have + add);
            return;
        }
        self(self, alive & ~(nbr[pick] | (1u << pick)), have + 1);
        self(self, alive & ~(1u << pick), have);
    };
    rec(rec, n == 32 ? ~0u : (1u << n) - 1, 0);
    return best;
}

}  // namespace covpack
