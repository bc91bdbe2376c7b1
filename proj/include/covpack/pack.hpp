#pragma once

// Greedy packing of k+ homothets: every point gets its smallest homothet
// covering k points, then homothets are committed cheapest-first while
// anything intersecting a committed one is discarded.  Restricted to
// centrally symmetric bodies so disjointness reduces to an exact gauge test.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "covpack/geometry.hpp"

namespace covpack {

struct Packing {
    std::vector<Homothet> homothets;
    std::vector<std::vector<int>> perHomothetCounts;  // homothet index -> covered points
};

// recount coverage and re-check pairwise disjointness from scratch
inline void validate_packing(const ConvexBody& b, const PointSet& S, int k, const Packing& p) {
    if (p.homothets.empty()) throw std::logic_error("packing: empty");
    if (p.perHomothetCounts.size() != p.homothets.size()) throw std::logic_error("packing: per-homothet list size mismatch");
    for (std::size_t j = 0; j < p.homothets.size(); ++j) {
        std::vector<int> recount;
        for (std::size_t i = 0; i < S.size(); ++i)
            if (contains(b, p.homothets[j], S[i])) recount.push_back(static_cast<int>(i));
        if (recount != p.perHomothetCounts[j])
            throw std::logic_error("packing: homothet " + std::to_string(j) + " coverage list stale");
        if (static_cast<int>(recount.size()) < k)
            throw std::logic_error("packing: homothet " + std::to_string(j) + " covers fewer than k points");
        if (2 * static_cast<int>(recount.size()) >= 3 * k)
            throw std::logic_error("packing: homothet " + std::to_string(j) + " covers 3k/2 or more points");
    }
    for (std::size_t i = 0; i < p.homothets.size(); ++i)
        for (std::size_t j = i + 1; j < p.homothets.size(); ++j) {
            double g = gauge_between(b, p.homothets[i].center, p.homothets[j].center);
            if (g < p.homothets[i].scale + p.homothets[j].scale - 1e-9)
                throw std::logic_error("packing: homothets " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
        }
    if (p.homothets.size() * static_cast<std::size_t>(k) > S.size())
        throw std::logic_error("packing: pigeonhole bound violated");
}

inline bool packing_valid(const ConvexBody& b, const PointSet& S, int k, const Packing& p) {
    try {
        validate_packing(b, S, k, p);
    } catch (const std::logic_error&) {
        return false;
    }
    return true;
}

// packing size divided by the upper bound n/k
inline double packing_size_ratio(std::size_t n, int k, const Packing& p) {
    return static_cast<double>(p.homothets.size()) * k / static_cast<double>(n);
}

inline Packing pack_greedy(const ConvexBody& body, const PointSet& S, int k) {
    int n = static_cast<int>(S.size());
    if (k < 1) throw std::invalid_argument("pack_greedy: k must be positive");
    if (n < k) throw std::invalid_argument("pack_greedy: fewer points than k");
    if (!is_symmetric(body)) throw std::invalid_argument("pack_greedy: centrally symmetric bodies only");
    if (body.dim != static_cast<int>(S[0].size())) throw std::invalid_argument("pack_greedy: dimension mismatch");

    std::vector<Homothet> B(n);
    for (int p = 0; p < n; ++p) {
        B[p] = smallest_homothet_at(body, S[p], S, k);
        if (2 * count_covered(body, B[p], S) >= 3 * k) throw DegeneracyError(B[p].center, B[p].scale);
    }

    Packing out;
    std::vector<char> removed(n, 0);
    double lastScale = -1.0;
    while (true) {
        int pick = -1;
        for (int p = 0; p < n; ++p)
            if (!removed[p] && (pick < 0 || B[p].scale < B[pick].scale)) pick = p;
        if (pick < 0) break;
        if (B[pick].scale < lastScale - 1e-12 * (1.0 + lastScale))
            throw std::logic_error("pack_greedy: selection order violated");
        lastScale = B[pick].scale;
        out.homothets.push_back(B[pick]);
        out.perHomothetCounts.emplace_back();
        for (int i = 0; i < n; ++i)
            if (contains(body, B[pick], S[i])) out.perHomothetCounts.back().push_back(i);
        for (int q = 0; q < n; ++q)
            if (!removed[q] && intersects(body, B[q], B[pick])) removed[q] = 1;
    }
    validate_packing(body, S, k, out);
    return out;
}

}  // namespace covpack
