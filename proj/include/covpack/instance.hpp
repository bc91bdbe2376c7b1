#pragma once

// Deterministic 2-D instance generators for experiments and tests.

#include <cmath>
#include <stdexcept>
#include <string>

#include "covpack/geometry.hpp"
#include "covpack/rng.hpp"

namespace covpack {

inline PointSet gen_uniform_box(int n, Rng& rng, double lo = 0.0, double hi = 100.0) {
    if (n < 0) throw std::invalid_argument("gen_uniform_box: n < 0");
    PointSet S;
    S.reserve(n);
    for (int i = 0; i < n; ++i) S.push_back({rng.uniform(lo, hi), rng.uniform(lo, hi)});
    return S;
}

// m well-separated clusters of k points each: cluster diameter <= 2*spread,
// pairwise center separation >= separation (jittered coarse grid placement).
inline PointSet gen_clusters(int m, int k, double spread, double separation, Rng& rng) {
    if (m < 1 || k < 1) throw std::invalid_argument("gen_clusters: m and k must be positive");
    if (!(spread > 0) || !(separation > 0)) throw std::invalid_argument("gen_clusters: spread/separation must be positive");
    int side = 1;
    while (side * side < m) ++side;
    double cell = 1.5 * separation + 4.0 * spread;
    std::vector<int> cells(side * side);
    for (int i = 0; i < side * side; ++i) cells[i] = i;
    for (int i = side * side - 1; i > 0; --i) std::swap(cells[i], cells[rng.range(0, i)]);
    PointSet S;
    S.reserve(static_cast<std::size_t>(m) * k);
    for (int c = 0; c < m; ++c) {
        double cx = (cells[c] % side) * cell + 0.2 * cell * rng.uniform();
        double cy = (cells[c] / side) * cell + 0.2 * cell * rng.uniform();
        for (int i = 0; i < k; ++i) {
            double ang = rng.uniform(0, 2 * M_PI);
            double rad = spread * std::sqrt(rng.uniform());
            S.push_back({cx + rad * std::cos(ang), cy + rad * std::sin(ang)});
        }
    }
    return S;
}

// N x N unit grid with optional gaussian jitter (sigma = jitter)
inline PointSet gen_grid(int N, double jitter, Rng& rng) {
    if (N < 1) throw std::invalid_argument("gen_grid: N < 1");
    PointSet S;
    S.reserve(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            S.push_back({i + jitter * rng.gaussian(), j + jitter * rng.gaussian()});
    return S;
}

inline PointSet gen_annulus(int n, Rng& rng, double rInner = 50.0, double rOuter = 100.0) {
    if (n < 0) throw std::invalid_argument("gen_annulus: n < 0");
    if (!(0 <= rInner && rInner < rOuter)) throw std::invalid_argument("gen_annulus: need 0 <= rInner < rOuter");
    PointSet S;
    S.reserve(n);
    for (int i = 0; i < n; ++i) {
        double ang = rng.uniform(0, 2 * M_PI);
        double rad = std::sqrt(rng.uniform(rInner * rInner, rOuter * rOuter));
        S.push_back({rad * std::cos(ang), rad * std::sin(ang)});
    }
    return S;
}

inline void apply_jitter(PointSet& S, double sigma, Rng& rng) {
    for (Point& p : S)
        for (double& c : p) c += sigma * rng.gaussian();
}

}  // namespace covpack
