#pragma once

// Deterministic, platform-independent randomness.  splitmix64 core with
// uniform/gaussian helpers; all experiment reproducibility hangs off this.

#include <cstdint>
#include <cmath>

namespace covpack {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    double gaussian() {
        // Box-Muller; uniform() can return 0, so flip to (0, 1]
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // independent stream for a labelled sub-task
    Rng fork(std::uint64_t label) {
        Rng r(state ^ (0xa0761d6478bd642fULL * (label + 1)));
        r.next();
        return r;
    }
};

}  // namespace covpack
