#pragma once

#include <assoc/projective.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace assoc {

/// Default coordinate box [-B, B] for random general points.
inline constexpr long kDefaultBound = 50;

/// Deterministic generator. The raw engine output is fixed by the standard;
/// range reduction is done here so sequences agree across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    /// Child seed for an independent stream (trial i of a suite).
    std::uint64_t fork() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Nonzero integer point of P^n with coordinates in [-bound, bound].
inline ProjectivePoint random_point(Rng& rng, std::size_t n, long bound) {
    if (bound < 1) throw Error("coordinate bound must be at least 1");
    for (;;) {
        RationalVector v(n + 1);
        bool nonzero = false;
        for (auto& x : v) {
            x = rng.uniform(-bound, bound);
            nonzero = nonzero || sgn(x) != 0;
        }
        if (nonzero) return canonicalize(v);
    }
}

/// Random points with pairwise distinct entries; the first n+2 are in
/// general position whenever m >= n+2.
inline PointConfiguration generate_config(Rng& rng, std::size_t n, std::size_t m, long bound = kDefaultBound) {
    if (n < 1 || m < 1) throw Error("generate_config needs n >= 1 and m >= 1");
    if (bound < 1) throw Error("coordinate bound must be at least 1");
    constexpr int kRetries = 1000;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<ProjectivePoint> pts;
        for (std::size_t i = 0; i < m; ++i) pts.push_back(random_point(rng, n, bound));
        bool distinct = true;
        for (std::size_t i = 0; i < m && distinct; ++i)
            for (std::size_t j = i + 1; j < m && distinct; ++j) distinct = !(pts[i] == pts[j]);
        if (!distinct) continue;
        PointConfiguration c(n, std::move(pts));
        if (m >= n + 2 && !first_frame_general(c)) continue;
        return c;
    }
    throw Error("could not generate a configuration within the retry budget");
}

inline PointConfiguration generate_config(std::size_t n, std::size_t m, std::uint64_t seed,
                                          long bound = kDefaultBound) {
    Rng rng(seed);
    return generate_config(rng, n, m, bound);
}

}  // namespace assoc
