#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>

#include "nsbox/behavior.hpp"
#include "nsbox/errors.hpp"

namespace nsbox::wiring {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Counter-based draw: one uniform per (seed, setting, round, parent), so the
// stream is independent of evaluation order and degree of parallelism.
inline double uniform01(std::uint64_t seed, std::uint64_t setting, std::uint64_t round,
                        std::uint64_t parent) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ (setting + 0x632be59bd9b4e019ull));
    h = mix64(h ^ round);
    h = mix64(h ^ (parent + 0x9e6c63d0876a9a35ull));
    return double(h >> 11) * 0x1.0p-53;
}

inline int draw_outcome(const std::array<double, 4>& row, double u) {
    double acc = 0.0;
    for (int o = 0; o < 3; ++o) {
        acc += row[o];
        if (u < acc) return o;
    }
    return 3;
}

}  // namespace detail

/// Empirical OR-AND wiring plus per-cell standard errors sqrt(p(1-p)/rounds).
struct MonteCarloWiring {
    Behavior empirical;
    std::array<std::array<double, 4>, 4> standard_error{};
    long long rounds = 0;
    std::uint64_t seed = 0;
};

/// Samples the wiring definition directly: per round and setting, draw an
/// outcome pair from every parent, combine with a = OR(a_i), b = AND(b_i).
inline MonteCarloWiring monte_carlo_wire(std::span<const Behavior> parents, long long rounds,
                                         std::uint64_t seed) {
    if (parents.empty()) throw EmptyListError("monte_carlo_wire: empty parent list");
    if (rounds < 1) throw DomainError("monte_carlo_wire: rounds must be >= 1");

    std::array<std::array<long long, 4>, 4> counts{};
    for (int s = 0; s < 4; ++s) {
        for (long long t = 0; t < rounds; ++t) {
            int a = 0, b = 1;
            for (std::size_t i = 0; i < parents.size(); ++i) {
                const double u = detail::uniform01(seed, std::uint64_t(s), std::uint64_t(t),
                                                   std::uint64_t(i));
                const int o = detail::draw_outcome(parents[i].p[s], u);
                a |= o >> 1;
                b &= o & 1;
            }
            ++counts[s][Behavior::outcome(a, b)];
        }
    }

    MonteCarloWiring out;
    out.rounds = rounds;
    out.seed = seed;
    for (int s = 0; s < 4; ++s)
        for (int o = 0; o < 4; ++o) {
            const double phat = double(counts[s][o]) / double(rounds);
            out.empirical.p[s][o] = phat;
            out.standard_error[s][o] = std::sqrt(phat * (1.0 - phat) / double(rounds));
        }
    return out;
}

}  // namespace nsbox::wiring
