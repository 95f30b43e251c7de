#pragma once

#include "grundy/graph.hpp"

#include <cstdint>
#include <optional>

namespace grundy {

// Deterministic seeded generator so sampled corpora are reproducible.
struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }
};

// G(n, p) with p expressed as a percentage.
Graph random_graph(int n, int edge_percent, SplitMix64& rng);

// Resamples G(n, p) until connected.
Graph random_connected_graph(int n, int edge_percent, SplitMix64& rng);

// Pairing-model k-regular graph; nullopt when nk is odd or the retry
// budget never produces a simple pairing.
std::optional<Graph> random_regular_graph(int n, int k, SplitMix64& rng);

}  // namespace grundy
