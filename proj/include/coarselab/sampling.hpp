#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace coarselab {

/// Seeded index source. Draws use plain modular reduction of a 64-bit
/// Mersenne Twister so sequences are identical across standard libraries.
class SeededSampler {
public:
    explicit SeededSampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Index in [0, n); n must be positive.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

/// Unordered triples i < j < k of [0, n): all of them when there are at most
/// `budget`, otherwise `budget` seeded draws (sorted within each triple,
/// repeats across draws allowed).
std::vector<std::array<std::size_t, 3>> index_triples(std::size_t n, std::size_t budget, std::uint64_t seed);

/// Ordered pairs (i, j), i != j, of [0, n): all of them when there are at
/// most `cap`, otherwise `cap` seeded draws.
std::vector<std::pair<std::size_t, std::size_t>> ordered_index_pairs(std::size_t n, std::size_t cap,
                                                                     std::uint64_t seed);

/// Number of unordered triples, saturating instead of overflowing.
std::uint64_t triple_count(std::size_t n);

}  // namespace coarselab
