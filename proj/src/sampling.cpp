#include "coarselab/sampling.hpp"

#include <algorithm>
#include <limits>

namespace coarselab {

std::uint64_t triple_count(std::size_t n) {
    if (n < 3) return 0;
    const long double c = static_cast<long double>(n) * (n - 1) * (n - 2) / 6.0L;
    if (c > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2)) {
        return std::numeric_limits<std::uint64_t>::max() / 2;
    }
    return static_cast<std::uint64_t>(n) * (n - 1) / 2 * (n - 2) / 3;
}

std::vector<std::array<std::size_t, 3>> index_triples(std::size_t n, std::size_t budget, std::uint64_t seed) {
    std::vector<std::array<std::size_t, 3>> out;
    if (n < 3) return out;
    if (triple_count(n) <= budget) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
        return out;
    }
    SeededSampler sampler(seed);
    out.reserve(budget);
    while (out.size() < budget) {
        std::array<std::size_t, 3> t{sampler.index(n), sampler.index(n), sampler.index(n)};
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ordered_index_pairs(std::size_t n, std::size_t cap,
                                                                     std::uint64_t seed) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (n < 2) return out;
    if (n * (n - 1) <= cap) {
        out.reserve(n * (n - 1));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) out.emplace_back(i, j);
        return out;
    }
    SeededSampler sampler(seed);
    out.reserve(cap);
    while (out.size() < cap) {
        const std::size_t i = sampler.index(n);
        const std::size_t j = sampler.index(n);
        if (i != j) out.emplace_back(i, j);
    }
    return out;
}

}  // namespace coarselab
