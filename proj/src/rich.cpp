#include "coarselab/rich.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coarselab/error.hpp"
#include "coarselab/parallel.hpp"
#include "coarselab/sampling.hpp"

namespace coarselab {

namespace {

void check_nonnegative(std::initializer_list<double> values) {
    for (double v : values)
        if (!(v >= 0.0)) throw InvalidArgument("richness constants must be nonnegative");
}

struct ChunkResult {
    std::size_t witnesses = 0;
    std::size_t skipped = 0;
    std::vector<RichCase> failures;
};

RichWitnessReport merge(int condition, std::size_t cases, bool exhaustive, const RichSample& sample,
                        std::vector<ChunkResult>& parts) {
    RichWitnessReport report;
    report.condition = condition;
    report.cases = cases;
    report.exhaustive = exhaustive;
    report.sample = sample;
    for (auto& part : parts) {
        report.witnesses += part.witnesses;
        report.skipped += part.skipped;
        report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
    }
    for (const auto& f : report.failures) report.failing_points.push_back(f.p);
    std::sort(report.failing_points.begin(), report.failing_points.end());
    report.failing_points.erase(std::unique(report.failing_points.begin(), report.failing_points.end()),
                                report.failing_points.end());
    return report;
}

}  // namespace

RichConstants derive_constants(double r0, double r1, double r2, double delta) {
    check_nonnegative({r0, r1, r2, delta});
    RichConstants c{r0, r1, r2, 0.0, 0.0, delta};
    c.r3 = 2.0 * r1 + r2 + r0 + 1000.0 * delta + 1.0;
    c.r4 = 2.0 * r1 + 3.0 * r2 + r0 + 1000.0 * delta + 1.0;
    return c;
}

double pole_from_rich(double r0, double r1, double delta) {
    check_nonnegative({r0, r1, delta});
    return std::max(r1 + delta, r0);
}

BoundaryGeodesics boundary_geodesics(const GeodesicGraph& graph, const std::vector<Vertex>& boundary) {
    if (boundary.size() < 2) throw InvalidArgument("richness checks need at least 2 boundary points");
    BoundaryGeodesics g;
    g.boundary = boundary;
    for (std::size_t i = 0; i < boundary.size(); ++i)
        for (std::size_t j = i + 1; j < boundary.size(); ++j)
            if (boundary[i] != boundary[j]) g.ends.emplace_back(i, j);
    g.paths.resize(g.ends.size());
    g.dist.resize(g.ends.size());
    parallel_for(g.ends.size(), [&](std::size_t k) {
        g.paths[k] = shortest_geodesic(graph, boundary[g.ends[k].first], boundary[g.ends[k].second]);
        g.dist[k] = multi_source_distances(graph, g.paths[k].vertices);
    });
    return g;
}

RichWitnessReport check_condition1(const GeodesicGraph& graph, const BoundaryGeodesics& geodesics, double r0, double r1,
                                   double r2, const RichSample& sample) {
    check_nonnegative({r0, r1, r2});
    const auto n = static_cast<std::size_t>(graph.size());
    const auto pairs = ordered_index_pairs(n, sample.cap, sample.seed);
    const bool exhaustive = pairs.size() == n * (n - 1);
    std::vector<ChunkResult> parts(chunk_count(pairs.size()));
    parallel_chunks(pairs.size(), [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        auto& part = parts[chunk];
        for (std::size_t c = begin; c < end; ++c) {
            const auto p = static_cast<Vertex>(pairs[c].first);
            const auto q = static_cast<Vertex>(pairs[c].second);
            const int dpq = graph.dist(p, q);
            if (dpq < r0) {
                ++part.skipped;
                continue;
            }
            int witness = -1;
            double shortfall = std::numeric_limits<double>::infinity();
            for (std::size_t g = 0; g < geodesics.paths.size(); ++g) {
                const double a = geodesics.dist[g][p];
                const double b = std::abs(geodesics.dist[g][q] - dpq);
                if (a < r1 && b < r2) {
                    witness = static_cast<int>(g);
                    break;
                }
                shortfall = std::min(shortfall, std::max(a - r1, b - r2));
            }
            if (witness >= 0) {
                ++part.witnesses;
            } else {
                part.failures.push_back({p, q, -1, shortfall});
            }
        }
    });
    return merge(1, pairs.size(), exhaustive, sample, parts);
}

RichWitnessReport check_condition2(const GeodesicGraph& graph, const BoundaryGeodesics& geodesics,
                                   const RichConstants& constants, const RichSample& sample) {
    const std::size_t G = geodesics.paths.size();
    const auto n = static_cast<std::size_t>(graph.size());
    // Set distances between geodesics.
    std::vector<int> between(G * G, 0);
    parallel_for(G, [&](std::size_t a) {
        for (std::size_t b = 0; b < G; ++b) {
            int best = std::numeric_limits<int>::max();
            for (Vertex v : geodesics.paths[b].vertices) best = std::min(best, geodesics.dist[a][v]);
            between[a * G + b] = best;
        }
    });

    std::vector<std::pair<std::size_t, std::size_t>> cases;
    const bool exhaustive = G * n <= sample.cap;
    if (exhaustive) {
        for (std::size_t g = 0; g < G; ++g)
            for (std::size_t p = 0; p < n; ++p) cases.emplace_back(g, p);
    } else {
        SeededSampler sampler(sample.seed);
        for (std::size_t k = 0; k < sample.cap; ++k) {
            const std::size_t g = sampler.index(G);
            cases.emplace_back(g, sampler.index(n));
        }
    }
    std::vector<ChunkResult> parts(chunk_count(cases.size()));
    parallel_chunks(cases.size(), [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        auto& part = parts[chunk];
        for (std::size_t c = begin; c < end; ++c) {
            const std::size_t g = cases[c].first;
            const auto p = static_cast<Vertex>(cases[c].second);
            const double dpg = geodesics.dist[g][p];
            int witness = -1;
            double shortfall = std::numeric_limits<double>::infinity();
            for (std::size_t h = 0; h < G; ++h) {
                const double a = geodesics.dist[h][p];
                const double b = std::abs(dpg - between[h * G + g]);
                if (a < constants.r3 && b < constants.r4) {
                    witness = static_cast<int>(h);
                    break;
                }
                shortfall = std::min(shortfall, std::max(a - constants.r3, b - constants.r4));
            }
            if (witness >= 0) {
                ++part.witnesses;
            } else {
                part.failures.push_back({p, static_cast<Vertex>(g), -1, shortfall});
            }
        }
    });
    return merge(2, cases.size(), exhaustive, sample, parts);
}

}  // namespace coarselab
