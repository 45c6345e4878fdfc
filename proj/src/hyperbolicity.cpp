#include "coarselab/hyperbolicity.hpp"

#include <algorithm>
#include <limits>

#include "coarselab/error.hpp"
#include "coarselab/parallel.hpp"
#include "coarselab/sampling.hpp"

namespace coarselab {

namespace {

// Returns twice the four-point constant so integer metrics stay exact.
template <typename Value, typename DistFn>
Value doubled_four_point(std::size_t n, DistFn dist) {
    if (n < 4) return Value{0};
    std::vector<Value> partial(chunk_count(n), Value{0});
    parallel_chunks(n, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        Value best{0};
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const Value dij = dist(i, j);
                for (std::size_t k = j + 1; k < n; ++k) {
                    const Value dik = dist(i, k);
                    const Value djk = dist(j, k);
                    for (std::size_t l = k + 1; l < n; ++l) {
                        Value s1 = dij + dist(k, l);
                        Value s2 = dik + dist(j, l);
                        Value s3 = dist(i, l) + djk;
                        if (s1 < s2) std::swap(s1, s2);
                        if (s2 < s3) std::swap(s2, s3);
                        if (s1 < s2) std::swap(s1, s2);
                        best = std::max(best, s1 - s2);
                    }
                }
            }
        }
        partial[chunk] = best;
    });
    return partial.empty() ? Value{0} : *std::max_element(partial.begin(), partial.end());
}

}  // namespace

double four_point_delta(const FiniteMetricSpace& space) {
    return 0.5 * doubled_four_point<double>(space.size(),
                                            [&](std::size_t a, std::size_t b) { return space.dist(a, b); });
}

double four_point_delta(const DistanceMatrix& dist) {
    return 0.5 * doubled_four_point<long>(static_cast<std::size_t>(dist.size()), [&](std::size_t a, std::size_t b) {
               return static_cast<long>(dist(static_cast<Vertex>(a), static_cast<Vertex>(b)));
           });
}

double four_point_delta(const GeodesicGraph& graph) {
    long best = 0;
    for (const auto& block : biconnected_components(graph)) {
        if (block.size() < 4) continue;
        best = std::max(best, doubled_four_point<long>(block.size(), [&](std::size_t a, std::size_t b) {
                            return static_cast<long>(graph.dist(block[a], block[b]));
                        }));
    }
    return 0.5 * static_cast<double>(best);
}

GeodesicTriangle make_triangle(const GeodesicGraph& graph, Vertex x, Vertex y, Vertex z) {
    return GeodesicTriangle{{x, y, z},
                            shortest_geodesic(graph, x, y),
                            shortest_geodesic(graph, y, z),
                            shortest_geodesic(graph, x, z)};
}

std::vector<std::array<Vertex, 3>> sample_triples(int vertex_count, const SampleSpec& spec) {
    std::vector<std::array<Vertex, 3>> triples;
    if (vertex_count < 3) return triples;
    if (vertex_count <= spec.exhaustive_cap) {
        for (Vertex x = 0; x < vertex_count; ++x)
            for (Vertex y = x + 1; y < vertex_count; ++y)
                for (Vertex z = y + 1; z < vertex_count; ++z) triples.push_back({x, y, z});
        return triples;
    }
    if (spec.triangles < 0) throw InvalidArgument("triangle count must be nonnegative");
    SeededSampler sampler(spec.seed);
    const auto n = static_cast<std::size_t>(vertex_count);
    triples.reserve(spec.triangles);
    while (static_cast<int>(triples.size()) < spec.triangles) {
        const auto x = static_cast<Vertex>(sampler.index(n));
        const auto y = static_cast<Vertex>(sampler.index(n));
        const auto z = static_cast<Vertex>(sampler.index(n));
        if (x == y || y == z || x == z) continue;
        triples.push_back({x, y, z});
    }
    return triples;
}

int triangle_rips_width(const GeodesicGraph& graph, const GeodesicTriangle& t) {
    const Path* sides[3] = {&t.xy, &t.yz, &t.xz};
    int width = 0;
    for (int s = 0; s < 3; ++s) {
        const Path& a = *sides[(s + 1) % 3];
        const Path& b = *sides[(s + 2) % 3];
        for (Vertex p : sides[s]->vertices) {
            const int d = std::min(distance_to_set(graph, p, a.vertices), distance_to_set(graph, p, b.vertices));
            width = std::max(width, d);
        }
    }
    return width;
}

int triangle_thin_width(const GeodesicGraph& graph, const GeodesicTriangle& t) {
    const auto [x, y, z] = t.corners;
    // Twice the internal-point distances; all three share parity.
    const int a2 = graph.dist(x, y) + graph.dist(x, z) - graph.dist(y, z);
    const int b2 = graph.dist(x, y) + graph.dist(y, z) - graph.dist(x, z);
    const int c2 = graph.dist(x, z) + graph.dist(y, z) - graph.dist(x, y);
    const int lxy = t.xy.length();
    const int lyz = t.yz.length();
    const int lxz = t.xz.length();
    int width = 0;
    auto fiber = [&](Vertex p, Vertex q) { width = std::max(width, graph.dist(p, q)); };
    for (int s = 0; 2 * s <= a2; ++s) fiber(t.xy[s], t.xz[s]);
    for (int s = 0; 2 * s <= b2; ++s) fiber(t.xy[lxy - s], t.yz[s]);
    for (int s = 0; 2 * s <= c2; ++s) fiber(t.yz[lyz - s], t.xz[lxz - s]);
    if (a2 % 2 == 0) {
        // Center of the tripod: one vertex on each side.
        const Vertex p = t.xy[a2 / 2];
        const Vertex q = t.yz[b2 / 2];
        const Vertex r = t.xz[a2 / 2];
        fiber(p, q);
        fiber(q, r);
        fiber(p, r);
    }
    return width;
}

namespace {

template <typename Width>
double sampled_max(const GeodesicGraph& graph, const SampleSpec& spec, Width width) {
    const auto triples = sample_triples(graph.size(), spec);
    std::vector<int> partial(chunk_count(triples.size()), 0);
    parallel_chunks(triples.size(), [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        int best = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const auto& [x, y, z] = triples[i];
            best = std::max(best, width(graph, make_triangle(graph, x, y, z)));
        }
        partial[chunk] = best;
    });
    return partial.empty() ? 0.0 : static_cast<double>(*std::max_element(partial.begin(), partial.end()));
}

}  // namespace

double rips_delta(const GeodesicGraph& graph, const SampleSpec& spec) {
    return sampled_max(graph, spec, triangle_rips_width);
}

double thin_delta(const GeodesicGraph& graph, const SampleSpec& spec) {
    return sampled_max(graph, spec, triangle_thin_width);
}

HyperbolicityReport analyze_hyperbolicity(const GeodesicGraph& graph, const SampleSpec& spec) {
    HyperbolicityReport report;
    report.sample_spec = spec;
    report.exhaustive = graph.size() <= spec.exhaustive_cap;
    report.delta_four_point = four_point_delta(graph);
    report.delta_rips = rips_delta(graph, spec);
    report.delta_thin = thin_delta(graph, spec);
    return report;
}

}  // namespace coarselab
