#include "coarselab/centroids.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "coarselab/error.hpp"
#include "coarselab/parallel.hpp"
#include "coarselab/sampling.hpp"

namespace coarselab {

namespace {

void check_params(const CentroidParams& params) {
    if (params.K != 1.0 || params.C != 0.0) {
        throw InvalidArgument("only the geodesic instantiation K = 1, C = 0 is supported");
    }
    if (!(params.rho >= 0.0)) throw InvalidArgument("rho must be nonnegative");
}

// Vertices whose distances to all three sides are at most rho.
std::vector<Vertex> within_all(const std::array<const std::vector<int>*, 3>& dist, double rho) {
    std::vector<Vertex> members;
    const auto n = static_cast<Vertex>(dist[0]->size());
    for (Vertex v = 0; v < n; ++v) {
        if ((*dist[0])[v] <= rho && (*dist[1])[v] <= rho && (*dist[2])[v] <= rho) members.push_back(v);
    }
    return members;
}

}  // namespace

std::vector<Vertex> centroid_members(const GeodesicGraph& graph, const std::array<const Path*, 3>& sides,
                                     double rho) {
    const auto d0 = multi_source_distances(graph, sides[0]->vertices);
    const auto d1 = multi_source_distances(graph, sides[1]->vertices);
    const auto d2 = multi_source_distances(graph, sides[2]->vertices);
    return within_all({&d0, &d1, &d2}, rho);
}

CentroidSet quasi_centroids(const GeodesicGraph& graph, const std::array<Vertex, 3>& triple,
                            const CentroidParams& params) {
    check_params(params);
    const auto [a, b, c] = triple;
    if (a == b || b == c || a == c) throw InvalidArgument("centroid triple repeats a boundary point");
    const Path ab = shortest_geodesic(graph, a, b);
    const Path bc = shortest_geodesic(graph, b, c);
    const Path ac = shortest_geodesic(graph, a, c);
    CentroidSet set{triple, centroid_members(graph, {&ab, &bc, &ac}, params.rho), 0};
    if (!set.members.empty()) set.diameter = centroid_diameter(graph, set.members);
    return set;
}

int centroid_diameter(const GeodesicGraph& graph, const std::vector<Vertex>& members) {
    if (members.empty()) throw InvalidArgument("centroid set is empty");
    int best = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) best = std::max(best, graph.dist(members[i], members[j]));
    return best;
}

bool meets_all_sides(const CentroidSet& set, const GeodesicGraph& graph) {
    const auto [a, b, c] = set.triple;
    for (const Path& side : {shortest_geodesic(graph, a, b), shortest_geodesic(graph, b, c),
                             shortest_geodesic(graph, a, c)}) {
        const bool hit = std::any_of(set.members.begin(), set.members.end(), [&](Vertex v) {
            return std::find(side.vertices.begin(), side.vertices.end(), v) != side.vertices.end();
        });
        if (!hit) return false;
    }
    return true;
}

CoverageReport centroid_coverage(const GeodesicGraph& graph, const std::vector<Vertex>& boundary,
                                 const CentroidParams& params, const TripleSample& sample) {
    check_params(params);
    if (boundary.size() < 3) throw InvalidArgument("centroid coverage needs at least 3 boundary points");
    for (std::size_t i = 0; i < boundary.size(); ++i)
        for (std::size_t j = i + 1; j < boundary.size(); ++j)
            if (boundary[i] == boundary[j]) throw InvalidArgument("boundary points must be distinct");

    CoverageReport report;
    report.params = params;
    report.sample = sample;
    report.exhaustive = triple_count(boundary.size()) <= sample.budget;
    const auto triples = index_triples(boundary.size(), sample.budget, sample.seed);
    report.triples = triples.size();

    // Distance fields of the geodesics between representative pairs, one per
    // pair that occurs in some triple.
    const std::size_t nb = boundary.size();
    std::vector<int> slot(nb * nb, -1);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& t : triples) {
        for (auto [i, j] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}}) {
            if (slot[i * nb + j] < 0) {
                slot[i * nb + j] = static_cast<int>(pairs.size());
                pairs.emplace_back(i, j);
            }
        }
    }
    std::vector<Path> sides(pairs.size());
    std::vector<std::vector<int>> fields(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t p) {
        sides[p] = shortest_geodesic(graph, boundary[pairs[p].first], boundary[pairs[p].second]);
        fields[p] = multi_source_distances(graph, sides[p].vertices);
    });

    const std::size_t chunks = chunk_count(triples.size());
    std::vector<std::vector<char>> covered(chunks, std::vector<char>(graph.size(), 0));
    std::vector<std::size_t> empty(chunks, 0), misses(chunks, 0);
    std::vector<int> diam(chunks, 0);
    parallel_chunks(triples.size(), [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        for (std::size_t t = begin; t < end; ++t) {
            const auto& tri = triples[t];
            const int s0 = slot[tri[0] * nb + tri[1]];
            const int s1 = slot[tri[1] * nb + tri[2]];
            const int s2 = slot[tri[0] * nb + tri[2]];
            const auto members = within_all({&fields[s0], &fields[s1], &fields[s2]}, params.rho);
            if (members.empty()) {
                ++empty[chunk];
                ++misses[chunk];
                continue;
            }
            for (Vertex v : members) covered[chunk][v] = 1;
            diam[chunk] = std::max(diam[chunk], centroid_diameter(graph, members));
            for (int s : {s0, s1, s2}) {
                const bool hit = std::any_of(members.begin(), members.end(), [&](Vertex v) { return fields[s][v] == 0; });
                if (!hit) {
                    ++misses[chunk];
                    break;
                }
            }
        }
    });

    std::vector<Vertex> sources;
    for (Vertex v = 0; v < graph.size(); ++v) {
        if (std::any_of(covered.begin(), covered.end(), [&](const auto& c) { return c[v] != 0; })) sources.push_back(v);
    }
    for (std::size_t c = 0; c < chunks; ++c) {
        report.empty_sets += empty[c];
        report.side_misses += misses[c];
        report.max_diameter = std::max(report.max_diameter, diam[c]);
    }
    if (sources.empty()) {
        report.M = -1;
        return report;
    }
    const auto dist = multi_source_distances(graph, sources);
    const auto it = std::max_element(dist.begin(), dist.end());
    report.M = *it;
    report.argmax = static_cast<Vertex>(it - dist.begin());
    return report;
}

bool projection_centroid_check(const GeodesicGraph& graph, const Path& segment, Vertex x, double delta) {
    const Vertex y = segment.front();
    const Vertex z = segment.back();
    const Path xy = shortest_geodesic(graph, x, y);
    const Path xz = shortest_geodesic(graph, x, z);
    const auto members = centroid_members(graph, {&xy, &segment, &xz}, 10.0 * delta);
    for (Vertex p : projection_set(graph, segment, x)) {
        if (!std::binary_search(members.begin(), members.end(), p)) return false;
    }
    return true;
}

}  // namespace coarselab
