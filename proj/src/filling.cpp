#include "coarselab/filling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "coarselab/error.hpp"
#include "coarselab/parallel.hpp"

namespace coarselab {

std::vector<std::size_t> greedy_net(const FiniteMetricSpace& space, double separation) {
    std::vector<std::size_t> net;
    const double threshold = separation * (1.0 + kMetricTolerance);
    for (std::size_t p : space.label_order()) {
        bool far = true;
        for (std::size_t q : net) {
            if (space.dist(p, q) <= threshold) {
                far = false;
                break;
            }
        }
        if (far) net.push_back(p);
    }
    return net;
}

FillingGraph build_filling(const FiniteMetricSpace& space, const FillingParams& params, int vertex_cap) {
    if (space.size() < 2) throw InvalidArgument("filling needs a space with at least 2 points");
    if (!(params.r > 0.0 && params.r <= 0.5)) throw InvalidArgument("filling ratio r must lie in (0, 1/2]");
    if (params.max_level < 1) throw InvalidArgument("max_level must be at least 1");
    if (!(params.ball_factor >= 1.0)) throw InvalidArgument("ball_factor must be at least 1");

    const double diam = space.diameter();
    const std::size_t n = space.size();
    const std::size_t words = (n + 63) / 64;

    FillingGraph out;
    out.space = space;
    out.params = params;
    for (int level = 0; level <= params.max_level; ++level) {
        const double scale = std::pow(params.r, level) * diam;
        const auto net = greedy_net(space, scale);
        out.level_start.push_back(static_cast<Vertex>(out.meta.size()));
        if (out.meta.size() + net.size() > static_cast<std::size_t>(vertex_cap)) {
            throw CapExceeded("filling exceeds " + std::to_string(vertex_cap) + " vertices at level " +
                              std::to_string(level));
        }
        for (std::size_t c : net) out.meta.push_back({level, c, params.ball_factor * scale});
    }
    out.level_start.push_back(static_cast<Vertex>(out.meta.size()));

    // Point sets of the balls, as bitsets over Z.
    const std::size_t count = out.meta.size();
    std::vector<std::uint64_t> balls(count * words, 0);
    parallel_for(count, [&](std::size_t v) {
        const auto& m = out.meta[v];
        const double reach = m.radius * (1.0 + kMetricTolerance);
        for (std::size_t z = 0; z < n; ++z) {
            if (space.dist(m.center, z) <= reach) balls[v * words + z / 64] |= std::uint64_t{1} << (z % 64);
        }
    });
    auto meets = [&](std::size_t a, std::size_t b) {
        for (std::size_t w = 0; w < words; ++w)
            if (balls[a * words + w] & balls[b * words + w]) return true;
        return false;
    };

    std::vector<std::vector<Edge>> per_vertex(count);
    parallel_for(count, [&](std::size_t a) {
        const int level = out.meta[a].level;
        const auto last = static_cast<std::size_t>(out.level_start[std::min(level + 2, params.max_level + 1)]);
        for (std::size_t b = a + 1; b < last; ++b) {
            if (meets(a, b)) per_vertex[a].emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
    });
    std::vector<Edge> edges;
    for (auto& list : per_vertex) edges.insert(edges.end(), list.begin(), list.end());

    out.graph = GeodesicGraph(static_cast<int>(count), std::move(edges), vertex_cap);
    out.root = 0;
    for (Vertex v = out.level_start[params.max_level]; v < out.level_start[params.max_level + 1]; ++v) {
        out.leaves.push_back(v);
    }
    return out;
}

int pole_radius(const GeodesicGraph& graph, Vertex root, const std::vector<Vertex>& leaves) {
    if (leaves.empty()) throw InvalidArgument("pole radius needs at least one leaf");
    std::vector<char> on_ray(graph.size(), 0);
    for (Vertex leaf : leaves) {
        for (Vertex v : shortest_geodesic(graph, root, leaf).vertices) on_ray[v] = 1;
    }
    std::vector<Vertex> sources;
    for (Vertex v = 0; v < graph.size(); ++v)
        if (on_ray[v]) sources.push_back(v);
    const auto dist = multi_source_distances(graph, sources);
    return *std::max_element(dist.begin(), dist.end());
}

BoundaryApprox leaf_boundary(const FillingGraph& filling) {
    BoundaryApprox b;
    b.reps = filling.leaves;
    for (Vertex v : filling.leaves) b.labels.push_back(filling.space.label(filling.meta[v].center));
    return b;
}

}  // namespace coarselab
