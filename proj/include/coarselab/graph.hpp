#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace coarselab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kDefaultVertexCap = 5000;

/// Dense all-pairs hop-distance matrix.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const noexcept { return n_; }
    int operator()(Vertex a, Vertex b) const noexcept { return data_[index(a, b)]; }
    int& at(Vertex a, Vertex b) noexcept { return data_[index(a, b)]; }
    std::span<const std::int32_t> row(Vertex a) const noexcept {
        return {data_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
    }
    std::span<std::int32_t> row(Vertex a) noexcept {
        return {data_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
    }

private:
    std::size_t index(Vertex a, Vertex b) const noexcept {
        return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
    }

    int n_ = 0;
    std::vector<std::int32_t> data_;
};

/// Connected graph with unit edge lengths and cached all-pairs distances.
///
/// Adjacency lists are sorted, duplicate edges collapse, and self-loops are
/// rejected. The object is immutable after construction.
class GeodesicGraph {
public:
    GeodesicGraph() = default;
    GeodesicGraph(int vertex_count, std::vector<Edge> edges, int vertex_cap = kDefaultVertexCap);

    int size() const noexcept { return static_cast<int>(adjacency_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
    int degree(Vertex v) const noexcept { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(Vertex a, Vertex b) const noexcept;

    int dist(Vertex a, Vertex b) const noexcept { return dist_(a, b); }
    const DistanceMatrix& distances() const noexcept { return dist_; }
    int diameter() const noexcept;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    DistanceMatrix dist_;
};

/// Vertex sequence of a walk in a graph; `length()` counts edges.
struct Path {
    std::vector<Vertex> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    Vertex operator[](std::size_t i) const { return vertices[i]; }
    std::size_t size() const noexcept { return vertices.size(); }
    bool operator==(const Path&) const = default;
};

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(std::span<const std::vector<Vertex>> adjacency, Vertex source);

/// Hop distances from every vertex to the nearest member of `sources` (-1 if unreachable).
std::vector<int> multi_source_distances(const GeodesicGraph& graph, std::span<const Vertex> sources);

/// All-pairs shortest paths by one BFS per source. Throws DisconnectedGraph
/// naming the first unreachable pair, or CapExceeded above `vertex_cap`.
DistanceMatrix all_pairs_distances(std::span<const std::vector<Vertex>> adjacency,
                                   int vertex_cap = kDefaultVertexCap);

/// Lexicographically least geodesic from x to y.
Path shortest_geodesic(const GeodesicGraph& graph, Vertex x, Vertex y);

/// True when consecutive vertices are adjacent and the length equals dist(front, back).
bool is_geodesic(const GeodesicGraph& graph, const Path& path);

/// Indices into `segment` of the vertices closest to x (sorted, nonempty).
std::vector<int> projection_indices(const GeodesicGraph& graph, const Path& segment, Vertex x);

/// The vertices of `segment` closest to x, sorted by vertex id.
std::vector<Vertex> projection_set(const GeodesicGraph& graph, const Path& segment, Vertex x);

/// min over members of `set` of dist(x, member).
int distance_to_set(const GeodesicGraph& graph, Vertex x, std::span<const Vertex> set);

/// Set distance min over pairs.
int set_distance(const GeodesicGraph& graph, std::span<const Vertex> a, std::span<const Vertex> b);

/// Vertex sets of the biconnected components (blocks) of the graph. Bridges
/// form two-vertex blocks; an isolated single vertex forms its own block.
std::vector<std::vector<Vertex>> biconnected_components(const GeodesicGraph& graph);

}  // namespace coarselab
