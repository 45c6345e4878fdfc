#include "coarselab/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "coarselab/error.hpp"
#include "coarselab/parallel.hpp"

namespace coarselab {

GeodesicGraph::GeodesicGraph(int vertex_count, std::vector<Edge> edges, int vertex_cap) {
    if (vertex_count < 1) throw InvalidArgument("graph needs at least one vertex");
    if (vertex_count > vertex_cap) {
        throw CapExceeded("graph has " + std::to_string(vertex_count) + " vertices, cap is " +
                          std::to_string(vertex_cap));
    }
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
            throw InvalidArgument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                  ") references a vertex outside [0, " + std::to_string(vertex_count) + ")");
        }
        if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.assign(vertex_count, {});
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    dist_ = all_pairs_distances(adjacency_, vertex_cap);
}

bool GeodesicGraph::adjacent(Vertex a, Vertex b) const noexcept {
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

int GeodesicGraph::diameter() const noexcept {
    int best = 0;
    for (Vertex v = 0; v < size(); ++v) {
        const auto row = dist_.row(v);
        best = std::max(best, *std::max_element(row.begin(), row.end()));
    }
    return best;
}

std::vector<int> bfs_distances(std::span<const std::vector<Vertex>> adjacency, Vertex source) {
    std::vector<int> dist(adjacency.size(), -1);
    std::vector<Vertex> queue;
    queue.reserve(adjacency.size());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (Vertex w : adjacency[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> multi_source_distances(const GeodesicGraph& graph, std::span<const Vertex> sources) {
    std::vector<int> dist(graph.size(), -1);
    std::vector<Vertex> queue;
    queue.reserve(graph.size());
    for (Vertex s : sources) {
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (Vertex w : graph.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(std::span<const std::vector<Vertex>> adjacency, int vertex_cap) {
    const int n = static_cast<int>(adjacency.size());
    if (n > vertex_cap) {
        throw CapExceeded("graph has " + std::to_string(n) + " vertices, cap is " + std::to_string(vertex_cap));
    }
    DistanceMatrix dist(n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t s) {
        const auto row = bfs_distances(adjacency, static_cast<Vertex>(s));
        std::copy(row.begin(), row.end(), dist.row(static_cast<Vertex>(s)).begin());
    });
    // Connectivity is decided by the first row alone.
    for (Vertex v = 0; v < n; ++v) {
        if (dist(0, v) < 0) throw DisconnectedGraph(0, v);
    }
    return dist;
}

Path shortest_geodesic(const GeodesicGraph& graph, Vertex x, Vertex y) {
    const int n = graph.size();
    if (x < 0 || y < 0 || x >= n || y >= n) {
        throw InvalidArgument("geodesic endpoints out of range");
    }
    Path path;
    path.vertices.reserve(graph.dist(x, y) + 1);
    path.vertices.push_back(x);
    Vertex current = x;
    while (current != y) {
        const int remaining = graph.dist(current, y);
        Vertex next = -1;
        for (Vertex w : graph.neighbors(current)) {
            if (graph.dist(w, y) == remaining - 1) {
                next = w;
                break;
            }
        }
        if (next < 0) throw DisconnectedGraph(x, y);
        path.vertices.push_back(next);
        current = next;
    }
    return path;
}

bool is_geodesic(const GeodesicGraph& graph, const Path& path) {
    if (path.vertices.empty()) return false;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!graph.adjacent(path[i - 1], path[i])) return false;
    }
    return graph.dist(path.front(), path.back()) == path.length();
}

std::vector<int> projection_indices(const GeodesicGraph& graph, const Path& segment, Vertex x) {
    const auto row = graph.distances().row(x);
    int best = std::numeric_limits<int>::max();
    for (Vertex v : segment.vertices) best = std::min(best, static_cast<int>(row[v]));
    std::vector<int> out;
    for (std::size_t i = 0; i < segment.size(); ++i) {
        if (row[segment[i]] == best) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<Vertex> projection_set(const GeodesicGraph& graph, const Path& segment, Vertex x) {
    std::vector<Vertex> out;
    for (int i : projection_indices(graph, segment, x)) out.push_back(segment[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int distance_to_set(const GeodesicGraph& graph, Vertex x, std::span<const Vertex> set) {
    const auto row = graph.distances().row(x);
    int best = std::numeric_limits<int>::max();
    for (Vertex v : set) best = std::min(best, static_cast<int>(row[v]));
    return best;
}

int set_distance(const GeodesicGraph& graph, std::span<const Vertex> a, std::span<const Vertex> b) {
    int best = std::numeric_limits<int>::max();
    for (Vertex v : a) best = std::min(best, distance_to_set(graph, v, b));
    return best;
}

std::vector<std::vector<Vertex>> biconnected_components(const GeodesicGraph& graph) {
    const int n = graph.size();
    std::vector<int> disc(n, -1), low(n, -1);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> blocks;
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    int timer = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        disc[root] = low[root] = timer++;
        if (graph.degree(root) == 0) {
            blocks.push_back({root});
            continue;
        }
        stack.push_back(root);
        std::vector<Frame> frames{{root, -1, 0}};
        while (!frames.empty()) {
            Frame& top = frames.back();
            const auto nbrs = graph.neighbors(top.v);
            if (top.next < nbrs.size()) {
                const Vertex w = nbrs[top.next++];
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                    frames.push_back({w, top.v, 0});
                } else if (w != top.parent) {
                    low[top.v] = std::min(low[top.v], disc[w]);
                }
                continue;
            }
            const Vertex v = top.v;
            frames.pop_back();
            if (frames.empty()) break;
            const Vertex u = frames.back().v;
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) {
                std::vector<Vertex> block;
                while (true) {
                    const Vertex w = stack.back();
                    stack.pop_back();
                    block.push_back(w);
                    if (w == v) break;
                }
                block.push_back(u);
                std::sort(block.begin(), block.end());
                blocks.push_back(std::move(block));
            }
        }
        stack.clear();
    }
    return blocks;
}

}  // namespace coarselab
