#pragma once

#include <string>
#include <vector>

#include "coarselab/graph.hpp"
#include "coarselab/metric_space.hpp"

namespace coarselab {

struct FillingParams {
    double r = 0.5;
    int max_level = 5;
    double ball_factor = 2.0;
};

/// One vertex of the filling: the ball of radius `radius` about point
/// `center` of Z at level `level`.
struct FillingVertex {
    int level = 0;
    std::size_t center = 0;
    double radius = 0.0;
};

struct FillingGraph {
    GeodesicGraph graph;
    FiniteMetricSpace space;
    FillingParams params;
    std::vector<FillingVertex> meta;
    Vertex root = 0;
    std::vector<Vertex> leaves;
    /// First vertex id of each level, plus a final sentinel.
    std::vector<Vertex> level_start;
};

/// Greedy maximal `separation`-separated subset: points are visited in label
/// order and kept when farther than `separation` from every point kept so far.
std::vector<std::size_t> greedy_net(const FiniteMetricSpace& space, double separation);

/// Hyperbolic approximation of `space`. Level n holds one vertex per point
/// of a greedy r^n*diam-separated net, with ball radius
/// ball_factor*r^n*diam. Vertices on the same or adjacent levels are joined
/// when their balls share a point of Z.
FillingGraph build_filling(const FiniteMetricSpace& space, const FillingParams& params,
                           int vertex_cap = kDefaultVertexCap);

/// Smallest L such that every vertex lies within L of the lexicographic
/// geodesic from `root` to some leaf.
int pole_radius(const GeodesicGraph& graph, Vertex root, const std::vector<Vertex>& leaves);

struct BoundaryApprox {
    std::vector<Vertex> reps;
    /// Label of the point of Z each representative stands for (empty when
    /// the graph did not come from a filling).
    std::vector<std::string> labels;
};

/// Filling leaves as boundary representatives, tagged with their centers.
BoundaryApprox leaf_boundary(const FillingGraph& filling);

}  // namespace coarselab
