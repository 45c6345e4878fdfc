#pragma once

#include <vector>

#include "coarselab/graph.hpp"
#include "coarselab/metric_space.hpp"

namespace coarselab {

inline constexpr std::size_t kDefaultPointCap = 4096;

struct CantorSpec {
    int depth = 1;
    double ratio = 1.0 / 3.0;
};

/// Endpoints of the 2^depth closed intervals left after `depth` rounds of
/// removing the middle (1 - 2*ratio) part of each interval of [0, 1]; there
/// are 2^(depth+1) of them. Labels are zero-padded so label order is
/// numeric order.
FiniteMetricSpace gen_cantor(const CantorSpec& spec, std::size_t point_cap = kDefaultPointCap);

/// The values the Cantor generator places, ascending.
std::vector<double> cantor_points(const CantorSpec& spec, std::size_t point_cap = kDefaultPointCap);

struct LacunarySpec {
    int n_min = 0;
    int n_max = 3;
};

/// x_n = 2^(2^n), evaluated in double precision. Throws InvalidArgument
/// naming n when the value is not representable.
double lacunary_value(int n);

/// The set {+-x_n : n_min <= n <= n_max} with the Euclidean metric, ascending.
FiniteMetricSpace gen_lacunary(const LacunarySpec& spec);

/// Vertex count of gen_tree(valence, depth), saturating at INT_MAX.
int tree_vertex_count(int valence, int depth);

/// Rooted regular tree in breadth-first numbering: the root 0 has `valence`
/// children, every other internal vertex has valence - 1 children, and all
/// leaves lie at distance `depth` from the root.
GeodesicGraph gen_tree(int valence, int depth, int vertex_cap = kDefaultVertexCap);

/// Vertices of a gen_tree graph at distance `depth` from the root.
std::vector<Vertex> tree_leaves(int valence, int depth);

struct CombSpec {
    int tree_valence = 3;
    int tree_depth = 3;
    std::vector<int> teeth;
};

struct CombGraph {
    GeodesicGraph graph;
    Vertex root = 0;
    /// The vertex every tooth is glued to: the first child of the root.
    Vertex attach = 1;
    int tree_size = 0;
    std::vector<Vertex> tree_leaves;
    /// teeth[n] runs from `attach` (index 0) to the tooth tip.
    std::vector<Path> teeth;
};

/// gen_tree plus one path of length teeth[n] per entry, each glued to the
/// tree at `attach` by its endpoint 0. Tooth vertices follow the tree's.
CombGraph gen_comb(const CombSpec& spec, int vertex_cap = kDefaultVertexCap);

}  // namespace coarselab
