#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "coarselab/graph.hpp"
#include "coarselab/metric_space.hpp"

namespace coarselab {

/// (x|y)_w = (d(x,w) + d(y,w) - d(x,y)) / 2.
template <typename Metric>
double gromov_product(const Metric& dist, std::size_t w, std::size_t x, std::size_t y) {
    return 0.5 * (static_cast<double>(dist(x, w)) + static_cast<double>(dist(y, w)) -
                  static_cast<double>(dist(x, y)));
}

inline double gromov_product(const GeodesicGraph& graph, Vertex w, Vertex x, Vertex y) {
    return gromov_product(graph.distances(), static_cast<std::size_t>(w), static_cast<std::size_t>(x),
                          static_cast<std::size_t>(y));
}

/// Exact four-point constant: the maximum over quadruples of half the gap
/// between the largest and second-largest of the three pair sums.
double four_point_delta(const FiniteMetricSpace& space);
double four_point_delta(const DistanceMatrix& dist);

/// Four-point constant of a graph metric. Shortest paths between vertices of
/// a block never leave it and the constant of a graph is the maximum over its
/// biconnected components, so the quartic scan runs block by block.
double four_point_delta(const GeodesicGraph& graph);

/// Triangle sampling for the Rips and thin constants. Graphs with at most
/// `exhaustive_cap` vertices are scanned over every triple of distinct vertices.
struct SampleSpec {
    int triangles = 2000;
    std::uint64_t seed = 1;
    int exhaustive_cap = 60;
};

/// A geodesic triangle on vertices (x, y, z) with the lexicographic sides
/// [x,y], [y,z] and [x,z].
struct GeodesicTriangle {
    std::array<Vertex, 3> corners;
    Path xy;
    Path yz;
    Path xz;
};

GeodesicTriangle make_triangle(const GeodesicGraph& graph, Vertex x, Vertex y, Vertex z);

/// The triples scanned for `spec`: every triple of distinct vertices in
/// increasing order when the graph is small, otherwise a seeded sample.
std::vector<std::array<Vertex, 3>> sample_triples(int vertex_count, const SampleSpec& spec);

/// Largest distance from a vertex of one side to the union of the other two.
int triangle_rips_width(const GeodesicGraph& graph, const GeodesicTriangle& triangle);

/// Largest diameter of a fiber of the comparison-tripod map, restricted to
/// the tripod points hit by vertices.
int triangle_thin_width(const GeodesicGraph& graph, const GeodesicTriangle& triangle);

double rips_delta(const GeodesicGraph& graph, const SampleSpec& spec);
double thin_delta(const GeodesicGraph& graph, const SampleSpec& spec);

struct HyperbolicityReport {
    double delta_four_point = 0.0;
    double delta_rips = 0.0;
    double delta_thin = 0.0;
    SampleSpec sample_spec;
    bool exhaustive = false;
};

HyperbolicityReport analyze_hyperbolicity(const GeodesicGraph& graph, const SampleSpec& spec);

}  // namespace coarselab
