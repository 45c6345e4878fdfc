#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "coarselab/graph.hpp"

namespace coarselab {

/// Only the geodesic instantiation K = 1, C = 0 is computed. Since every
/// geodesic is a (K, C)-quasi-geodesic, the result is an inner
/// approximation of the set for any larger K, C.
struct CentroidParams {
    double K = 1.0;
    double C = 0.0;
    double rho = 0.0;
};

struct CentroidSet {
    std::array<Vertex, 3> triple{};
    std::vector<Vertex> members;
    int diameter = 0;
};

/// Vertices within rho of each of the lexicographic geodesics between the
/// three representatives.
CentroidSet quasi_centroids(const GeodesicGraph& graph, const std::array<Vertex, 3>& triple,
                            const CentroidParams& params);

/// Same, with the three sides supplied by the caller.
std::vector<Vertex> centroid_members(const GeodesicGraph& graph, const std::array<const Path*, 3>& sides,
                                     double rho);

/// Largest pairwise distance among members; throws on an empty set.
int centroid_diameter(const GeodesicGraph& graph, const std::vector<Vertex>& members);

/// True when the set contains a vertex of each of the three sides.
bool meets_all_sides(const CentroidSet& set, const GeodesicGraph& graph);

struct TripleSample {
    std::size_t budget = 2000;
    std::uint64_t seed = 1;
};

struct CoverageReport {
    CentroidParams params;
    TripleSample sample;
    bool exhaustive = false;
    bool inner_approximation = true;
    std::size_t triples = 0;
    std::size_t empty_sets = 0;
    /// Triples whose set misses one of the three sides.
    std::size_t side_misses = 0;
    int max_diameter = 0;
    /// Max over vertices of the distance to the union of all centroid sets
    /// (-1 when every set is empty).
    int M = 0;
    Vertex argmax = 0;
};

CoverageReport centroid_coverage(const GeodesicGraph& graph, const std::vector<Vertex>& boundary,
                                 const CentroidParams& params, const TripleSample& sample);

/// True when every vertex of proj_segment(x) lies in the centroid set of
/// {x, y, z} at rho = 10*delta, where y and z are the ends of `segment` and
/// `segment` itself serves as the side [y, z].
bool projection_centroid_check(const GeodesicGraph& graph, const Path& segment, Vertex x, double delta);

}  // namespace coarselab
