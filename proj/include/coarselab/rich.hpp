#pragma once

#include <cstdint>
#include <vector>

#include "coarselab/graph.hpp"

namespace coarselab {

struct RichConstants {
    double r0 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
    double r4 = 0.0;
    double delta = 0.0;
};

/// r3 = 2 r1 + r2 + r0 + 1000 delta + 1 and r4 = 2 r1 + 3 r2 + r0 + 1000 delta + 1.
RichConstants derive_constants(double r0, double r1, double r2, double delta);

/// max{r1 + delta, r0}.
double pole_from_rich(double r0, double r1, double delta);

/// Stand-ins for bi-infinite geodesics: the lexicographic geodesic between
/// each unordered pair of distinct boundary representatives, in pair order
/// (i < j over the boundary list).
struct BoundaryGeodesics {
    std::vector<Vertex> boundary;
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    std::vector<Path> paths;
    /// dist[g][v] = d(v, paths[g]).
    std::vector<std::vector<int>> dist;
};

BoundaryGeodesics boundary_geodesics(const GeodesicGraph& graph, const std::vector<Vertex>& boundary);

struct RichSample {
    std::size_t cap = 200000;
    std::uint64_t seed = 1;
};

struct RichCase {
    /// Condition 1: the pair (p, q). Condition 2: the point p and geodesic index in `q`.
    Vertex p = 0;
    Vertex q = 0;
    /// Index of the witnessing geodesic, or -1 for a failure.
    int witness = -1;
    /// For failures, how far the best geodesic misses the strict bounds.
    double shortfall = 0.0;
};

struct RichWitnessReport {
    int condition = 1;
    std::size_t cases = 0;
    std::size_t skipped = 0;
    bool exhaustive = true;
    RichSample sample;
    std::size_t witnesses = 0;
    /// All failures, in case order.
    std::vector<RichCase> failures;
    /// Distinct p of the failures, sorted.
    std::vector<Vertex> failing_points;
    bool holds() const { return failures.empty(); }
};

/// Ordered pairs p != q with d(p, q) >= r0 need a geodesic g with
/// d(p, g) < r1 and |d(q, g) - d(p, q)| < r2.
RichWitnessReport check_condition1(const GeodesicGraph& graph, const BoundaryGeodesics& geodesics, double r0, double r1,
                                   double r2, const RichSample& sample);

/// Every (geodesic g, vertex p) needs a geodesic g' with d(p, g') < r3 and
/// |d(p, g) - d(g', g)| < r4.
RichWitnessReport check_condition2(const GeodesicGraph& graph, const BoundaryGeodesics& geodesics,
                                   const RichConstants& constants, const RichSample& sample);

}  // namespace coarselab
