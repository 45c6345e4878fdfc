#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coarselab/centroids.hpp"
#include "coarselab/generators.hpp"
#include "coarselab/graph.hpp"

namespace coarselab {

/// The piecewise-linear bijection of [0, l]: slope 2 up to l/3, slope 1/2 after.
double phi_l(double t, double l);

/// A self-map of the vertex set of a graph.
struct VertexMap {
    std::vector<Vertex> image;
    /// Vertices the map is allowed to move; everything else is fixed by construction.
    std::vector<char> support;
    int displacement = 0;
    bool fitted = false;
    double K = 1.0;
    double C = 0.0;
    /// Largest displacement among vertices far from every schedule segment.
    int boundary_moved = 0;
};

VertexMap identity_map(const GeodesicGraph& graph);
int displacement(const GeodesicGraph& graph, const std::vector<Vertex>& image);

/// X_y(R) and X_z(R): vertices whose whole projection set onto the segment
/// lies in the closed R-ball about y (respectively z). Sorted vertex ids.
struct NearSets {
    std::vector<Vertex> near_y;
    std::vector<Vertex> near_z;
};

NearSets near_sets(const GeodesicGraph& graph, const Path& segment, double R);

struct SegmentSchedule {
    std::vector<Path> segments;
    int L = 0;
    double delta = 0.0;
    double D = 1.0;
    std::size_t count_target = 0;
    /// Fewer than count_target segments were found.
    bool exhausted = false;

    double separation() const { return 10.0 * L + 10.0 * delta + 1.0; }
    double min_length() const { return 100.0 * D; }
};

/// Greedy search along the rays [root, leaf], in boundary order, for
/// stretches between consecutive boundary projections. Each accepted segment
/// keeps the ray's orientation (y nearer the root), is trimmed at the y end to
/// stay 10L + 10*delta + 1 away from earlier segments, is at least 100D long,
/// and has every boundary projection within D of an endpoint. The result is
/// sorted by length with repeated lengths dropped.
SegmentSchedule find_segments(const GeodesicGraph& graph, Vertex root, const std::vector<Vertex>& boundary, int L,
                              double delta, double D, std::size_t count_target);

/// Violations of the schedule invariants (empty when all hold).
std::vector<std::string> schedule_violations(const GeodesicGraph& graph, const SegmentSchedule& schedule,
                                             Vertex root, const std::vector<Vertex>& boundary);

/// Chart of [y', z'], the part of the segment outside the closed
/// 3D-neighbourhoods of its ends, as indices into the segment.
struct PhiChart {
    int y_index = 0;
    int z_index = 0;
    int length() const { return z_index - y_index; }
};

PhiChart phi_chart(const Path& segment, double D);

/// Identity on X_y(3D) and X_z(3D); any other x goes to the chart point
/// round(phi_l(t)) where t is the chart coordinate of the least-id
/// projection of x inside [y', z']. Halves round toward y'.
VertexMap build_phi_segment(const GeodesicGraph& graph, const Path& segment, double D);

/// Composite of the single-segment maps after checking that their supports
/// are pairwise disjoint; throws InvariantViolation otherwise.
VertexMap compose_maps(const GeodesicGraph& graph, const std::vector<VertexMap>& factors);
VertexMap compose_schedule(const GeodesicGraph& graph, const SegmentSchedule& schedule);

struct PairSample {
    std::size_t cap = 2000000;
    std::uint64_t seed = 1;
};

struct QiFit {
    double K = 1.0;
    double C = 0.0;
    std::size_t pairs = 0;
    bool exhaustive = true;
};

/// Sweeps K over 1, 1.25, ..., 8; for each K the smallest C with
/// d/K - C <= d' <= K d + C on every sampled pair; returns the pair with the
/// smallest C, then the smallest K. Pairs of fixed vertices satisfy both
/// bounds with C = 0 and are skipped, so "exhaustive" means every pair with
/// at least one moved vertex.
QiFit fit_qi_constants(const GeodesicGraph& graph, const std::vector<Vertex>& image, const PairSample& sample);

/// Largest displacement among vertices farther than `threshold` from every segment.
int far_vertex_displacement(const GeodesicGraph& graph, const std::vector<Vertex>& image,
                            const std::vector<Path>& segments, double threshold);

/// Max over vertices of the distance to the image of the map.
int image_covering_radius(const GeodesicGraph& graph, const std::vector<Vertex>& image);

struct GapThreshold {
    bool found = false;
    int n0 = 0;
};

/// Least n0 in the range with x_{m+1} - x_m > K (x_{n+1} - x_n) + C for all
/// gap indices m > n >= n0. An n0 must leave at least one such pair.
GapThreshold lacunary_gap_threshold(double K, double C, const LacunarySpec& spec);

/// Fixes the tree; vertex k of tooth n goes to vertex round(k * target / len)
/// of the same tooth, clamped to the tip. Teeth absent from the plan stay put.
VertexMap comb_stretch_map(const CombGraph& comb, const std::map<std::size_t, int>& plan);

/// max{D0, 10 * delta}.
double default_D(double D0, double delta);

struct SegmentReport {
    int length = 0;
    int chart_length = 0;
    int displacement = 0;
    QiFit fit;
};

struct RigidityReport {
    SegmentSchedule schedule;
    std::vector<SegmentReport> per_segment;
    int composite_displacement = 0;
    QiFit composite_fit;
    bool far_vertex_fixing = true;
    int boundary_moved = 0;
};

RigidityReport analyze_rigidity(const GeodesicGraph& graph, const SegmentSchedule& schedule, const PairSample& sample);

}  // namespace coarselab
