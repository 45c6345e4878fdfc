#pragma once

#include <limits>
#include <vector>

#include "coarselab/graph.hpp"
#include "coarselab/metric_space.hpp"

namespace coarselab {

/// Dense square matrix of reals, row-major.
struct SquareMatrix {
    std::size_t n = 0;
    std::vector<double> values;

    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size) : n(size), values(size * size, 0.0) {}
    double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * n + j]; }
};

/// Gromov products (xi|zeta)_w between boundary representatives. Diagonal
/// entries hold d(xi, w), the finite stand-in for an infinite product.
struct GromovProductTable {
    Vertex basepoint = 0;
    std::vector<Vertex> reps;
    SquareMatrix values;
};

GromovProductTable boundary_products(const GeodesicGraph& graph, const std::vector<Vertex>& reps, Vertex w);

struct VisualMetricParams {
    Vertex w = 0;
    double epsilon = 0.1;
};

/// Exclusive upper bound min{1, 1/(5*max(delta, 1))} for the visual parameter.
double epsilon_bound(double delta);
/// Half of epsilon_bound(delta).
double default_epsilon(double delta);

/// exp(-epsilon * product) off the diagonal, 0 on it, for any epsilon.
SquareMatrix rho_values(const GromovProductTable& table, double epsilon);

/// rho_values after checking epsilon lies in (0, epsilon_bound(delta)).
SquareMatrix rho_matrix(const GromovProductTable& table, const VisualMetricParams& params, double delta);

/// Chain infimum of rho: shortest paths in the complete graph weighted by rho.
SquareMatrix visual_metric(const SquareMatrix& rho);

/// Pairs i < j where rho/2 <= d <= rho fails.
std::size_t count_sandwich_violations(const SquareMatrix& rho, const SquareMatrix& d);

inline constexpr double kInfiniteGap = std::numeric_limits<double>::infinity();

struct PerfectnessRecord {
    std::size_t point = 0;
    double radius = 0.0;
    /// r / max{d(x,y) : 0 < d(x,y) <= r}, or kInfiniteGap when no such y exists.
    double best_gap_ratio = kInfiniteGap;
};

struct PerfectnessProfile {
    std::vector<double> radii;
    std::vector<PerfectnessRecord> records;
    /// Per radius, the maximum best_gap_ratio over points.
    std::vector<double> s_estimate;

    bool all_finite() const;
    bool any_infinite() const { return !all_finite(); }
};

/// Radii start, start/2, start/4, ... down to the smallest positive distance,
/// where start = min(diam, r0). A nonpositive r0 means no cap.
std::vector<double> radius_grid(const SquareMatrix& dist, double r0);
std::vector<double> radius_grid(const FiniteMetricSpace& space, double r0);

PerfectnessProfile perfectness_profile(const SquareMatrix& dist, const std::vector<double>& radii);
PerfectnessProfile perfectness_profile(const FiniteMetricSpace& space, const std::vector<double>& radii);

SquareMatrix to_matrix(const FiniteMetricSpace& space);

/// c1 * base <= visual^(1/alpha) <= c2 * base over all pairs, with alpha
/// chosen to minimise c2 / c1.
struct PowerFit {
    double alpha = 1.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double spread() const { return c2 / c1; }
};

PowerFit fit_power_bilipschitz(const SquareMatrix& visual, const SquareMatrix& base);

}  // namespace coarselab
