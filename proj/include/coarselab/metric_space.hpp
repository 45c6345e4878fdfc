#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace coarselab {

/// Relative tolerance used when validating metric axioms on floating-point input.
inline constexpr double kMetricTolerance = 1e-9;

/// A finite set of labeled points with a validated metric.
///
/// Distances are stored as a dense row-major matrix. The constructor checks
/// symmetry, zero diagonal, positivity off the diagonal and the triangle
/// inequality for every triple; comparisons allow an error of
/// kMetricTolerance relative to the magnitudes involved (never less than
/// kMetricTolerance absolute).
class FiniteMetricSpace {
public:
    FiniteMetricSpace() = default;
    FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> distances);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    double dist(std::size_t i, std::size_t j) const noexcept { return dist_[i * labels_.size() + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return dist(i, j); }
    const std::vector<double>& matrix() const noexcept { return dist_; }

    double diameter() const noexcept;
    /// Smallest distance between distinct points; 0 for spaces with fewer than two points.
    double min_positive_distance() const noexcept;
    /// Point indices ordered by label (ties broken by index).
    std::vector<std::size_t> label_order() const;

    /// Restriction to the given point indices, in the given order.
    FiniteMetricSpace subspace(const std::vector<std::size_t>& points) const;

private:
    std::vector<std::string> labels_;
    std::vector<double> dist_;
};

}  // namespace coarselab
