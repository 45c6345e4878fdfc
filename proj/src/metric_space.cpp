#include "coarselab/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "coarselab/error.hpp"

namespace coarselab {

namespace {

bool close_enough(double excess, double scale) {
    return excess <= kMetricTolerance * std::max(1.0, scale);
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> distances)
    : labels_(std::move(labels)), dist_(std::move(distances)) {
    const std::size_t n = labels_.size();
    if (dist_.size() != n * n) {
        throw InvalidArgument("distance matrix has " + std::to_string(dist_.size()) +
                              " entries, expected " + std::to_string(n * n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist(i, i) != 0.0) {
            throw InvalidArgument("nonzero diagonal at point '" + labels_[i] + "'");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const double d = dist(i, j);
            if (!std::isfinite(d) || d < 0.0) {
                throw InvalidArgument("distance between '" + labels_[i] + "' and '" + labels_[j] +
                                      "' is not a finite nonnegative number");
            }
            if (i != j && d <= 0.0) {
                throw InvalidArgument("distinct points '" + labels_[i] + "' and '" + labels_[j] +
                                      "' are at distance 0");
            }
            if (!close_enough(std::abs(d - dist(j, i)), d)) {
                throw InvalidArgument("distance matrix is not symmetric at ('" + labels_[i] + "', '" +
                                      labels_[j] + "')");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const double detour = dist(i, k) + dist(k, j);
                if (!close_enough(dist(i, j) - detour, detour)) {
                    std::ostringstream msg;
                    msg << "triangle inequality fails for ('" << labels_[i] << "', '" << labels_[k]
                        << "', '" << labels_[j] << "')";
                    throw InvalidArgument(msg.str());
                }
            }
        }
    }
}

double FiniteMetricSpace::diameter() const noexcept {
    return dist_.empty() ? 0.0 : *std::max_element(dist_.begin(), dist_.end());
}

double FiniteMetricSpace::min_positive_distance() const noexcept {
    double best = 0.0;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist(i, j);
            if (best == 0.0 || d < best) best = d;
        }
    }
    return best;
}

std::vector<std::size_t> FiniteMetricSpace::label_order() const {
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
    return order;
}

FiniteMetricSpace FiniteMetricSpace::subspace(const std::vector<std::size_t>& points) const {
    std::vector<std::string> labels;
    labels.reserve(points.size());
    std::vector<double> d(points.size() * points.size());
    for (std::size_t a = 0; a < points.size(); ++a) {
        labels.push_back(label(points[a]));
        for (std::size_t b = 0; b < points.size(); ++b) {
            d[a * points.size() + b] = dist(points[a], points[b]);
        }
    }
    return FiniteMetricSpace(std::move(labels), std::move(d));
}

}  // namespace coarselab
