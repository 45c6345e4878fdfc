#include "coarselab/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "coarselab/error.hpp"
#include "coarselab/hyperbolicity.hpp"
#include "coarselab/parallel.hpp"

namespace coarselab {

GromovProductTable boundary_products(const GeodesicGraph& graph, const std::vector<Vertex>& reps, Vertex w) {
    if (w < 0 || w >= graph.size()) throw InvalidArgument("basepoint " + std::to_string(w) + " is not a vertex");
    for (Vertex v : reps) {
        if (v < 0 || v >= graph.size()) throw InvalidArgument("boundary vertex " + std::to_string(v) + " out of range");
    }
    GromovProductTable table{w, reps, SquareMatrix(reps.size())};
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            table.values.at(i, j) = gromov_product(graph, w, reps[i], reps[j]);
    return table;
}

double epsilon_bound(double delta) { return std::min(1.0, 1.0 / (5.0 * std::max(delta, 1.0))); }

double default_epsilon(double delta) { return 0.5 * epsilon_bound(delta); }

SquareMatrix rho_matrix(const GromovProductTable& table, const VisualMetricParams& params, double delta) {
    if (!(params.epsilon > 0.0) || !(params.epsilon < epsilon_bound(delta))) {
        throw InvalidArgument("epsilon must lie in (0, " + std::to_string(epsilon_bound(delta)) + ")");
    }
    return rho_values(table, params.epsilon);
}

SquareMatrix rho_values(const GromovProductTable& table, double epsilon) {
    const std::size_t n = table.values.n;
    SquareMatrix rho(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rho.at(i, j) = i == j ? 0.0 : std::exp(-epsilon * table.values(i, j));
    return rho;
}

SquareMatrix visual_metric(const SquareMatrix& rho) {
    SquareMatrix d = rho;
    const std::size_t n = d.n;
    for (std::size_t k = 0; k < n; ++k) {
        parallel_for(n, [&](std::size_t i) {
            const double dik = d(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                const double via = dik + d(k, j);
                if (via < d(i, j)) d.at(i, j) = via;
            }
        });
    }
    return d;
}

std::size_t count_sandwich_violations(const SquareMatrix& rho, const SquareMatrix& d) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < rho.n; ++i)
        for (std::size_t j = i + 1; j < rho.n; ++j)
            if (!(rho(i, j) / 2.0 <= d(i, j) && d(i, j) <= rho(i, j))) ++bad;
    return bad;
}

bool PerfectnessProfile::all_finite() const {
    return std::all_of(s_estimate.begin(), s_estimate.end(), [](double s) { return std::isfinite(s); });
}

SquareMatrix to_matrix(const FiniteMetricSpace& space) {
    SquareMatrix m(space.size());
    m.values = space.matrix();
    return m;
}

std::vector<double> radius_grid(const SquareMatrix& dist, double r0) {
    double diam = 0.0;
    double smallest = 0.0;
    for (std::size_t i = 0; i < dist.n; ++i) {
        for (std::size_t j = i + 1; j < dist.n; ++j) {
            const double d = dist(i, j);
            diam = std::max(diam, d);
            if (d > 0.0 && (smallest == 0.0 || d < smallest)) smallest = d;
        }
    }
    std::vector<double> radii;
    if (smallest == 0.0) return radii;
    const double start = r0 > 0.0 ? std::min(diam, r0) : diam;
    for (double r = start; r >= smallest * (1.0 - kMetricTolerance); r *= 0.5) radii.push_back(r);
    return radii;
}

std::vector<double> radius_grid(const FiniteMetricSpace& space, double r0) { return radius_grid(to_matrix(space), r0); }

PerfectnessProfile perfectness_profile(const SquareMatrix& dist, const std::vector<double>& radii) {
    if (dist.n < 2) throw InvalidArgument("perfectness profile needs at least 2 points");
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (!(radii[k] > 0.0)) throw InvalidArgument("radii must be positive");
        if (k > 0 && !(radii[k] < radii[k - 1])) throw InvalidArgument("radii must be strictly decreasing");
    }
    PerfectnessProfile profile;
    profile.radii = radii;
    profile.records.resize(radii.size() * dist.n);
    parallel_for(dist.n, [&](std::size_t x) {
        for (std::size_t k = 0; k < radii.size(); ++k) {
            const double r = radii[k];
            const double reach = r * (1.0 + kMetricTolerance);
            double best = 0.0;
            for (std::size_t y = 0; y < dist.n; ++y) {
                const double d = dist(x, y);
                if (y != x && d > 0.0 && d <= reach) best = std::max(best, d);
            }
            profile.records[k * dist.n + x] = {x, r, best > 0.0 ? std::max(1.0, r / best) : kInfiniteGap};
        }
    });
    profile.s_estimate.assign(radii.size(), 1.0);
    for (std::size_t k = 0; k < radii.size(); ++k)
        for (std::size_t x = 0; x < dist.n; ++x)
            profile.s_estimate[k] = std::max(profile.s_estimate[k], profile.records[k * dist.n + x].best_gap_ratio);
    return profile;
}

PerfectnessProfile perfectness_profile(const FiniteMetricSpace& space, const std::vector<double>& radii) {
    return perfectness_profile(to_matrix(space), radii);
}

PowerFit fit_power_bilipschitz(const SquareMatrix& visual, const SquareMatrix& base) {
    if (visual.n != base.n || visual.n < 2) throw InvalidArgument("power fit needs two matching matrices of size >= 2");
    std::vector<std::pair<double, double>> logs;
    for (std::size_t i = 0; i < visual.n; ++i)
        for (std::size_t j = i + 1; j < visual.n; ++j) logs.emplace_back(std::log(visual(i, j)), std::log(base(i, j)));
    // log(c2/c1) as a function of beta = 1/alpha is a max of affine maps
    // minus a min of affine maps, hence convex.
    auto bounds = [&](double beta) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& [lv, lb] : logs) {
            const double q = beta * lv - lb;
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
        return std::pair{lo, hi};
    };
    auto spread = [&](double beta) {
        const auto [lo, hi] = bounds(beta);
        return hi - lo;
    };
    double a = 1e-6;
    double b = 1e3;
    for (int it = 0; it < 300; ++it) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        if (spread(m1) <= spread(m2)) b = m2;
        else a = m1;
    }
    const double beta = 0.5 * (a + b);
    const auto [lo, hi] = bounds(beta);
    return PowerFit{1.0 / beta, std::exp(lo), std::exp(hi)};
}

}  // namespace coarselab
