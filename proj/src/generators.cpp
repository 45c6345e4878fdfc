#include "coarselab/generators.hpp"

#include <climits>
#include <cmath>
#include <string>

#include "coarselab/error.hpp"

namespace coarselab {

namespace {

std::string padded(char prefix, std::size_t index, std::size_t count) {
    std::string digits = std::to_string(index);
    const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
    return std::string(1, prefix) + std::string(width - digits.size(), '0') + digits;
}

FiniteMetricSpace line_space(const std::vector<double>& xs, char prefix) {
    const std::size_t n = xs.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(padded(prefix, i, n));
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = std::abs(xs[i] - xs[j]);
    return FiniteMetricSpace(std::move(labels), std::move(dist));
}

void check_tree_args(int valence, int depth) {
    if (valence < 3) throw InvalidArgument("tree valence must be at least 3");
    if (depth < 1) throw InvalidArgument("tree depth must be at least 1");
}

}  // namespace

std::vector<double> cantor_points(const CantorSpec& spec, std::size_t point_cap) {
    if (spec.depth < 1) throw InvalidArgument("Cantor depth must be at least 1");
    if (!(spec.ratio > 0.0 && spec.ratio < 0.5)) throw InvalidArgument("Cantor ratio must lie in (0, 1/2)");
    if (spec.depth >= 62 || (std::size_t{2} << spec.depth) > point_cap) {
        throw CapExceeded("Cantor depth " + std::to_string(spec.depth) + " needs more than " +
                          std::to_string(point_cap) + " points");
    }
    std::vector<std::pair<double, double>> intervals{{0.0, 1.0}};
    for (int level = 0; level < spec.depth; ++level) {
        std::vector<std::pair<double, double>> next;
        next.reserve(intervals.size() * 2);
        for (const auto& [a, b] : intervals) {
            const double piece = spec.ratio * (b - a);
            next.emplace_back(a, a + piece);
            next.emplace_back(b - piece, b);
        }
        intervals = std::move(next);
    }
    std::vector<double> xs;
    xs.reserve(intervals.size() * 2);
    for (const auto& [a, b] : intervals) {
        xs.push_back(a);
        xs.push_back(b);
    }
    return xs;
}

FiniteMetricSpace gen_cantor(const CantorSpec& spec, std::size_t point_cap) {
    return line_space(cantor_points(spec, point_cap), 'c');
}

double lacunary_value(int n) {
    const double value = std::exp2(std::exp2(static_cast<double>(n)));
    if (!std::isfinite(value)) {
        throw InvalidArgument("2^(2^" + std::to_string(n) + ") overflows double precision (n = " +
                              std::to_string(n) + ")");
    }
    return value;
}

FiniteMetricSpace gen_lacunary(const LacunarySpec& spec) {
    if (spec.n_max < spec.n_min) throw InvalidArgument("lacunary range is empty (n_max < n_min)");
    if (static_cast<long>(spec.n_max) - spec.n_min > 5) {
        throw InvalidArgument("lacunary range n_max - n_min must be at most 5");
    }
    std::vector<double> positive;
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
        const double x = lacunary_value(n);
        if (!positive.empty() && !(x > positive.back())) {
            throw InvalidArgument("2^(2^" + std::to_string(n) + ") is not distinguishable from its predecessor");
        }
        positive.push_back(x);
    }
    std::vector<double> xs;
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) xs.push_back(-*it);
    xs.insert(xs.end(), positive.begin(), positive.end());
    return line_space(xs, 'p');
}

int tree_vertex_count(int valence, int depth) {
    check_tree_args(valence, depth);
    long long total = 1;
    long long layer = valence;
    for (int d = 1; d <= depth; ++d) {
        total += layer;
        if (total > INT_MAX) return INT_MAX;
        layer *= (valence - 1);
        if (layer > INT_MAX) layer = INT_MAX;
    }
    return static_cast<int>(total);
}

GeodesicGraph gen_tree(int valence, int depth, int vertex_cap) {
    const int count = tree_vertex_count(valence, depth);
    if (count > vertex_cap) {
        throw CapExceeded("tree(" + std::to_string(valence) + ", " + std::to_string(depth) + ") has more than " +
                          std::to_string(vertex_cap) + " vertices");
    }
    std::vector<Edge> edges;
    edges.reserve(count - 1);
    Vertex next = 1;
    std::vector<Vertex> layer{0};
    for (int d = 0; d < depth; ++d) {
        std::vector<Vertex> children;
        for (Vertex parent : layer) {
            const int fan = d == 0 ? valence : valence - 1;
            for (int c = 0; c < fan; ++c) {
                edges.emplace_back(parent, next);
                children.push_back(next++);
            }
        }
        layer = std::move(children);
    }
    return GeodesicGraph(count, std::move(edges), vertex_cap);
}

std::vector<Vertex> tree_leaves(int valence, int depth) {
    const int count = tree_vertex_count(valence, depth);
    const int inner = tree_vertex_count(valence, depth - 1 > 0 ? depth - 1 : 1);
    std::vector<Vertex> leaves;
    for (Vertex v = depth == 1 ? 1 : inner; v < count; ++v) leaves.push_back(v);
    return leaves;
}

CombGraph gen_comb(const CombSpec& spec, int vertex_cap) {
    const int tree_size = tree_vertex_count(spec.tree_valence, spec.tree_depth);
    long long total = tree_size;
    for (int len : spec.teeth) {
        if (len < 1) throw InvalidArgument("comb teeth must have positive length");
        total += len;
    }
    if (total > vertex_cap) {
        throw CapExceeded("comb has " + std::to_string(total) + " vertices, cap is " + std::to_string(vertex_cap));
    }
    const GeodesicGraph tree = gen_tree(spec.tree_valence, spec.tree_depth, vertex_cap);
    std::vector<Edge> edges = tree.edges();
    CombGraph comb;
    comb.tree_size = tree_size;
    comb.tree_leaves = tree_leaves(spec.tree_valence, spec.tree_depth);
    Vertex next = tree_size;
    for (int len : spec.teeth) {
        Path tooth{{comb.attach}};
        for (int k = 1; k <= len; ++k) {
            edges.emplace_back(tooth.back(), next);
            tooth.vertices.push_back(next++);
        }
        comb.teeth.push_back(std::move(tooth));
    }
    comb.graph = GeodesicGraph(static_cast<int>(total), std::move(edges), vertex_cap);
    return comb;
}

}  // namespace coarselab
