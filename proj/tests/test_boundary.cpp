#include <doctest.h>

#include <cmath>

#include "coarselab/boundary.hpp"
#include "coarselab/error.hpp"
#include "coarselab/filling.hpp"
#include "coarselab/generators.hpp"
#include "coarselab/hyperbolicity.hpp"
#include "oracles.hpp"

using namespace coarselab;

namespace {

std::vector<std::vector<double>> rows(const SquareMatrix& m) {
    std::vector<std::vector<double>> out(m.n, std::vector<double>(m.n));
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) out[i][j] = m(i, j);
    return out;
}

SquareMatrix from_rows(const std::vector<std::vector<double>>& r) {
    SquareMatrix m(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) m.at(i, j) = r[i][j];
    return m;
}

// Depth of the deepest common ancestor, by walking parent pointers.
int ancestor_depth(const GeodesicGraph& t, Vertex x, Vertex y) {
    auto parent = [&](Vertex v) {
        for (Vertex w : t.neighbors(v))
            if (t.dist(0, w) < t.dist(0, v)) return w;
        return v;
    };
    while (x != y) {
        if (t.dist(0, x) >= t.dist(0, y)) x = parent(x);
        else y = parent(y);
    }
    return t.dist(0, x);
}

}  // namespace

TEST_CASE("boundary products") {
    SUBCASE("diagonal") {
        const auto t = gen_tree(3, 3);
        const auto leaves = tree_leaves(3, 3);
        const auto table = boundary_products(t, leaves, 0);
        for (std::size_t i = 0; i < leaves.size(); ++i) CHECK(table.values(i, i) == t.dist(leaves[i], 0));
    }
    SUBCASE("tree leaves meet at their common ancestor") {
        const auto t = gen_tree(3, 4);
        const auto leaves = tree_leaves(3, 4);
        const auto table = boundary_products(t, leaves, 0);
        for (std::size_t i = 0; i < leaves.size(); ++i)
            for (std::size_t j = 0; j < leaves.size(); ++j)
                if (i != j) CHECK(table.values(i, j) == ancestor_depth(t, leaves[i], leaves[j]));
    }
    SUBCASE("two-point filling") {
        // Traced by hand: the leaf balls stop meeting at level 2 and the
        // leaves sit at distance 2n - 2 from each other for n >= 2.
        const auto f = build_filling(FiniteMetricSpace({"a", "b"}, {0, 1, 1, 0}), {0.5, 3, 2.0});
        const auto table = boundary_products(f.graph, f.leaves, f.root);
        CHECK(table.values(0, 1) == 1.0);
        CHECK(table.values(0, 0) == 3.0);
    }
    SUBCASE("bad basepoint") { CHECK_THROWS_AS(boundary_products(gen_tree(3, 1), {1, 2}, 9), InvalidArgument); }
}

TEST_CASE("rho and the visual metric") {
    SUBCASE("formula") {
        GromovProductTable table{0, {1, 2}, SquareMatrix(2)};
        table.values.at(0, 1) = table.values.at(1, 0) = 0.0;
        CHECK(rho_values(table, 0.1)(0, 1) == 1.0);
        table.values.at(0, 1) = table.values.at(1, 0) = 3.0;
        CHECK(rho_values(table, std::log(2.0))(0, 1) == doctest::Approx(0.125).epsilon(1e-15));
        CHECK(rho_values(table, std::log(2.0))(0, 0) == 0.0);
    }
    SUBCASE("epsilon bound") {
        CHECK(epsilon_bound(0.0) == 0.2);
        CHECK(epsilon_bound(2.0) == 0.1);
        GromovProductTable table{0, {1, 2}, SquareMatrix(2)};
        CHECK_THROWS_AS(rho_matrix(table, {0, 0.2}, 0.0), InvalidArgument);
        CHECK_THROWS_AS(rho_matrix(table, {0, 0.0}, 0.0), InvalidArgument);
        CHECK_NOTHROW(rho_matrix(table, {0, 0.19}, 0.0));
    }
    SUBCASE("two points") {
        const auto rho = from_rows({{0, 0.4}, {0.4, 0}});
        CHECK(visual_metric(rho)(0, 1) == 0.4);
    }
    SUBCASE("three points, shorter chain") {
        const auto rho = from_rows({{0, 0.5, 0.7}, {0.5, 0, 0.1}, {0.7, 0.1, 0}});
        CHECK(visual_metric(rho)(0, 2) == doctest::Approx(0.6));
    }
    SUBCASE("chain infimum matches enumeration and is a sandwiched metric") {
        const auto Z = gen_cantor({2, 1.0 / 3});
        for (int level = 1; level <= 4; ++level) {
            const auto f = build_filling(Z, {0.5, level, 2.0});
            if (f.leaves.size() > 7) continue;
            const double delta = four_point_delta(f.graph);
            const auto rho = rho_matrix(boundary_products(f.graph, f.leaves, f.root), {f.root, default_epsilon(delta)}, delta);
            const auto d = visual_metric(rho);
            const auto expected = oracle::chain_infimum(rows(rho));
            for (std::size_t i = 0; i < d.n; ++i)
                for (std::size_t j = 0; j < d.n; ++j) CHECK(d(i, j) == doctest::Approx(expected[i][j]).epsilon(1e-12));
        }
        for (int level = 3; level <= 7; ++level) {
            const auto f = build_filling(gen_cantor({5, 1.0 / 3}), {0.5, level, 2.0});
            const double delta = four_point_delta(f.graph);
            const auto rho = rho_matrix(boundary_products(f.graph, f.leaves, f.root), {f.root, default_epsilon(delta)}, delta);
            const auto d = visual_metric(rho);
            CHECK(count_sandwich_violations(rho, d) == 0);
            for (std::size_t i = 0; i < d.n; ++i)
                for (std::size_t j = 0; j < d.n; ++j) {
                    CHECK(d(i, j) == d(j, i));
                    for (std::size_t k = 0; k < d.n; ++k) CHECK(d(i, j) <= d(i, k) + d(k, j) + 1e-15);
                }
        }
    }
    SUBCASE("tree leaves: farther apart when they split earlier") {
        const auto t = gen_tree(3, 4);
        const auto leaves = tree_leaves(3, 4);
        const auto table = boundary_products(t, leaves, 0);
        const auto d = visual_metric(rho_matrix(table, {0, default_epsilon(0.0)}, 0.0));
        for (std::size_t i = 0; i < leaves.size(); ++i)
            for (std::size_t j = 0; j < leaves.size(); ++j)
                for (std::size_t k = 0; k < leaves.size(); ++k)
                    for (std::size_t l = 0; l < leaves.size(); ++l) {
                        if (i == j || k == l) continue;
                        const int a = ancestor_depth(t, leaves[i], leaves[j]);
                        const int b = ancestor_depth(t, leaves[k], leaves[l]);
                        if (a < b) CHECK(d(i, j) > d(k, l));
                        if (a == b) CHECK(d(i, j) == doctest::Approx(d(k, l)));
                    }
    }
}

TEST_CASE("perfectness profile") {
    SUBCASE("two points at distance one") {
        const FiniteMetricSpace s({"a", "b"}, {0, 1, 1, 0});
        const auto p = perfectness_profile(s, {1.0});
        CHECK(p.records[0].best_gap_ratio == 1.0);
        CHECK(p.records[1].best_gap_ratio == 1.0);
        CHECK(p.s_estimate[0] == 1.0);
    }
    SUBCASE("uniform grid") {
        const double h = 0.25;
        std::vector<std::string> labels;
        std::vector<double> dist;
        for (int i = 0; i < 10; ++i) labels.push_back("g" + std::to_string(i));
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) dist.push_back(h * std::abs(i - j));
        const FiniteMetricSpace grid(labels, dist);
        const auto radii = radius_grid(grid, 0.0);
        CHECK(radii.front() == grid.diameter());
        CHECK(radii.back() >= h);
        const auto p = perfectness_profile(grid, radii);
        CHECK(p.all_finite());
        for (std::size_t k = 0; k < radii.size(); ++k) CHECK(p.s_estimate[k] <= radii[k] / h + 1e-12);
    }
    SUBCASE("lacunary points have empty annuli") {
        const auto s = gen_lacunary({0, 3});
        const auto p = perfectness_profile(s, radius_grid(s, 0.0));
        CHECK(p.any_infinite());
    }
    SUBCASE("agrees with a brute-force scan over points and radii") {
        for (const auto& s : {gen_cantor({3, 1.0 / 3}), gen_cantor({3, 0.2}), gen_lacunary({0, 2}), gen_lacunary({-1, 3})}) {
            const auto radii = radius_grid(s, 0.0);
            const auto p = perfectness_profile(s, radii);
            std::vector<std::vector<double>> d(s.size(), std::vector<double>(s.size()));
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = 0; j < s.size(); ++j) d[i][j] = s.dist(i, j);
            const double worst = *std::max_element(p.s_estimate.begin(), p.s_estimate.end());
            if (std::isfinite(worst)) {
                CHECK(oracle::uniformly_perfect(d, radii, worst * (1 + 1e-9)));
                if (worst > 1.0) CHECK_FALSE(oracle::uniformly_perfect(d, radii, worst * (1 - 1e-6)));
            } else {
                CHECK_FALSE(oracle::uniformly_perfect(d, radii, 1e12));
            }
            for (double S : {1.5, 2.0, 3.0, 5.0, 10.0}) {
                if (oracle::uniformly_perfect(d, radii, S)) {
                    for (double est : p.s_estimate) CHECK(est <= S);
                }
            }
            for (double est : p.s_estimate) CHECK(est >= 1.0);
        }
    }
    SUBCASE("removing points never lowers a remaining point's ratio") {
        const auto s = gen_cantor({3, 0.3});
        const auto radii = radius_grid(s, 0.0);
        const auto full = perfectness_profile(s, radii);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) keep.push_back(i);
            const auto part = perfectness_profile(s.subspace(keep), radii);
            for (std::size_t k = 0; k < radii.size(); ++k)
                for (std::size_t a = 0; a < keep.size(); ++a)
                    CHECK(part.records[k * keep.size() + a].best_gap_ratio >=
                          full.records[k * s.size() + keep[a]].best_gap_ratio);
        }
    }
    SUBCASE("r0 caps the grid") {
        const auto s = gen_cantor({3, 1.0 / 3});
        const auto radii = radius_grid(s, 0.1);
        CHECK(radii.front() == 0.1);
    }
    SUBCASE("invalid radii") {
        const FiniteMetricSpace s({"a", "b"}, {0, 1, 1, 0});
        CHECK_THROWS_AS(perfectness_profile(s, {0.5, 1.0}), InvalidArgument);
        CHECK_THROWS_AS(perfectness_profile(s, {-1.0}), InvalidArgument);
    }
}
