#include <doctest.h>

#include <cmath>

#include "coarselab/boundary.hpp"
#include "coarselab/error.hpp"
#include "coarselab/filling.hpp"
#include "coarselab/generators.hpp"
#include "coarselab/hyperbolicity.hpp"

using namespace coarselab;

namespace {

FiniteMetricSpace two_points() { return FiniteMetricSpace({"a", "b"}, {0, 1, 1, 0}); }

// Recomputes nets and edges straight from the definitions.
void check_structure(const FillingGraph& f) {
    const auto& Z = f.space;
    const double diam = Z.diameter();
    for (int level = 0; level <= f.params.max_level; ++level) {
        const double sep = std::pow(f.params.r, level) * diam;
        std::vector<std::size_t> centers;
        for (Vertex v = f.level_start[level]; v < f.level_start[level + 1]; ++v) {
            CHECK(f.meta[v].level == level);
            CHECK(f.meta[v].radius == doctest::Approx(f.params.ball_factor * sep));
            centers.push_back(f.meta[v].center);
        }
        for (std::size_t i = 0; i < centers.size(); ++i)
            for (std::size_t j = i + 1; j < centers.size(); ++j) CHECK(Z.dist(centers[i], centers[j]) > sep);
        for (std::size_t z = 0; z < Z.size(); ++z) {
            bool near = false;
            for (std::size_t c : centers) near = near || Z.dist(z, c) <= sep * (1 + 1e-9);
            CHECK(near);
        }
    }
    const int n = f.graph.size();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool meet = false;
            if (std::abs(f.meta[u].level - f.meta[v].level) <= 1) {
                for (std::size_t z = 0; z < Z.size() && !meet; ++z) {
                    meet = Z.dist(z, f.meta[u].center) <= f.meta[u].radius * (1 + 1e-9) &&
                           Z.dist(z, f.meta[v].center) <= f.meta[v].radius * (1 + 1e-9);
                }
            }
            CHECK(f.graph.adjacent(u, v) == meet);
        }
    }
    for (Vertex v = f.level_start[1]; v < f.level_start[2]; ++v) CHECK(f.graph.adjacent(f.root, v));
}

}  // namespace

TEST_CASE("two-point filling") {
    SUBCASE("ball factor 1 gives a path") {
        const auto f = build_filling(two_points(), {0.5, 1, 1.0});
        CHECK(f.graph.size() == 3);
        CHECK(f.graph.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
        check_structure(f);
    }
    SUBCASE("ball factor 2 closes a triangle") {
        const auto f = build_filling(two_points(), {0.5, 1, 2.0});
        CHECK(f.graph.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    }
    SUBCASE("three levels, traced by hand") {
        const auto f = build_filling(two_points(), {0.5, 3, 2.0});
        CHECK(f.graph.edges() ==
              std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 6}});
        CHECK(f.leaves == std::vector<Vertex>{5, 6});
        const auto b = leaf_boundary(f);
        CHECK(b.reps.size() == 2);
        CHECK(b.labels == std::vector<std::string>{"a", "b"});
    }
    SUBCASE("root covers the space") {
        const auto f = build_filling(two_points(), {0.5, 1, 1.0});
        CHECK(f.meta[f.root].level == 0);
        CHECK(f.meta[f.root].radius >= f.space.diameter());
    }
}

TEST_CASE("filling structure on the corpus") {
    for (const auto& space : {gen_cantor({3, 1.0 / 3}), gen_cantor({4, 0.25}), gen_lacunary({0, 2})}) {
        for (double r : {0.5, 1.0 / 3}) {
            const auto f = build_filling(space, {r, 4, 2.0});
            check_structure(f);
            const double resolution = std::pow(r, 4) * space.diameter();
            for (std::size_t z = 0; z < space.size(); ++z) {
                bool covered = false;
                for (Vertex leaf : f.leaves) covered = covered || space.dist(z, f.meta[leaf].center) <= resolution * (1 + 1e-9);
                CHECK(covered);
            }
        }
    }
}

TEST_CASE("cantor filling at matching ratio has one leaf per interval") {
    const auto f = build_filling(gen_cantor({5, 1.0 / 3}), {1.0 / 3, 5, 2.0});
    CHECK(f.leaves.size() == 32);
}

TEST_CASE("filling errors") {
    CHECK_THROWS_AS(build_filling(FiniteMetricSpace({"a"}, {0}), {}), InvalidArgument);
    CHECK_THROWS_AS(build_filling(two_points(), {0.6, 2, 2}), InvalidArgument);
    CHECK_THROWS_AS(build_filling(two_points(), {0.5, 0, 2}), InvalidArgument);
    CHECK_THROWS_AS(build_filling(two_points(), {0.5, 2, 0.5}), InvalidArgument);
    const auto Z = gen_lacunary({0, 3});
    int level = 0;
    for (std::size_t total = 0;; ++level) {
        total += greedy_net(Z, std::pow(0.5, level) * Z.diameter()).size();
        if (total > 100) break;
    }
    try {
        build_filling(Z, {0.5, 40, 2.0}, 100);
        FAIL("expected cap error");
    } catch (const CapExceeded& e) {
        CHECK(std::string(e.what()).find("level " + std::to_string(level)) != std::string::npos);
    }
}

TEST_CASE("pole radius") {
    SUBCASE("tree") {
        CHECK(pole_radius(gen_tree(3, 4), 0, tree_leaves(3, 4)) == 0);
    }
    SUBCASE("comb teeth hang off every ray") {
        const auto c = gen_comb({3, 3, {2, 5, 9}});
        CHECK(pole_radius(c.graph, c.root, c.tree_leaves) >= 9);
    }
    SUBCASE("cantor fillings stay small") {
        for (int level = 3; level <= 7; ++level) {
            const auto f = build_filling(gen_cantor({5, 1.0 / 3}), {0.5, level, 2.0});
            const int L = pole_radius(f.graph, f.root, f.leaves);
            CHECK(L <= 2);
            CHECK(L <= 3);
        }
        const auto f = build_filling(gen_cantor({5, 1.0 / 3}), {});
        CHECK(pole_radius(f.graph, f.root, f.leaves) == 1);
    }
}

TEST_CASE("four point constant is bounded across depths") {
    for (const auto& space : {gen_cantor({5, 1.0 / 3}), gen_cantor({4, 0.25})}) {
        for (double r : {0.5, 1.0 / 3}) {
            const double base = four_point_delta(build_filling(space, {r, 3, 2.0}).graph);
            double worst = 0.0;
            for (int level = 3; level <= 7; ++level) {
                worst = std::max(worst, four_point_delta(build_filling(space, {r, level, 2.0}).graph));
            }
            CHECK(worst <= 2.0 * base);
        }
    }
}

TEST_CASE("lacunary filling has one deep leaf per point") {
    const auto Z = gen_lacunary({0, 3});
    const auto f = build_filling(Z, {0.5, 12, 2.0});
    const auto b = leaf_boundary(f);
    CHECK(b.reps.size() == Z.size());
    CHECK(b.labels == Z.labels());
}

TEST_CASE("boundary of the cantor filling is bilipschitz to a power of the visual metric") {
    const auto Z = gen_cantor({5, 1.0 / 3});
    for (int level = 4; level <= 6; ++level) {
        const auto f = build_filling(Z, {0.5, level, 2.0});
        const auto b = leaf_boundary(f);
        const double delta = four_point_delta(f.graph);
        const auto table = boundary_products(f.graph, b.reps, f.root);
        const auto visual = visual_metric(rho_matrix(table, {f.root, default_epsilon(delta)}, delta));
        SquareMatrix base(b.reps.size());
        for (std::size_t i = 0; i < base.n; ++i)
            for (std::size_t j = 0; j < base.n; ++j) base.at(i, j) = Z.dist(f.meta[b.reps[i]].center, f.meta[b.reps[j]].center);
        const auto fit = fit_power_bilipschitz(visual, base);
        CHECK(fit.spread() <= 10.0);
        for (std::size_t i = 0; i < base.n; ++i)
            for (std::size_t j = i + 1; j < base.n; ++j) {
                const double q = std::pow(visual(i, j), 1.0 / fit.alpha);
                CHECK(q >= fit.c1 * base(i, j) * (1 - 1e-9));
                CHECK(q <= fit.c2 * base(i, j) * (1 + 1e-9));
            }
    }
}
