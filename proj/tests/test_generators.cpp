#include <doctest.h>

#include <cmath>

#include "coarselab/error.hpp"
#include "coarselab/generators.hpp"
#include "coarselab/hyperbolicity.hpp"

using namespace coarselab;

namespace {

// Interval endpoints by explicit recursion on exact thirds.
void thirds(double a, double b, int depth, std::vector<double>& out) {
    if (depth == 0) {
        out.push_back(a);
        out.push_back(b);
        return;
    }
    thirds(a, a + (b - a) / 3.0, depth - 1, out);
    thirds(b - (b - a) / 3.0, b, depth - 1, out);
}

}  // namespace

TEST_CASE("cantor endpoints") {
    SUBCASE("depth 1") {
        const auto xs = cantor_points({1, 1.0 / 3.0});
        REQUIRE(xs.size() == 4);
        CHECK(xs[0] == 0.0);
        CHECK(xs[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        CHECK(xs[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(xs[3] == 1.0);
    }
    SUBCASE("depth 2 matches hand enumeration") {
        const std::vector<double> expected{0, 1.0 / 9, 2.0 / 9, 3.0 / 9, 6.0 / 9, 7.0 / 9, 8.0 / 9, 1};
        const auto xs = cantor_points({2, 1.0 / 3.0});
        REQUIRE(xs.size() == expected.size());
        for (std::size_t i = 0; i < xs.size(); ++i) CHECK(xs[i] == doctest::Approx(expected[i]).epsilon(1e-15));
    }
    SUBCASE("deeper levels match the recursion") {
        for (int depth = 1; depth <= 6; ++depth) {
            std::vector<double> expected;
            thirds(0.0, 1.0, depth, expected);
            const auto xs = cantor_points({depth, 1.0 / 3.0});
            REQUIRE(xs.size() == expected.size());
            CHECK(xs.size() == (std::size_t{2} << depth));
            for (std::size_t i = 0; i < xs.size(); ++i) CHECK(xs[i] == doctest::Approx(expected[i]).epsilon(1e-14));
        }
    }
    SUBCASE("outer endpoints, labels and gaps") {
        for (double ratio : {0.2, 1.0 / 3.0, 0.45}) {
            for (int depth = 1; depth <= 5; ++depth) {
                const auto space = gen_cantor({depth, ratio});
                CHECK(space.dist(0, space.size() - 1) == 1.0);
                const double gap = std::min(std::pow(ratio, depth), (1 - 2 * ratio) * std::pow(ratio, depth - 1));
                CHECK(space.min_positive_distance() == doctest::Approx(gap).epsilon(1e-12));
                const auto order = space.label_order();
                for (std::size_t i = 0; i < order.size(); ++i) CHECK(order[i] == i);
            }
        }
    }
    SUBCASE("invalid input") {
        CHECK_THROWS_AS(gen_cantor({0, 0.3}), InvalidArgument);
        CHECK_THROWS_AS(gen_cantor({2, 0.5}), InvalidArgument);
        CHECK_THROWS_AS(gen_cantor({12, 0.3}), CapExceeded);
        CHECK_THROWS_AS(gen_cantor({5, 0.3}, 32), CapExceeded);
    }
    SUBCASE("deterministic") {
        const auto a = gen_cantor({4, 0.3});
        const auto b = gen_cantor({4, 0.3});
        CHECK(a.labels() == b.labels());
        CHECK(a.matrix() == b.matrix());
    }
}

TEST_CASE("lacunary set") {
    SUBCASE("n from 0 to 1") {
        const auto s = gen_lacunary({0, 1});
        REQUIRE(s.size() == 4);
        // -4, -2, 2, 4
        CHECK(s.dist(0, 1) == 2.0);
        CHECK(s.dist(0, 2) == 6.0);
        CHECK(s.dist(0, 3) == 8.0);
        CHECK(s.dist(1, 2) == 4.0);
        CHECK(s.dist(2, 3) == 2.0);
    }
    SUBCASE("full matrix up to n = 2") {
        const std::vector<double> xs{-16, -4, -2, 2, 4, 16};
        const auto s = gen_lacunary({0, 2});
        REQUIRE(s.size() == 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) CHECK(s.dist(i, j) == std::abs(xs[i] - xs[j]));
    }
    SUBCASE("gaps grow") {
        for (int n = -3; n < 8; ++n) {
            const double g0 = lacunary_value(n + 1) - lacunary_value(n);
            const double g1 = lacunary_value(n + 2) - lacunary_value(n + 1);
            CHECK(g1 > g0);
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(gen_lacunary({0, 6}), InvalidArgument);
        CHECK_THROWS_AS(gen_lacunary({3, 2}), InvalidArgument);
        try {
            gen_lacunary({8, 12});
            FAIL("expected overflow");
        } catch (const InvalidArgument& e) {
            CHECK(std::string(e.what()).find("n = 10") != std::string::npos);
        }
    }
}

TEST_CASE("regular trees") {
    SUBCASE("star") {
        const auto t = gen_tree(3, 1);
        CHECK(t.size() == 4);
        CHECK(t.degree(0) == 3);
        CHECK(tree_leaves(3, 1) == std::vector<Vertex>{1, 2, 3});
    }
    SUBCASE("counts and degrees") {
        for (int valence = 3; valence <= 5; ++valence) {
            for (int depth = 1; depth <= 4; ++depth) {
                const auto t = gen_tree(valence, depth);
                const auto leaves = tree_leaves(valence, depth);
                CHECK(leaves.size() == static_cast<std::size_t>(valence * std::pow(valence - 1, depth - 1)));
                CHECK(t.degree(0) == valence);
                for (Vertex v = 0; v < t.size(); ++v) {
                    const bool leaf = std::find(leaves.begin(), leaves.end(), v) != leaves.end();
                    CHECK(t.degree(v) == (leaf ? 1 : valence));
                    if (leaf) CHECK(t.dist(0, v) == depth);
                }
                CHECK(four_point_delta(t) == 0.0);
            }
        }
    }
    SUBCASE("cap") { CHECK_THROWS_AS(gen_tree(3, 20), CapExceeded); }
    SUBCASE("invalid") {
        CHECK_THROWS_AS(gen_tree(2, 3), InvalidArgument);
        CHECK_THROWS_AS(gen_tree(3, 0), InvalidArgument);
    }
}

TEST_CASE("comb graphs") {
    SUBCASE("no teeth") {
        const auto c = gen_comb({3, 3, {}});
        CHECK(c.graph.edges() == gen_tree(3, 3).edges());
    }
    SUBCASE("one tooth") {
        const auto c = gen_comb({3, 3, {3}});
        CHECK(c.graph.size() == gen_tree(3, 3).size() + 3);
        CHECK(c.teeth[0].front() == c.attach);
        CHECK(c.teeth[0].length() == 3);
        CHECK(is_geodesic(c.graph, c.teeth[0]));
    }
    SUBCASE("tooth tips are not boundary points") {
        const auto c = gen_comb({3, 3, {1, 2, 3, 4, 5}});
        CHECK(c.attach != c.root);
        for (const Path& tooth : c.teeth) {
            const Vertex tip = tooth.back();
            CHECK(std::find(c.tree_leaves.begin(), c.tree_leaves.end(), tip) == c.tree_leaves.end());
            CHECK(c.graph.dist(c.root, tip) == 1 + tooth.length());
            for (Vertex leaf : c.tree_leaves) {
                CHECK(c.graph.dist(c.root, leaf) < c.graph.dist(c.root, tip) + c.graph.dist(tip, leaf));
            }
        }
    }
    SUBCASE("invalid teeth") { CHECK_THROWS_AS(gen_comb({3, 2, {0}}), InvalidArgument); }
}
