#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "serre/circulant.hpp"

using namespace serre;

TEST_CASE("make_circulant edge rule") {
    auto k4 = make_circulant(4, {1, 2});
    CHECK(k4.graph.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.graph.degree(v) == 3);

    auto g = make_circulant(6, {1, 3});
    CHECK(g.graph.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(g.graph.degree(v) == 3);

    // Independent re-derivation of the edge set for C10(2,5).
    auto h = make_circulant(10, {2, 5});
    int edges = 0;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            int d = j - i;
            bool expected = (d == 2 || d == 5 || 10 - d == 2 || 10 - d == 5);
            CHECK(h.graph.has_edge(i, j) == expected);
            edges += expected;
        }
    CHECK(edges == 15);
    for (int v = 0; v < 10; ++v) CHECK(h.graph.degree(v) == 3);
}

TEST_CASE("make_circulant rejects bad input") {
    CHECK_THROWS_AS(make_circulant(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_circulant(6, {4}), std::invalid_argument);
    CHECK_THROWS_AS(make_circulant(6, {0}), std::invalid_argument);
    CHECK_THROWS_AS(make_circulant(64, {1}), std::invalid_argument);
}

TEST_CASE("family constructors") {
    CHECK(power_of_cycle(7, 1).graph.id() == "C7(1)");
    CHECK(power_of_cycle(11, 2).graph.id() == "C11(1,2)");
    CHECK(power_of_cycle(8, 3).graph.id() == "C8(1,2,3)");
    CHECK_THROWS_AS(power_of_cycle(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(power_of_cycle(4, 0), std::invalid_argument);

    auto m = upper_interval(8, 3);
    CHECK(m.graph.id() == "C8(4)");
    CHECK(m.graph.graph.edge_count() == 4);  // perfect matching
    CHECK(upper_interval(10, 3).graph.id() == "C10(4,5)");
    CHECK(upper_interval(7, 2).graph.id() == "C7(3)");
    CHECK_THROWS_AS(upper_interval(7, 3), std::invalid_argument);

    CHECK(omit_one(9, 3).graph.gens == std::vector<int>{1, 2, 4});
    CHECK(omit_one(8, 3).graph.gens == std::vector<int>{1, 2, 4});
    CHECK(omit_one(10, 2).graph.gens == std::vector<int>{1, 3, 4, 5});
    CHECK_THROWS_AS(omit_one(9, 5), std::invalid_argument);

    CHECK(one_paired(12, 2, 3).graph.gens == std::vector<int>{2, 4});
    CHECK(one_paired(6, 1, 3).graph.gens == std::vector<int>{1, 2});
    CHECK(one_paired(4, 2, 2).graph.gens == std::vector<int>{2});
    CHECK_THROWS_AS(one_paired(10, 2, 2), std::invalid_argument);

    CHECK(cubic(8, 1).graph.id() == "C8(1,4)");
    CHECK(cubic(16, 2).graph.id() == "C16(2,8)");
    CHECK(cubic(6, 1).graph.id() == "C6(1,3)");
    CHECK_THROWS_AS(cubic(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(cubic(8, 4), std::invalid_argument);

    CHECK(plain_cycle(5).graph.id() == "C5(1)");
}

TEST_CASE("degree formula") {
    for (int n : {5, 8, 12, 17, 24, 30}) {
        std::vector<std::vector<int>> gen_sets = {{1}, {2}, {1, 2}, {1, n / 2}, {n / 2}};
        for (auto& gens : gen_sets) {
            std::vector<int> ok;
            for (int s : gens)
                if (s >= 1 && s <= n / 2) ok.push_back(s);
            if (ok.empty()) continue;
            auto g = make_circulant(n, ok);
            int half = 0, diameter = 0;
            for (int s : g.gens) {
                if (2 * s == n) diameter = 1;
                else ++half;
            }
            for (int v = 0; v < n; ++v) CHECK(g.graph.degree(v) == 2 * half + diameter);
        }
    }
}

TEST_CASE("rotations are automorphisms") {
    for (int n : {6, 9, 13, 20, 30}) {
        auto g = make_circulant(n, {1, 3});
        for (int r = 0; r < n; ++r)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    CHECK(g.graph.has_edge(u, v) ==
                          g.graph.has_edge((u + r) % n, (v + r) % n));
    }
}

TEST_CASE("connected components") {
    auto c16 = cubic(16, 2).graph;
    auto comps = connected_components(c16.graph);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices.size() == 8);
    CHECK(comps[1].vertices.size() == 8);
    CHECK(comps[0].vertices[0] == 0);

    CHECK(connected_components(cubic(8, 1).graph.graph).size() == 1);
    auto matching = upper_interval(8, 3).graph;
    CHECK(connected_components(matching.graph).size() == 4);

    // Blocks partition the vertices and the induced edges partition E.
    std::uint64_t seen = 0;
    int edge_total = 0;
    for (const auto& comp : comps) {
        for (int v : comp.vertices) {
            CHECK(((seen >> v) & 1) == 0);
            seen |= std::uint64_t{1} << v;
        }
        edge_total += comp.induced.edge_count();
    }
    CHECK(seen == c16.graph.vertex_mask());
    CHECK(edge_total == c16.graph.edge_count());
}

TEST_CASE("graph isomorphism search and certificates") {
    auto model = cubic(8, 1).graph;
    auto comps = connected_components(cubic(16, 2).graph.graph);
    for (const auto& comp : comps) {
        auto map = graphs_isomorphic(model.graph, comp.induced);
        REQUIRE(map.has_value());
        CHECK(is_isomorphism(model.graph, comp.induced, *map));
    }

    CHECK(!graphs_isomorphic(cubic(6, 1).graph.graph, make_circulant(6, {2, 3}).graph));

    auto g = make_circulant(9, {1, 2});
    auto self = graphs_isomorphic(g.graph, g.graph);
    REQUIRE(self.has_value());
    CHECK(is_isomorphism(g.graph, g.graph, *self));

    CHECK_THROWS_AS(graphs_isomorphic(make_circulant(17, {1}).graph, make_circulant(17, {2}).graph),
                    std::invalid_argument);
}

TEST_CASE("isomorphism is symmetric on samples") {
    std::vector<CirculantGraph> pool = {make_circulant(6, {1, 3}), make_circulant(6, {2, 3}),
                                        make_circulant(8, {1, 4}), make_circulant(8, {2, 4})};
    for (const auto& a : pool)
        for (const auto& b : pool) {
            bool ab = graphs_isomorphic(a.graph, b.graph).has_value();
            bool ba = graphs_isomorphic(b.graph, a.graph).has_value();
            CHECK(ab == ba);
        }
}

TEST_CASE("edge csv and disjoint union") {
    auto g = make_circulant(4, {2});
    CHECK(edges_csv(g.graph) == "0,2\n1,3\n");
    auto u = disjoint_union(g.graph, g.graph);
    CHECK(u.vertex_count() == 8);
    CHECK(u.edge_count() == 4);
    CHECK(u.has_edge(4, 6));
    CHECK(!u.has_edge(0, 4));
}
