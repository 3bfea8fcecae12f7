#include <catch2/catch_amalgamated.hpp>

#include "cvc/atlas.hpp"
#include "cvc/oracle.hpp"

using namespace cvc;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}
Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}
Graph star(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, es);
}
Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

}  // namespace

TEST_CASE("minimum connected vertex cover", "[oracle]") {
    auto c4 = min_cvc_bruteforce(cycle(4));
    REQUIRE(c4.has_value());
    REQUIRE(c4->size() == 3);

    auto k14 = min_cvc_bruteforce(star(4));
    REQUIRE(k14 == VertexSet{0});

    auto k4 = min_cvc_bruteforce(complete(4));
    REQUIRE(k4->size() == 3);
    REQUIRE(*k4 == VertexSet{0, 1, 2});

    SECTION("edgeless graph has the empty cover") {
        REQUIRE(min_cvc_bruteforce(Graph(3)) == VertexSet{});
    }
    SECTION("edges in two components: no connected cover") {
        Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
        REQUIRE_FALSE(min_cvc_bruteforce(g).has_value());
    }
    SECTION("budget enforced") {
        REQUIRE_THROWS_AS(min_cvc_bruteforce(Graph(25)), BudgetExceeded);
        REQUIRE_THROWS_AS(min_cvc_bruteforce(Graph(9), OracleBudget{8}), BudgetExceeded);
    }
}

TEST_CASE("minimum vertex cover", "[oracle]") {
    REQUIRE(min_vc_bruteforce(cycle(4)).size() == 2);
    REQUIRE(min_vc_bruteforce(complete(4)).size() == 3);
    REQUIRE(min_vc_bruteforce(path(4)).size() == 2);
    REQUIRE(min_vc_bruteforce(path(4)) == VertexSet{0, 2});  // lex-least among minima
}

TEST_CASE("two enumeration strategies agree, all graphs n <= 6", "[oracle]") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : all_graphs_as(n)) {
            auto a = min_cvc_bruteforce(g);
            auto b = min_cvc_powerset(g);
            REQUIRE(a == b);
            if (a) {
                REQUIRE(is_connected_vertex_cover(g, *a));
                REQUIRE(min_vc_bruteforce(g).size() <= a->size());
            }
        }
}

TEST_CASE("vertex cover component sum bound", "[oracle]") {
    SECTION("single edge is tight") {
        auto r = vc_component_sum(complete(2));
        REQUIRE(r.sum == 6);
        REQUIRE(r.bound == 6);
        REQUIRE(r.holds);
    }
    SECTION("triangle") {
        auto r = vc_component_sum(complete(3));
        REQUIRE(r.sum == 8);
        REQUIRE(r.bound == 12);
        REQUIRE(r.holds);
    }
    SECTION("one isolated vertex is tight") {
        auto r = vc_component_sum(Graph(1));
        REQUIRE(r.sum == 3);
        REQUIRE(r.bound == 3);
        REQUIRE(r.holds);
    }
    SECTION("holds on all graphs h <= 6") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& g : all_graphs_as(n)) REQUIRE(vc_component_sum(g).holds);
    }
    SECTION("equality on disjoint unions of single edges") {
        for (int d = 1; d <= 4; ++d) {
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < d; ++i) es.emplace_back(2 * i, 2 * i + 1);
            auto r = vc_component_sum(Graph::from_edges(2 * d, es));
            REQUIRE(r.sum == r.bound);
        }
    }
}

TEST_CASE("non-separating independent sets", "[oracle]") {
    REQUIRE_FALSE(max_nonseparating_is_bruteforce(cycle(4), 2));
    REQUIRE(max_nonseparating_is_bruteforce(cycle(4), 1));
    REQUIRE(max_nonseparating_is_bruteforce(complete(3), 1));
    REQUIRE(max_nonseparating_is_bruteforce(star(3), 3));
}

TEST_CASE("steiner superset brute force", "[oracle]") {
    Graph p5 = path(5);
    REQUIRE(min_steiner_superset_bruteforce(p5, VertexSet{2}) == VertexSet{2});
    REQUIRE(min_steiner_superset_bruteforce(p5, VertexSet{0, 4}) == VertexSet{0, 1, 2, 3, 4});
    REQUIRE(min_steiner_superset_bruteforce(star(3), VertexSet{1, 2, 3}) ==
            VertexSet{0, 1, 2, 3});

    SECTION("terminals in two components") {
        Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
        REQUIRE_FALSE(min_steiner_superset_bruteforce(g, VertexSet{0, 2}).has_value());
    }
}
