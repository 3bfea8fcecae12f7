#include <catch2/catch_amalgamated.hpp>

#include "cvc/atlas.hpp"
#include "cvc/oracle.hpp"
#include "cvc/steiner.hpp"

using namespace cvc;

namespace {
std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}
}  // namespace

TEST_CASE("connected superset basics", "[steiner]") {
    SECTION("two terminals around one connector") {
        Graph g = Graph::from_edges(3, {{0, 1}, {0, 2}});  // p=0, q1=1, q2=2
        SteinerInstance inst{g, VertexSet{0}, VertexSet{1, 2}};
        auto r = min_connected_superset(inst);
        REQUIRE(r.x == VertexSet{0, 1, 2});
    }
    SECTION("singleton terminal set is its own solution") {
        Graph g = Graph::from_edges(2, {{0, 1}});
        auto r = min_connected_superset({g, VertexSet{0}, VertexSet{1}});
        REQUIRE(r.x == VertexSet{1});
    }
    SECTION("path with terminals at both ends") {
        Graph p5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        auto r = steiner_tree(p5, VertexSet{0, 4});
        REQUIRE(r.x == VertexSet{0, 1, 2, 3, 4});
    }
    SECTION("terminals split across components") {
        Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
        auto r = steiner_tree(g, VertexSet{0, 2});
        REQUIRE_FALSE(r.x.has_value());
    }
    SECTION("empty terminal set") {
        auto r = steiner_tree(Graph(3), VertexSet{});
        REQUIRE(r.x == VertexSet{});
    }
    SECTION("sides must form an independent bipartition") {
        Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
        REQUIRE_THROWS_AS(min_connected_superset({g, VertexSet{0, 1}, VertexSet{2}}),
                          std::invalid_argument);
    }
}

TEST_CASE("steiner agrees with brute force on all graphs n <= 6", "[steiner]") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& g : all_graphs_as(n)) {
            for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
                VertexSet q = VertexSet::from_mask(m);
                if (q.size() > 4) continue;
                auto fast = steiner_tree(g, q);
                auto brute = min_steiner_superset_bruteforce(g, q);
                REQUIRE(fast.x.has_value() == brute.has_value());
                if (fast.x) {
                    REQUIRE(fast.x->size() == brute->size());
                    REQUIRE(is_subset(q, *fast.x));
                    REQUIRE(induces_connected(g, *fast.x));
                }
            }
        }
    }
}

TEST_CASE("steiner minimality witness and work bound", "[steiner]") {
    for (const auto& g : all_connected_graphs(6)) {
        VertexSet q;
        for (int v = 0; v < g.n; v += 2) q.add(v);
        auto r = steiner_tree(g, q);
        REQUIRE(r.x.has_value());
        // every non-terminal is load-bearing
        for (int v : *r.x) {
            if (q.contains(v)) continue;
            VertexSet smaller = *r.x;
            smaller.remove(v);
            REQUIRE_FALSE(induces_connected(g, smaller));
        }
        // work units stay within the subset-DP budget of this variant
        std::uint64_t n3 = std::uint64_t(g.n) * g.n * g.n;
        std::uint64_t bound = 4 * ipow(3, q.size()) * n3;
        REQUIRE(r.work_units <= bound);
    }
}
