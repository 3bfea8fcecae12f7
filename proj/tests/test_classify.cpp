#include <catch2/catch_amalgamated.hpp>

#include "cvc/atlas.hpp"
#include "cvc/classify.hpp"

using namespace cvc;

namespace {

// Exhaustive split check: some clique/independent bipartition exists.
bool split_by_search(const Graph& g) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m) {
        VertexSet c = VertexSet::from_mask(m);
        VertexSet i = subtract(g.vertices(), c);
        if (is_clique(g, c) && is_independent_set(g, i)) return true;
    }
    return false;
}

// A vertex subset induces a cycle iff the induced subgraph is connected and
// 2-regular; a hole is such a subset of size >= 4.
bool has_induced_hole(const Graph& g) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m) {
        VertexSet s = VertexSet::from_mask(m);
        if (s.size() < 4) continue;
        bool two_regular = true;
        int edges = 0;
        for (int v : s) {
            int d = 0;
            for (int u : g.adj[v])
                if (s.contains(u)) ++d;
            if (d != 2) {
                two_regular = false;
                break;
            }
            edges += d;
        }
        if (two_regular && edges == 2 * s.size() && induces_connected(g, s)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("classify on the canonical small cases", "[classify]") {
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto c = classify_graph(two_k2);
    REQUIRE_FALSE(c.split.has_value());
    REQUIRE(c.cluster);
    REQUIRE(c.chordal_peo.has_value());

    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    c = classify_graph(c4);
    REQUIRE_FALSE(c.split.has_value());
    REQUIRE_FALSE(c.cluster);
    REQUIRE_FALSE(c.chordal_peo.has_value());
    REQUIRE(c.max_degree == 2);

    Graph k3_iso = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    c = classify_graph(k3_iso);
    REQUIRE(c.split.has_value());
    REQUIRE(c.split->clique_part == VertexSet{0, 1, 2});
    REQUIRE(c.split->independent_part == VertexSet{3});
    REQUIRE(c.cluster);
    REQUIRE(c.chordal_peo.has_value());
}

TEST_CASE("split recognition matches exhaustive search, n <= 7", "[classify]") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : all_graphs_as(n)) {
            auto sp = split_partition(g);
            REQUIRE(sp.has_value() == split_by_search(g));
            if (sp) REQUIRE(is_valid_split_partition(g, *sp));
        }
}

TEST_CASE("chordal recognition matches hole search, n <= 7", "[classify]") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : all_graphs_as(n)) {
            REQUIRE(perfect_elimination_order(g).has_value() == !has_induced_hole(g));
        }
}

TEST_CASE("perfect elimination orders verify", "[classify]") {
    // Chordal: every PEO position sees a clique of later neighbors.
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 3}, {3, 4}});
    auto peo = perfect_elimination_order(g);
    REQUIRE(peo.has_value());
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[(*peo)[i]] = i;
    for (int i = 0; i < g.n; ++i) {
        int v = (*peo)[i];
        for (int u : g.adj[v])
            for (int w : g.adj[v])
                if (u != w && pos[u] > i && pos[w] > i) REQUIRE(g.has_edge(u, w));
    }
}

TEST_CASE("instance validation", "[classify]") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});

    Instance split_inst{p4, VertexSet{1}, Kind::split, std::nullopt};
    REQUIRE(instance_valid(split_inst));

    Instance bad{p4, VertexSet{}, Kind::clique, std::nullopt};
    REQUIRE_FALSE(instance_valid(bad));
    REQUIRE_THROWS_AS(require_valid(bad), KindMismatch);

    Instance deg1{p4, VertexSet{1}, Kind::degree1, std::nullopt};
    REQUIRE(instance_valid(deg1));

    Instance cover_inst{p4, VertexSet{}, Kind::cliquecover,
                        CliqueCover{{VertexSet{0, 1}, VertexSet{2, 3}}}};
    REQUIRE(instance_valid(cover_inst));
    cover_inst.cover = CliqueCover{{VertexSet{0, 1}, VertexSet{2}}};
    REQUIRE_FALSE(instance_valid(cover_inst));
}
