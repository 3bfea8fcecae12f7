#ifndef CVC_STEINER_HPP
#define CVC_STEINER_HPP

#include <cstdint>
#include <limits>
#include <optional>

#include "cvc/graph.hpp"

// Minimum connected superset of a terminal set, computed by a
// Dreyfus-Wagner-style dynamic program over terminal subsets: grow a tree by
// unit-cost vertices or merge two trees rooted at the same vertex. Exponential
// only in the number of terminals (3^|Q| submask splits worst case).

namespace cvc {

struct SteinerInstance {
    Graph graph;
    VertexSet side_p;
    VertexSet side_q;  // terminals
};

struct SteinerResult {
    std::optional<VertexSet> x;
    std::uint64_t work_units = 0;  // DP cells touched
};

namespace steiner_detail {
constexpr int kInf = std::numeric_limits<int>::max() / 4;
}

// Core routine: minimum |X| with terminals inside X and g[X] connected, on an
// arbitrary graph. Returns absent iff the terminals meet two or more
// components. Witness reconstruction is deterministic (smaller vertex ids
// preferred at every choice point).
inline SteinerResult steiner_tree(const Graph& g, const VertexSet& terminals) {
    SteinerResult res;
    int t = terminals.size();
    if (t == 0) {
        res.x = VertexSet{};
        return res;
    }
    if (t == 1) {
        res.x = terminals;
        return res;
    }
    CVC_CHECK(t <= 25, "terminal count exceeds subset-DP budget");
    {
        auto comps = components(g);
        int hit = 0;
        for (const auto& c : comps)
            if (!intersect(c, terminals).empty()) ++hit;
        if (hit > 1) return res;  // no connected superset exists
    }

    const int n = g.n;
    const std::uint32_t full = (std::uint32_t{1} << t) - 1;
    // dp[mask][v]: min vertices of a connected set containing terminals(mask)
    // and v. Parent decisions: -1 base, u >= 0 grown from u, otherwise merge
    // with recorded submask.
    std::vector<std::vector<int>> dp(full + 1, std::vector<int>(n, steiner_detail::kInf));
    struct Par {
        int type = 0;  // 0 none, 1 base, 2 grow, 3 merge
        int grow_from = -1;
        std::uint32_t sub = 0;
    };
    std::vector<std::vector<Par>> par(full + 1, std::vector<Par>(n));
    for (int i = 0; i < t; ++i) {
        dp[std::uint32_t{1} << i][terminals.ids[i]] = 1;
        par[std::uint32_t{1} << i][terminals.ids[i]] = Par{1, -1, 0};
    }

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        auto& row = dp[mask];
        // merge two sub-trees at the same root
        for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            std::uint32_t other = mask ^ sub;
            if (sub < other) continue;  // each unordered split once
            const auto& a = dp[sub];
            const auto& b = dp[other];
            for (int v = 0; v < n; ++v) {
                ++res.work_units;
                if (a[v] >= steiner_detail::kInf || b[v] >= steiner_detail::kInf) continue;
                int cand = a[v] + b[v] - 1;
                if (cand < row[v]) {
                    row[v] = cand;
                    par[mask][v] = Par{3, -1, sub};
                }
            }
        }
        // close under unit-cost growth (Bellman-Ford rounds; n small here)
        for (int round = 0; round < n; ++round) {
            bool changed = false;
            for (int v = 0; v < n; ++v) {
                for (int u : g.adj[v]) {
                    ++res.work_units;
                    if (row[u] < steiner_detail::kInf && row[u] + 1 < row[v]) {
                        row[v] = row[u] + 1;
                        par[mask][v] = Par{2, u, 0};
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
    }

    int best_v = -1;
    for (int v = 0; v < n; ++v)
        if (best_v == -1 || dp[full][v] < dp[full][best_v]) best_v = v;
    if (dp[full][best_v] >= steiner_detail::kInf) return res;

    std::vector<char> in_x(n, 0);
    // iterative unwind of the parent decisions
    std::vector<std::pair<std::uint32_t, int>> stack{{full, best_v}};
    while (!stack.empty()) {
        auto [mask, v] = stack.back();
        stack.pop_back();
        const Par& p = par[mask][v];
        CVC_CHECK(p.type != 0, "steiner reconstruction hit an unset cell");
        in_x[v] = 1;
        if (p.type == 2) {
            stack.emplace_back(mask, p.grow_from);
        } else if (p.type == 3) {
            stack.emplace_back(p.sub, v);
            stack.emplace_back(mask ^ p.sub, v);
        }
    }
    VertexSet x;
    for (int v = 0; v < n; ++v)
        if (in_x[v]) x.ids.push_back(v);
    CVC_CHECK(x.size() == dp[full][best_v], "steiner witness size mismatch");
    CVC_CHECK(induces_connected(g, x), "steiner witness disconnected");
    res.x = std::move(x);
    return res;
}

// Lemma-shaped entry point: terminals are exactly one side of a bipartition.
inline SteinerResult min_connected_superset(const SteinerInstance& inst) {
    if (unite(inst.side_p, inst.side_q) != inst.graph.vertices() ||
        !intersect(inst.side_p, inst.side_q).empty())
        throw std::invalid_argument("steiner sides must partition the vertex set");
    if (!is_independent_set(inst.graph, inst.side_p) ||
        !is_independent_set(inst.graph, inst.side_q))
        throw std::invalid_argument("steiner sides must be independent");
    return steiner_tree(inst.graph, inst.side_q);
}

}  // namespace cvc

#endif  // CVC_STEINER_HPP
