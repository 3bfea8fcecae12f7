#ifndef CVC_SPLIT_SOLVER_HPP
#define CVC_SPLIT_SOLVER_HPP

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>

#include "cvc/classify.hpp"
#include "cvc/steiner.hpp"

// Exact solvers for the split / clique deletion / modulator-plus-clique-cover
// parameterizations: guess the solution's intersection with the modulator and
// the clique side, then finish with the bipartite Steiner subroutine.

namespace cvc {

struct SearchStats {
    std::uint64_t guesses_enumerated = 0;
    std::uint64_t guesses_surviving = 0;
    std::uint64_t steiner_calls = 0;
    std::vector<int> steiner_terminal_counts;
    std::uint64_t branch_nodes = 0;
    std::uint64_t leaves = 0;
    double elapsed_ms = 0.0;
    // Branching-bound bookkeeping. Split route: max over clique guesses Y of
    // sum over surviving Z of 2^{#terminals}, against 2 * 3^d * 2^(k-d).
    std::uint64_t split_bound_lhs = 0;
    std::uint64_t split_bound_rhs = 0;
    // Cluster route: max leaves over single guesses, against 3^|S'|.
    std::uint64_t cluster_max_leaves = 0;
    std::uint64_t cluster_leaf_bound = 0;
};

struct SolveResult {
    std::optional<VertexSet> solution;
    SearchStats stats;
};

namespace split_detail {

// Subsets of `s` in (popcount, numeric) order.
inline std::vector<VertexSet> subsets_by_popcount(const VertexSet& s) {
    int k = s.size();
    CVC_CHECK(k <= 25, "modulator too large for subset enumeration");
    std::vector<std::uint32_t> masks(std::size_t{1} << k);
    for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (auto m : masks) {
        VertexSet z;
        for (int i = 0; i < k; ++i)
            if ((m >> i) & 1) z.ids.push_back(s.ids[i]);
        out.push_back(std::move(z));
    }
    return out;
}

inline std::uint64_t pow_int(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// Completes T (already including the forced set R) to a connected vertex
// cover using fewest vertices from `pool`, via the contracted bipartite
// Steiner instance. Returns absent when no completion exists.
inline std::optional<VertexSet> steiner_finish(const Graph& g, const VertexSet& tr,
                                               const VertexSet& pool, SearchStats& stats,
                                               std::uint64_t* exp_accum) {
    auto contraction = contract_components(g, tr);
    VertexSet terminal_ids, pool_ids;
    for (int i = 0; i < static_cast<int>(contraction.groups.size()); ++i) {
        const auto& grp = contraction.groups[i];
        if (is_subset(grp, tr))
            terminal_ids.add(i);
        else if (pool.contains(grp.ids.front()))
            pool_ids.add(i);
    }
    int terminals = terminal_ids.size();
    if (exp_accum) *exp_accum += std::uint64_t{1} << terminals;
    if (terminals <= 1) return tr;  // nothing to connect

    VertexSet keep = unite(terminal_ids, pool_ids);
    std::vector<int> old_of;
    Graph sub = contraction.graph.induced(keep, &old_of);
    VertexSet sub_terminals;
    for (int i = 0; i < static_cast<int>(old_of.size()); ++i)
        if (terminal_ids.contains(old_of[i])) sub_terminals.add(i);

    ++stats.steiner_calls;
    stats.steiner_terminal_counts.push_back(terminals);
    auto st = steiner_tree(sub, sub_terminals);
    if (!st.x) return std::nullopt;
    VertexSet result = tr;
    for (int v : *st.x) {
        if (sub_terminals.contains(v)) continue;
        const auto& grp = contraction.groups[old_of[v]];
        CVC_CHECK(grp.size() == 1, "connector groups are singletons");
        result.add(grp.ids.front());
    }
    return result;
}

}  // namespace split_detail

// O*(3^k) split deletion set solver. The partition describes G-S in original
// vertex ids. Returns the minimum connected vertex cover when its size is at
// most ell; the guess loop enumerates Y over "exclude nothing / exclude one
// clique vertex" and Z over modulator subsets in increasing popcount order.
inline SolveResult solve_split(const Instance& inst, const SplitPartition& partition, int ell) {
    if (inst.kind != Kind::split) throw KindMismatch("kind_mismatch: expected split instance");
    require_valid(inst);
    const Graph& g = inst.graph;
    const VertexSet& s = inst.modulator;
    {
        VertexSet rest = subtract(g.vertices(), s);
        if (unite(partition.clique_part, partition.independent_part) != rest ||
            !is_clique(g, partition.clique_part) ||
            !is_independent_set(g, partition.independent_part))
            throw KindMismatch("kind_mismatch: invalid split partition for G-S");
    }
    split_detail::Timer timer;
    SolveResult res;
    if (!is_connected(g)) {
        res.stats.elapsed_ms = timer.ms();
        return res;
    }

    const VertexSet& c = partition.clique_part;
    const VertexSet& i_side = partition.independent_part;
    int d = s.empty() ? 0 : comp_count(g, s);
    res.stats.split_bound_rhs =
        2 * split_detail::pow_int(3, d) * split_detail::pow_int(2, s.size() - d);

    std::vector<VertexSet> y_choices{c};
    for (int x : c) {
        VertexSet y = c;
        y.remove(x);
        y_choices.push_back(std::move(y));
    }
    auto z_choices = split_detail::subsets_by_popcount(s);

    std::optional<VertexSet> best;
    for (const auto& y : y_choices) {
        std::uint64_t sum_y = 0;
        for (const auto& z : z_choices) {
            ++res.stats.guesses_enumerated;
            VertexSet excluded = unite(subtract(c, y), subtract(s, z));
            if (!is_independent_set(g, excluded)) continue;
            ++res.stats.guesses_surviving;

            VertexSet t = unite(y, z);
            VertexSet r = subtract(g.open_neighborhood(excluded), t);
            CVC_CHECK(is_subset(r, i_side), "forced vertices must lie on the independent side");
            bool stranded = false;
            for (int v : r) {
                bool touches_t = false;
                for (int u : g.adj[v])
                    if (t.contains(u)) {
                        touches_t = true;
                        break;
                    }
                if (!touches_t) {
                    stranded = true;
                    break;
                }
            }
            if (stranded) continue;  // no Steiner work happens for this guess
            VertexSet tr = unite(t, r);
            if (!t.empty() && !r.empty())
                CVC_CHECK(comp_count(g, tr) <= comp_count(g, t),
                          "adding forced neighbors must not add components");
            int comp_z = z.empty() ? 0 : comp_count(g, z);
            CVC_CHECK(comp_count(g, tr) <= comp_z + 1, "terminal count exceeds comp(G[Z]) + 1");

            auto cand = split_detail::steiner_finish(g, tr, subtract(i_side, r), res.stats, &sum_y);
            if (!cand) continue;
            CVC_CHECK(is_connected_vertex_cover(g, *cand), "solver candidate must be a CVC");
            if (!best || better_solution(*cand, *best)) best = cand;
        }
        res.stats.split_bound_lhs = std::max(res.stats.split_bound_lhs, sum_y);
        CVC_CHECK(sum_y <= res.stats.split_bound_rhs,
                  "split branching bound violated for a clique guess");
    }

    if (best && best->size() <= ell) res.solution = best;
    res.stats.elapsed_ms = timer.ms();
    return res;
}

// O*(2^k) specialization: G-S is a clique, no Steiner calls are ever made.
inline SolveResult solve_clique_deletion(const Instance& inst, int ell) {
    if (inst.kind != Kind::clique) throw KindMismatch("kind_mismatch: expected clique instance");
    require_valid(inst);
    const Graph& g = inst.graph;
    const VertexSet& s = inst.modulator;
    split_detail::Timer timer;
    SolveResult res;
    if (!is_connected(g)) {
        res.stats.elapsed_ms = timer.ms();
        return res;
    }

    VertexSet c = subtract(g.vertices(), s);
    std::vector<VertexSet> y_choices{c};
    for (int x : c) {
        VertexSet y = c;
        y.remove(x);
        y_choices.push_back(std::move(y));
    }
    auto z_choices = split_detail::subsets_by_popcount(s);

    std::optional<VertexSet> best;
    for (const auto& y : y_choices) {
        for (const auto& z : z_choices) {
            ++res.stats.guesses_enumerated;
            VertexSet excluded = unite(subtract(c, y), subtract(s, z));
            if (!is_independent_set(g, excluded)) continue;
            ++res.stats.guesses_surviving;
            VertexSet t = unite(y, z);
            if (!is_vertex_cover(g, t) || !induces_connected(g, t)) continue;
            if (!best || better_solution(t, *best)) best = t;
        }
    }
    CVC_CHECK(res.stats.steiner_calls == 0, "clique deletion route must not call steiner");
    if (best && best->size() <= ell) res.solution = best;
    res.stats.elapsed_ms = timer.ms();
    return res;
}

// XP route for a modulator plus a clique cover of G-S: per clique, keep all or
// all-but-one; per modulator, any subset. O*(2^k n^q).
inline std::optional<VertexSet> solve_mod_clique_cover(const Instance& inst, int ell) {
    if (inst.kind != Kind::cliquecover)
        throw KindMismatch("kind_mismatch: expected cliquecover instance");
    require_valid(inst);
    const Graph& g = inst.graph;
    const VertexSet& s = inst.modulator;
    if (!is_connected(g)) return std::nullopt;

    const auto& cliques = inst.cover->parts;
    double combinations = std::pow(2.0, s.size());
    for (const auto& q : cliques) combinations *= q.size() + 1;
    CVC_CHECK(combinations <= 1e7, "guess space too large for the XP route");

    auto z_choices = split_detail::subsets_by_popcount(s);
    std::optional<VertexSet> best;
    // choice[i] = 0 keeps clique i whole, j >= 1 drops its j-th smallest vertex
    std::vector<int> choice(cliques.size(), 0);
    for (;;) {
        VertexSet kept, dropped;
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            for (int j = 0; j < cliques[i].size(); ++j) {
                if (choice[i] == j + 1)
                    dropped.add(cliques[i].ids[j]);
                else
                    kept.add(cliques[i].ids[j]);
            }
        }
        for (const auto& z : z_choices) {
            VertexSet excluded = unite(dropped, subtract(s, z));
            if (!is_independent_set(g, excluded)) continue;
            VertexSet t = unite(kept, z);
            if (!is_vertex_cover(g, t) || !induces_connected(g, t)) continue;
            if (!best || better_solution(t, *best)) best = t;
        }
        std::size_t pos = 0;
        while (pos < choice.size() && choice[pos] == cliques[pos].size()) choice[pos++] = 0;
        if (pos == choice.size()) break;
        ++choice[pos];
    }
    if (best && best->size() <= ell) return best;
    return std::nullopt;
}

}  // namespace cvc

#endif  // CVC_SPLIT_SOLVER_HPP
