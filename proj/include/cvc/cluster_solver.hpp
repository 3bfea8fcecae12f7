#ifndef CVC_CLUSTER_SOLVER_HPP
#define CVC_CLUSTER_SOLVER_HPP

#include <array>
#include <optional>
#include <string>

#include "cvc/split_solver.hpp"

// Branch-and-reduce solver for the cluster deletion set parameterization and
// its degree-1 modulator specialization. Per modulator guess S', the forced
// neighborhood F of the discarded side is absorbed, then a rule pipeline
// shrinks the residual cliques until the partial solution is a vertex cover,
// and a bipartite Steiner instance connects the leftover components.

namespace cvc {

struct ClusterOptions {
    bool lower_bound_prune = true;  // prune on sum of (|Q \ Z| - 1) exceeding budget
    bool record_history = false;    // capture the winning path for replay checks
};

struct ClusterTransition {
    std::string rule;
    VertexSet x;       // partial solution after the step
    VertexSet banned;  // vertices excluded for good after the step
};

struct ClusterState {
    VertexSet sprime;  // guessed S intersection of the solution
    VertexSet f;       // N(S \ S') inside the cluster side, fixed at init
    VertexSet x;       // partial solution
    VertexSet banned;  // S \ S' plus vertices discarded by the exchange rule
    VertexSet h;       // vertices still tracked on the cluster side
    VertexSet z;       // forced vertices not yet adjacent to the rest of x
    int ell_rem = 0;
    int depth = 0;  // branching depth
    std::vector<ClusterTransition> history;
    bool record = false;

    void note(const std::string& rule) {
        if (record) history.push_back({rule, x, banned});
    }
};

namespace cluster_detail {

// Components of H - I, i.e. the residual cliques (size >= 2), ordered by
// minimum vertex id.
inline std::vector<VertexSet> residual_cliques(const Graph& g, const VertexSet& h) {
    std::vector<VertexSet> out;
    for (auto& comp : components(g, h))
        if (comp.size() >= 2) out.push_back(std::move(comp));
    return out;
}

struct XComponents {
    std::vector<VertexSet> comps;
    std::vector<int> comp_of;  // -1 outside x

    XComponents(const Graph& g, const VertexSet& x) : comp_of(g.n, -1) {
        comps = components(g, x);
        for (int i = 0; i < static_cast<int>(comps.size()); ++i)
            for (int v : comps[i]) comp_of[v] = i;
    }
    // C(v): ids of x-components with a neighbor of v
    std::vector<int> adjacent_comps(const Graph& g, int v) const {
        std::vector<int> ids;
        for (int u : g.adj[v])
            if (comp_of[u] >= 0) ids.push_back(comp_of[u]);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return ids;
    }
};

inline bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace cluster_detail

// Builds the per-guess state: absent when S \ S' is not independent.
inline std::optional<ClusterState> init_guess(const Instance& inst, const VertexSet& sprime,
                                              int ell) {
    CVC_CHECK(is_subset(sprime, inst.modulator), "guess must be a modulator subset");
    const Graph& g = inst.graph;
    VertexSet discarded = subtract(inst.modulator, sprime);
    if (!is_independent_set(g, discarded)) return std::nullopt;
    ClusterState st;
    st.sprime = sprime;
    st.banned = discarded;
    st.x = sprime;
    st.h = subtract(g.vertices(), inst.modulator);
    st.f = intersect(g.open_neighborhood(discarded), st.h);
    st.ell_rem = ell - sprime.size();
    return st;
}

// Prune signal for a fresh guess: a residual clique or a forced isolated
// vertex with no contact to the partial solution can never be connected to
// it. Sound whenever the partial solution is nonempty; the S' = empty guess
// takes a closed-form route instead.
inline bool preprocess_check(const Graph& g, const ClusterState& st) {
    for (const auto& q : cluster_detail::residual_cliques(g, st.h)) {
        VertexSet outside = subtract(g.open_neighborhood(q), q);
        if (intersect(outside, st.x).empty()) return false;
    }
    for (int v : st.f) {
        bool isolated = true;
        for (int u : g.adj[v])
            if (st.h.contains(u)) {
                isolated = false;
                break;
            }
        if (isolated && intersect(VertexSet(g.adj[v]), st.x).empty()) return false;
    }
    return true;
}

namespace cluster_detail {

// Rule 1 as a fixed point: forced vertices with a solution neighbor are
// absorbed and dropped from H, islands stay in H as Z.
inline bool apply_rule1(const Graph& g, ClusterState& st) {
    bool changed = false;
    for (;;) {
        VertexSet fh = intersect(st.f, st.h);
        VertexSet y, newly;
        for (int v : fh) {
            if (!st.x.contains(v)) newly.add(v);
            for (int u : g.adj[v])
                if (st.x.contains(u)) {
                    y.add(v);
                    break;
                }
        }
        if (y.empty() && newly.empty()) break;
        changed = true;
        for (int v : newly) {
            st.x.add(v);
            --st.ell_rem;
        }
        st.h = subtract(st.h, y);
    }
    st.z = intersect(st.f, st.h);
    for (int v : st.z) {
        CVC_CHECK(st.x.contains(v), "pending islands must already be in the solution");
        for (int u : g.adj[v])
            CVC_CHECK(!st.x.contains(u), "pending islands have no solution neighbors");
    }
    if (changed && st.record) st.note("rule1");
    return changed;
}

// Rule 2: a clique whose vertices are all pending islands except one forces
// that one.
inline bool apply_rule2(const Graph& g, ClusterState& st) {
    for (const auto& q : residual_cliques(g, st.h)) {
        VertexSet zq = intersect(q, st.z);
        if (zq.size() != q.size() - 1) continue;
        int u = subtract(q, st.z).ids.front();
        CVC_CHECK(!st.x.contains(u), "undecided clique vertex already in solution");
        st.x.add(u);
        --st.ell_rem;
        st.h = subtract(st.h, q);
        st.z = subtract(st.z, q);
        st.note("rule2");
        return true;
    }
    return false;
}

// Rule 3: inside one clique, a vertex whose reachable solution components are
// dominated by a sibling is exchanged away; the rest of the clique is taken.
inline bool apply_rule3(const Graph& g, ClusterState& st) {
    XComponents xc(g, st.x);
    for (const auto& q : residual_cliques(g, st.h)) {
        VertexSet undecided = subtract(q, st.z);
        std::vector<std::vector<int>> csets;
        for (int v : undecided) csets.push_back(xc.adjacent_comps(g, v));
        for (int i = 0; i < undecided.size(); ++i) {
            for (int j = 0; j < undecided.size(); ++j) {
                if (i == j) continue;
                int u = undecided.ids[i], v = undecided.ids[j];
                if (!subset_of(csets[i], csets[j])) continue;
                if (csets[i] == csets[j] && u < v) continue;  // keep the smaller id
                for (int w : q)
                    if (w != u && !st.x.contains(w)) {
                        st.x.add(w);
                        --st.ell_rem;
                    }
                st.banned.add(u);
                st.h = subtract(st.h, q);
                st.z = subtract(st.z, q);
                st.note("rule3");
                return true;
            }
        }
    }
    return false;
}

// Rule 5: every clique has exactly two undecided vertices; when one of them
// reaches a single solution component, exchange it away and keep it as a
// connector candidate.
inline bool apply_rule5(const Graph& g, ClusterState& st) {
    XComponents xc(g, st.x);
    for (const auto& q : residual_cliques(g, st.h)) {
        VertexSet undecided = subtract(q, st.z);
        CVC_CHECK(undecided.size() == 2, "rule 5 expects exactly two undecided per clique");
        int a = undecided.ids[0], b = undecided.ids[1];
        std::size_t ca = xc.adjacent_comps(g, a).size();
        std::size_t cb = xc.adjacent_comps(g, b).size();
        CVC_CHECK(ca >= 1 && cb >= 1, "empty component sets are handled by rule 3");
        int u;
        if (ca == 1 && cb == 1)
            u = b;  // tie: keep the smaller id
        else if (ca == 1)
            u = a;
        else if (cb == 1)
            u = b;
        else
            continue;
        VertexSet taken = q;
        taken.remove(u);
        for (int w : taken)
            if (!st.x.contains(w)) {
                st.x.add(w);
                --st.ell_rem;
            }
        st.h = subtract(st.h, taken);  // u stays behind as an isolated connector
        st.z = subtract(st.z, q);
        st.note("rule5");
        return true;
    }
    return false;
}

}  // namespace cluster_detail

// Fixed point of the reduction pipeline; rule 5 only once branching on a
// triangle is impossible. Returns false when the budget went negative.
inline bool apply_reductions(const Graph& g, ClusterState& st) {
    using namespace cluster_detail;
    for (;;) {
        apply_rule1(g, st);
        if (st.ell_rem < 0) return false;
        if (apply_rule2(g, st)) {
            if (st.ell_rem < 0) return false;
            continue;
        }
        if (apply_rule3(g, st)) {
            if (st.ell_rem < 0) return false;
            continue;
        }
        bool triangle_possible = false;
        for (const auto& q : residual_cliques(g, st.h))
            if (subtract(q, st.z).size() >= 3) {
                triangle_possible = true;
                break;
            }
        if (!triangle_possible && apply_rule5(g, st)) {
            if (st.ell_rem < 0) return false;
            continue;
        }
        return true;
    }
}

// Ternary branch on three undecided vertices of one clique: keep two of them
// in every child. The measure comp(G[x]) strictly drops in each child.
inline std::optional<std::array<ClusterState, 3>> branch_triangle(const Graph& g,
                                                                  const ClusterState& st) {
    using namespace cluster_detail;
    for (const auto& q : residual_cliques(g, st.h)) {
        VertexSet undecided = subtract(q, st.z);
        if (undecided.size() < 3) continue;
        XComponents xc(g, st.x);
        int u = undecided.ids[0], v = undecided.ids[1], w = undecided.ids[2];
        std::vector<std::vector<int>> csets = {xc.adjacent_comps(g, u), xc.adjacent_comps(g, v),
                                               xc.adjacent_comps(g, w)};
        for (int i = 0; i < 3; ++i) {
            CVC_CHECK(!csets[i].empty(), "branch vertices must touch the solution");
            for (int j = 0; j < 3; ++j)
                if (i != j)
                    CVC_CHECK(!subset_of(csets[i], csets[j]),
                              "comparable pairs belong to rule 3");
        }
        int parent_comp = static_cast<int>(xc.comps.size());
        std::array<std::pair<int, int>, 3> picks = {{{u, v}, {u, w}, {w, v}}};
        std::array<ClusterState, 3> children = {st, st, st};
        for (int b = 0; b < 3; ++b) {
            ClusterState& ch = children[b];
            ch.x.add(picks[b].first);
            ch.x.add(picks[b].second);
            ch.ell_rem -= 2;
            ch.h.remove(picks[b].first);
            ch.h.remove(picks[b].second);
            ch.depth += 1;
            ch.note("branch_triangle");
            CVC_CHECK(comp_count(g, ch.x) < parent_comp,
                      "triangle branch must shrink the component count");
        }
        return children;
    }
    return std::nullopt;
}

// Binary branch on the two undecided vertices of a clique, both reaching at
// least two solution components.
inline std::optional<std::array<ClusterState, 2>> branch_edge(const Graph& g,
                                                              const ClusterState& st) {
    using namespace cluster_detail;
    for (const auto& q : residual_cliques(g, st.h)) {
        VertexSet undecided = subtract(q, st.z);
        CVC_CHECK(undecided.size() == 2, "earlier rules left exactly two undecided");
        int u = undecided.ids[0], v = undecided.ids[1];
        XComponents xc(g, st.x);
        CVC_CHECK(xc.adjacent_comps(g, u).size() >= 2 && xc.adjacent_comps(g, v).size() >= 2,
                  "rule 5 handles single-component endpoints");
        int parent_comp = static_cast<int>(xc.comps.size());
        std::array<ClusterState, 2> children = {st, st};
        for (int b = 0; b < 2; ++b) {
            int pick = b == 0 ? u : v;
            ClusterState& ch = children[b];
            ch.x.add(pick);
            ch.ell_rem -= 1;
            ch.h.remove(pick);
            ch.depth += 1;
            ch.note("branch_edge");
            CVC_CHECK(comp_count(g, ch.x) < parent_comp,
                      "edge branch must shrink the component count");
        }
        return children;
    }
    return std::nullopt;
}

// At a leaf x covers the residual graph; contract its components and connect
// them through the leftover independent vertices.
inline std::optional<VertexSet> finish_leaf(const Graph& g, const ClusterState& st,
                                            SearchStats& stats) {
    CVC_CHECK(st.z.empty(), "pending islands must be resolved before the leaf");
    for (auto [u, v] : g.edges()) {
        if (st.banned.contains(u) || st.banned.contains(v)) continue;
        CVC_CHECK(st.x.contains(u) || st.x.contains(v), "leaf solution must cover the residual");
    }
    auto cand = split_detail::steiner_finish(g, st.x, st.h, stats, nullptr);
    if (!cand) return std::nullopt;
    if (cand->size() - st.x.size() > st.ell_rem) return std::nullopt;
    return cand;
}

namespace cluster_detail {

struct DriverCtx {
    const Graph& g;
    ClusterOptions opts;
    bool forbid_triangle_branch = false;
    SearchStats stats;
    std::optional<VertexSet> best;
    std::vector<ClusterTransition> best_history;
    std::uint64_t leaves_this_guess = 0;
    int sprime_size = 0;
};

inline void explore(DriverCtx& ctx, ClusterState st) {
    if (!apply_reductions(ctx.g, st)) {
        ++ctx.leaves_this_guess;
        return;  // budget exhausted
    }
    if (ctx.opts.lower_bound_prune) {
        int lb = 0;
        for (const auto& q : residual_cliques(ctx.g, st.h))
            lb += subtract(q, st.z).size() - 1;
        if (lb > st.ell_rem) {
            ++ctx.leaves_this_guess;
            return;
        }
    }
    if (auto tri = branch_triangle(ctx.g, st)) {
        CVC_CHECK(!ctx.forbid_triangle_branch,
                  "no triangle branch can fire on a degree-1 residual");
        ++ctx.stats.branch_nodes;
        for (auto& ch : *tri) explore(ctx, std::move(ch));
        return;
    }
    if (!residual_cliques(ctx.g, st.h).empty()) {
        auto eb = branch_edge(ctx.g, st);
        CVC_CHECK(eb.has_value(), "a residual clique always admits a rule or branch");
        ++ctx.stats.branch_nodes;
        for (auto& ch : *eb) explore(ctx, std::move(ch));
        return;
    }
    ++ctx.leaves_this_guess;
    ++ctx.stats.leaves;
    CVC_CHECK(comp_count(ctx.g, st.x) <= std::max(1, ctx.sprime_size - st.depth),
              "leaf component count exceeds |S'| - depth");
    auto cand = finish_leaf(ctx.g, st, ctx.stats);
    if (!cand) return;
    CVC_CHECK(is_connected_vertex_cover(ctx.g, *cand), "cluster candidate must be a CVC");
    if (!ctx.best || better_solution(*cand, *ctx.best)) {
        ctx.best = cand;
        if (ctx.opts.record_history) {
            ctx.best_history = st.history;
            ctx.best_history.push_back({"leaf", *cand, st.banned});
        }
    }
}

// The S' = empty guess admits no anchor in the modulator, so the solution
// must live inside a single residual component; handled in closed form.
inline void empty_guess(DriverCtx& ctx, int ell, const ClusterState& st) {
    const Graph& g = ctx.g;
    auto cliques = residual_cliques(g, st.h);
    std::optional<VertexSet> cand;
    if (cliques.empty()) {
        if (st.f.empty())
            cand = VertexSet{};
        else if (st.f.size() == 1)
            cand = st.f;
    } else if (cliques.size() == 1 && is_subset(st.f, cliques[0])) {
        const VertexSet& q = cliques[0];
        if (st.f == q) {
            cand = q;
        } else {
            VertexSet keep = q;
            for (auto it = q.ids.rbegin(); it != q.ids.rend(); ++it)
                if (!st.f.contains(*it)) {
                    keep.remove(*it);  // drop the largest unforced vertex
                    break;
                }
            cand = keep;
        }
    }
    ++ctx.leaves_this_guess;
    if (!cand || !is_connected_vertex_cover(g, *cand) || cand->size() > ell) return;
    if (!ctx.best || better_solution(*cand, *ctx.best)) {
        ctx.best = cand;
        if (ctx.opts.record_history) ctx.best_history = {{"empty_guess", *cand, st.banned}};
    }
}

}  // namespace cluster_detail

struct ClusterSolveResult {
    std::optional<VertexSet> solution;
    SearchStats stats;
    std::vector<ClusterTransition> winning_path;  // filled when record_history set
};

namespace cluster_detail {

inline ClusterSolveResult drive(const Instance& inst, int ell, ClusterOptions opts,
                                bool forbid_triangle_branch) {
    split_detail::Timer timer;
    DriverCtx ctx{inst.graph, opts, forbid_triangle_branch};
    ClusterSolveResult out;
    if (!is_connected(inst.graph)) {
        out.stats = ctx.stats;
        out.stats.elapsed_ms = timer.ms();
        return out;
    }
    std::uint64_t leaf_bound_max = 0, leaves_max = 0;
    for (const auto& sprime : split_detail::subsets_by_popcount(inst.modulator)) {
        ++ctx.stats.guesses_enumerated;
        auto st = init_guess(inst, sprime, ell);
        if (!st) continue;
        ++ctx.stats.guesses_surviving;
        ctx.leaves_this_guess = 0;
        ctx.sprime_size = sprime.size();
        if (sprime.empty()) {
            empty_guess(ctx, ell, *st);
        } else if (preprocess_check(inst.graph, *st)) {
            st->record = opts.record_history;
            st->note("init");
            explore(ctx, std::move(*st));
        }
        std::uint64_t bound = split_detail::pow_int(3, sprime.size());
        CVC_CHECK(ctx.leaves_this_guess <= bound, "leaf count exceeds 3^|S'| for a guess");
        leaves_max = std::max(leaves_max, ctx.leaves_this_guess);
        leaf_bound_max = std::max(leaf_bound_max, bound);
    }
    ctx.stats.cluster_max_leaves = leaves_max;
    ctx.stats.cluster_leaf_bound = leaf_bound_max;
    if (ctx.best && ctx.best->size() <= ell) {
        out.solution = *ctx.best;
        out.winning_path = std::move(ctx.best_history);
    }
    out.stats = ctx.stats;
    out.stats.elapsed_ms = timer.ms();
    return out;
}

}  // namespace cluster_detail

inline ClusterSolveResult solve_cluster(const Instance& inst, int ell, ClusterOptions opts = {}) {
    if (inst.kind != Kind::cluster)
        throw KindMismatch("kind_mismatch: expected cluster instance");
    require_valid(inst);
    return cluster_detail::drive(inst, ell, opts, /*forbid_triangle_branch=*/false);
}

// Degree-1 modulator specialization: the residual has maximum degree one, so
// no clique ever offers three undecided vertices and the triangle branch can
// never fire (asserted); the search tree is binary.
inline ClusterSolveResult solve_degree1(const Instance& inst, int ell, ClusterOptions opts = {}) {
    if (inst.kind != Kind::degree1)
        throw KindMismatch("kind_mismatch: expected degree-1 instance");
    require_valid(inst);
    Instance as_cluster = inst;
    as_cluster.kind = Kind::cluster;
    return cluster_detail::drive(as_cluster, ell, opts, /*forbid_triangle_branch=*/true);
}

}  // namespace cvc

#endif  // CVC_CLUSTER_SOLVER_HPP
