#ifndef CVC_ORACLE_HPP
#define CVC_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <optional>

#include "cvc/graph.hpp"

// Exponential brute-force reference implementations. Everything here scans
// vertex subsets as bitmasks; the budget cap keeps callers honest about what
// these are for.

namespace cvc {

struct OracleBudget {
    int max_vertices = 24;
};

struct BudgetExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace oracle_detail {

inline void require_budget(const Graph& g, const OracleBudget& b) {
    CVC_CHECK(b.max_vertices <= 24, "oracle budget capped at 24 vertices");
    if (g.n > b.max_vertices)
        throw BudgetExceeded("oracle budget exceeded: n=" + std::to_string(g.n) + " > " +
                             std::to_string(b.max_vertices));
}

struct MaskGraph {
    int n;
    std::uint64_t full;
    std::vector<std::uint64_t> adj;
    std::vector<std::pair<int, int>> edge_list;

    explicit MaskGraph(const Graph& g)
        : n(g.n), full(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1), adj(g.n, 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= std::uint64_t{1} << v;
            adj[v] |= std::uint64_t{1} << u;
            edge_list.emplace_back(u, v);
        }
    }

    bool covers(std::uint64_t s) const {
        for (auto [u, v] : edge_list)
            if (!((s >> u) & 1) && !((s >> v) & 1)) return false;
        return true;
    }
    bool independent(std::uint64_t s) const {
        std::uint64_t m = s;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (adj[v] & s) return false;
        }
        return true;
    }
    int comp_count(std::uint64_t s) const {
        int comps = 0;
        std::uint64_t todo = s;
        while (todo) {
            ++comps;
            std::uint64_t frontier = todo & -todo;
            std::uint64_t seen = 0;
            while (frontier) {
                seen |= frontier;
                std::uint64_t next = 0;
                std::uint64_t m = frontier;
                while (m) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    next |= adj[v] & s;
                }
                frontier = next & ~seen;
            }
            todo &= ~seen;
        }
        return comps;
    }
    bool connected_within(std::uint64_t s) const { return comp_count(s) <= 1; }
};

// Sorted-id lexicographic order on equal-size sets: the set containing the
// lowest differing vertex is the smaller one.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    if (!d) return false;
    return a & (d & -d);
}

inline std::uint64_t next_same_popcount(std::uint64_t v) {
    std::uint64_t c = v & -v, r = v + c;
    return r | (((v ^ r) >> 2) / c);
}

// Minimum-size mask among those passing pred, lexicographically least within
// the winning size. pred is evaluated on masks over 0..n-1.
template <class Pred>
std::optional<std::uint64_t> min_mask_by_size(int n, Pred&& pred) {
    if (pred(0)) return std::uint64_t{0};
    for (int s = 1; s <= n; ++s) {
        std::uint64_t m = (std::uint64_t{1} << s) - 1;
        std::uint64_t last = m << (n - s);
        std::optional<std::uint64_t> best;
        for (;;) {
            if (pred(m) && (!best || lex_less(m, *best))) best = m;
            if (m == last) break;
            m = next_same_popcount(m);
        }
        if (best) return best;
    }
    return std::nullopt;
}

}  // namespace oracle_detail

// Minimum connected vertex cover; absent iff edges live in two or more
// components. Streams subsets by increasing size, lexicographically least
// among minima.
inline std::optional<VertexSet> min_cvc_bruteforce(const Graph& g, const OracleBudget& budget = {}) {
    oracle_detail::require_budget(g, budget);
    oracle_detail::MaskGraph mg(g);
    auto best = oracle_detail::min_mask_by_size(
        g.n, [&](std::uint64_t m) { return mg.covers(m) && mg.connected_within(m); });
    if (!best) return std::nullopt;
    return VertexSet::from_mask(*best);
}

// Independent second enumeration strategy for cross-checking: full powerset
// scan tracking the (size, lex) best.
inline std::optional<VertexSet> min_cvc_powerset(const Graph& g, const OracleBudget& budget = {}) {
    oracle_detail::require_budget(g, budget);
    oracle_detail::MaskGraph mg(g);
    std::optional<std::uint64_t> best;
    for (std::uint64_t m = 0;; ++m) {
        if (mg.covers(m) && mg.connected_within(m)) {
            if (!best || std::popcount(m) < std::popcount(*best) ||
                (std::popcount(m) == std::popcount(*best) && oracle_detail::lex_less(m, *best)))
                best = m;
        }
        if (m == mg.full) break;
    }
    if (!best) return std::nullopt;
    return VertexSet::from_mask(*best);
}

inline VertexSet min_vc_bruteforce(const Graph& g, const OracleBudget& budget = {}) {
    oracle_detail::require_budget(g, budget);
    oracle_detail::MaskGraph mg(g);
    auto best =
        oracle_detail::min_mask_by_size(g.n, [&](std::uint64_t m) { return mg.covers(m); });
    CVC_CHECK(best.has_value(), "a vertex cover always exists");
    return VertexSet::from_mask(*best);
}

// Testable form of the counting bound: sum over all vertex covers C of
// 2^comp(H[C]) against 3^d 2^(h-d) with d = comp(H). The empty cover of an
// edgeless graph contributes 2^0 = 1.
struct VcComponentSum {
    std::uint64_t sum = 0;
    std::uint64_t bound = 0;
    bool holds = false;
};

inline VcComponentSum vc_component_sum(const Graph& h, const OracleBudget& budget = {}) {
    oracle_detail::require_budget(h, budget);
    oracle_detail::MaskGraph mg(h);
    VcComponentSum r;
    for (std::uint64_t m = 0;; ++m) {
        if (mg.covers(m)) r.sum += std::uint64_t{1} << mg.comp_count(m);
        if (m == mg.full) break;
    }
    int d = static_cast<int>(components(h).size());
    r.bound = 1;
    for (int i = 0; i < d; ++i) r.bound *= 3;
    for (int i = 0; i < h.n - d; ++i) r.bound *= 2;
    r.holds = r.sum <= r.bound;
    return r;
}

// True iff an independent set I of the given size exists whose complement is
// a connected vertex cover.
inline bool max_nonseparating_is_bruteforce(const Graph& g, int size,
                                            const OracleBudget& budget = {}) {
    oracle_detail::require_budget(g, budget);
    if (size < 0 || size > g.n) return false;
    oracle_detail::MaskGraph mg(g);
    if (size == 0) return mg.connected_within(mg.full);
    std::uint64_t m = (std::uint64_t{1} << size) - 1;
    std::uint64_t last = m << (g.n - size);
    for (;;) {
        if (mg.independent(m) && mg.connected_within(mg.full & ~m)) return true;
        if (m == last) break;
        m = oracle_detail::next_same_popcount(m);
    }
    return false;
}

// Minimum connected vertex cover among sets containing `forced` and avoiding
// `forbidden`; used to replay solver decisions against ground truth.
inline std::optional<VertexSet> min_cvc_constrained_bruteforce(const Graph& g,
                                                               const VertexSet& forced,
                                                               const VertexSet& forbidden,
                                                               const OracleBudget& budget = {}) {
    oracle_detail::require_budget(g, budget);
    oracle_detail::MaskGraph mg(g);
    std::uint64_t fmask = forced.mask(), bmask = forbidden.mask();
    auto best = oracle_detail::min_mask_by_size(g.n, [&](std::uint64_t m) {
        return (m & fmask) == fmask && !(m & bmask) && mg.covers(m) && mg.connected_within(m);
    });
    if (!best) return std::nullopt;
    return VertexSet::from_mask(*best);
}

// Minimum X containing q with g[X] connected; absent when q meets two or more
// components of g.
inline std::optional<VertexSet> min_steiner_superset_bruteforce(const Graph& g, const VertexSet& q,
                                                                const OracleBudget& budget = {}) {
    oracle_detail::require_budget(g, budget);
    oracle_detail::MaskGraph mg(g);
    std::uint64_t qmask = q.mask();
    std::vector<int> rest;
    for (int v = 0; v < g.n; ++v)
        if (!q.contains(v)) rest.push_back(v);
    int r = static_cast<int>(rest.size());
    for (int extra = 0; extra <= r; ++extra) {
        std::optional<std::uint64_t> best;
        auto consider = [&](std::uint64_t sub) {
            std::uint64_t x = qmask;
            for (int i = 0; i < r; ++i)
                if ((sub >> i) & 1) x |= std::uint64_t{1} << rest[i];
            if (mg.connected_within(x) && (!best || oracle_detail::lex_less(x, *best))) best = x;
        };
        if (extra == 0) {
            consider(0);
        } else {
            std::uint64_t sub = (std::uint64_t{1} << extra) - 1;
            std::uint64_t last = sub << (r - extra);
            for (;;) {
                consider(sub);
                if (sub == last) break;
                sub = oracle_detail::next_same_popcount(sub);
            }
        }
        if (best) return VertexSet::from_mask(*best);
    }
    return std::nullopt;
}

}  // namespace cvc

#endif  // CVC_ORACLE_HPP
