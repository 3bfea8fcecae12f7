#ifndef CVC_CLASSIFY_HPP
#define CVC_CLASSIFY_HPP

#include <optional>
#include <string>

#include "cvc/graph.hpp"

namespace cvc {

struct SplitPartition {
    VertexSet clique_part;
    VertexSet independent_part;
};

// Partition of a vertex set into cliques. Parts carry original graph ids.
struct CliqueCover {
    std::vector<VertexSet> parts;
};

inline bool is_valid_split_partition(const Graph& g, const SplitPartition& sp) {
    if (unite(sp.clique_part, sp.independent_part) != g.vertices()) return false;
    if (!intersect(sp.clique_part, sp.independent_part).empty()) return false;
    return is_clique(g, sp.clique_part) && is_independent_set(g, sp.independent_part);
}

// Valid cover of exactly the vertex set `universe` within g.
inline bool is_valid_clique_cover(const Graph& g, const CliqueCover& cover,
                                  const VertexSet& universe) {
    VertexSet seen;
    int total = 0;
    for (const auto& part : cover.parts) {
        if (part.empty() || !is_clique(g, part)) return false;
        total += part.size();
        seen = unite(seen, part);
    }
    return total == seen.size() && seen == universe;
}

// Split recognition by the degree-sequence characterization: with degrees
// d_1 >= ... >= d_n and m = max{i : d_i >= i-1}, the graph is split iff
// sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the m highest-degree
// vertices form the clique side. Ties go to the clique part (degree sort is
// stable on ids). The witness is re-verified before being returned.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
    if (g.n == 0) return SplitPartition{};
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    long long lhs = 0, rhs = 0;
    int m = 0;
    for (int i = 1; i <= g.n; ++i)
        if (g.degree(order[i - 1]) >= i - 1) m = i;
    for (int i = 0; i < g.n; ++i)
        (i < m ? lhs : rhs) += g.degree(order[i]);
    if (lhs != static_cast<long long>(m) * (m - 1) + rhs) return std::nullopt;
    SplitPartition sp;
    for (int i = 0; i < g.n; ++i)
        (i < m ? sp.clique_part : sp.independent_part).add(order[i]);
    CVC_CHECK(is_valid_split_partition(g, sp), "split witness failed verification");
    return sp;
}

// Every component is a clique, equivalently no induced P3.
inline bool is_cluster_graph(const Graph& g) {
    for (const auto& comp : components(g))
        if (!is_clique(g, comp)) return false;
    return true;
}

// Maximum-cardinality search followed by the Tarjan-Yannakakis check. Returns
// a perfect elimination ordering (first vertex eliminated first) when g is
// chordal.
inline std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
    std::vector<int> weight(g.n, 0), visit_order;
    std::vector<char> visited(g.n, 0);
    visit_order.reserve(g.n);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
        visited[best] = 1;
        visit_order.push_back(best);
        for (int u : g.adj[best])
            if (!visited[u]) ++weight[u];
    }
    std::vector<int> peo(visit_order.rbegin(), visit_order.rend());
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[peo[i]] = i;
    for (int i = 0; i < g.n; ++i) {
        int v = peo[i];
        int parent = -1;
        for (int u : g.adj[v])
            if (pos[u] > i && (parent == -1 || pos[u] < pos[parent])) parent = u;
        if (parent == -1) continue;
        for (int u : g.adj[v])
            if (pos[u] > i && u != parent && !g.has_edge(parent, u)) return std::nullopt;
    }
    return peo;
}

inline bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
    return d;
}

struct Classification {
    std::optional<SplitPartition> split;
    bool cluster = false;
    std::optional<std::vector<int>> chordal_peo;
    int max_degree = 0;
};

inline Classification classify_graph(const Graph& g) {
    Classification c;
    c.split = split_partition(g);
    c.cluster = is_cluster_graph(g);
    c.chordal_peo = perfect_elimination_order(g);
    c.max_degree = max_degree(g);
    return c;
}

// ---------------------------------------------------------------------------
// Annotated instances: a graph plus a modulator whose removal lands in the
// named class.
// ---------------------------------------------------------------------------

enum class Kind { split, clique, cluster, degree1, chordal, cliquecover };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::split: return "split";
        case Kind::clique: return "clique";
        case Kind::cluster: return "cluster";
        case Kind::degree1: return "degree1";
        case Kind::chordal: return "chordal";
        case Kind::cliquecover: return "cliquecover";
    }
    return "?";
}

inline std::optional<Kind> kind_from_name(const std::string& s) {
    for (Kind k : {Kind::split, Kind::clique, Kind::cluster, Kind::degree1, Kind::chordal,
                   Kind::cliquecover})
        if (s == kind_name(k)) return k;
    return std::nullopt;
}

struct Instance {
    Graph graph;
    VertexSet modulator;
    Kind kind = Kind::split;
    std::optional<CliqueCover> cover;  // cliquecover kind: cover of G - S, original ids
};

struct KindMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Graph graph_minus_modulator(const Instance& inst, std::vector<int>* old_ids = nullptr) {
    return inst.graph.remove_vertices(inst.modulator, old_ids);
}

inline bool instance_valid(const Instance& inst) {
    for (int v : inst.modulator)
        if (v < 0 || v >= inst.graph.n) return false;
    Graph h = graph_minus_modulator(inst);
    switch (inst.kind) {
        case Kind::split: return split_partition(h).has_value();
        case Kind::clique: return is_clique(h, h.vertices());
        case Kind::cluster: return is_cluster_graph(h);
        case Kind::degree1: return max_degree(h) <= 1;
        case Kind::chordal: return is_chordal(h);
        case Kind::cliquecover: {
            if (!inst.cover) return false;
            VertexSet rest = subtract(inst.graph.vertices(), inst.modulator);
            return is_valid_clique_cover(inst.graph, *inst.cover, rest);
        }
    }
    return false;
}

inline void require_valid(const Instance& inst) {
    if (!instance_valid(inst))
        throw KindMismatch(std::string("kind_mismatch: G-S is not a ") + kind_name(inst.kind) +
                           " instance");
}

}  // namespace cvc

#endif  // CVC_CLASSIFY_HPP
