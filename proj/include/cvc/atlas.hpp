#ifndef CVC_ATLAS_HPP
#define CVC_ATLAS_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "cvc/graph.hpp"

// Catalogue of all graphs on up to ~10 vertices, one representative per
// isomorphism class, built by extending the (n-1)-vertex catalogue one vertex
// at a time. The exhaustive verification sweeps run label-invariant checks
// (solution sizes, class membership, counting bounds), so one representative
// per class covers every labeled graph.

namespace cvc {

// Compact graph: edge bit for pair (j < i) at index i*(i-1)/2 + j.
struct SmallGraph {
    int n = 0;
    std::uint64_t emask = 0;

    static int pair_bit(int i, int j) {
        if (i < j) std::swap(i, j);
        return i * (i - 1) / 2 + j;
    }
    bool has_edge(int i, int j) const { return (emask >> pair_bit(i, j)) & 1; }
    void set_edge(int i, int j) { emask |= std::uint64_t{1} << pair_bit(i, j); }
};

inline Graph to_graph(const SmallGraph& s) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < i; ++j)
            if (s.has_edge(i, j)) es.emplace_back(j, i);
    return Graph::from_edges(s.n, es);
}

inline SmallGraph from_graph(const Graph& g) {
    CVC_CHECK(g.n <= 11, "graph too large for SmallGraph encoding");
    SmallGraph s;
    s.n = g.n;
    for (auto [u, v] : g.edges()) s.set_edge(u, v);
    return s;
}

namespace atlas_detail {

inline std::vector<int> degrees(const SmallGraph& s) {
    std::vector<int> d(s.n, 0);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < i; ++j)
            if (s.has_edge(i, j)) ++d[i], ++d[j];
    return d;
}

// Bucket key: degree-sorted list of (degree, triangle count) per vertex.
inline std::vector<int> invariant_key(const SmallGraph& s) {
    auto deg = degrees(s);
    std::vector<int> tri(s.n, 0);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < i; ++j) {
            if (!s.has_edge(i, j)) continue;
            for (int k = 0; k < j; ++k)
                if (s.has_edge(i, k) && s.has_edge(j, k)) ++tri[i], ++tri[j], ++tri[k];
        }
    std::vector<int> key;
    key.push_back(s.n);
    std::vector<std::pair<int, int>> per;
    for (int v = 0; v < s.n; ++v) per.emplace_back(deg[v], tri[v]);
    std::sort(per.begin(), per.end());
    for (auto [d, t] : per) {
        key.push_back(d);
        key.push_back(t);
    }
    return key;
}

inline bool extend_mapping(const SmallGraph& a, const SmallGraph& b, const std::vector<int>& order,
                           std::vector<int>& map_ab, std::vector<char>& used, int idx,
                           const std::vector<int>& deg_a, const std::vector<int>& deg_b) {
    if (idx == a.n) return true;
    int va = order[idx];
    for (int vb = 0; vb < b.n; ++vb) {
        if (used[vb] || deg_a[va] != deg_b[vb]) continue;
        bool ok = true;
        for (int k = 0; k < idx && ok; ++k)
            if (a.has_edge(va, order[k]) != b.has_edge(vb, map_ab[order[k]])) ok = false;
        if (!ok) continue;
        used[vb] = 1;
        map_ab[va] = vb;
        if (extend_mapping(a, b, order, map_ab, used, idx + 1, deg_a, deg_b)) return true;
        used[vb] = 0;
    }
    return false;
}

inline bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n) return false;
    auto deg_a = degrees(a), deg_b = degrees(b);
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> order(a.n);
    for (int v = 0; v < a.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return deg_a[x] > deg_a[y]; });
    std::vector<int> map_ab(a.n, -1);
    std::vector<char> used(a.n, 0);
    return extend_mapping(a, b, order, map_ab, used, 0, deg_a, deg_b);
}

}  // namespace atlas_detail

// All graphs on n vertices up to isomorphism. Cached per process.
inline const std::vector<SmallGraph>& all_graphs(int n) {
    static std::vector<std::vector<SmallGraph>> cache;  // cache[n]
    CVC_CHECK(n >= 1 && n <= 10, "atlas supports 1..10 vertices");
    if (static_cast<int>(cache.size()) > n && !cache[n].empty()) return cache[n];
    if (cache.empty()) {
        cache.resize(2);
        cache[1] = {SmallGraph{1, 0}};
    }
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());  // building size-m catalogue
        const auto& prev = cache[m - 1];
        std::map<std::vector<int>, std::vector<SmallGraph>> buckets;
        for (const auto& base : prev) {
            for (std::uint64_t nbr = 0; nbr < (std::uint64_t{1} << (m - 1)); ++nbr) {
                SmallGraph cand;
                cand.n = m;
                cand.emask = base.emask;
                for (int j = 0; j < m - 1; ++j)
                    if ((nbr >> j) & 1) cand.set_edge(m - 1, j);
                auto key = atlas_detail::invariant_key(cand);
                auto& bucket = buckets[key];
                bool dup = false;
                for (const auto& rep : bucket)
                    if (atlas_detail::isomorphic(cand, rep)) {
                        dup = true;
                        break;
                    }
                if (!dup) bucket.push_back(cand);
            }
        }
        std::vector<SmallGraph> out;
        for (auto& [key, bucket] : buckets)
            for (auto& s : bucket) out.push_back(s);
        cache.push_back(std::move(out));
    }
    return cache[n];
}

inline std::vector<Graph> all_graphs_as(int n) {
    std::vector<Graph> gs;
    for (const auto& s : all_graphs(n)) gs.push_back(to_graph(s));
    return gs;
}

inline std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> gs;
    for (const auto& s : all_graphs(n)) {
        Graph g = to_graph(s);
        if (is_connected(g)) gs.push_back(std::move(g));
    }
    return gs;
}

}  // namespace cvc

#endif  // CVC_ATLAS_HPP
