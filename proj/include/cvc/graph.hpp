#ifndef CVC_GRAPH_HPP
#define CVC_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Always-on invariant checks. Tests run optimized builds, so plain assert()
// would vanish under NDEBUG.
#define CVC_CHECK(cond, msg)                                                   \
    do {                                                                       \
        if (!(cond))                                                           \
            throw std::logic_error(std::string("invariant violated: ") + (msg)); \
    } while (0)

namespace cvc {

// Set of vertex ids, kept sorted and duplicate-free. Comparisons are
// lexicographic on the sorted id sequence.
struct VertexSet {
    std::vector<int> ids;

    VertexSet() = default;
    explicit VertexSet(std::vector<int> xs) : ids(std::move(xs)) { normalize(); }
    VertexSet(std::initializer_list<int> xs) : ids(xs) { normalize(); }

    void normalize() {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }

    int size() const { return static_cast<int>(ids.size()); }
    bool empty() const { return ids.empty(); }
    bool contains(int v) const { return std::binary_search(ids.begin(), ids.end(), v); }

    void add(int v) {
        auto it = std::lower_bound(ids.begin(), ids.end(), v);
        if (it == ids.end() || *it != v) ids.insert(it, v);
    }
    void remove(int v) {
        auto it = std::lower_bound(ids.begin(), ids.end(), v);
        if (it != ids.end() && *it == v) ids.erase(it);
    }

    auto begin() const { return ids.begin(); }
    auto end() const { return ids.end(); }

    bool operator==(const VertexSet&) const = default;
    bool operator<(const VertexSet& o) const { return ids < o.ids; }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (int v : ids) {
            CVC_CHECK(v >= 0 && v < 64, "vertex id out of mask range");
            m |= std::uint64_t{1} << v;
        }
        return m;
    }
    static VertexSet from_mask(std::uint64_t m) {
        VertexSet s;
        for (int v = 0; m; ++v, m >>= 1)
            if (m & 1) s.ids.push_back(v);
        return s;
    }
};

inline VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    r.ids.reserve(a.ids.size() + b.ids.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids));
    return r;
}
inline VertexSet subtract(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids));
    return r;
}
inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids));
    return r;
}
inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Deterministic tie-break used whenever a minimum solution is reported:
// smaller size first, then lexicographic on sorted ids.
inline bool better_solution(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Simple undirected graph on dense vertex ids 0..n-1, immutable after
// construction. All transformations return fresh graphs.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
        Graph g(n);
        for (auto [u, v] : es) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop");
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        for (auto& nb : g.adj) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        return g;
    }

    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    int edge_count() const {
        std::size_t d = 0;
        for (const auto& nb : adj) d += nb.size();
        return static_cast<int>(d / 2);
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    VertexSet vertices() const {
        VertexSet s;
        s.ids.resize(n);
        for (int v = 0; v < n; ++v) s.ids[v] = v;
        return s;
    }

    // N(X) \ X
    VertexSet open_neighborhood(const VertexSet& xs) const {
        VertexSet r;
        for (int v : xs)
            for (int u : adj[v])
                if (!xs.contains(u)) r.ids.push_back(u);
        r.normalize();
        return r;
    }
    VertexSet closed_neighborhood(int v) const {
        VertexSet r(adj[v]);
        r.add(v);
        return r;
    }

    // Induced subgraph on `keep`; new ids follow the sorted order of `keep`.
    // old_ids, when given, receives the new->old mapping.
    Graph induced(const VertexSet& keep, std::vector<int>* old_ids = nullptr) const {
        std::vector<int> to_new(n, -1);
        for (int i = 0; i < keep.size(); ++i) to_new[keep.ids[i]] = i;
        Graph h(keep.size());
        for (int i = 0; i < keep.size(); ++i)
            for (int u : adj[keep.ids[i]])
                if (to_new[u] >= 0) h.adj[i].push_back(to_new[u]);
        if (old_ids) *old_ids = keep.ids;
        return h;
    }
    Graph remove_vertices(const VertexSet& del, std::vector<int>* old_ids = nullptr) const {
        return induced(subtract(vertices(), del), old_ids);
    }

    bool operator==(const Graph&) const = default;
};

// Connected components of the subgraph induced by `within` (all vertices when
// absent), ordered by minimum vertex id.
inline std::vector<VertexSet> components(const Graph& g,
                                         const std::optional<VertexSet>& within = std::nullopt) {
    std::vector<char> eligible(g.n, 1);
    if (within) {
        std::fill(eligible.begin(), eligible.end(), 0);
        for (int v : *within) {
            CVC_CHECK(v >= 0 && v < g.n, "restriction vertex out of range");
            eligible[v] = 1;
        }
    }
    std::vector<char> seen(g.n, 0);
    std::vector<VertexSet> comps;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (!eligible[s] || seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.ids.push_back(v);
            for (int u : g.adj[v])
                if (eligible[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        comp.normalize();
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline int comp_count(const Graph& g, const VertexSet& within) {
    return static_cast<int>(components(g, within).size());
}

// comp(G) <= 1; the empty graph counts as connected.
inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline bool induces_connected(const Graph& g, const VertexSet& t) {
    return components(g, t).size() <= 1;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& t) {
    for (int u = 0; u < g.n; ++u) {
        if (t.contains(u)) continue;
        for (int v : g.adj[u])
            if (v > u && !t.contains(v)) return false;
    }
    return true;
}

inline bool is_connected_vertex_cover(const Graph& g, const VertexSet& t) {
    return is_vertex_cover(g, t) && induces_connected(g, t);
}

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (int v : s)
        for (int u : g.adj[v])
            if (u > v && s.contains(u)) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v : s)
        for (int u : s)
            if (u > v && !g.has_edge(u, v)) return false;
    return true;
}

// Contraction of each connected component of g[x] into a single super-vertex.
// groups[i] lists the original vertices behind new id i; new ids are ordered
// by minimum original member.
struct Contraction {
    Graph graph;
    std::vector<VertexSet> groups;
};

inline Contraction contract_components(const Graph& g, const VertexSet& x) {
    std::vector<VertexSet> groups;
    for (auto& comp : components(g, x)) groups.push_back(comp);
    for (int v = 0; v < g.n; ++v)
        if (!x.contains(v)) groups.push_back(VertexSet{v});
    std::sort(groups.begin(), groups.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.ids.front() < b.ids.front(); });

    std::vector<int> group_of(g.n, -1);
    for (int i = 0; i < static_cast<int>(groups.size()); ++i)
        for (int v : groups[i]) group_of[v] = i;

    Graph h(static_cast<int>(groups.size()));
    for (auto [u, v] : g.edges()) {
        int a = group_of[u], b = group_of[v];
        if (a != b) {
            h.adj[a].push_back(b);
            h.adj[b].push_back(a);
        }
    }
    for (auto& nb : h.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return Contraction{std::move(h), std::move(groups)};
}

// All u != v with u not adjacent to v and N(u) == N(v).
inline VertexSet false_twins_of(const Graph& g, int v) {
    VertexSet r;
    for (int u = 0; u < g.n; ++u) {
        if (u == v || g.has_edge(u, v)) continue;
        if (g.adj[u] == g.adj[v]) r.ids.push_back(u);
    }
    return r;
}

struct IsolatedRemoval {
    Graph graph;
    VertexSet removed;           // original ids of the dropped vertices
    std::vector<int> old_ids;    // new id -> original id
};

inline IsolatedRemoval remove_isolated(const Graph& g) {
    VertexSet keep, removed;
    for (int v = 0; v < g.n; ++v)
        (g.degree(v) > 0 ? keep : removed).ids.push_back(v);
    IsolatedRemoval r;
    r.graph = g.induced(keep, &r.old_ids);
    r.removed = std::move(removed);
    return r;
}

// ---------------------------------------------------------------------------
// DIMACS edge format I/O.
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (1-indexed)
// Duplicate edge lines collapse. Modulator files carry one 1-indexed vertex id
// per line; clique-cover files one space-separated clique per line.
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline ParseError parse_error(int line_no, const std::string& what) {
    return ParseError("line " + std::to_string(line_no) + ": " + what);
}
}  // namespace detail

inline Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    long long m_declared = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw detail::parse_error(line_no, "duplicate problem line");
            std::string fmt;
            if (!(ls >> fmt >> n >> m_declared) || fmt != "edge" || n < 0 || m_declared < 0)
                throw detail::parse_error(line_no, "malformed header, expected 'p edge <n> <m>'");
            g = Graph(n);
        } else if (tag == "e") {
            if (n < 0) throw detail::parse_error(line_no, "edge before problem line");
            long long u, v;
            if (!(ls >> u >> v))
                throw detail::parse_error(line_no, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw detail::parse_error(line_no, "vertex id out of range [1," + std::to_string(n) + "]");
            if (u == v) throw detail::parse_error(line_no, "self-loop on vertex " + std::to_string(u));
            int a = static_cast<int>(u - 1), b = static_cast<int>(v - 1);
            g.adj[a].push_back(b);
            g.adj[b].push_back(a);
        } else {
            throw detail::parse_error(line_no, "unknown record '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("missing problem line");
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

inline Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline VertexSet parse_vertex_list(std::istream& in, int n) {
    VertexSet s;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        long long v;
        try {
            v = std::stoll(tok);
        } catch (const std::exception&) {
            throw detail::parse_error(line_no, "expected vertex id, got '" + tok + "'");
        }
        if (v < 1 || v > n)
            throw detail::parse_error(line_no, "vertex id out of range [1," + std::to_string(n) + "]");
        s.add(static_cast<int>(v - 1));
    }
    return s;
}

inline void write_vertex_list(std::ostream& out, const VertexSet& s) {
    for (int v : s) out << v + 1 << '\n';
}

inline std::vector<VertexSet> parse_clique_lines(std::istream& in, int n) {
    std::vector<VertexSet> parts;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        VertexSet part;
        ls.clear();
        ls.seekg(0);
        long long v;
        while (ls >> v) {
            if (v < 1 || v > n)
                throw detail::parse_error(line_no, "vertex id out of range [1," + std::to_string(n) + "]");
            part.add(static_cast<int>(v - 1));
        }
        if (!ls.eof())
            throw detail::parse_error(line_no, "expected vertex ids");
        if (!part.empty()) parts.push_back(std::move(part));
    }
    return parts;
}

inline void write_clique_lines(std::ostream& out, const std::vector<VertexSet>& parts) {
    for (const auto& p : parts) {
        for (int i = 0; i < p.size(); ++i) out << (i ? " " : "") << p.ids[i] + 1;
        out << '\n';
    }
}

}  // namespace cvc

#endif  // CVC_GRAPH_HPP
