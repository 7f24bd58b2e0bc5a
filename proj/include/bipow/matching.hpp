#pragma once

// Matchings: Hopcroft-Karp maximum matching on bipartite graphs, the unique
// perfect matching of a tree via leaf peeling, and spanning trees forced to
// contain a given perfect matching. All tie-breaking is by smallest vertex
// id / lexicographic edge order so results are reproducible.

#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bipow/graph.hpp"

namespace bipow {

struct Matching {
    std::vector<int> mate;  // -1 = unmatched

    Matching() = default;
    explicit Matching(int n) : mate(static_cast<size_t>(n), -1) {}

    bool operator==(const Matching&) const = default;

    int size() const {
        int c = 0;
        for (int m : mate) c += (m >= 0);
        return c / 2;
    }

    bool is_perfect() const {
        for (int m : mate)
            if (m < 0) return false;
        return !mate.empty();
    }

    void match(int u, int v) {
        mate[static_cast<size_t>(u)] = v;
        mate[static_cast<size_t>(v)] = u;
    }

    // Matched pairs as (u, v), u < v, sorted.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < static_cast<int>(mate.size()); ++u)
            if (mate[static_cast<size_t>(u)] > u) out.emplace_back(u, mate[static_cast<size_t>(u)]);
        return out;
    }

    // Involution along host edges; perfect when required.
    bool valid_in(const Graph& g, bool require_perfect = false) const {
        if (static_cast<int>(mate.size()) != g.n) return false;
        for (int u = 0; u < g.n; ++u) {
            int v = mate[static_cast<size_t>(u)];
            if (v < 0) {
                if (require_perfect) return false;
                continue;
            }
            if (v >= g.n || mate[static_cast<size_t>(v)] != u || !g.has_edge(u, v)) return false;
        }
        return true;
    }
};

inline std::string serialize_matching(const Matching& m) {
    std::ostringstream out;
    for (auto [u, v] : m.pairs()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Matching parse_matching(const std::string& text, int n) {
    Matching m(n);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw ParseError(lineno, "expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) throw ParseError(lineno, "bad pair");
        if (m.mate[static_cast<size_t>(u)] >= 0 || m.mate[static_cast<size_t>(v)] >= 0)
            throw ParseError(lineno, "vertex matched twice");
        m.match(u, v);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Hopcroft-Karp

inline Matching maximum_matching(const Graph& g, const Bipartition& b) {
    if (!bipartition_valid(g, b)) throw std::invalid_argument("maximum_matching: invalid bipartition");
    constexpr int INF = std::numeric_limits<int>::max();
    Matching m(g.n);
    std::vector<int> left;  // side-X vertices, ascending
    for (int v = 0; v < g.n; ++v)
        if (b.side[static_cast<size_t>(v)] == 0) left.push_back(v);

    std::vector<int> dist(static_cast<size_t>(g.n), INF);

    auto bfs = [&]() -> bool {
        std::vector<int> queue;
        for (int u : left) {
            if (m.mate[static_cast<size_t>(u)] < 0) {
                dist[static_cast<size_t>(u)] = 0;
                queue.push_back(u);
            } else {
                dist[static_cast<size_t>(u)] = INF;
            }
        }
        bool reached_free = false;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.adj[static_cast<size_t>(u)]) {
                int w = m.mate[static_cast<size_t>(v)];
                if (w < 0) {
                    reached_free = true;
                } else if (dist[static_cast<size_t>(w)] == INF) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reached_free;
    };

    std::function<bool(int)> dfs = [&](int u) -> bool {
        for (int v : g.adj[static_cast<size_t>(u)]) {
            int w = m.mate[static_cast<size_t>(v)];
            if (w < 0 || (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(u)] + 1 && dfs(w))) {
                m.match(u, v);
                return true;
            }
        }
        dist[static_cast<size_t>(u)] = INF;
        return false;
    };

    while (bfs()) {
        for (int u : left)
            if (m.mate[static_cast<size_t>(u)] < 0) dfs(u);
    }
    return m;
}

// ---------------------------------------------------------------------------
// trees

struct NoPerfectMatchingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A tree has at most one perfect matching: a leaf must match its neighbor.
inline Matching tree_perfect_matching(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_perfect_matching: input is not a tree");
    if (t.n % 2 != 0) throw NoPerfectMatchingError("no perfect matching: odd order");
    Matching m(t.n);
    std::vector<int> deg(static_cast<size_t>(t.n));
    std::vector<char> alive(static_cast<size_t>(t.n), 1);
    std::vector<int> leaves;
    for (int v = 0; v < t.n; ++v) {
        deg[static_cast<size_t>(v)] = t.degree(v);
        if (deg[static_cast<size_t>(v)] == 1) leaves.push_back(v);
    }
    int matched = 0;
    for (size_t head = 0; head < leaves.size(); ++head) {
        int leaf = leaves[head];
        if (!alive[static_cast<size_t>(leaf)]) continue;
        int nb = -1;
        for (int y : t.adj[static_cast<size_t>(leaf)])
            if (alive[static_cast<size_t>(y)]) nb = y;
        if (nb < 0) throw NoPerfectMatchingError("no perfect matching: stranded vertex " + std::to_string(leaf));
        if (m.mate[static_cast<size_t>(nb)] >= 0)
            throw NoPerfectMatchingError("no perfect matching: two leaves share forced mate " + std::to_string(nb));
        m.match(leaf, nb);
        matched += 2;
        alive[static_cast<size_t>(leaf)] = alive[static_cast<size_t>(nb)] = 0;
        for (int y : t.adj[static_cast<size_t>(nb)]) {
            if (!alive[static_cast<size_t>(y)]) continue;
            if (--deg[static_cast<size_t>(y)] == 1) leaves.push_back(y);
        }
    }
    if (matched != t.n) throw NoPerfectMatchingError("no perfect matching");
    return m;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

}  // namespace detail

// Spanning tree of G containing all of M: seed a union-find with the M-edges,
// then scan E(G)\M in lexicographic order adding acyclic edges.
inline Graph spanning_tree_with_matching(const Graph& g, const Matching& m) {
    if (!is_connected(g)) throw std::invalid_argument("spanning_tree_with_matching: graph not connected");
    if (!m.valid_in(g, /*require_perfect=*/true))
        throw std::invalid_argument("spanning_tree_with_matching: matching not perfect in G");
    Graph t(g.n);
    detail::UnionFind uf(g.n);
    for (auto [u, v] : m.pairs()) {
        uf.unite(u, v);
        t.add_edge(u, v);
    }
    for (auto [u, v] : g.edges()) {
        if (m.mate[static_cast<size_t>(u)] == v) continue;
        if (uf.unite(u, v)) t.add_edge(u, v);
    }
    return t;
}

}  // namespace bipow
