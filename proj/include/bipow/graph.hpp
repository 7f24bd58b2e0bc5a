#pragma once

// Finite undirected simple graphs with dense vertex ids 0..n-1.
// Adjacency lists are kept sorted ascending and duplicate-free, so every
// iteration order (and therefore every constructed object downstream) is
// deterministic.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bipow {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct NotBipartiteError : std::runtime_error {
    std::vector<int> odd_walk;  // closed walk of odd length witnessing an odd cycle
    explicit NotBipartiteError(std::vector<int> walk)
        : std::runtime_error("not bipartite"), odd_walk(std::move(walk)) {}
};

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(static_cast<size_t>(n_)) {}

    bool operator==(const Graph&) const = default;

    void add_edge(int u, int v) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        insert_arc(u, v);
        insert_arc(v, u);
    }

    bool has_edge(int u, int v) const {
        const auto& a = adj[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    int degree(int u) const { return static_cast<int>(adj[static_cast<size_t>(u)].size()); }

    int edge_count() const {
        size_t d = 0;
        for (const auto& a : adj) d += a.size();
        return static_cast<int>(d / 2);
    }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v : adj[static_cast<size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    void insert_arc(int u, int v) {
        auto& a = adj[static_cast<size_t>(u)];
        auto it = std::lower_bound(a.begin(), a.end(), v);
        if (it == a.end() || *it != v) a.insert(it, v);
    }
};

// ---------------------------------------------------------------------------
// parsing / serialization

// Edge-list format: first line "n m", then m lines "u v".
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    Graph g;
    int seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments and blank lines
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) { n = -1; continue; }
                throw ParseError(lineno, "expected header \"n m\"");
            }
            if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
            std::string junk;
            if (ls >> junk) throw ParseError(lineno, "trailing tokens after header");
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw ParseError(lineno, "expected \"u v\"");
        std::string junk;
        if (ls >> junk) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "loop edge");
        ++seen;
        if (seen > m) throw ParseError(lineno, "more edges than declared");
        g.add_edge(u, v);
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (seen < m) throw ParseError(lineno, "fewer edges than declared");
    return g;
}

inline std::string serialize_graph(const Graph& g) {
    auto es = g.edges();
    std::ostringstream out;
    out << g.n << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph graph_from_json(const nlohmann::json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

// Accepts either the edge-list format or the JSON alternative.
inline Graph parse_graph_any(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return graph_from_json(nlohmann::json::parse(text));
    return parse_graph(text);
}

inline std::string graph_to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int u = 0; u < g.n; ++u) out << "  " << u << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// traversal

// Exact unweighted distances from u, capped: dist[v] = -1 if d(u,v) > cap.
inline std::vector<int> bfs_distance(const Graph& g, int u, int cap) {
    if (u < 0 || u >= g.n) throw std::out_of_range("bfs_distance: source out of range");
    std::vector<int> dist(static_cast<size_t>(g.n), -1);
    std::vector<int> queue;
    queue.push_back(u);
    dist[static_cast<size_t>(u)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        int dx = dist[static_cast<size_t>(x)];
        if (dx == cap) continue;
        for (int y : g.adj[static_cast<size_t>(x)]) {
            if (dist[static_cast<size_t>(y)] < 0) {
                dist[static_cast<size_t>(y)] = dx + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

// Components as vertex sets, ordered by smallest member; each set sorted.
// `removed[v]` (when given) excludes v entirely.
inline std::vector<std::vector<int>> connected_components(const Graph& g,
                                                          const std::vector<char>* removed = nullptr) {
    std::vector<char> seen(static_cast<size_t>(g.n), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        if (removed && (*removed)[static_cast<size_t>(s)]) continue;
        std::vector<int> comp{s};
        seen[static_cast<size_t>(s)] = 1;
        for (size_t head = 0; head < comp.size(); ++head) {
            for (int y : g.adj[static_cast<size_t>(comp[head])]) {
                if (seen[static_cast<size_t>(y)]) continue;
                if (removed && (*removed)[static_cast<size_t>(y)]) continue;
                seen[static_cast<size_t>(y)] = 1;
                comp.push_back(y);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return static_cast<int>(connected_components(g).front().size()) == g.n;
}

inline bool is_tree(const Graph& g) {
    return g.n > 0 && is_connected(g) && g.edge_count() == g.n - 1;
}

// ---------------------------------------------------------------------------
// bipartition

struct Bipartition {
    std::vector<int> side;  // 0 = X, 1 = Y

    std::vector<int> part(int s) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(side.size()); ++v)
            if (side[static_cast<size_t>(v)] == s) out.push_back(v);
        return out;
    }
};

// 2-coloring with the smallest vertex of each component on side X.
// Throws NotBipartiteError carrying an odd closed walk.
inline Bipartition bipartition(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("bipartition: empty graph");
    Bipartition b;
    b.side.assign(static_cast<size_t>(g.n), -1);
    std::vector<int> parent(static_cast<size_t>(g.n), -1);
    for (int s = 0; s < g.n; ++s) {
        if (b.side[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> queue{s};
        b.side[static_cast<size_t>(s)] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y : g.adj[static_cast<size_t>(x)]) {
                if (b.side[static_cast<size_t>(y)] < 0) {
                    b.side[static_cast<size_t>(y)] = 1 - b.side[static_cast<size_t>(x)];
                    parent[static_cast<size_t>(y)] = x;
                    queue.push_back(y);
                } else if (b.side[static_cast<size_t>(y)] == b.side[static_cast<size_t>(x)]) {
                    // odd closed walk: x -> root -> y plus edge yx
                    std::vector<int> up_x, up_y;
                    for (int v = x; v != -1; v = parent[static_cast<size_t>(v)]) up_x.push_back(v);
                    for (int v = y; v != -1; v = parent[static_cast<size_t>(v)]) up_y.push_back(v);
                    std::vector<int> walk(up_x.rbegin(), up_x.rend());
                    walk.insert(walk.end(), up_y.begin(), up_y.end());
                    walk.push_back(x);
                    throw NotBipartiteError(std::move(walk));
                }
            }
        }
    }
    return b;
}

inline std::optional<Bipartition> try_bipartition(const Graph& g) {
    try {
        return bipartition(g);
    } catch (const NotBipartiteError&) {
        return std::nullopt;
    }
}

// Validity check, edge by edge, independent of how the labels were produced.
inline bool bipartition_valid(const Graph& g, const Bipartition& b) {
    if (static_cast<int>(b.side.size()) != g.n) return false;
    for (auto [u, v] : g.edges())
        if (b.side[static_cast<size_t>(u)] == b.side[static_cast<size_t>(v)]) return false;
    return true;
}

}  // namespace bipow
